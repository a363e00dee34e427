// qtwist: batch driver for the verification checks.
#include "qtwist/checks.hpp"
#include "qtwist/pairing.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace qtwist;

namespace {

enum Exit { kPass = 0, kFail = 1, kUsage = 2, kInternal = 3 };

int list() {
  for (const auto& c : list_checks()) {
    std::cout << c.name << " -> " << c.anchor;
    if (!c.variants.empty()) {
      std::cout << "  [variants:";
      for (const auto& v : c.variants) std::cout << " " << v;
      std::cout << "]";
    }
    std::cout << "\n";
  }
  return kPass;
}

int verify(const CheckConfig& config) {
  CheckReport r;
  try {
    r = run_check(config);
  } catch (const ConfigError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  }
  std::string json = to_json(r).dump(2);
  if (config.out.empty()) {
    std::cout << json << "\n";
  } else {
    std::ofstream f(config.out);
    if (!f) {
      std::cerr << "cannot write " << config.out << "\n";
      return kInternal;
    }
    f << json << "\n";
  }
  std::cerr << r.config.check << ": " << r.status << " (" << r.report.cases << " cases, " << r.report.failed
            << " failed, " << r.seconds << " s)";
  if (!r.error.empty()) std::cerr << ": " << r.error;
  std::cerr << "\n";
  if (r.status == "pass") return kPass;
  return r.status == "fail" ? kFail : kInternal;
}

int gram(const CheckConfig& config, const std::string& beta_text, const std::string& kind_text) {
  CartanDatum cartan = resolve_cartan(config);
  PairingKind kind = parse_pairing_kind(kind_text);
  SpecPtr spec = kind == PairingKind::Q ? make_q_spec(cartan) : make_rs_spec(cartan);
  RootVector beta = parse_root(beta_text, cartan.rank());
  int h = 0;
  for (int b : beta) {
    if (b < 0) throw ConfigError("--beta must be in the positive cone");
    h += b;
  }
  std::size_t dim = basis_words(spec, Side::E, beta).size();
  std::size_t rank = gram_rank(*pairing_for(kind, spec), beta, std::max(h, 1));
  std::cout << "beta " << format_root(beta) << " kind " << kind_text << " rank " << rank << " dim " << dim << "\n";
  return rank == dim ? kPass : kFail;
}

int replay_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) {
    std::cerr << "cannot read " << path << "\n";
    return kUsage;
  }
  CheckReport r = report_from_json(nlohmann::json::parse(f));
  bool all = true;
  for (const auto& c : r.report.failures) {
    std::string got = replay(c);
    bool same = got == c.residual;
    all = all && same;
    std::cout << (same ? "reproduced " : "DIFFERS    ") << c.property;
    for (const auto& in : c.inputs) std::cout << " [" << in << "]";
    std::cout << " -> " << got << "\n";
  }
  std::cout << r.report.failures.size() << " counterexample(s), " << (all ? "all reproduced" : "mismatch") << "\n";
  return all ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of two-parameter quantum group identities"};
  app.require_subcommand(1);

  app.set_config("--config", "", "key = value file; flags win");
  app.fallthrough();
  app.allow_config_extras(CLI::config_extras_mode::error);

  CheckConfig config;
  std::string beta;
  app.add_option("--type", config.type, "Cartan type, e.g. A2 or A with --rank")->capture_default_str();
  app.add_option("--rank", config.rank, "rank when --type is a bare letter");
  app.add_option("--deg", config.deg, "degree bound")->capture_default_str();
  app.add_option("--trials", config.trials, "random trials")->capture_default_str();
  app.add_option("--seed", config.seed, "random seed")->capture_default_str();
  app.add_option("--variant", config.variant, "check variant (see list); pairing kind for gram-rank");
  app.add_option("--modules", config.modules, "sample modules, e.g. w1,w2")->delimiter(',');
  app.add_option("--cap", config.cap, "height cap for modules")->capture_default_str();
  app.add_option("--out", config.out, "report path (stdout when omitted)");
  app.add_option("--beta", beta, "degree for gram-rank, e.g. 1,1");

  auto* list_cmd = app.add_subcommand("list", "list checks with their anchors")->fallthrough();
  auto* verify_cmd = app.add_subcommand("verify", "run one check and write its JSON report")->fallthrough();
  verify_cmd->add_option("check", config.check, "check name")->required();
  auto* gram_cmd = app.add_subcommand("gram-rank", "rank of one Gram matrix of the pairing")->fallthrough();
  std::string report_path;
  auto* replay_cmd = app.add_subcommand("replay", "re-evaluate the counterexamples of a report");
  replay_cmd->add_option("report", report_path, "JSON report")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (*list_cmd) return list();
    if (*verify_cmd) return verify(config);
    if (*gram_cmd) {
      if (beta.empty()) throw ConfigError("gram-rank needs --beta");
      return gram(config, beta, config.variant.empty() ? "q" : config.variant);
    }
    if (*replay_cmd) return replay_file(report_path);
  } catch (const ConfigError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kUsage;
}

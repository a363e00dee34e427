#include "qtwist/checks.hpp"

#include "qtwist/bichar.hpp"
#include "qtwist/cocycle.hpp"
#include "qtwist/deriv.hpp"
#include "qtwist/hopf.hpp"
#include "qtwist/modules.hpp"
#include "qtwist/pairing.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>

namespace qtwist {

const std::vector<CheckInfo>& list_checks() {
  static const std::vector<CheckInfo> checks{
      {"hopf-axioms", "Hopf structure of U_{r,s} and U_q", {"both", "rs", "q"}},
      {"derivations", "skew derivations: lemma, proposition and bar lemma", {"rs", "q", "printed"}},
      {"module-algebra", "module-algebra theorem", {"rs"}},
      {"cocycle", "2-cocycle proposition for sigma and sigma'", {"sigma", "sigma-prime"}},
      {"phi-iso", "cocycle twist theorem: phi preserves (R1)-(R7)", {"sigma", "sigma-prime"}},
      {"bigraded", "bigraded twist proposition", {"standard", "dn"}},
      {"positive-parts", "positive-part corollary of the bigraded twist", {"standard", "dn"}},
      {"dn-variant", "D_n remark: U'_{r,s} and U_{r,s}", {}},
      {"pairing", "pairing equality proposition and corollary", {"all", "printed"}},
      {"gram-rank", "nondegeneracy of the skew pairing", {}},
      {"category", "category equivalence theorem and corollary", {}},
  };
  return checks;
}

namespace {

const CheckInfo& info(const std::string& name) {
  for (const auto& c : list_checks())
    if (c.name == name) return c;
  throw ConfigError("unknown check '" + name + "'; see 'qtwist list'");
}

std::string variant_of(const CheckConfig& config) {
  const CheckInfo& c = info(config.check);
  return config.variant.empty() && !c.variants.empty() ? c.variants[0] : config.variant;
}

}  // namespace

CartanDatum resolve_cartan(const CheckConfig& config) {
  std::string label = config.type;
  bool bare = label.size() == 1 && std::isalpha(static_cast<unsigned char>(label[0]));
  if (bare) {
    if (config.rank < 1) throw ConfigError("type '" + label + "' needs --rank");
    label += std::to_string(config.rank);
  }
  CartanDatum cartan = [&] {
    try {
      return CartanDatum::parse(label);
    } catch (const std::exception& e) {
      throw ConfigError("bad type '" + label + "': " + e.what());
    }
  }();
  if (config.rank > 0 && cartan.rank() != config.rank)
    throw ConfigError("--rank " + std::to_string(config.rank) + " contradicts type " + config.type);
  return cartan;
}

void validate(const CheckConfig& config) {
  const CheckInfo& c = info(config.check);
  CartanDatum cartan = resolve_cartan(config);
  if (config.deg < 1) throw ConfigError("--deg must be at least 1");
  if (config.trials < 1) throw ConfigError("--trials must be at least 1");
  if (config.cap < 1) throw ConfigError("--cap must be at least 1");
  std::string v = variant_of(config);
  if (c.variants.empty() ? !v.empty() : std::find(c.variants.begin(), c.variants.end(), v) == c.variants.end())
    throw ConfigError("check '" + c.name + "' has no variant '" + v + "'");
  if ((c.name == "dn-variant" || v == "dn") && (cartan.type() != 'D' || cartan.rank() < 4))
    throw ConfigError("check '" + c.name + "' needs type D_n, n >= 4");
  if (c.name == "category" && config.modules.empty()) throw ConfigError("--modules needs at least one module");
}

namespace {

// Property sweeps over the printed forms that the main suites replace.
Report printed_derivations(const SpecPtr& spec, int deg) {
  Report rep;
  auto props = derivation_properties();
  const Property* p = nullptr;
  for (const auto& q : props)
    if (q.name == "lemma-v-printed") p = &q;
  for (int h = 1; h <= deg; ++h)
    for (const auto& beta : degrees_of_height(spec->rank(), h))
      for (const auto& w : enumerate_basis(spec, beta))
        for (int i = 0; i < spec->rank(); ++i)
          run_property(rep, *p, spec, {std::to_string(i + 1), format_element(Element::e_word(spec, w))});
  return rep;
}

Report printed_pairing(const CartanDatum& cartan, int deg) {
  Report rep;
  auto props = pairing_properties();
  const Property* p = nullptr;
  for (const auto& q : props)
    if (q.name == "pairing-adjoint-left-printed") p = &q;
  SpecPtr rs = make_rs_spec(cartan);
  int n = cartan.rank();
  for (int h = 1; h <= deg; ++h)
    for (const auto& beta : degrees_of_height(n, h))
      for (int i = 0; i < n; ++i) {
        if (beta[i] == 0) continue;
        RootVector rest = beta;
        --rest[i];
        std::vector<Word> ys = h == 1 ? std::vector<Word>{Word{}} : basis_words(rs, Side::F, rest);
        for (const auto& y : ys)
          for (const auto& x : basis_words(rs, Side::E, beta))
            run_property(rep, *p, rs,
                         {"rs", std::to_string(i + 1), format_element(Element::f_word(rs, y)),
                          format_element(Element::e_word(rs, x))});
      }
  return rep;
}

Report dispatch(const CheckConfig& config) {
  CartanDatum cartan = resolve_cartan(config);
  const std::string& name = config.check;
  std::string v = variant_of(config);
  SpecPtr rs = make_rs_spec(cartan), q = make_q_spec(cartan);
  Report rep;
  if (name == "hopf-axioms") {
    if (v != "q") rep.merge(verify_hopf_axioms(rs, config.deg, config.trials, config.seed));
    if (v != "rs") rep.merge(verify_hopf_axioms(q, config.deg, config.trials, config.seed));
  } else if (name == "derivations") {
    rep = verify_derivation_identities(v == "q" ? q : rs, config.deg);
    if (v == "printed") rep.merge(printed_derivations(rs, config.deg));
  } else if (name == "module-algebra") {
    rep = verify_module_algebra(rs, config.deg, config.trials, config.seed);
  } else if (name == "cocycle") {
    rep = verify_cocycle_conditions(ToralCocycle(q, parse_variant(v)), config.deg);
  } else if (name == "phi-iso") {
    rep = verify_phi_isomorphism(ToralCocycle(q, parse_variant(v)), config.deg);
  } else if (name == "bigraded") {
    rep = verify_bigraded_twist(twist_by_name(cartan, v), config.deg);
  } else if (name == "positive-parts") {
    rep = compare_positive_parts(twist_by_name(cartan, v), config.deg);
  } else if (name == "dn-variant") {
    rep = verify_dn_variant(cartan, config.deg);
  } else if (name == "pairing") {
    rep = verify_pairing_properties(cartan, config.deg);
    if (v == "printed") rep.merge(printed_pairing(cartan, config.deg));
  } else if (name == "gram-rank") {
    rep = verify_gram_ranks(cartan, config.deg);
  } else if (name == "category") {
    rep = verify_category_equivalence(cartan, config.modules, config.cap);
  }
  rep.check = name;
  return rep;
}

}  // namespace

CheckReport run_check(const CheckConfig& config) {
  validate(config);
  CheckReport out;
  out.config = config;
  out.config.variant = variant_of(config);
  auto t0 = std::chrono::steady_clock::now();
  try {
    out.report = dispatch(config);
    out.status = out.report.passed() ? "pass" : "fail";
  } catch (const std::exception& e) {
    out.report.check = config.check;
    out.status = "error";
    out.error = e.what();
  }
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return out;
}

// ---------------------------------------------------------------------------
// JSON

nlohmann::json to_json(const CheckReport& r) {
  const CheckConfig& c = r.config;
  nlohmann::json cex = nlohmann::json::array();
  for (const auto& f : r.report.failures)
    cex.push_back({{"property", f.property},
                   {"cartan", f.cartan},
                   {"spec", f.spec},
                   {"inputs", f.inputs},
                   {"residual", f.residual}});
  return {{"check", c.check},
          {"config",
           {{"type", c.type},
            {"rank", c.rank},
            {"deg", c.deg},
            {"trials", c.trials},
            {"seed", c.seed},
            {"variant", c.variant},
            {"modules", c.modules},
            {"cap", c.cap}}},
          {"status", r.status},
          {"cases", r.report.cases},
          {"failed", r.report.failed},
          {"counterexamples", cex},
          {"error", r.error},
          {"seconds", r.seconds}};
}

CheckReport report_from_json(const nlohmann::json& j) {
  CheckReport r;
  CheckConfig& c = r.config;
  c.check = j.at("check").get<std::string>();
  const auto& cfg = j.at("config");
  c.type = cfg.at("type").get<std::string>();
  c.rank = cfg.at("rank").get<int>();
  c.deg = cfg.at("deg").get<int>();
  c.trials = cfg.at("trials").get<int>();
  c.seed = cfg.at("seed").get<std::uint64_t>();
  c.variant = cfg.at("variant").get<std::string>();
  c.modules = cfg.at("modules").get<std::vector<std::string>>();
  c.cap = cfg.at("cap").get<int>();
  r.status = j.at("status").get<std::string>();
  r.report.check = c.check;
  r.report.cases = j.at("cases").get<std::size_t>();
  r.report.failed = j.at("failed").get<std::size_t>();
  for (const auto& f : j.at("counterexamples"))
    r.report.failures.push_back({f.at("property").get<std::string>(), f.at("cartan").get<std::string>(),
                                 f.at("spec").get<std::string>(), f.at("inputs").get<std::vector<std::string>>(),
                                 f.at("residual").get<std::string>()});
  r.error = j.value("error", "");
  r.seconds = j.value("seconds", 0.0);
  return r;
}

// ---------------------------------------------------------------------------
// Replay

const std::vector<Property>& all_properties() {
  static const std::vector<Property> all = [] {
    std::vector<Property> out;
    for (auto part : {hopf_properties(), derivation_properties(), module_algebra_properties(), cocycle_properties(),
                      bichar_properties(), pairing_properties(), module_properties()})
      out.insert(out.end(), part.begin(), part.end());
    return out;
  }();
  return all;
}

SpecPtr spec_by_name(const CartanDatum& cartan, const std::string& name) {
  if (name == "rs") return make_rs_spec(cartan);
  if (name == "q") return make_q_spec(cartan);
  if (name == "rs-prime") return make_dn_prime_spec(cartan);
  throw std::invalid_argument("unknown algebra '" + name + "'");
}

std::string replay(const Counterexample& c) {
  CartanDatum cartan = CartanDatum::parse(c.cartan);
  SpecPtr spec = spec_by_name(cartan, c.spec);
  for (const auto& p : all_properties())
    if (p.name == c.property) return p.eval(spec, c.inputs);
  throw std::invalid_argument("unknown property '" + c.property + "'");
}

}  // namespace qtwist

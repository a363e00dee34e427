#include "qtwist/relations.hpp"

#include "qtwist/property.hpp"

#include <sstream>
#include <stdexcept>

namespace qtwist {

namespace {

std::string pair_id(const char* tag, int i, int j) {
  return std::string(tag) + ":" + std::to_string(i + 1) + "," + std::to_string(j + 1);
}

RelationSum commutator(const Generator& a, const Generator& b, const Coeff& c) {
  return {{Coeff(1), {a, b}}, {-c, {b, a}}};
}

RelationSum serre(const SpecPtr& spec, Side side, int i, int j) {
  RelationSum out;
  for (const auto& [w, c] : spec->serre_element(side, i, j)) {
    GeneratorWord g;
    for (int k : w) g.push_back(side == Side::E ? Generator::e(k) : Generator::f(k));
    out.emplace_back(Coeff(c), std::move(g));
  }
  return out;
}

}  // namespace

std::vector<Relation> defining_relations(const SpecPtr& spec) {
  int n = spec->rank();
  const Character& cw = spec->chi_omega();
  const Character& cwp = spec->chi_omega_prime();
  auto u = [n](int i) { return unit_root(n, i); };
  std::vector<Relation> out;
  for (int i = 0; i < n; ++i) {
    Relation r{"R1:" + std::to_string(i + 1), {}};
    for (int sgn : {1, -1}) {
      r.parts.push_back({{Coeff(1), {Generator::omega(sgn * u(i)), Generator::omega(-sgn * u(i))}},
                         {Coeff(-1), {}}});
      r.parts.push_back({{Coeff(1), {Generator::omega_prime(sgn * u(i)), Generator::omega_prime(-sgn * u(i))}},
                         {Coeff(-1), {}}});
    }
    out.push_back(std::move(r));
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Relation r{pair_id("R2", i, j), {}};
      if (i < j) {
        r.parts.push_back(commutator(Generator::omega(u(i)), Generator::omega(u(j)), Coeff(1)));
        r.parts.push_back(commutator(Generator::omega_prime(u(i)), Generator::omega_prime(u(j)), Coeff(1)));
      }
      r.parts.push_back(commutator(Generator::omega(u(i)), Generator::omega_prime(u(j)), Coeff(1)));
      out.push_back(std::move(r));
    }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      // omega_i e_j = chi(i, j) e_j omega_i, and the inverse constant for f_j.
      out.push_back({pair_id("R3", i, j),
                     {commutator(Generator::omega(u(i)), Generator::e(j), Coeff(cw(i, j))),
                      commutator(Generator::omega_prime(u(i)), Generator::e(j), Coeff(cwp(i, j)))}});
      out.push_back({pair_id("R4", i, j),
                     {commutator(Generator::omega(u(i)), Generator::f(j), Coeff(cw(i, j).inverse())),
                      commutator(Generator::omega_prime(u(i)), Generator::f(j), Coeff(cwp(i, j).inverse()))}});
    }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      RelationSum s = commutator(Generator::e(i), Generator::f(j), Coeff(1));
      if (i == j) {
        s.emplace_back(-spec->t_inverse(i), GeneratorWord{Generator::omega(u(i))});
        s.emplace_back(spec->t_inverse(i), GeneratorWord{Generator::omega_prime(u(i))});
      }
      out.push_back({pair_id("R5", i, j), {std::move(s)}});
    }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) out.push_back({pair_id("R6", i, j), {serre(spec, Side::E, i, j)}});
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) out.push_back({pair_id("R7", i, j), {serre(spec, Side::F, i, j)}});
  return out;
}

Relation relation(const SpecPtr& spec, std::string_view id) {
  for (auto& r : defining_relations(spec))
    if (r.id == id) return r;
  throw std::invalid_argument("unknown relation " + std::string(id));
}

Element generator_element(const SpecPtr& spec, const Generator& g) {
  switch (g.kind) {
    case Generator::Kind::E: return Element::e(spec, g.i);
    case Generator::Kind::F: return Element::f(spec, g.i);
    case Generator::Kind::Omega: return Element::omega(spec, g.mu);
    case Generator::Kind::OmegaPrime: return Element::omega_prime(spec, g.mu);
  }
  throw std::logic_error("bad generator");
}

Element evaluate_word(const SpecPtr& spec, const GeneratorWord& w) {
  Element out(spec, Coeff(1));
  for (const auto& g : w) out = out * generator_element(spec, g);
  return out;
}

std::string format_generator_word(const GeneratorWord& w) {
  if (w.empty()) return "1";
  std::string out;
  for (const auto& g : w) {
    if (!out.empty()) out += "*";
    switch (g.kind) {
      case Generator::Kind::E: out += "e" + std::to_string(g.i + 1); break;
      case Generator::Kind::F: out += "f" + std::to_string(g.i + 1); break;
      default: {
        bool first = true;
        for (std::size_t k = 0; k < g.mu.size(); ++k) {
          if (g.mu[k] == 0) continue;
          if (!first) out += "*";
          first = false;
          out += (g.kind == Generator::Kind::Omega ? "w" : "w'") + std::to_string(k + 1);
          if (g.mu[k] != 1) out += "^" + std::to_string(g.mu[k]);
        }
        if (first) out += "1";
      }
    }
  }
  return out;
}

GeneratorWord parse_generator_word(const std::string& text, int rank) {
  GeneratorWord out;
  std::stringstream in(text);
  std::string tok;
  while (std::getline(in, tok, '*')) {
    if (tok == "1") continue;
    auto bad = [&] { return std::invalid_argument("bad generator '" + tok + "'"); };
    if (tok.size() < 2) throw bad();
    Generator::Kind kind;
    std::size_t at = 1;
    if (tok[0] == 'e') kind = Generator::Kind::E;
    else if (tok[0] == 'f') kind = Generator::Kind::F;
    else if (tok[0] == 'w' && tok[1] == '\'') kind = Generator::Kind::OmegaPrime, at = 2;
    else if (tok[0] == 'w') kind = Generator::Kind::Omega;
    else throw bad();
    std::string body = tok.substr(at);
    long power = 1;
    if (auto caret = body.find('^'); caret != std::string::npos) {
      if (kind == Generator::Kind::E || kind == Generator::Kind::F) throw bad();
      try {
        std::size_t used = 0;
        power = std::stol(body.substr(caret + 1), &used);
        if (used != body.size() - caret - 1) throw bad();
      } catch (const std::logic_error&) {
        throw bad();
      }
      body = body.substr(0, caret);
    }
    int i = parse_index(body, rank);
    if (kind == Generator::Kind::E || kind == Generator::Kind::F) {
      out.push_back({kind, i, {}});
    } else {
      RootVector mu(rank, 0);
      mu[i] = static_cast<int>(power);
      out.push_back({kind, 0, mu});
    }
  }
  return out;
}

GeneratorWord monomial_word(const Monomial& m) {
  GeneratorWord w;
  for (int i : m.f) w.push_back(Generator::f(i));
  if (!is_zero(m.w)) w.push_back(Generator::omega(m.w));
  if (!is_zero(m.wp)) w.push_back(Generator::omega_prime(m.wp));
  for (int i : m.e) w.push_back(Generator::e(i));
  return w;
}

}  // namespace qtwist

#include "qtwist/bichar.hpp"

#include "qtwist/hopf.hpp"

#include <random>
#include <stdexcept>

namespace qtwist {

namespace {

mpq_class as_mpq(const Exponent& e) {
  return mpq_class(static_cast<long>(e.numerator()), static_cast<long>(e.denominator()));
}

}  // namespace

Bicharacter Bicharacter::square_root(const CartanDatum& cartan, const Character& p) {
  int n = cartan.rank();
  Character half(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) half.set(i, j, p.r_exponent(i, j) / 2, p.s_exponent(i, j) / 2);
  return Bicharacter(cartan, half);
}

LaurentScalar Bicharacter::operator()(const RootVector& mu, const RootVector& nu) const { return table_(mu, nu); }

LaurentScalar Bicharacter::operator()(const LatticeVector& mu, const LatticeVector& nu) const {
  int n = cartan_.rank();
  if (static_cast<int>(mu.size()) != n || static_cast<int>(nu.size()) != n)
    throw std::invalid_argument("lattice vector of wrong rank");
  mpq_class re = 0, se = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      mpq_class k = mu[i] * nu[j];
      re += k * as_mpq(table_.r_exponent(i, j));
      se += k * as_mpq(table_.s_exponent(i, j));
    }
  re.canonicalize();
  se.canonicalize();
  long long den = cartan_.scalar_denominator();
  for (const mpq_class* x : {&re, &se})
    if (den % x->get_den().get_si() != 0)
      throw std::domain_error("bicharacter value leaves the 1/" + std::to_string(den) + " exponent lattice");
  return LaurentScalar::monomial(1, Exponent(re.get_num().get_si(), re.get_den().get_si()),
                                 Exponent(se.get_num().get_si(), se.get_den().get_si()));
}

LaurentScalar Bicharacter::tilde(const Bidegree& g, const Bidegree& h) const {
  return (*this)(g.first, h.first) * (*this)(g.second, h.second).inverse();
}

Character p_table(const CartanDatum& cartan) {
  int n = cartan.rank();
  Character p(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      // q^{-d_i a_ij} = r^{-sym/2} s^{sym/2}
      Exponent h(cartan.sym(i, j), 2);
      p.set(i, j, Exponent(cartan.euler(j, i)) - h, Exponent(-cartan.euler(i, j)) + h);
    }
  return p;
}

LaurentScalar p_value(const CartanDatum& cartan, int i, int j) { return p_table(cartan)(i, j); }

Character dn_variant_p(const CartanDatum& cartan) {
  if (cartan.type() != 'D') throw std::invalid_argument("the variant p-table is defined for type D");
  int n = cartan.rank();
  Character p(n);
  p.set(n - 1, n - 2, 1, 1);
  p.set(n - 2, n - 1, -1, -1);
  return p;
}

SpecPtr make_dn_prime_spec(const CartanDatum& cartan) {
  if (cartan.type() != 'D') throw std::invalid_argument("the primed presentation is defined for type D");
  auto euler = euler_table(cartan);
  int n = cartan.rank();
  euler[n - 2][n - 1] = -1;
  euler[n - 1][n - 2] = 1;
  return make_rs_spec(cartan, euler, "rs-prime");
}

std::vector<std::vector<LaurentScalar>> relation_constant_matrix(const SpecPtr& spec) {
  int n = spec->rank();
  std::vector<std::vector<LaurentScalar>> m(n, std::vector<LaurentScalar>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[i][j] = spec->chi_omega()(j, i);
  return m;
}

BigradedTwist standard_twist(const CartanDatum& cartan) {
  std::vector<Coeff> scale;
  for (int i = 0; i < cartan.rank(); ++i) {
    Exponent h(-cartan.d(i), 2);
    scale.emplace_back(LaurentScalar::monomial(1, h, h));
  }
  return {"standard", make_q_spec(cartan), make_rs_spec(cartan), Bicharacter::square_root(cartan, p_table(cartan)),
          scale};
}

BigradedTwist dn_twist(const CartanDatum& cartan) {
  return {"dn", make_dn_prime_spec(cartan), make_rs_spec(cartan),
          Bicharacter::square_root(cartan, dn_variant_p(cartan)), std::vector<Coeff>(cartan.rank(), Coeff(1))};
}

BigradedTwist twist_by_name(const CartanDatum& cartan, const std::string& name) {
  if (name == "standard") return standard_twist(cartan);
  if (name == "dn") return dn_twist(cartan);
  throw std::invalid_argument("unknown twist '" + name + "'");
}

Element circ_multiply(const Bicharacter& zeta, const Element& x, const Element& y) {
  const SpecPtr& spec = x.spec();
  Element out(spec);
  for (const auto& [a, ca] : x.terms())
    for (const auto& [b, cb] : y.terms())
      out += (ca * cb * Coeff(zeta.tilde(a.bidegree(), b.bidegree()))) * multiply(spec, a, b);
  return out;
}

Element twist_generator(const BigradedTwist& t, const Generator& g) {
  const SpecPtr& spec = t.base;
  switch (g.kind) {
    case Generator::Kind::E: return Element::e(spec, g.i);
    case Generator::Kind::F: return t.f_scale[g.i] * Element::f(spec, g.i);
    case Generator::Kind::Omega: return Element::omega(spec, g.mu);
    case Generator::Kind::OmegaPrime: return Element::omega_prime(spec, g.mu);
  }
  throw std::logic_error("bad generator");
}

Element twist_word(const BigradedTwist& t, const GeneratorWord& w) {
  Element out(t.base, Coeff(1));
  for (const auto& g : w) out = circ_multiply(t.zeta, out, twist_generator(t, g));
  return out;
}

// ---------------------------------------------------------------------------
// Properties. The spec handed in is the twist's base; the first input names
// the twist.

namespace {

using Inputs = std::vector<std::string>;

void need(const Inputs& in, std::size_t k) {
  if (in.size() != k) throw std::invalid_argument("expected " + std::to_string(k) + " inputs");
}

BigradedTwist twist_of(const SpecPtr& spec, const std::string& name) {
  BigradedTwist t = twist_by_name(spec->cartan(), name);
  if (t.base->name() != spec->name()) throw std::invalid_argument("twist '" + name + "' has base " + t.base->name());
  t.base = spec;
  return t;
}

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) {
    if (p == "0") continue;
    if (!out.empty()) out += " ; ";
    out += p;
  }
  return out.empty() ? "0" : out;
}

std::string scalar_residual(const LaurentScalar& c) { return c.is_zero() ? "0" : c.str(); }

Bidegree parse_bidegree(const std::string& s, int n) {
  auto bar = s.find('|');
  if (bar == std::string::npos) throw std::invalid_argument("bidegree needs the form a|b");
  return {parse_root(s.substr(0, bar), n), parse_root(s.substr(bar + 1), n)};
}

std::string format_bidegree(const Bidegree& g) { return format_root(g.first) + "|" + format_root(g.second); }

const Monomial& single(const Element& x) {
  if (x.size() != 1) throw std::invalid_argument("expected a single monomial");
  return x.terms().begin()->first;
}

std::string bigraded_axioms(const SpecPtr& spec, const Inputs& in) {
  need(in, 3);
  Element x = parse_element(spec, in[1]), y = parse_element(spec, in[2]);
  auto [a, b] = single(x).bidegree();
  std::vector<std::string> bad;
  TensorElement dx = coproduct(x);
  if (!coproduct_respects_grading(x, dx)) bad.push_back("coproduct");
  if (a != -b && !counit(x).is_zero()) bad.push_back("counit");
  Element sx = serre_normal_form(antipode(x));
  for (const auto& [m, c] : sx.terms())
    if (m.bidegree() != Bidegree{b, a}) bad.push_back("antipode");
  auto [c, d] = single(y).bidegree();
  Element xy = x * y;
  for (const auto& [m, v] : xy.terms())
    if (m.bidegree() != Bidegree{a + c, b + d}) bad.push_back("product");
  std::string out;
  for (const auto& s : bad) out += (out.empty() ? "" : ",") + s;
  return out.empty() ? "0" : out;
}

std::string twist_relation(const SpecPtr& spec, const Inputs& in) {
  need(in, 2);
  BigradedTwist t = twist_of(spec, in[0]);
  Relation rel = relation(t.target, in[1]);
  std::vector<std::string> parts;
  for (const auto& part : rel.parts) {
    Element sum(spec);
    for (const auto& [c, w] : part) sum += c * twist_word(t, w);
    parts.push_back(residual(sum));
  }
  return join(parts);
}

std::string circ_assoc(const SpecPtr& spec, const Inputs& in) {
  need(in, 4);
  BigradedTwist t = twist_of(spec, in[0]);
  Element x = parse_element(spec, in[1]), y = parse_element(spec, in[2]), z = parse_element(spec, in[3]);
  const Bicharacter& zt = t.zeta;
  return residual(circ_multiply(zt, circ_multiply(zt, x, y), z) - circ_multiply(zt, x, circ_multiply(zt, y, z)));
}

// Delta(x o y) = Delta(x) o Delta(y), legwise.
std::string circ_bialgebra(const SpecPtr& spec, const Inputs& in) {
  need(in, 3);
  BigradedTwist t = twist_of(spec, in[0]);
  Element x = parse_element(spec, in[1]), y = parse_element(spec, in[2]);
  TensorElement lhs = coproduct(circ_multiply(t.zeta, x, y));
  TensorElement dx = coproduct(x), dy = coproduct(y);
  TensorElement rhs(spec, 2);
  for (const auto& [a, ca] : dx.terms())
    for (const auto& [b, cb] : dy.terms())
      rhs += (ca * cb) * TensorElement::pure({circ_multiply(t.zeta, Element(spec, a[0]), Element(spec, b[0])),
                                              circ_multiply(t.zeta, Element(spec, a[1]), Element(spec, b[1]))});
  return tensor_normal_form(lhs - rhs).str();
}

std::string zeta_cocycle(const SpecPtr& spec, const Inputs& in) {
  need(in, 4);
  BigradedTwist t = twist_of(spec, in[0]);
  int n = spec->rank();
  Bidegree g = parse_bidegree(in[1], n), h = parse_bidegree(in[2], n), k = parse_bidegree(in[3], n);
  auto add = [](const Bidegree& x, const Bidegree& y) { return Bidegree{x.first + y.first, x.second + y.second}; };
  const Bicharacter& z = t.zeta;
  LaurentScalar lhs = z.tilde(g, h) * z.tilde(add(g, h), k);
  LaurentScalar rhs = z.tilde(h, k) * z.tilde(g, add(h, k));
  // skew on the diagonal and antisymmetric
  LaurentScalar diag = z(g.first, g.first) - LaurentScalar(1);
  LaurentScalar anti = z(g.first, h.first) * z(h.first, g.first) - LaurentScalar(1);
  return join({scalar_residual(lhs - rhs), scalar_residual(diag), scalar_residual(anti)});
}

// w_j e_i constants: target M_ij = zeta(j, i) zeta(i, j)^{-1} base M_ij.
std::string twist_constants(const SpecPtr& spec, const Inputs& in) {
  need(in, 3);
  BigradedTwist t = twist_of(spec, in[0]);
  int n = spec->rank();
  int i = parse_index(in[1], n), j = parse_index(in[2], n);
  LaurentScalar base = t.base->chi_omega()(j, i), target = t.target->chi_omega()(j, i);
  LaurentScalar factor = t.zeta.table()(j, i) * t.zeta.table()(i, j).inverse();
  LaurentScalar base_f = t.base->chi_omega_prime()(j, i), target_f = t.target->chi_omega_prime()(j, i);
  return join({scalar_residual(target - factor * base), scalar_residual(target_f - factor * base_f)});
}

Word e_word_of(const Element& x) {
  const Monomial& m = single(x);
  if (!m.f.empty() || !is_zero(m.w) || !is_zero(m.wp)) throw std::invalid_argument("expected an e-word");
  return m.e;
}

// Coefficient lambda_w with E_{w1} o ... o E_{wk} = lambda_w E_w.
Coeff circ_scale(const BigradedTwist& t, const Word& w) {
  GeneratorWord g;
  for (int i : w) g.push_back(Generator::e(i));
  Element x = twist_word(t, g);
  return x.terms().begin()->second;
}

// Structure constant of e_u e_v in the target against the o-product of the
// matching elements in the base.
std::string positive_part(const SpecPtr& spec, const Inputs& in) {
  need(in, 3);
  BigradedTwist t = twist_of(spec, in[0]);
  Word u = e_word_of(parse_element(t.target, in[1])), v = e_word_of(parse_element(t.target, in[2]));
  Word uv = u;
  uv.insert(uv.end(), v.begin(), v.end());
  Element direct = serre_normal_form(Element::e_word(t.target, uv));
  Element lu = circ_scale(t, u) * Element::e_word(spec, u), lv = circ_scale(t, v) * Element::e_word(spec, v);
  Element prod = serre_normal_form(circ_multiply(t.zeta, lu, lv));
  Element mapped(t.target);
  for (const auto& [m, c] : prod.terms()) mapped += (c * circ_scale(t, m.e).inverse()) * Element::e_word(t.target, m.e);
  return residual(direct - mapped);
}

std::string positive_basis(const SpecPtr& spec, const Inputs& in) {
  need(in, 2);
  BigradedTwist t = twist_of(spec, in[0]);
  RootVector beta = parse_root(in[1], spec->rank());
  auto a = enumerate_basis(t.target, beta), b = enumerate_basis(spec, beta);
  if (a == b) return "0";
  return "bases differ: " + std::to_string(a.size()) + " vs " + std::to_string(b.size()) + " words";
}

}  // namespace

std::vector<Property> bichar_properties() {
  return {
      {"bigraded-axioms", bigraded_axioms}, {"twist-relation", twist_relation},
      {"circ-assoc", circ_assoc},           {"circ-bialgebra", circ_bialgebra},
      {"zeta-cocycle", zeta_cocycle},
      {"twist-constants", twist_constants}, {"positive-part", positive_part},
      {"positive-basis", positive_basis},
  };
}

// ---------------------------------------------------------------------------
// Sweeps

namespace {

const Property& find(const std::vector<Property>& ps, const std::string& name) {
  for (const auto& p : ps)
    if (p.name == name) return p;
  throw std::logic_error("unregistered property " + name);
}

std::vector<Monomial> words_up_to(int n, int deg) {
  std::vector<std::vector<Word>> by_len{{{}}};
  for (int l = 1; l <= deg; ++l) {
    std::vector<Word> next;
    for (const auto& w : by_len.back())
      for (int i = 0; i < n; ++i) {
        Word u = w;
        u.push_back(i);
        next.push_back(u);
      }
    by_len.push_back(next);
  }
  std::vector<Monomial> out;
  for (int lf = 0; lf <= deg; ++lf)
    for (int le = 0; lf + le <= deg; ++le)
      for (const auto& f : by_len[lf])
        for (const auto& e : by_len[le]) {
          Monomial m = Monomial::unit(n);
          m.f = f;
          m.e = e;
          out.push_back(m);
        }
  return out;
}

}  // namespace

Report verify_bigraded_twist(const BigradedTwist& t, int deg_bound) {
  if (deg_bound < 1) throw std::invalid_argument("degree bound must be at least 1");
  const SpecPtr& spec = t.base;
  int n = spec->rank();
  Report rep;
  rep.check = "bichar";
  auto props = bichar_properties();
  auto run = [&](const char* name, Inputs in) { run_property(rep, find(props, name), spec, std::move(in)); };
  auto txt = [&](const Monomial& m) { return format_element(Element(spec, m)); };

  std::vector<Monomial> gens;
  for (int i = 0; i < n; ++i) {
    Monomial m = Monomial::unit(n);
    m.e = {i};
    gens.push_back(m);
    m = Monomial::unit(n);
    m.f = {i};
    gens.push_back(m);
    m = Monomial::unit(n);
    m.w[i] = 1;
    gens.push_back(m);
    m = Monomial::unit(n);
    m.wp[i] = 1;
    gens.push_back(m);
  }

  // Grading axioms on words decorated by at most one torus generator.
  for (const auto& w : words_up_to(n, deg_bound)) {
    std::vector<Monomial> decorated{w};
    for (int i = 0; i < n; ++i) {
      Monomial a = w;
      a.w[i] = 1;
      decorated.push_back(a);
      a = w;
      a.wp[i] = -1;
      decorated.push_back(a);
    }
    for (const auto& x : decorated)
      for (const auto& y : gens) run("bigraded-axioms", {t.name, txt(x), txt(y)});
  }

  for (const auto& r : defining_relations(t.target)) run("twist-relation", {t.name, r.id});
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) run("twist-constants", {t.name, std::to_string(i + 1), std::to_string(j + 1)});

  std::vector<Bidegree> degs{{RootVector(n, 0), RootVector(n, 0)}};
  for (const auto& g : gens) degs.push_back(g.bidegree());
  for (const auto& g : degs)
    for (const auto& h : degs)
      for (const auto& k : degs) run("zeta-cocycle", {t.name, format_bidegree(g), format_bidegree(h), format_bidegree(k)});

  for (const auto& x : gens)
    for (const auto& y : gens)
      for (const auto& z : gens) run("circ-assoc", {t.name, txt(x), txt(y), txt(z)});
  for (const auto& x : gens)
    for (const auto& y : gens) run("circ-bialgebra", {t.name, txt(x), txt(y)});
  // and sampled triples of longer words
  std::vector<Monomial> pool = words_up_to(n, std::min(deg_bound, 3));
  std::mt19937_64 rng(11);
  for (int k = 0; k < 40; ++k) {
    const Monomial& x = pool[rng() % pool.size()];
    const Monomial& y = pool[rng() % pool.size()];
    const Monomial& z = pool[rng() % pool.size()];
    run("circ-assoc", {t.name, txt(x), txt(y), txt(z)});
  }
  return rep;
}

Report compare_positive_parts(const BigradedTwist& t, int deg_bound) {
  if (deg_bound < 1) throw std::invalid_argument("degree bound must be at least 1");
  const SpecPtr& spec = t.base;
  int n = spec->rank();
  Report rep;
  rep.check = "deform";
  auto props = bichar_properties();
  auto run = [&](const char* name, Inputs in) { run_property(rep, find(props, name), spec, std::move(in)); };
  auto txt = [&](const Word& w) { return format_element(Element::e_word(t.target, w)); };

  for (int h = 1; h <= deg_bound; ++h)
    for (const auto& beta : degrees_of_height(n, h)) {
      run("positive-basis", {t.name, format_root(beta)});
      for (int h1 = 1; h1 < h; ++h1)
        for (const auto& b1 : degrees_of_height(n, h1)) {
          RootVector b2 = beta - b1;
          if (!is_nonnegative(b2)) continue;
          for (const auto& u : enumerate_basis(t.target, b1))
            for (const auto& v : enumerate_basis(t.target, b2)) run("positive-part", {t.name, txt(u), txt(v)});
        }
    }
  return rep;
}

Report verify_dn_variant(const CartanDatum& cartan, int deg_bound) {
  BigradedTwist t = dn_twist(cartan);
  Report rep = verify_bigraded_twist(t, deg_bound);
  rep.merge(compare_positive_parts(t, deg_bound));
  rep.check = "dn-variant";
  return rep;
}

}  // namespace qtwist

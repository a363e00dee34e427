#include "qtwist/cocycle.hpp"

#include <stdexcept>

namespace qtwist {

std::string variant_name(CocycleVariant v) { return v == CocycleVariant::Sigma ? "sigma" : "sigma-prime"; }

CocycleVariant parse_variant(const std::string& name) {
  if (name == "sigma") return CocycleVariant::Sigma;
  if (name == "sigma-prime") return CocycleVariant::SigmaPrime;
  throw std::invalid_argument("unknown cocycle variant '" + name + "'");
}

ToralCocycle::ToralCocycle(SpecPtr spec, CocycleVariant variant) : spec_(std::move(spec)), variant_(variant) {
  if (spec_->kind() != AlgebraSpec::Kind::Q) throw std::invalid_argument("cocycle lives on a U_q spec");
}

LaurentScalar ToralCocycle::on_lattice(const RootVector& a, const RootVector& b) const {
  const CartanDatum& c = spec_->cartan();
  if (variant_ == CocycleVariant::Sigma) return LaurentScalar::monomial(1, Exponent(c.euler(b, a), 2), Exponent(-c.euler(a, b), 2));
  Exponent h(-c.euler(a, b), 2);
  return LaurentScalar::monomial(1, h, h);
}

Coeff ToralCocycle::operator()(const Monomial& x, const Monomial& y) const {
  if (!x.is_toral() || !y.is_toral()) return Coeff();
  return Coeff(on_lattice(x.w + x.wp, y.w + y.wp));
}

Coeff ToralCocycle::inverse(const Monomial& x, const Monomial& y) const {
  if (!x.is_toral() || !y.is_toral()) return Coeff();
  return Coeff(on_lattice(x.w + x.wp, y.w + y.wp).inverse());
}

Coeff ToralCocycle::operator()(const Element& x, const Element& y) const {
  Coeff out;
  for (const auto& [a, ca] : x.terms())
    for (const auto& [b, cb] : y.terms()) {
      Coeff v = (*this)(a, b);
      if (!v.is_zero()) out += ca * cb * v;
    }
  return out;
}

Coeff ToralCocycle::inverse(const Element& x, const Element& y) const {
  Coeff out;
  for (const auto& [a, ca] : x.terms())
    for (const auto& [b, cb] : y.terms()) {
      Coeff v = inverse(a, b);
      if (!v.is_zero()) out += ca * cb * v;
    }
  return out;
}

namespace {

struct Leg3 {
  Monomial outer1, middle, outer3;
  Coeff c;
};

// Terms of Delta^2(m) whose outer legs are toral; the rest pair to zero.
std::vector<Leg3> toral_outer(const SpecPtr& spec, const Monomial& m, const Coeff& scale) {
  std::vector<Leg3> out;
  TensorElement d = coproduct(spec, m, 3);
  for (const auto& [t, c] : d.terms())
    if (t[0].is_toral() && t[2].is_toral()) out.push_back({t[0], t[1], t[2], scale * c});
  return out;
}

}  // namespace

Element twisted_multiply(const ToralCocycle& c, const Element& x, const Element& y) {
  const SpecPtr& spec = c.spec();
  std::vector<std::vector<Leg3>> ys;
  for (const auto& [m, v] : y.terms()) ys.push_back(toral_outer(spec, m, v));
  Element out(spec);
  for (const auto& [mx, vx] : x.terms())
    for (const auto& a : toral_outer(spec, mx, vx))
      for (const auto& legs : ys)
        for (const auto& b : legs) {
          Coeff s = c(a.outer1, b.outer1);
          if (s.is_zero()) continue;
          s *= c.inverse(a.outer3, b.outer3);
          if (s.is_zero()) continue;
          out += (a.c * b.c * s) * multiply(spec, a.middle, b.middle);
        }
  return serre_normal_form(out);
}

namespace {

Monomial toral_inverse(const Monomial& m) {
  Monomial out = m;
  out.w = -m.w;
  out.wp = -m.wp;
  return out;
}

}  // namespace

namespace {

Element antipode_sum(const ToralCocycle& c, const Element& x, bool printed) {
  const SpecPtr& spec = c.spec();
  Element out(spec);
  for (const auto& [m, v] : x.terms()) {
    TensorElement d = coproduct(spec, m, 5);
    for (const auto& [t, tc] : d.terms()) {
      if (!t[0].is_toral() || !t[1].is_toral() || !t[3].is_toral() || !t[4].is_toral()) continue;
      Monomial s2 = toral_inverse(t[1]), s4 = toral_inverse(t[3]);
      Coeff s = printed ? c.inverse(t[0], s2) * c(s4, t[4]) : c(t[0], s2) * c.inverse(s4, t[4]);
      out += (v * tc * s) * antipode(spec, t[2]);
    }
  }
  return serre_normal_form(out);
}

}  // namespace

Element twisted_antipode(const ToralCocycle& c, const Element& x) { return antipode_sum(c, x, false); }

Element twisted_antipode_printed(const ToralCocycle& c, const Element& x) { return antipode_sum(c, x, true); }

Element phi(const ToralCocycle& c, const Generator& g) {
  const SpecPtr& spec = c.spec();
  switch (g.kind) {
    case Generator::Kind::E: return Element::e(spec, g.i);
    case Generator::Kind::F: {
      Exponent h(-spec->cartan().d(g.i), 2);
      return Coeff(LaurentScalar::monomial(1, h, h)) * Element::f(spec, g.i);
    }
    case Generator::Kind::Omega: return Element::omega(spec, g.mu);
    case Generator::Kind::OmegaPrime: return Element::omega_prime(spec, g.mu);
  }
  throw std::logic_error("bad generator");
}

Element phi_word(const ToralCocycle& c, const GeneratorWord& w) {
  Element out(c.spec(), Coeff(1));
  for (const auto& g : w) out = twisted_multiply(c, out, phi(c, g));
  return out;
}

// ---------------------------------------------------------------------------
// Properties

namespace {

using Inputs = std::vector<std::string>;

void need(const Inputs& in, std::size_t k) {
  if (in.size() != k) throw std::invalid_argument("expected " + std::to_string(k) + " inputs");
}

ToralCocycle cocycle_of(const SpecPtr& spec, const std::string& v) { return ToralCocycle(spec, parse_variant(v)); }

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) {
    if (p == "0") continue;
    if (!out.empty()) out += " ; ";
    out += p;
  }
  return out.empty() ? "0" : out;
}

std::string scalar_residual(const Coeff& c) { return c.is_zero() ? "0" : c.str(); }

std::string tensor_residual(const TensorElement& t) { return tensor_normal_form(t).str(); }

std::string cocycle_1(const SpecPtr& spec, const Inputs& in) {
  need(in, 4);
  ToralCocycle s = cocycle_of(spec, in[0]);
  Element a = parse_element(spec, in[1]), b = parse_element(spec, in[2]), c = parse_element(spec, in[3]);
  TensorElement da = coproduct(a), db = coproduct(b), dc = coproduct(c);
  Coeff lhs, rhs;
  for (const auto& [ta, ca] : da.terms())
    for (const auto& [tb, cb] : db.terms()) {
      Coeff v = s(ta[0], tb[0]);
      if (v.is_zero()) continue;
      lhs += ca * cb * v * s(multiply(spec, ta[1], tb[1]), c);
    }
  for (const auto& [tb, cb] : db.terms())
    for (const auto& [tc, cc] : dc.terms()) {
      Coeff v = s(tb[0], tc[0]);
      if (v.is_zero()) continue;
      rhs += cb * cc * v * s(a, multiply(spec, tb[1], tc[1]));
    }
  return scalar_residual(lhs - rhs);
}

std::string cocycle_2(const SpecPtr& spec, const Inputs& in) {
  need(in, 2);
  ToralCocycle s = cocycle_of(spec, in[0]);
  Element a = parse_element(spec, in[1]);
  Element one(spec, Coeff(1));
  Coeff e = counit(a);
  return join({scalar_residual(s(a, one) - e), scalar_residual(s(one, a) - e)});
}

std::string cocycle_inverse(const SpecPtr& spec, const Inputs& in) {
  need(in, 3);
  ToralCocycle s = cocycle_of(spec, in[0]);
  Element a = parse_element(spec, in[1]), b = parse_element(spec, in[2]);
  TensorElement da = coproduct(a), db = coproduct(b);
  Coeff left, right;
  for (const auto& [ta, ca] : da.terms())
    for (const auto& [tb, cb] : db.terms()) {
      left += ca * cb * s(ta[0], tb[0]) * s.inverse(ta[1], tb[1]);
      right += ca * cb * s.inverse(ta[0], tb[0]) * s(ta[1], tb[1]);
    }
  Coeff e = counit(a) * counit(b);
  return join({scalar_residual(left - e), scalar_residual(right - e)});
}

std::string phi_relation(const SpecPtr& spec, const Inputs& in) {
  need(in, 2);
  ToralCocycle s = cocycle_of(spec, in[0]);
  SpecPtr rs = make_rs_spec(spec->cartan());
  Relation rel = relation(rs, in[1]);
  std::vector<std::string> parts;
  for (const auto& part : rel.parts) {
    Element sum(spec);
    for (const auto& [c, w] : part) sum += c * phi_word(s, w);
    parts.push_back(residual(sum));
  }
  return join(parts);
}

// Delta(phi(g)) = (phi (x) phi) Delta(g) for a U_{r,s} generator g.
std::string phi_coalgebra(const SpecPtr& spec, const Inputs& in) {
  need(in, 2);
  ToralCocycle s = cocycle_of(spec, in[0]);
  SpecPtr rs = make_rs_spec(spec->cartan());
  Element g = parse_element(rs, in[1]);
  if (g.size() != 1) throw std::invalid_argument("expected a single monomial");
  Element img = phi_word(s, monomial_word(g.terms().begin()->first));
  TensorElement lhs = coproduct(img);
  TensorElement rhs(spec, 2);
  TensorElement dg = coproduct(g);
  for (const auto& [t, c] : dg.terms())
    rhs += c * TensorElement::pure({phi_word(s, monomial_word(t[0])), phi_word(s, monomial_word(t[1]))});
  return tensor_residual(lhs - rhs);
}

std::string twisted_unit(const SpecPtr& spec, const Inputs& in) {
  need(in, 2);
  ToralCocycle s = cocycle_of(spec, in[0]);
  Element x = parse_element(spec, in[1]);
  Element one(spec, Coeff(1));
  return join({residual(twisted_multiply(s, one, x) - x), residual(twisted_multiply(s, x, one) - x)});
}

std::string twisted_assoc(const SpecPtr& spec, const Inputs& in) {
  need(in, 4);
  ToralCocycle s = cocycle_of(spec, in[0]);
  Element x = parse_element(spec, in[1]), y = parse_element(spec, in[2]), z = parse_element(spec, in[3]);
  Element a = twisted_multiply(s, twisted_multiply(s, x, y), z);
  Element b = twisted_multiply(s, x, twisted_multiply(s, y, z));
  return residual(a - b);
}

TensorElement twisted_tensor_product(const ToralCocycle& s, const TensorElement& a, const TensorElement& b) {
  const SpecPtr& spec = s.spec();
  TensorElement out(spec, 2);
  for (const auto& [ta, ca] : a.terms())
    for (const auto& [tb, cb] : b.terms()) {
      Element l = twisted_multiply(s, Element(spec, ta[0]), Element(spec, tb[0]));
      Element r = twisted_multiply(s, Element(spec, ta[1]), Element(spec, tb[1]));
      out += (ca * cb) * TensorElement::pure({l, r});
    }
  return out;
}

std::string twisted_bialgebra(const SpecPtr& spec, const Inputs& in) {
  need(in, 3);
  ToralCocycle s = cocycle_of(spec, in[0]);
  Element x = parse_element(spec, in[1]), y = parse_element(spec, in[2]);
  TensorElement lhs = coproduct(twisted_multiply(s, x, y));
  TensorElement rhs = twisted_tensor_product(s, coproduct(x), coproduct(y));
  return tensor_residual(lhs - rhs);
}

std::string antipode_law(const SpecPtr& spec, const Inputs& in, Element (*anti)(const ToralCocycle&, const Element&)) {
  need(in, 2);
  ToralCocycle s = cocycle_of(spec, in[0]);
  Element x = parse_element(spec, in[1]);
  Element unit = counit(x) * Element(spec, Coeff(1));
  Element left(spec), right(spec);
  TensorElement d = coproduct(x);
  for (const auto& [t, c] : d.terms()) {
    Element a(spec, t[0]), b(spec, t[1]);
    left += c * twisted_multiply(s, anti(s, a), b);
    right += c * twisted_multiply(s, a, anti(s, b));
  }
  return join({residual(left - unit), residual(right - unit)});
}

}  // namespace

std::vector<Property> cocycle_properties() {
  return {
      {"cocycle-1", cocycle_1},
      {"cocycle-2", cocycle_2},
      {"cocycle-inverse", cocycle_inverse},
      {"phi-relation", phi_relation},
      {"phi-coalgebra", phi_coalgebra},
      {"twisted-unit", twisted_unit},
      {"twisted-assoc", twisted_assoc},
      {"twisted-bialgebra", twisted_bialgebra},
      {"twisted-antipode", [](const SpecPtr& s, const Inputs& in) { return antipode_law(s, in, twisted_antipode); }},
      {"twisted-antipode-printed",
       [](const SpecPtr& s, const Inputs& in) { return antipode_law(s, in, twisted_antipode_printed); }},
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

// Toral monomials K_mu K'_nu with sum |mu_i| + |nu_i| <= bound.
std::vector<Monomial> torals(int n, int bound) {
  std::vector<Monomial> out;
  RootVector cur(2 * n, 0);
  auto rec = [&](auto&& self, int k, int left) -> void {
    if (k == 2 * n) {
      Monomial m = Monomial::unit(n);
      for (int i = 0; i < n; ++i) {
        m.w[i] = cur[i];
        m.wp[i] = cur[n + i];
      }
      out.push_back(m);
      return;
    }
    for (int v = -left; v <= left; ++v) {
      cur[k] = v;
      self(self, k + 1, left - (v < 0 ? -v : v));
    }
    cur[k] = 0;
  };
  rec(rec, 0, bound);
  return out;
}

// f-word * e-word monomials with 1 <= |f| + |e| <= deg.
std::vector<Monomial> words_up_to(int n, int deg) {
  std::vector<Monomial> out;
  std::vector<Word> words{{}};
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
  for (int lf = 0; lf <= deg; ++lf)
    for (int le = 0; lf + le <= deg; ++le) {
      if (lf + le == 0) continue;
      for (const auto& f : by_len[lf])
        for (const auto& e : by_len[le]) {
          Monomial m = Monomial::unit(n);
          m.f = f;
          m.e = e;
          out.push_back(m);
        }
    }
  return out;
}

std::string text(const SpecPtr& spec, const Monomial& m) { return format_element(Element(spec, m)); }

}  // namespace

Report verify_cocycle_conditions(const ToralCocycle& c, int deg_bound) {
  if (deg_bound < 1) throw std::invalid_argument("degree bound must be at least 1");
  const SpecPtr& spec = c.spec();
  int n = spec->rank();
  Report rep;
  rep.check = "cocycle";
  auto props = cocycle_properties();
  std::string v = variant_name(c.variant());
  auto run = [&](const char* name, Inputs in) { run_property(rep, find(props, name), spec, std::move(in)); };

  // Spanning set: small torals, words, and torals times generators.
  std::vector<Monomial> wide = torals(n, 2), narrow = torals(n, 1), words = words_up_to(n, deg_bound);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Monomial a = Monomial::unit(n);
      a.w[i] = 1;
      a.e = {j};
      words.push_back(a);
      Monomial b = Monomial::unit(n);
      b.f = {j};
      b.wp[i] = 1;
      words.push_back(b);
    }
  std::vector<Monomial> all = wide, mixed = narrow;
  all.insert(all.end(), words.begin(), words.end());
  mixed.insert(mixed.end(), words.begin(), words.end());
  auto t = [&](const Monomial& m) { return text(spec, m); };

  for (const auto& a : all) run("cocycle-2", {v, t(a)});
  for (const auto& a : all)
    for (const auto& b : all) run("cocycle-inverse", {v, t(a), t(b)});
  for (const auto& a : wide)
    for (const auto& b : wide)
      for (const auto& x : wide) run("cocycle-1", {v, t(a), t(b), t(x)});
  for (const auto& a : mixed)
    for (const auto& b : mixed)
      for (const auto& x : mixed) {
        if (a.is_toral() && b.is_toral() && x.is_toral()) continue;  // covered above
        run("cocycle-1", {v, t(a), t(b), t(x)});
      }
  return rep;
}

Report verify_phi_isomorphism(const ToralCocycle& c, int deg_bound) {
  if (deg_bound < 1) throw std::invalid_argument("degree bound must be at least 1");
  const SpecPtr& spec = c.spec();
  int n = spec->rank();
  Report rep;
  rep.check = "phi-iso";
  auto props = cocycle_properties();
  std::string v = variant_name(c.variant());
  auto run = [&](const char* name, Inputs in) { run_property(rep, find(props, name), spec, std::move(in)); };

  SpecPtr rs = make_rs_spec(spec->cartan());
  for (const auto& r : defining_relations(rs)) run("phi-relation", {v, r.id});
  for (int i = 0; i < n; ++i)
    for (const char* g : {"e", "f", "w", "w'"}) run("phi-coalgebra", {v, g + std::to_string(i + 1)});

  std::vector<std::string> gens;
  for (int i = 0; i < n; ++i) {
    RootVector a = unit_root(n, i);
    gens.push_back(format_element(Element::e(spec, i)));
    gens.push_back(format_element(Element::f(spec, i)));
    gens.push_back(format_element(Element::omega(spec, a)));
    gens.push_back(format_element(Element::omega_prime(spec, a)));
  }
  std::vector<std::string> elems;
  for (const auto& m : words_up_to(n, std::min(deg_bound, 3))) elems.push_back(text(spec, m));
  for (int i = 0; i < n; ++i) {
    elems.push_back(format_element(Element::omega(spec, unit_root(n, i))));
    elems.push_back(format_element(Element::omega_prime(spec, unit_root(n, i))));
  }

  for (const auto& x : elems) {
    run("twisted-unit", {v, x});
    run("twisted-antipode", {v, x});
  }
  for (const auto& x : gens)
    for (const auto& y : gens) {
      run("twisted-bialgebra", {v, x, y});
      for (const auto& z : gens) run("twisted-assoc", {v, x, y, z});
    }
  return rep;
}

}  // namespace qtwist

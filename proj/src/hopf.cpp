#include "qtwist/hopf.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace qtwist {

// ---------------------------------------------------------------------------
// TensorElement

TensorElement TensorElement::pure(const std::vector<Element>& factors) {
  if (factors.empty()) throw std::invalid_argument("tensor of no factors");
  TensorElement out(factors[0].spec(), static_cast<int>(factors.size()));
  std::vector<std::pair<MonomialTuple, Coeff>> cur{{{}, Coeff(1)}};
  for (const auto& f : factors) {
    std::vector<std::pair<MonomialTuple, Coeff>> next;
    for (const auto& [t, c] : cur)
      for (const auto& [m, v] : f.terms()) {
        MonomialTuple u = t;
        u.push_back(m);
        next.emplace_back(std::move(u), c * v);
      }
    cur = std::move(next);
  }
  for (const auto& [t, c] : cur) out.add(t, c);
  return out;
}

void TensorElement::add(const MonomialTuple& t, const Coeff& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(t, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

TensorElement& TensorElement::operator+=(const TensorElement& o) {
  for (const auto& [t, c] : o.terms_) add(t, c);
  return *this;
}

TensorElement& TensorElement::operator-=(const TensorElement& o) {
  for (const auto& [t, c] : o.terms_) add(t, -c);
  return *this;
}

TensorElement operator*(const Coeff& c, TensorElement x) {
  if (c.is_zero()) x.terms_.clear();
  for (auto& [t, v] : x.terms_) v *= c;
  return x;
}

TensorElement operator*(const TensorElement& a, const TensorElement& b) {
  if (a.legs_ != b.legs_) throw std::invalid_argument("tensor leg count mismatch");
  TensorElement out(a.spec_, a.legs_);
  for (const auto& [ta, ca] : a.terms_)
    for (const auto& [tb, cb] : b.terms_) {
      std::vector<std::pair<MonomialTuple, Coeff>> cur{{{}, ca * cb}};
      for (int k = 0; k < a.legs_; ++k) {
        Element p = multiply(a.spec_, ta[k], tb[k]);
        std::vector<std::pair<MonomialTuple, Coeff>> next;
        for (const auto& [t, c] : cur)
          for (const auto& [m, v] : p.terms()) {
            MonomialTuple u = t;
            u.push_back(m);
            next.emplace_back(std::move(u), c * v);
          }
        cur = std::move(next);
      }
      for (const auto& [t, c] : cur) out.add(t, c);
    }
  return out;
}

std::string TensorElement::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [t, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += "(" + c.str() + ")";
    for (const auto& m : t) out += " (x) " + format_monomial(m);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Coproduct

namespace {

TensorElement generator_coproduct(const SpecPtr& spec, char kind, int i) {
  int n = spec->rank();
  Monomial one = Monomial::unit(n);
  TensorElement out(spec, 2);
  Monomial g = one;
  if (kind == 'e') {
    g.e = {i};
    Monomial w = one;
    w.w[i] = 1;
    out.add({g, one}, Coeff(1));
    out.add({w, g}, Coeff(1));
  } else {
    g.f = {i};
    Monomial wp = one;
    wp.wp[i] = 1;
    out.add({one, g}, Coeff(1));
    out.add({g, wp}, Coeff(1));
  }
  return out;
}

TensorElement coproduct2(const SpecPtr& spec, const Monomial& m) {
  int n = spec->rank();
  Monomial tor = Monomial::unit(n);
  tor.w = m.w;
  tor.wp = m.wp;
  TensorElement cur(spec, 2);
  cur.add({Monomial::unit(n), Monomial::unit(n)}, Coeff(1));
  for (int i : m.f) cur = cur * generator_coproduct(spec, 'f', i);
  TensorElement t(spec, 2);
  t.add({tor, tor}, Coeff(1));
  cur = cur * t;
  for (int i : m.e) cur = cur * generator_coproduct(spec, 'e', i);
  return cur;
}

}  // namespace

TensorElement coproduct(const SpecPtr& spec, const Monomial& m, int n) {
  if (n < 2) throw std::invalid_argument("coproduct needs at least two legs");
  TensorElement cur = coproduct2(spec, m);
  for (int legs = 3; legs <= n; ++legs) {
    TensorElement next(spec, legs);
    for (const auto& [t, c] : cur.terms()) {
      TensorElement d = coproduct2(spec, t[0]);
      for (const auto& [dt, dc] : d.terms()) {
        MonomialTuple u = dt;
        u.insert(u.end(), t.begin() + 1, t.end());
        next.add(u, c * dc);
      }
    }
    cur = std::move(next);
  }
  return cur;
}

TensorElement coproduct(const Element& x, int n) {
  TensorElement out(x.spec(), n);
  for (const auto& [m, c] : x.terms()) out += c * coproduct(x.spec(), m, n);
  return out;
}

Coeff counit(const Monomial& m) { return m.is_toral() ? Coeff(1) : Coeff(); }

Coeff counit(const Element& x) {
  Coeff out;
  for (const auto& [m, c] : x.terms())
    if (m.is_toral()) out += c;
  return out;
}

Element antipode(const SpecPtr& spec, const Monomial& m) {
  int n = spec->rank();
  Element out(spec, Coeff(1));
  for (std::size_t k = m.e.size(); k-- > 0;) {
    int i = m.e[k];
    Element s = -(Element::omega(spec, -unit_root(n, i)) * Element::e(spec, i));
    out = out * s;
  }
  Monomial tor = Monomial::unit(n);
  tor.w = -m.w;
  tor.wp = -m.wp;
  out = out * Element(spec, tor);
  for (std::size_t k = m.f.size(); k-- > 0;) {
    int i = m.f[k];
    Element s = -(Element::f(spec, i) * Element::omega_prime(spec, -unit_root(n, i)));
    out = out * s;
  }
  return out;
}

Element antipode(const Element& x) {
  Element out(x.spec());
  for (const auto& [m, c] : x.terms()) out += c * antipode(x.spec(), m);
  return out;
}

TensorElement map_leg(const TensorElement& t, int leg, const std::function<Element(const Monomial&)>& f) {
  TensorElement out(t.spec(), t.legs());
  for (const auto& [tt, c] : t.terms()) {
    Element img = f(tt[leg]);
    for (const auto& [m, v] : img.terms()) {
      MonomialTuple u = tt;
      u[leg] = m;
      out.add(u, c * v);
    }
  }
  return out;
}

Element multiply_legs(const TensorElement& t) {
  Element out(t.spec());
  for (const auto& [tt, c] : t.terms()) {
    Element p(t.spec(), tt[0]);
    for (std::size_t k = 1; k < tt.size(); ++k) p = p * Element(t.spec(), tt[k]);
    out += c * p;
  }
  return out;
}

TensorElement tensor_normal_form(const TensorElement& t) {
  TensorElement out = t;
  for (int leg = 0; leg < t.legs(); ++leg)
    out = map_leg(out, leg, [&](const Monomial& m) { return serre_normal_form(Element(t.spec(), m)); });
  return out;
}

bool coproduct_respects_grading(const Element& x, const TensorElement& delta) {
  auto bd = x.bidegree();
  if (!bd) return true;
  for (const auto& [t, c] : delta.terms()) {
    auto [a1, g] = t[0].bidegree();
    auto [g2, b] = t[1].bidegree();
    if (a1 != bd->first || b != bd->second || g2 != -g) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Axiom checks

namespace {

using Inputs = std::vector<std::string>;

void need(const Inputs& in, std::size_t k) {
  if (in.size() != k) throw std::invalid_argument("expected " + std::to_string(k) + " inputs");
}

std::string tensor_residual(const TensorElement& a, const TensorElement& b) {
  TensorElement d = tensor_normal_form(a - b);
  return d.is_zero() ? "0" : d.str();
}

std::string coassoc(const SpecPtr& spec, const Inputs& in) {
  need(in, 1);
  Element x = parse_element(spec, in[0]);
  TensorElement right(spec, 3);
  TensorElement d1 = coproduct(x);
  for (const auto& [t, c] : d1.terms()) {
    TensorElement d = coproduct(spec, t[1]);
    for (const auto& [u, v] : d.terms()) right.add({t[0], u[0], u[1]}, c * v);
  }
  return tensor_residual(coproduct(x, 3), right);
}

std::string counit_law(const SpecPtr& spec, const Inputs& in) {
  need(in, 1);
  Element x = parse_element(spec, in[0]);
  Element l(spec), r(spec);
  TensorElement d = coproduct(x);
  for (const auto& [t, c] : d.terms()) {
    l += (c * counit(t[0])) * Element(spec, t[1]);
    r += (c * counit(t[1])) * Element(spec, t[0]);
  }
  std::string a = residual(l - x);
  return a != "0" ? a : residual(r - x);
}

std::string antipode_law(const SpecPtr& spec, const Inputs& in) {
  need(in, 1);
  Element x = parse_element(spec, in[0]);
  TensorElement d = coproduct(x);
  Element eps(spec, counit(x));
  auto s = [&](const Monomial& m) { return antipode(spec, m); };
  std::string a = residual(multiply_legs(map_leg(d, 0, s)) - eps);
  return a != "0" ? a : residual(multiply_legs(map_leg(d, 1, s)) - eps);
}

std::string grading(const SpecPtr& spec, const Inputs& in) {
  need(in, 1);
  Element x = parse_element(spec, in[0]);
  if (!coproduct_respects_grading(x, coproduct(x))) return "coproduct leaves the bigrading";
  auto a = x.bidegree(), b = antipode(x).bidegree();
  if (!a) return "not homogeneous";
  if (!b || b->first != a->second || b->second != a->first) return "antipode does not swap the bidegree";
  return "0";
}

std::string multiplicative(const SpecPtr& spec, const Inputs& in) {
  need(in, 2);
  Element x = parse_element(spec, in[0]), y = parse_element(spec, in[1]);
  return tensor_residual(coproduct(x * y), coproduct(x) * coproduct(y));
}

}  // namespace

std::vector<Property> hopf_properties() {
  return {{"hopf-coassoc", coassoc},
          {"hopf-counit", counit_law},
          {"hopf-antipode", antipode_law},
          {"hopf-grading", grading},
          {"hopf-multiplicative", multiplicative}};
}

Element random_homogeneous(const SpecPtr& spec, int deg_bound, std::uint64_t& state) {
  std::mt19937_64 rng(state);
  auto pick = [&](int lo, int hi) { return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1)); };
  int n = spec->rank();
  Monomial m = Monomial::unit(n);
  int le = pick(0, deg_bound), lf = pick(0, deg_bound - le);
  for (int k = 0; k < lf; ++k) m.f.push_back(pick(0, n - 1));
  for (int k = 0; k < n; ++k) {
    m.w[k] = pick(-1, 1);
    m.wp[k] = pick(-1, 1);
  }
  for (int k = 0; k < le; ++k) m.e.push_back(pick(0, n - 1));
  Element x(spec, m);
  std::shuffle(m.e.begin(), m.e.end(), rng);
  std::shuffle(m.f.begin(), m.f.end(), rng);
  x += Coeff(LaurentScalar::monomial(pick(1, 3), pick(-1, 1), pick(-1, 1))) * Element(spec, m);
  state = rng();
  return x;
}

Report verify_hopf_axioms(const SpecPtr& spec, int deg_bound, int trials, std::uint64_t seed) {
  if (deg_bound < 1) throw std::invalid_argument("degree bound must be at least 1");
  if (trials < 1) throw std::invalid_argument("trial count must be at least 1");
  Report rep;
  rep.check = "hopf-axioms";
  auto props = hopf_properties();
  auto run = [&](std::size_t k, Inputs in) { run_property(rep, props[k], spec, std::move(in)); };
  std::uint64_t state = seed;
  run(2, {"1"});
  for (int t = 0; t < trials; ++t) {
    std::string x = format_element(random_homogeneous(spec, deg_bound, state));
    for (std::size_t k = 0; k < 4; ++k) run(k, {x});
    // products stay within the degree bound
    int half = std::max(1, deg_bound / 2);
    std::string a = format_element(random_homogeneous(spec, half, state));
    std::string b = format_element(random_homogeneous(spec, deg_bound - half > 0 ? deg_bound - half : 1, state));
    run(4, {a, b});
  }
  return rep;
}

}  // namespace qtwist

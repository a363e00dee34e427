#include "qtwist/pairing.hpp"

#include "qtwist/bichar.hpp"
#include "qtwist/deriv.hpp"
#include "qtwist/hopf.hpp"

#include <stdexcept>

namespace qtwist {

std::string pairing_kind_name(PairingKind k) {
  switch (k) {
    case PairingKind::Q: return "q";
    case PairingKind::QZeta: return "q_zeta";
    case PairingKind::RS: return "rs";
  }
  throw std::logic_error("bad pairing kind");
}

PairingKind parse_pairing_kind(const std::string& name) {
  if (name == "q") return PairingKind::Q;
  if (name == "q_zeta") return PairingKind::QZeta;
  if (name == "rs") return PairingKind::RS;
  throw std::invalid_argument("unknown pairing '" + name + "'");
}

Pairing::Pairing(PairingKind kind, SpecPtr spec) : kind_(kind), spec_(std::move(spec)) {
  bool q = spec_->kind() == AlgebraSpec::Kind::Q;
  if ((kind_ == PairingKind::Q) != q)
    throw std::invalid_argument("pairing " + pairing_kind_name(kind_) + " does not live on spec " + spec_->name());
  if (kind_ == PairingKind::QZeta) {
    // On the Borel halves f_i <-> F_i is already a Hopf isomorphism.
    BigradedTwist t = standard_twist(spec_->cartan());
    t.f_scale.assign(spec_->rank(), Coeff(1));
    inner_ = pairing_for(PairingKind::Q, t.base);
    twist_ = std::make_shared<const BigradedTwist>(std::move(t));
  }
}

Coeff Pairing::kappa(int i) const {
  LaurentScalar qi = LaurentScalar::q_power(spec_->cartan().d(i));
  return Coeff(qi.inverse() - qi).inverse();
}

LaurentScalar Pairing::toral(const RootVector& mu, const RootVector& nu) const {
  const CartanDatum& c = spec_->cartan();
  if (kind_ == PairingKind::Q) return LaurentScalar::q_power(c.sym(mu, nu));
  return LaurentScalar::monomial(1, c.euler(mu, nu), -c.euler(nu, mu));
}

Coeff Pairing::operator()(const Monomial& y, const Monomial& x) const {
  if (!y.e.empty() || !is_zero(y.w)) throw std::invalid_argument("left argument outside U^{<=0}: " + format_monomial(y));
  if (!x.f.empty() || !is_zero(x.wp)) throw std::invalid_argument("right argument outside U^{>=0}: " + format_monomial(x));
  if (word_weight(y.f, spec_->rank()) != word_weight(x.e, spec_->rank())) return Coeff();
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = memo_.find({y, x});
    if (it != memo_.end()) return it->second;
  }
  Coeff v;
  if (kind_ == PairingKind::QZeta) {
    Element ys = twist_word(*twist_, monomial_word(y)), xs = twist_word(*twist_, monomial_word(x));
    const auto& [ym, yc] = *ys.terms().begin();
    const auto& [xm, xc] = *xs.terms().begin();
    auto [b, b2] = ym.bidegree();
    auto [a, a2] = xm.bidegree();
    const Bicharacter& z = twist_->zeta;
    Coeff pre((z(b, a) * z(b2, a2)).inverse());
    v = pre * yc * xc * (*inner_)(ym, xm);
  } else {
    v = direct(y, x);
  }
  std::lock_guard<std::mutex> lock(mu_);
  memo_.emplace(std::make_pair(y, x), v);
  return v;
}

// <f_i y', x> = sum <f_i, x(1)><y', x(2)>, with <f_i, w_l e_i> = <f_i, e_i><w'_i, w_l>.
Coeff Pairing::direct(const Monomial& y, const Monomial& x) const {
  int n = spec_->rank();
  if (y.f.empty()) return x.e.empty() ? Coeff(toral(y.wp, x.w)) : Coeff();
  int i = y.f[0];
  Monomial rest = y;
  rest.f.erase(rest.f.begin());
  TensorElement dx = coproduct(spec_, x, 2);
  Coeff out;
  for (const auto& [t, c] : dx.terms()) {
    if (t[0].e.size() != 1 || t[0].e[0] != i) continue;
    out += c * kappa(i) * Coeff(toral(unit_root(n, i), t[0].w)) * (*this)(rest, t[1]);
  }
  return out;
}

Coeff Pairing::operator()(const Element& y, const Element& x) const {
  Coeff out;
  for (const auto& [my, cy] : y.terms())
    for (const auto& [mx, cx] : x.terms()) {
      Coeff v = (*this)(my, mx);
      if (!v.is_zero()) out += cy * cx * v;
    }
  return out;
}

std::shared_ptr<const Pairing> pairing_for(PairingKind kind, const SpecPtr& spec) {
  static std::mutex mu;
  static std::map<std::pair<int, const AlgebraSpec*>, std::shared_ptr<const Pairing>> cache;
  std::pair<int, const AlgebraSpec*> key{static_cast<int>(kind), spec.get()};
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  auto p = std::make_shared<const Pairing>(kind, spec);
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(key, p).first->second;
}

std::vector<Word> basis_words(const SpecPtr& spec, Side side, const RootVector& beta) {
  if (!is_nonnegative(beta)) throw std::invalid_argument("degree must lie in Q^+");
  auto red = spec->reduction(side, beta);
  std::vector<Word> out;
  for (std::size_t k = 0; k < red->words.size(); ++k)
    if (red->basis[k]) out.push_back(red->words[k]);
  return out;
}

CoeffMatrix gram_matrix(const Pairing& p, const RootVector& beta, int deg_bound) {
  if (height(beta) > deg_bound) throw std::out_of_range("degree height exceeds bound");
  const SpecPtr& spec = p.spec();
  auto fs = basis_words(spec, Side::F, beta), es = basis_words(spec, Side::E, beta);
  CoeffMatrix m(fs.size(), es.size());
  for (std::size_t a = 0; a < fs.size(); ++a)
    for (std::size_t b = 0; b < es.size(); ++b) m(a, b) = p(Element::f_word(spec, fs[a]), Element::e_word(spec, es[b]));
  return m;
}

std::size_t gram_rank(const Pairing& p, const RootVector& beta, int deg_bound) {
  return rank(gram_matrix(p, beta, deg_bound));
}

// ---------------------------------------------------------------------------
// Properties: the first input names the pairing kind.

namespace {

using Inputs = std::vector<std::string>;

void need(const Inputs& in, std::size_t k) {
  if (in.size() != k) throw std::invalid_argument("expected " + std::to_string(k) + " inputs");
}

std::string scalar_residual(const Coeff& c) { return c.is_zero() ? "0" : c.str(); }

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) {
    if (p == "0") continue;
    if (!out.empty()) out += " ; ";
    out += p;
  }
  return out.empty() ? "0" : out;
}

std::shared_ptr<const Pairing> pairing_of(const SpecPtr& spec, const std::string& kind) {
  return pairing_for(parse_pairing_kind(kind), spec);
}

Coeff pair_mono(const Pairing& p, const Monomial& y, const Element& x) { return p(Element(x.spec(), y), x); }
Coeff pair_mono(const Pairing& p, const Element& y, const Monomial& x) { return p(y, Element(y.spec(), x)); }

std::string mult_right(const SpecPtr& spec, const Inputs& in) {
  need(in, 4);
  auto p = pairing_of(spec, in[0]);
  Element y = parse_element(spec, in[1]), x1 = parse_element(spec, in[2]), x2 = parse_element(spec, in[3]);
  Coeff lhs = (*p)(y, serre_normal_form(x1 * x2));
  Coeff rhs;
  TensorElement dy = coproduct(y);
  for (const auto& [t, c] : dy.terms()) rhs += c * pair_mono(*p, t[0], x2) * pair_mono(*p, t[1], x1);
  return scalar_residual(lhs - rhs);
}

std::string mult_left(const SpecPtr& spec, const Inputs& in) {
  need(in, 4);
  auto p = pairing_of(spec, in[0]);
  Element y1 = parse_element(spec, in[1]), y2 = parse_element(spec, in[2]), x = parse_element(spec, in[3]);
  Coeff lhs = (*p)(serre_normal_form(y1 * y2), x);
  Coeff rhs;
  TensorElement dx = coproduct(x);
  for (const auto& [t, c] : dx.terms()) rhs += c * pair_mono(*p, y1, t[0]) * pair_mono(*p, y2, t[1]);
  return scalar_residual(lhs - rhs);
}

std::string unit_law(const SpecPtr& spec, const Inputs& in) {
  need(in, 3);
  auto p = pairing_of(spec, in[0]);
  Element y = parse_element(spec, in[1]), x = parse_element(spec, in[2]);
  Element one(spec, Coeff(1));
  return join({scalar_residual((*p)(one, x) - counit(x)), scalar_residual((*p)(y, one) - counit(y))});
}

// <,>_{q,zeta} = <,>_{r,s}
std::string corollary(const SpecPtr& spec, const Inputs& in) {
  need(in, 2);
  Element y = parse_element(spec, in[0]), x = parse_element(spec, in[1]);
  return scalar_residual((*pairing_for(PairingKind::QZeta, spec))(y, x) - (*pairing_for(PairingKind::RS, spec))(y, x));
}

std::string adjoint(const SpecPtr& spec, const Inputs& in, bool left, bool printed) {
  need(in, 4);
  auto p = pairing_of(spec, in[0]);
  int i = parse_index(in[1], spec->rank());
  Element y = parse_element(spec, in[2]), x = parse_element(spec, in[3]);
  Element fy = serre_normal_form(left ? Element::f(spec, i) * y : y * Element::f(spec, i));
  Derivation d = printed ? (left ? Derivation::Left : Derivation::Right)
                         : (left ? Derivation::LeftHat : Derivation::RightHat);
  Coeff k = printed ? Coeff(1) : p->kappa(i);
  return scalar_residual((*p)(fy, x) - k * (*p)(y, skew_derivative({d, i}, x)));
}

// <w'_i, w_j> against the constants of w_j e_i and w'_i e_j.
std::string toral_values(const SpecPtr& spec, const Inputs& in) {
  need(in, 3);
  auto p = pairing_of(spec, in[0]);
  int n = spec->rank();
  int i = parse_index(in[1], n), j = parse_index(in[2], n);
  Coeff v = (*p)(Element::omega_prime(spec, unit_root(n, i)), Element::omega(spec, unit_root(n, j)));
  return join({scalar_residual(v - Coeff(spec->chi_omega()(j, i))),
               scalar_residual(v * Coeff(spec->chi_omega_prime()(i, j)) - Coeff(1))});
}

// Pairs of different weight pair to zero; checked against the recursion
// with the weight shortcut bypassed by going through the coproduct.
std::string orthogonal(const SpecPtr& spec, const Inputs& in) {
  need(in, 3);
  auto p = pairing_of(spec, in[0]);
  Element y = parse_element(spec, in[1]), x = parse_element(spec, in[2]);
  Coeff v = (*p)(y, x);
  for (const auto& [my, cy] : y.terms())
    for (const auto& [mx, cx] : x.terms())
      if (word_weight(my.f, spec->rank()) == word_weight(mx.e, spec->rank())) return "same weight";
  Coeff split;
  if (!y.is_zero() && !y.terms().begin()->first.f.empty()) {
    // <f_i y', x> through Delta(x)
    const Monomial& m = y.terms().begin()->first;
    Monomial rest = m;
    int i = rest.f[0];
    rest.f.erase(rest.f.begin());
    TensorElement dx = coproduct(x);
    for (const auto& [t, c] : dx.terms())
      split += c * (*p)(Element::f(spec, i), Element(spec, t[0])) * (*p)(Element(spec, rest), Element(spec, t[1]));
  }
  return join({scalar_residual(v), scalar_residual(split)});
}

// Rank of the Gram matrix against the graded dimension.
std::string gram_rank_property(const SpecPtr& spec, const Inputs& in) {
  need(in, 2);
  auto p = pairing_of(spec, in[0]);
  RootVector beta = parse_root(in[1], spec->rank());
  int h = 0;
  for (int b : beta) h += b;
  std::size_t dim = basis_words(spec, Side::E, beta).size();
  std::size_t r = gram_rank(*p, beta, h);
  return r == dim ? "0" : "rank " + std::to_string(r) + " < " + std::to_string(dim);
}

}  // namespace

std::vector<Property> pairing_properties() {
  return {
      {"pairing-mult-right", mult_right},
      {"pairing-mult-left", mult_left},
      {"pairing-unit", unit_law},
      {"pairing-corollary", corollary},
      {"pairing-adjoint-left", [](const SpecPtr& s, const Inputs& in) { return adjoint(s, in, true, false); }},
      {"pairing-adjoint-right", [](const SpecPtr& s, const Inputs& in) { return adjoint(s, in, false, false); }},
      {"pairing-adjoint-left-printed", [](const SpecPtr& s, const Inputs& in) { return adjoint(s, in, true, true); }},
      {"pairing-adjoint-right-printed", [](const SpecPtr& s, const Inputs& in) { return adjoint(s, in, false, true); }},
      {"pairing-toral", toral_values},
      {"pairing-orthogonal", orthogonal},
      {"pairing-gram-rank", gram_rank_property},
  };
}

// ---------------------------------------------------------------------------
// Sweep

namespace {

const Property& find(const std::vector<Property>& ps, const std::string& name) {
  for (const auto& p : ps)
    if (p.name == name) return p;
  throw std::logic_error("unregistered property " + name);
}

}  // namespace

Report verify_pairing_properties(const CartanDatum& cartan, int deg_bound) {
  if (deg_bound < 1) throw std::invalid_argument("degree bound must be at least 1");
  int n = cartan.rank();
  Report rep;
  rep.check = "pairing";
  auto props = pairing_properties();
  SpecPtr rs = make_rs_spec(cartan), q = make_q_spec(cartan);

  for (PairingKind kind : {PairingKind::Q, PairingKind::QZeta, PairingKind::RS}) {
    SpecPtr spec = kind == PairingKind::Q ? q : rs;
    std::string k = pairing_kind_name(kind);
    auto run = [&](const char* name, Inputs in) { run_property(rep, find(props, name), spec, std::move(in)); };
    auto txt = [&](const Element& x) { return format_element(x); };

    // ys[h], xs[h]: basis words of total height h.
    std::vector<std::vector<Element>> ys(deg_bound + 1), xs(deg_bound + 1);
    ys[0].emplace_back(spec, Coeff(1));
    xs[0].emplace_back(spec, Coeff(1));
    for (int h = 1; h <= deg_bound; ++h)
      for (const auto& beta : degrees_of_height(n, h)) {
        for (const auto& w : basis_words(spec, Side::F, beta)) ys[h].push_back(Element::f_word(spec, w));
        for (const auto& w : basis_words(spec, Side::E, beta)) xs[h].push_back(Element::e_word(spec, w));
      }
    std::vector<Element> wy, wx;  // single torus generators
    for (int i = 0; i < n; ++i) {
      wy.push_back(Element::omega_prime(spec, unit_root(n, i)));
      wx.push_back(Element::omega(spec, unit_root(n, i)));
    }

    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) run("pairing-toral", {k, std::to_string(i + 1), std::to_string(j + 1)});

    for (int h = 0; h <= deg_bound; ++h)
      for (std::size_t a = 0; a < std::max(ys[h].size(), xs[h].size()); ++a)
        run("pairing-unit", {k, txt(ys[h][a % ys[h].size()]), txt(xs[h][a % xs[h].size()])});

    for (int h = 1; h <= deg_bound; ++h) {
      for (int h1 = 0; h1 <= h; ++h1) {
        std::vector<Element> x1s = xs[h1], y1s = ys[h1];
        if (h1 == 0) {
          x1s = wx;
          y1s = wy;
        }
        for (const auto& y : ys[h])
          for (const auto& x1 : x1s)
            for (const auto& x2 : xs[h - h1]) run("pairing-mult-right", {k, txt(y), txt(x1), txt(x2)});
        for (const auto& y1 : y1s)
          for (const auto& y2 : ys[h - h1])
            for (const auto& x : xs[h]) run("pairing-mult-left", {k, txt(y1), txt(y2), txt(x)});
      }
      for (int i = 0; i < n; ++i)
        for (const auto& y : ys[h - 1])
          for (const auto& x : xs[h]) {
            run("pairing-adjoint-left", {k, std::to_string(i + 1), txt(y), txt(x)});
            run("pairing-adjoint-right", {k, std::to_string(i + 1), txt(y), txt(x)});
          }
      for (const auto& y : ys[h])
        for (const auto& x : xs[h]) {
          if (y.terms().begin()->first.weight() == -x.terms().begin()->first.weight()) continue;
          run("pairing-orthogonal", {k, txt(y), txt(x)});
        }
    }

    if (kind == PairingKind::RS) {
      for (const auto& y : wy)
        for (const auto& x : wx) run("pairing-corollary", {txt(y), txt(x)});
      for (int h = 1; h <= deg_bound; ++h)
        for (const auto& y : ys[h])
          for (const auto& x : xs[h]) {
            run("pairing-corollary", {txt(y), txt(x)});
            run("pairing-corollary", {txt(y * wy[0]), txt(wx.back() * x)});
          }
    }
  }
  return rep;
}

Report verify_gram_ranks(const CartanDatum& cartan, int deg_bound) {
  if (deg_bound < 1) throw std::invalid_argument("degree bound must be at least 1");
  Report rep;
  rep.check = "gram-rank";
  auto props = pairing_properties();
  SpecPtr rs = make_rs_spec(cartan), q = make_q_spec(cartan);
  for (PairingKind kind : {PairingKind::Q, PairingKind::QZeta, PairingKind::RS})
    for (int h = 1; h <= deg_bound; ++h)
      for (const auto& beta : degrees_of_height(cartan.rank(), h))
        run_property(rep, find(props, "pairing-gram-rank"), kind == PairingKind::Q ? q : rs,
                     {pairing_kind_name(kind), format_root(beta)});
  return rep;
}

}  // namespace qtwist

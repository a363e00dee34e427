#include "qtwist/scalar.hpp"

#include "qtwist/detail/lexer.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace qtwist {

namespace {

bool term_greater(const LaurentTerm& a, const LaurentTerm& b) {
  if (a.r != b.r) return a.r > b.r;
  return a.s > b.s;
}

std::string format_rational(const mpq_class& q) { return q.get_str(); }

}  // namespace

std::string format_exponent(const Exponent& e) {
  if (e.denominator() == 1) return std::to_string(e.numerator());
  return "(" + std::to_string(e.numerator()) + "/" + std::to_string(e.denominator()) + ")";
}

// ---------------------------------------------------------------------------
// LaurentScalar

LaurentScalar::LaurentScalar(long value) {
  if (value != 0) terms_.push_back({0, 0, mpq_class(value)});
}

LaurentScalar::LaurentScalar(const mpq_class& value) {
  if (value != 0) terms_.push_back({0, 0, value});
}

LaurentScalar LaurentScalar::monomial(const mpq_class& coeff, Exponent r_exp, Exponent s_exp) {
  LaurentScalar out;
  if (coeff != 0) out.terms_.push_back({r_exp, s_exp, coeff});
  return out;
}

bool LaurentScalar::is_one() const {
  return terms_.size() == 1 && terms_[0].r == Exponent(0) && terms_[0].s == Exponent(0) && terms_[0].coeff == 1;
}

bool LaurentScalar::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].r == Exponent(0) && terms_[0].s == Exponent(0));
}

void LaurentScalar::canonicalize() {
  std::sort(terms_.begin(), terms_.end(), term_greater);
  std::vector<LaurentTerm> merged;
  merged.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!merged.empty() && merged.back().r == t.r && merged.back().s == t.s) {
      merged.back().coeff += t.coeff;
    } else {
      merged.push_back(std::move(t));
    }
  }
  merged.erase(std::remove_if(merged.begin(), merged.end(),
                              [](const LaurentTerm& t) { return t.coeff == 0; }),
               merged.end());
  terms_ = std::move(merged);
}

LaurentScalar LaurentScalar::operator-() const {
  LaurentScalar out = *this;
  for (auto& t : out.terms_) t.coeff = -t.coeff;
  return out;
}

LaurentScalar& LaurentScalar::operator+=(const LaurentScalar& o) {
  if (o.terms_.empty()) return *this;
  std::vector<LaurentTerm> merged;
  merged.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    if (j == o.terms_.size() || (i < terms_.size() && term_greater(terms_[i], o.terms_[j]))) {
      merged.push_back(terms_[i++]);
    } else if (i == terms_.size() || term_greater(o.terms_[j], terms_[i])) {
      merged.push_back(o.terms_[j++]);
    } else {
      mpq_class c = terms_[i].coeff + o.terms_[j].coeff;
      if (c != 0) merged.push_back({terms_[i].r, terms_[i].s, c});
      ++i;
      ++j;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

LaurentScalar& LaurentScalar::operator-=(const LaurentScalar& o) { return *this += -o; }

LaurentScalar operator*(const LaurentScalar& a, const LaurentScalar& b) {
  LaurentScalar out;
  if (a.is_zero() || b.is_zero()) return out;
  if (a.is_monomial() || b.is_monomial()) {
    const LaurentScalar& mono = a.is_monomial() ? a : b;
    const LaurentScalar& other = a.is_monomial() ? b : a;
    const LaurentTerm& m = mono.terms_[0];
    out.terms_.reserve(other.terms_.size());
    for (const auto& t : other.terms_) out.terms_.push_back({t.r + m.r, t.s + m.s, t.coeff * m.coeff});
    return out;
  }
  out.terms_.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& x : a.terms_)
    for (const auto& y : b.terms_) out.terms_.push_back({x.r + y.r, x.s + y.s, x.coeff * y.coeff});
  out.canonicalize();
  return out;
}

LaurentScalar& LaurentScalar::operator*=(const LaurentScalar& o) {
  *this = *this * o;
  return *this;
}

bool operator==(const LaurentScalar& a, const LaurentScalar& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    const auto& x = a.terms_[i];
    const auto& y = b.terms_[i];
    if (x.r != y.r || x.s != y.s || x.coeff != y.coeff) return false;
  }
  return true;
}

LaurentScalar LaurentScalar::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero scalar");
  if (!is_monomial()) {
    throw std::domain_error("inverse of the non-monomial scalar " + str() +
                            " requires fraction-field elimination (use RationalFunction or the "
                            "fraction-free solver)");
  }
  const auto& t = terms_[0];
  return monomial(1 / t.coeff, -t.r, -t.s);
}

LaurentScalar LaurentScalar::pow(long long k) const {
  if (k < 0) return inverse().pow(-k);
  if (is_monomial()) {
    const auto& t = terms_[0];
    mpq_class c = 1;
    for (long long i = 0; i < k; ++i) c *= t.coeff;
    return monomial(c, t.r * k, t.s * k);
  }
  LaurentScalar result(1);
  LaurentScalar base = *this;
  while (k > 0) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k) base *= base;
  }
  return result;
}

bool LaurentScalar::on_lattice(long long denominator) const {
  for (const auto& t : terms_) {
    if ((t.r * denominator).denominator() != 1) return false;
    if ((t.s * denominator).denominator() != 1) return false;
  }
  return true;
}

LaurentScalar LaurentScalar::substitute(const LaurentScalar& r_image, const LaurentScalar& s_image) const {
  if (!r_image.is_monomial() || !s_image.is_monomial() || r_image.leading().coeff != 1 ||
      s_image.leading().coeff != 1) {
    throw std::invalid_argument("substitute expects unit-coefficient monomial images");
  }
  const auto& ri = r_image.leading();
  const auto& si = s_image.leading();
  LaurentScalar out;
  out.terms_.reserve(terms_.size());
  for (const auto& t : terms_) {
    out.terms_.push_back({t.r * ri.r + t.s * si.r, t.r * ri.s + t.s * si.s, t.coeff});
  }
  out.canonicalize();
  return out;
}

std::string LaurentScalar::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    mpq_class c = t.coeff;
    bool negative = c < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    std::string mono;
    if (t.r != Exponent(0)) mono += t.r == Exponent(1) ? std::string("r") : "r^" + format_exponent(t.r);
    if (t.s != Exponent(0)) {
      if (!mono.empty()) mono += "*";
      mono += t.s == Exponent(1) ? std::string("s") : "s^" + format_exponent(t.s);
    }
    if (mono.empty()) {
      out += format_rational(c);
    } else if (c == 1) {
      out += mono;
    } else {
      out += format_rational(c) + "*" + mono;
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const LaurentScalar& x) { return os << x.str(); }

LaurentScalar q_power(Exponent k, long long denominator) {
  Exponent half = k / 2;
  if ((half * denominator).denominator() != 1) {
    throw std::domain_error("q^" + format_exponent(k) + " is off the exponent lattice 1/" +
                            std::to_string(denominator));
  }
  return LaurentScalar::q_power(k);
}

// ---------------------------------------------------------------------------
// Exact division and gcd

namespace {

struct MinExponents {
  Exponent r, s;
};

MinExponents min_exponents(const LaurentScalar& x) {
  MinExponents m{x.terms().front().r, x.terms().front().s};
  for (const auto& t : x.terms()) {
    m.r = std::min(m.r, t.r);
    m.s = std::min(m.s, t.s);
  }
  return m;
}

// Univariate polynomials over Q in y, index = degree.
using UPoly = std::vector<mpq_class>;

void trim(UPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

UPoly umul(const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  trim(out);
  return out;
}

UPoly usub(const UPoly& a, const UPoly& b) {
  UPoly out(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  trim(out);
  return out;
}

// Returns (quotient, remainder).
std::pair<UPoly, UPoly> udivmod(UPoly a, const UPoly& b) {
  UPoly q;
  if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, 0);
  while (!a.empty() && a.size() >= b.size()) {
    std::size_t shift = a.size() - b.size();
    mpq_class c = a.back() / b.back();
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= c * b[i];
    trim(a);
  }
  trim(q);
  return {q, a};
}

UPoly ugcd(UPoly a, UPoly b) {
  while (!b.empty()) {
    auto r = udivmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    mpq_class lc = a.back();
    for (auto& c : a) c /= lc;
  }
  return a;
}

// Bivariate polynomials as polynomials in x with coefficients in Q[y].
using BPoly = std::vector<UPoly>;

void trim(BPoly& p) {
  while (!p.empty() && p.back().empty()) p.pop_back();
}

UPoly content(const BPoly& p) {
  std::vector<const UPoly*> order;
  for (const auto& c : p)
    if (!c.empty()) order.push_back(&c);
  std::sort(order.begin(), order.end(), [](const UPoly* a, const UPoly* b) { return a->size() < b->size(); });
  UPoly g;
  for (const UPoly* c : order) {
    g = g.empty() ? ugcd(*c, {}) : ugcd(g, *c);
    if (g.size() == 1) break;
  }
  return g;
}

BPoly primitive(const BPoly& p, const UPoly& cont) {
  BPoly out;
  out.reserve(p.size());
  for (const auto& c : p) out.push_back(udivmod(c, cont).first);
  return out;
}

BPoly pseudo_remainder(BPoly a, const BPoly& b) {
  const UPoly& lcb = b.back();
  while (!a.empty() && a.size() >= b.size()) {
    std::size_t shift = a.size() - b.size();
    UPoly lca = a.back();
    for (auto& c : a) c = umul(c, lcb);
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] = usub(a[i + shift], umul(lca, b[i]));
    trim(a);
  }
  return a;
}

struct Packing {
  long long r_scale = 1, s_scale = 1;  // exponent denominators
  long long r_step = 1, s_step = 1;    // gcd compression
};

long long lcm_ll(long long a, long long b) { return a / std::gcd(a, b) * b; }

BPoly pack(const LaurentScalar& x, const Packing& pk, const MinExponents& shift) {
  BPoly out;
  for (const auto& t : x.terms()) {
    long long i = boost::rational_cast<long long>((t.r - shift.r) * pk.r_scale) / pk.r_step;
    long long j = boost::rational_cast<long long>((t.s - shift.s) * pk.s_scale) / pk.s_step;
    if (out.size() <= static_cast<std::size_t>(i)) out.resize(i + 1);
    UPoly& c = out[i];
    if (c.size() <= static_cast<std::size_t>(j)) c.resize(j + 1, 0);
    c[j] += t.coeff;
  }
  for (auto& c : out) trim(c);
  trim(out);
  return out;
}

LaurentScalar unpack(const BPoly& p, const Packing& pk) {
  LaurentScalar out;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < p[i].size(); ++j)
      if (p[i][j] != 0)
        out += LaurentScalar::monomial(p[i][j], Exponent(static_cast<long long>(i) * pk.r_step, pk.r_scale),
                                       Exponent(static_cast<long long>(j) * pk.s_step, pk.s_scale));
  return out;
}

// Integer-coefficient bivariate polynomial, [x-degree][y-degree].
using IPoly = std::vector<std::vector<mpz_class>>;

IPoly integer_primitive(const BPoly& p) {
  mpz_class l = 1, g = 0;
  for (const auto& c : p)
    for (const auto& v : c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
  IPoly out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    out[i].resize(p[i].size());
    for (std::size_t j = 0; j < p[i].size(); ++j) {
      mpq_class v = p[i][j] * l;
      out[i][j] = v.get_num();
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out[i][j].get_mpz_t());
    }
  }
  if (g > 1)
    for (auto& c : out)
      for (auto& v : c) v /= g;
  return out;
}

mpz_class max_norm(const IPoly& p) {
  mpz_class m = 0;
  for (const auto& c : p)
    for (const auto& v : c)
      if (abs(v) > m) m = abs(v);
  return m;
}

LaurentScalar to_scalar(const IPoly& p) {
  LaurentScalar out;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < p[i].size(); ++j)
      if (p[i][j] != 0)
        out += LaurentScalar::monomial(mpq_class(p[i][j]), static_cast<long long>(i), static_cast<long long>(j));
  return out;
}

mpz_class integer_content(const UPoly& p) {
  mpz_class g = 0;
  for (const auto& v : p) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_num_mpz_t());
  return g;
}

// Heuristic gcd by evaluation at a large integer y = xi; any answer is
// confirmed by trial division, so a wrong guess only costs a retry.
std::optional<IPoly> heuristic_gcd(const BPoly& pa, const BPoly& pb) {
  IPoly A = integer_primitive(pa), B = integer_primitive(pb);
  LaurentScalar sa = to_scalar(A), sb = to_scalar(B);
  mpz_class xi = 2 * std::min(max_norm(A), max_norm(B)) + 29;
  for (int attempt = 0; attempt < 6; ++attempt) {
    auto eval = [&](const IPoly& P) {
      UPoly out(P.size());
      for (std::size_t i = 0; i < P.size(); ++i) {
        mpz_class acc = 0;
        for (std::size_t j = P[i].size(); j-- > 0;) acc = acc * xi + P[i][j];
        out[i] = acc;
      }
      trim(out);
      return out;
    };
    UPoly a = eval(A), b = eval(B);
    if (!a.empty() && !b.empty()) {
      UPoly g = ugcd(a, b);
      mpz_class l = 1;
      for (const auto& v : g) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
      for (auto& v : g) v *= l;
      mpz_class gc = integer_content(g), want = gcd(integer_content(a), integer_content(b));
      for (auto& v : g) v = v / gc * want;
      IPoly G(g.size());
      for (std::size_t i = 0; i < g.size(); ++i) {
        mpz_class c = g[i].get_num(), half = xi / 2;
        while (c != 0) {
          mpz_class d = c % xi;  // truncated, same sign as c
          if (d > half) d -= xi;
          else if (d < -half) d += xi;
          G[i].push_back(d);
          c = (c - d) / xi;
        }
      }
      BPoly Gq(G.size());
      for (std::size_t i = 0; i < G.size(); ++i)
        for (const auto& v : G[i]) Gq[i].push_back(mpq_class(v));
      for (auto& c : Gq) trim(c);
      trim(Gq);
      if (!Gq.empty()) {
        IPoly Gp = integer_primitive(Gq);
        LaurentScalar sg = to_scalar(Gp);
        if (exact_divide(sa, sg) && exact_divide(sb, sg)) return Gp;
      }
    }
    xi = xi * 73794 / 27011;
  }
  return std::nullopt;
}

// Strips the monomial factor and makes the leading coefficient 1.
LaurentScalar normalize_unit(const LaurentScalar& x) {
  if (x.is_zero()) return x;
  MinExponents m = min_exponents(x);
  return x * LaurentScalar::monomial(1 / x.leading().coeff, -m.r, -m.s);
}

}  // namespace

std::optional<LaurentScalar> exact_divide(const LaurentScalar& a, const LaurentScalar& b) {
  if (b.is_zero()) throw std::domain_error("division by zero scalar");
  if (a.is_zero()) return LaurentScalar();
  if (b.is_monomial()) return a * b.inverse();
  MinExponents ma = min_exponents(a), mb = min_exponents(b);
  Exponent low_r = ma.r - mb.r, low_s = ma.s - mb.s;
  const LaurentTerm& lb = b.leading();
  LaurentScalar rem = a, quot;
  while (!rem.is_zero()) {
    const LaurentTerm& lr = rem.leading();
    Exponent qr = lr.r - lb.r, qs = lr.s - lb.s;
    if (qr < low_r || qs < low_s) return std::nullopt;
    LaurentScalar t = LaurentScalar::monomial(lr.coeff / lb.coeff, qr, qs);
    quot += t;
    rem -= t * b;
  }
  return quot;
}

LaurentScalar polynomial_gcd(const LaurentScalar& a, const LaurentScalar& b) {
  if (a.is_zero()) return normalize_unit(b);
  if (b.is_zero()) return normalize_unit(a);
  if (a.is_monomial() || b.is_monomial()) return LaurentScalar(1);

  Packing pk;
  for (const auto* x : {&a, &b})
    for (const auto& t : x->terms()) {
      pk.r_scale = lcm_ll(pk.r_scale, t.r.denominator());
      pk.s_scale = lcm_ll(pk.s_scale, t.s.denominator());
    }
  MinExponents ma = min_exponents(a), mb = min_exponents(b);
  long long gr = 0, gs = 0;
  for (const auto& [x, m] : {std::pair{&a, ma}, std::pair{&b, mb}})
    for (const auto& t : x->terms()) {
      gr = std::gcd(gr, boost::rational_cast<long long>((t.r - m.r) * pk.r_scale));
      gs = std::gcd(gs, boost::rational_cast<long long>((t.s - m.s) * pk.s_scale));
    }
  pk.r_step = gr == 0 ? 1 : gr;
  pk.s_step = gs == 0 ? 1 : gs;

  BPoly pa = pack(a, pk, ma), pb = pack(b, pk, mb);
  if (auto h = heuristic_gcd(pa, pb)) {
    BPoly g(h->size());
    for (std::size_t i = 0; i < h->size(); ++i)
      for (const auto& v : (*h)[i]) g[i].push_back(mpq_class(v));
    for (auto& c : g) trim(c);
    trim(g);
    return normalize_unit(unpack(g, pk));
  }
  UPoly ca = content(pa), cb = content(pb);
  UPoly cont = ugcd(ca, cb);
  pa = primitive(pa, ca);
  pb = primitive(pb, cb);
  if (pa.size() < pb.size()) std::swap(pa, pb);
  while (!pb.empty() && pb.size() > 1) {
    BPoly rem = pseudo_remainder(pa, pb);
    pa = std::move(pb);
    if (rem.empty()) {
      pb.clear();
      break;
    }
    pb = primitive(rem, content(rem));
  }
  BPoly g;
  if (pb.empty()) {
    g = pa;  // pa is already primitive
  } else {
    g = {UPoly{1}};  // pb is a nonzero x-constant, so the primitive gcd is 1
  }
  for (auto& c : g) c = umul(c, cont);
  trim(g);
  return normalize_unit(unpack(g, pk));
}

// ---------------------------------------------------------------------------
// RationalFunction

RationalFunction::RationalFunction(const LaurentScalar& num, const LaurentScalar& den) : num_(num), den_(den) {
  if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
  normalize();
}

void RationalFunction::normalize() {
  if (num_.is_zero()) {
    den_ = LaurentScalar(1);
    return;
  }
  if (den_.is_one()) return;
  if (den_.is_monomial()) {
    num_ *= den_.inverse();
    den_ = LaurentScalar(1);
    return;
  }
  LaurentScalar g = polynomial_gcd(num_, den_);
  if (!g.is_one()) {
    num_ = *exact_divide(num_, g);
    den_ = *exact_divide(den_, g);
  }
  if (den_.is_monomial()) {
    num_ *= den_.inverse();
    den_ = LaurentScalar(1);
    return;
  }
  MinExponents m = min_exponents(den_);
  LaurentScalar unit = LaurentScalar::monomial(1 / den_.leading().coeff, -m.r, -m.s);
  num_ *= unit;
  den_ *= unit;
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction out = *this;
  out.num_ = -out.num_;
  return out;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_.is_one() && o.den_.is_one()) {
    num_ += o.num_;
    return *this;
  }
  if (den_ == o.den_) {
    num_ += o.num_;
    normalize();
    return *this;
  }
  LaurentScalar g = polynomial_gcd(den_, o.den_);
  if (g.is_one()) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
  } else {
    LaurentScalar a = *exact_divide(den_, g), b = *exact_divide(o.den_, g);
    num_ = num_ * b + o.num_ * a;
    den_ = a * o.den_;
  }
  normalize();
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) { return *this += -o; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) return *this = RationalFunction();
  if (den_.is_one() && o.den_.is_one()) {
    num_ *= o.num_;
    return *this;
  }
  // Cross-cancel before multiplying to keep the gcd work small.
  LaurentScalar n1 = num_, d1 = den_, n2 = o.num_, d2 = o.den_;
  if (!d2.is_one()) {
    LaurentScalar g = polynomial_gcd(n1, d2);
    if (!g.is_one()) {
      n1 = *exact_divide(n1, g);
      d2 = *exact_divide(d2, g);
    }
  }
  if (!d1.is_one()) {
    LaurentScalar g = polynomial_gcd(n2, d1);
    if (!g.is_one()) {
      n2 = *exact_divide(n2, g);
      d1 = *exact_divide(d1, g);
    }
  }
  num_ = n1 * n2;
  den_ = d1 * d2;
  if (den_.is_monomial()) {
    num_ *= den_.inverse();
    den_ = LaurentScalar(1);
  } else {
    MinExponents m = min_exponents(den_);
    LaurentScalar unit = LaurentScalar::monomial(1 / den_.leading().coeff, -m.r, -m.s);
    num_ *= unit;
    den_ *= unit;
  }
  return *this;
}

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero scalar");
  return RationalFunction(den_, num_);
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) { return *this *= o.inverse(); }

RationalFunction RationalFunction::pow(long long k) const {
  if (k < 0) return inverse().pow(-k);
  RationalFunction result(1), base = *this;
  while (k > 0) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k) base *= base;
  }
  return result;
}

std::string RationalFunction::str() const {
  if (den_.is_one()) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

std::ostream& operator<<(std::ostream& os, const RationalFunction& x) { return os << x.str(); }

// ---------------------------------------------------------------------------
// Parsing

namespace {

using detail::TokenCursor;
using detail::TokenKind;

class ScalarParser {
 public:
  explicit ScalarParser(std::string_view text) : cur_(detail::tokenize(text)) {}

  RationalFunction parse() {
    RationalFunction v = expr();
    if (cur_.peek().kind != TokenKind::End) throw ParseError("trailing input", cur_.peek().pos);
    return v;
  }

 private:
  RationalFunction expr() {
    bool neg = false;
    if (cur_.accept(TokenKind::Minus)) neg = true;
    else cur_.accept(TokenKind::Plus);
    RationalFunction v = term();
    if (neg) v = -v;
    for (;;) {
      if (cur_.accept(TokenKind::Plus)) v += term();
      else if (cur_.accept(TokenKind::Minus)) v -= term();
      else return v;
    }
  }

  RationalFunction term() {
    RationalFunction v = factor();
    for (;;) {
      if (cur_.accept(TokenKind::Star)) {
        v *= factor();
      } else if (cur_.peek().kind == TokenKind::Slash) {
        std::size_t pos = cur_.next().pos;
        RationalFunction d = factor();
        if (d.is_zero()) throw ParseError("division by zero", pos);
        v /= d;
      } else {
        return v;
      }
    }
  }

  RationalFunction factor() {
    const auto& t = cur_.peek();
    if (t.kind == TokenKind::Number) {
      mpq_class n(cur_.next().text);
      RationalFunction v{LaurentScalar(n)};
      if (cur_.accept(TokenKind::Caret)) v = integer_power(v);
      return v;
    }
    if (t.kind == TokenKind::LParen) {
      cur_.next();
      RationalFunction v = expr();
      cur_.expect(TokenKind::RParen, "')'");
      if (cur_.accept(TokenKind::Caret)) v = integer_power(v);
      return v;
    }
    if (t.kind == TokenKind::Ident) {
      Token id = cur_.next();
      Exponent e = 1;
      if (cur_.accept(TokenKind::Caret)) e = cur_.exponent();
      if (id.text == "r") return LaurentScalar::r_power(e);
      if (id.text == "s") return LaurentScalar::s_power(e);
      if (id.text == "q") return LaurentScalar::q_power(e);
      throw ParseError("unknown symbol '" + id.text + "'", id.pos);
    }
    throw ParseError("expected scalar", t.pos);
  }

  RationalFunction integer_power(const RationalFunction& base) {
    std::size_t pos = cur_.peek().pos;
    Exponent e = cur_.exponent();
    if (e.denominator() != 1) throw ParseError("fractional power of a non-monomial", pos);
    return base.pow(e.numerator());
  }

  using Token = detail::Token;
  TokenCursor cur_;
};

std::optional<mpz_class> integer_root(const mpz_class& x, unsigned long k) {
  if (x < 0) return std::nullopt;
  mpz_class root;
  int exact = mpz_root(root.get_mpz_t(), x.get_mpz_t(), k);
  if (!exact) return std::nullopt;
  return root;
}

std::optional<mpq_class> rational_power(const mpq_class& base, const Exponent& e) {
  long long p = e.numerator(), q = e.denominator();
  auto rn = integer_root(base.get_num(), static_cast<unsigned long>(q));
  auto rd = integer_root(base.get_den(), static_cast<unsigned long>(q));
  if (!rn || !rd) return std::nullopt;
  mpq_class root(*rn, *rd);
  root.canonicalize();
  mpq_class out = 1;
  long long ap = p < 0 ? -p : p;
  for (long long i = 0; i < ap; ++i) out *= root;
  if (p < 0) out = 1 / out;
  return out;
}

std::optional<mpq_class> evaluate(const LaurentScalar& x, const mpq_class& rv, const mpq_class& sv) {
  mpq_class total = 0;
  for (const auto& t : x.terms()) {
    auto a = rational_power(rv, t.r);
    auto b = rational_power(sv, t.s);
    if (!a || !b) return std::nullopt;
    total += t.coeff * *a * *b;
  }
  return total;
}

}  // namespace

RationalFunction parse_scalar(std::string_view text) { return ScalarParser(text).parse(); }

Specialization specialize(const RationalFunction& x, const mpq_class& r_value, const mpq_class& s_value) {
  if (r_value <= 0 || s_value <= 0) throw std::domain_error("specialize expects positive r, s");
  Specialization out;
  auto n = evaluate(x.numerator(), r_value, s_value);
  auto d = evaluate(x.denominator(), r_value, s_value);
  if (!n || !d) {
    out.symbolic = x.str() + " at r=" + r_value.get_str() + ", s=" + s_value.get_str();
    return out;
  }
  if (*d == 0) throw std::domain_error("specialization hits a pole of " + x.str());
  out.exact = true;
  out.value = *n / *d;
  return out;
}

// ---------------------------------------------------------------------------
// Gaussian integers and binomials

LaurentScalar gauss_integer(const LaurentScalar& v, int n) {
  LaurentScalar out, p(1);
  for (int i = 0; i < n; ++i) {
    out += p;
    p *= v;
  }
  return out;
}

LaurentScalar gauss_binomial(const LaurentScalar& v, int n, int k) {
  if (k < 0 || k > n) return LaurentScalar();
  // Pascal rule: (n,k) = (n-1,k-1) + v^k (n-1,k).
  std::vector<LaurentScalar> row{LaurentScalar(1)};
  for (int m = 1; m <= n; ++m) {
    std::vector<LaurentScalar> next(m + 1);
    for (int j = 0; j <= m; ++j) {
      if (j > 0) next[j] += row[j - 1];
      if (j < m) next[j] += v.pow(j) * row[j];
    }
    row = std::move(next);
  }
  return row[k];
}

LaurentScalar quantum_binomial(const LaurentScalar& v, int n, int k) {
  if (k < 0 || k > n) return LaurentScalar();
  return v.pow(-static_cast<long long>(k) * (n - k)) * gauss_binomial(v * v, n, k);
}

}  // namespace qtwist

#include "qtwist/algebra.hpp"

#include "qtwist/detail/lexer.hpp"

#include <algorithm>
#include <stdexcept>

namespace qtwist {

// ---------------------------------------------------------------------------
// Character

LaurentScalar Character::operator()(const RootVector& mu, const RootVector& beta) const {
  Exponent re = 0, se = 0;
  for (std::size_t i = 0; i < mu.size(); ++i) {
    if (mu[i] == 0) continue;
    for (std::size_t j = 0; j < beta.size(); ++j) {
      if (beta[j] == 0) continue;
      long long k = static_cast<long long>(mu[i]) * beta[j];
      re += r_[i][j] * k;
      se += s_[i][j] * k;
    }
  }
  return LaurentScalar::monomial(1, re, se);
}

LaurentScalar Character::operator()(const LatticeVector& mu, const LatticeVector& beta) const {
  mpq_class re = 0, se = 0;
  for (std::size_t i = 0; i < mu.size(); ++i)
    for (std::size_t j = 0; j < beta.size(); ++j) {
      mpq_class k = mu[i] * beta[j];
      if (k == 0) continue;
      re += k * mpq_class(static_cast<long>(r_[i][j].numerator()), static_cast<long>(r_[i][j].denominator()));
      se += k * mpq_class(static_cast<long>(s_[i][j].numerator()), static_cast<long>(s_[i][j].denominator()));
    }
  re.canonicalize();
  se.canonicalize();
  return LaurentScalar::monomial(1, Exponent(re.get_num().get_si(), re.get_den().get_si()),
                                 Exponent(se.get_num().get_si(), se.get_den().get_si()));
}

Character Character::inverse() const {
  Character out = *this;
  for (auto& row : out.r_)
    for (auto& x : row) x = -x;
  for (auto& row : out.s_)
    for (auto& x : row) x = -x;
  return out;
}

Character Character::transpose() const {
  Character out = *this;
  for (std::size_t i = 0; i < r_.size(); ++i)
    for (std::size_t j = 0; j < r_.size(); ++j) {
      out.r_[i][j] = r_[j][i];
      out.s_[i][j] = s_[j][i];
    }
  return out;
}

Character operator*(const Character& a, const Character& b) {
  Character out = a;
  for (std::size_t i = 0; i < a.r_.size(); ++i)
    for (std::size_t j = 0; j < a.r_.size(); ++j) {
      out.r_[i][j] += b.r_[i][j];
      out.s_[i][j] += b.s_[i][j];
    }
  return out;
}

// ---------------------------------------------------------------------------
// Specs

AlgebraSpec::AlgebraSpec(std::string name, CartanDatum cartan, Kind kind, Character chi_w, Character chi_wp,
                         std::vector<LaurentScalar> t, std::vector<LaurentScalar> base)
    : name_(std::move(name)),
      cartan_(std::move(cartan)),
      kind_(kind),
      chi_w_(std::move(chi_w)),
      chi_wp_(std::move(chi_wp)),
      t_(std::move(t)),
      base_(std::move(base)) {
  for (const auto& x : t_) t_inv_.push_back(Coeff(x).inverse());
}

LaurentScalar AlgebraSpec::serre_constant(int i, int j, int k) const {
  return base_[i].pow(static_cast<long long>(k) * (k - 1) / 2) * chi_w_(i, j).pow(k);
}

std::vector<std::pair<Word, LaurentScalar>> AlgebraSpec::serre_element(Side side, int i, int j) const {
  int n = 1 - cartan_.a(i, j);
  std::vector<std::pair<Word, LaurentScalar>> out;
  for (int k = 0; k <= n; ++k) {
    LaurentScalar c = gauss_binomial(base_[i], n, k) * serre_constant(i, j, k);
    if (k % 2) c = -c;
    Word w;
    int left = side == Side::E ? n - k : k;
    w.insert(w.end(), left, i);
    w.push_back(j);
    w.insert(w.end(), n - left, i);
    out.emplace_back(std::move(w), std::move(c));
  }
  return out;
}

std::shared_ptr<const SerreReduction> AlgebraSpec::reduction(Side side, const RootVector& beta) const {
  std::shared_ptr<Slot> slot;
  {
    std::lock_guard<std::mutex> lock(cache_mutex_);
    auto& entry = cache_[{side, beta}];
    if (!entry) entry = std::make_shared<Slot>();
    slot = entry;
  }
  std::call_once(slot->once, [&] { slot->value = build_reduction(side, beta); });
  return slot->value;
}

std::shared_ptr<const SerreReduction> AlgebraSpec::build_reduction(Side side, const RootVector& beta) const {
  auto red = std::make_shared<SerreReduction>();
  red->words = words_of_degree(beta);
  for (std::size_t k = 0; k < red->words.size(); ++k) red->index[red->words[k]] = k;

  std::vector<std::vector<LaurentScalar>> rows;
  int n = rank();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      int len = 1 - cartan_.a(i, j);
      RootVector gamma = beta - len * unit_root(n, i) - unit_root(n, j);
      if (!is_nonnegative(gamma)) continue;
      auto rel = serre_element(side, i, j);
      for (const Word& u : words_of_degree(gamma))
        for (std::size_t p = 0; p <= u.size(); ++p) {
          std::vector<LaurentScalar> row(red->words.size());
          for (const auto& [w, c] : rel) {
            Word full(u.begin(), u.begin() + p);
            full.insert(full.end(), w.begin(), w.end());
            full.insert(full.end(), u.begin() + p, u.end());
            row[red->index.at(full)] += c;
          }
          rows.push_back(std::move(row));
        }
    }

  red->basis.assign(red->words.size(), true);
  red->image.resize(red->words.size());
  if (!rows.empty()) {
    PolyMatrix m(rows.size(), red->words.size());
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (std::size_t c = 0; c < red->words.size(); ++c) m(r, c) = rows[r][c];
    FractionFreeForm ff = fraction_free_rref(std::move(m));
    red->relation_rank = ff.pivots.size();
    for (auto c : ff.pivots) red->basis[c] = false;
    for (std::size_t r = 0; r < ff.pivots.size(); ++r) {
      auto& img = red->image[ff.pivots[r]];
      for (std::size_t c = 0; c < red->words.size(); ++c) {
        if (!red->basis[c] || ff.rows(r, c).is_zero()) continue;
        img.emplace_back(c, Coeff(-ff.rows(r, c), ff.scale));
      }
    }
  }
  for (std::size_t c = 0; c < red->words.size(); ++c)
    if (red->basis[c]) red->image[c] = {{c, Coeff(1)}};
  return red;
}

std::vector<std::vector<int>> euler_table(const CartanDatum& cartan) {
  int n = cartan.rank();
  std::vector<std::vector<int>> e(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) e[i][j] = cartan.euler(i, j);
  return e;
}

SpecPtr make_rs_spec(const CartanDatum& cartan, const std::vector<std::vector<int>>& euler, std::string name) {
  int n = cartan.rank();
  Character w(n), wp(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      w.set(i, j, euler[j][i], -euler[i][j]);
      wp.set(i, j, -euler[i][j], euler[j][i]);
    }
  std::vector<LaurentScalar> t, base;
  for (int i = 0; i < n; ++i) {
    int di = euler[i][i];
    t.push_back(LaurentScalar::r_power(di) - LaurentScalar::s_power(di));
    base.push_back(LaurentScalar::monomial(1, di, -di));
  }
  auto kind = euler == euler_table(cartan) ? AlgebraSpec::Kind::RS : AlgebraSpec::Kind::Custom;
  return std::make_shared<AlgebraSpec>(std::move(name), cartan, kind, w, wp, t, base);
}

SpecPtr make_rs_spec(const CartanDatum& cartan) { return make_rs_spec(cartan, euler_table(cartan), "rs"); }

SpecPtr make_q_spec(const CartanDatum& cartan) {
  int n = cartan.rank();
  Character w(n), wp(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Exponent h(cartan.sym(i, j), 2);
      w.set(i, j, h, -h);
      wp.set(i, j, -h, h);
    }
  std::vector<LaurentScalar> t, base;
  for (int i = 0; i < n; ++i) {
    t.push_back(LaurentScalar::q_power(cartan.d(i)) - LaurentScalar::q_power(-cartan.d(i)));
    base.push_back(LaurentScalar::q_power(2 * cartan.d(i)));
  }
  return std::make_shared<AlgebraSpec>("q", cartan, AlgebraSpec::Kind::Q, w, wp, t, base);
}

// ---------------------------------------------------------------------------
// Monomials

RootVector word_weight(const Word& w, int rank) {
  RootVector out(rank, 0);
  for (int i : w) ++out[i];
  return out;
}

bool Monomial::is_unit() const { return is_toral() && is_zero(w) && is_zero(wp); }

std::pair<RootVector, RootVector> Monomial::bidegree() const {
  int n = static_cast<int>(w.size());
  RootVector tor = w + wp;
  return {word_weight(e, n) + tor, -(word_weight(f, n) + tor)};
}

RootVector Monomial::weight() const {
  int n = static_cast<int>(w.size());
  return word_weight(e, n) - word_weight(f, n);
}

std::vector<Word> words_of_degree(const RootVector& beta) {
  std::vector<Word> out;
  Word cur;
  RootVector left = beta;
  int total = height(beta);
  auto rec = [&](auto&& self) -> void {
    if (static_cast<int>(cur.size()) == total) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = 0; i < left.size(); ++i) {
      if (left[i] == 0) continue;
      --left[i];
      cur.push_back(static_cast<int>(i));
      self(self);
      cur.pop_back();
      ++left[i];
    }
  };
  rec(rec);
  return out;
}

// ---------------------------------------------------------------------------
// Elements

Element::Element(SpecPtr spec, const Coeff& c) : spec_(std::move(spec)) {
  add(Monomial::unit(spec_->rank()), c);
}

Element::Element(SpecPtr spec, const Monomial& m, const Coeff& c) : spec_(std::move(spec)) { add(m, c); }

Element Element::e(SpecPtr spec, int i) { return e_word(std::move(spec), {i}); }
Element Element::f(SpecPtr spec, int i) { return f_word(std::move(spec), {i}); }

Element Element::e_word(SpecPtr spec, const Word& w) {
  Monomial m = Monomial::unit(spec->rank());
  m.e = w;
  return Element(std::move(spec), m);
}

Element Element::f_word(SpecPtr spec, const Word& w) {
  Monomial m = Monomial::unit(spec->rank());
  m.f = w;
  return Element(std::move(spec), m);
}

Element Element::omega(SpecPtr spec, const RootVector& mu) {
  Monomial m = Monomial::unit(spec->rank());
  m.w = mu;
  return Element(std::move(spec), m);
}

Element Element::omega_prime(SpecPtr spec, const RootVector& mu) {
  Monomial m = Monomial::unit(spec->rank());
  m.wp = mu;
  return Element(std::move(spec), m);
}

Coeff Element::constant_term() const {
  auto it = terms_.find(Monomial::unit(spec_->rank()));
  return it == terms_.end() ? Coeff() : it->second;
}

std::optional<std::pair<RootVector, RootVector>> Element::bidegree() const {
  if (terms_.empty()) return std::nullopt;
  auto first = terms_.begin()->first.bidegree();
  for (const auto& [m, c] : terms_)
    if (m.bidegree() != first) return std::nullopt;
  return first;
}

int Element::max_word_length() const {
  int out = 0;
  for (const auto& [m, c] : terms_) out = std::max(out, static_cast<int>(std::max(m.e.size(), m.f.size())));
  return out;
}

void Element::add(const Monomial& m, const Coeff& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

Element& Element::operator+=(const Element& o) {
  for (const auto& [m, c] : o.terms_) add(m, c);
  return *this;
}

Element& Element::operator-=(const Element& o) {
  for (const auto& [m, c] : o.terms_) add(m, -c);
  return *this;
}

Element Element::operator-() const {
  Element out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

Element operator*(const Coeff& c, Element x) {
  if (c.is_zero()) return Element(x.spec_);
  for (auto& [m, v] : x.terms_) v *= c;
  return x;
}

Element operator*(const Element& a, const Element& b) {
  Element out(a.spec_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      Coeff c = ca * cb;
      for (const auto& [m, v] : multiply(a.spec_, ma, mb).terms_) out.add(m, c * v);
    }
  return out;
}

Element Element::pow(int k) const {
  if (k < 0) {
    if (terms_.size() != 1 || !terms_.begin()->first.is_toral())
      throw std::domain_error("negative power of a non-invertible element");
    const auto& [m, c] = *terms_.begin();
    Monomial inv = m;
    inv.w = -m.w;
    inv.wp = -m.wp;
    return Element(spec_, inv, c.inverse()).pow(-k);
  }
  Element out(spec_, Coeff(1));
  for (int i = 0; i < k; ++i) out = out * *this;
  return out;
}

// ---------------------------------------------------------------------------
// Straightening

namespace {

void accumulate(Element::Terms& out, const Monomial& m, const Coeff& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = out.emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) out.erase(it);
}

// e_i * (F T E), written into out scaled by c.
void mul_e_left(const AlgebraSpec& spec, int i, const Monomial& m, const Coeff& c, Element::Terms& out) {
  int n = spec.rank();
  RootVector ai = unit_root(n, i);
  Monomial main = m;
  main.e.insert(main.e.begin(), i);
  LaurentScalar past_torus = (spec.chi_omega()(m.w, ai) * spec.chi_omega_prime()(m.wp, ai)).inverse();
  accumulate(out, main, c * Coeff(past_torus));

  RootVector suffix(n, 0);
  for (std::size_t k = m.f.size(); k-- > 0;) {
    if (m.f[k] == i) {
      Monomial base = m;
      base.f.erase(base.f.begin() + static_cast<std::ptrdiff_t>(k));
      Coeff scale = c * spec.t_inverse(i);
      Monomial mw = base;
      mw.w[i] += 1;
      accumulate(out, mw, scale * Coeff(spec.chi_omega()(ai, suffix).inverse()));
      Monomial mwp = base;
      mwp.wp[i] += 1;
      accumulate(out, mwp, -scale * Coeff(spec.chi_omega_prime()(ai, suffix).inverse()));
    }
    suffix[m.f[k]] += 1;
  }
}

}  // namespace

Element multiply(const SpecPtr& spec, const Monomial& a, const Monomial& b) {
  int n = spec->rank();
  Element::Terms cur{{b, Coeff(1)}};
  for (std::size_t k = a.e.size(); k-- > 0;) {
    Element::Terms next;
    for (const auto& [m, c] : cur) mul_e_left(*spec, a.e[k], m, c, next);
    cur = std::move(next);
  }
  Element out(spec);
  bool trivial_torus = is_zero(a.w) && is_zero(a.wp);
  for (const auto& [m, c] : cur) {
    Monomial r = m;
    Coeff v = c;
    if (!trivial_torus) {
      RootVector wf = word_weight(m.f, n);
      v *= Coeff((spec->chi_omega()(a.w, wf) * spec->chi_omega_prime()(a.wp, wf)).inverse());
      r.w = r.w + a.w;
      r.wp = r.wp + a.wp;
    }
    r.f.insert(r.f.begin(), a.f.begin(), a.f.end());
    out.add(r, v);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Serre reduction

namespace {

std::vector<std::pair<Word, Coeff>> reduce_word(const AlgebraSpec& spec, Side side, const Word& w) {
  if (w.size() < 2) return {{w, Coeff(1)}};
  auto red = spec.reduction(side, word_weight(w, spec.rank()));
  std::vector<std::pair<Word, Coeff>> out;
  for (const auto& [idx, c] : red->image[red->index.at(w)]) out.emplace_back(red->words[idx], c);
  return out;
}

}  // namespace

Element serre_normal_form(const Element& x, int deg_bound) {
  const AlgebraSpec& spec = *x.spec();
  Element out(x.spec());
  for (const auto& [m, c] : x.terms()) {
    if (static_cast<int>(m.e.size()) > deg_bound || static_cast<int>(m.f.size()) > deg_bound)
      throw std::out_of_range("word length exceeds degree bound " + std::to_string(deg_bound));
    auto es = reduce_word(spec, Side::E, m.e);
    auto fs = reduce_word(spec, Side::F, m.f);
    for (const auto& [fw, fc] : fs)
      for (const auto& [ew, ec] : es) {
        Monomial r = m;
        r.f = fw;
        r.e = ew;
        out.add(r, c * fc * ec);
      }
  }
  return out;
}

Element serre_normal_form(const Element& x) { return serre_normal_form(x, x.max_word_length()); }

bool equal_mod_ideal(const Element& x, const Element& y, int deg_bound) {
  return serre_normal_form(x - y, deg_bound).is_zero();
}

bool equal_mod_ideal(const Element& x, const Element& y) { return serre_normal_form(x - y).is_zero(); }

std::vector<Word> enumerate_basis(const SpecPtr& spec, const RootVector& beta, int deg_bound) {
  if (!is_nonnegative(beta)) throw std::invalid_argument("degree must lie in Q^+");
  if (height(beta) > deg_bound) throw std::out_of_range("degree height exceeds bound");
  auto red = spec->reduction(Side::E, beta);
  std::vector<Word> out;
  for (std::size_t k = 0; k < red->words.size(); ++k)
    if (red->basis[k]) out.push_back(red->words[k]);
  return out;
}

std::vector<Word> enumerate_basis(const SpecPtr& spec, const RootVector& beta) {
  return enumerate_basis(spec, beta, height(beta));
}

// ---------------------------------------------------------------------------
// Text

namespace {

std::string power_suffix(int k) { return k == 1 ? std::string() : "^" + std::to_string(k); }

bool is_signed_single(const Coeff& c) { return c.is_polynomial() && c.numerator().is_monomial(); }

std::string coefficient_factor(const Coeff& c) {
  if (c.is_polynomial() && c.numerator().size() > 1) return "(" + c.str() + ")";
  return c.str();
}

}  // namespace

std::string format_monomial(const Monomial& m) {
  std::vector<std::string> parts;
  for (int i : m.f) parts.push_back("f" + std::to_string(i + 1));
  for (std::size_t i = 0; i < m.w.size(); ++i)
    if (m.w[i]) parts.push_back("w" + std::to_string(i + 1) + power_suffix(m.w[i]));
  for (std::size_t i = 0; i < m.wp.size(); ++i)
    if (m.wp[i]) parts.push_back("w'" + std::to_string(i + 1) + power_suffix(m.wp[i]));
  for (int i : m.e) parts.push_back("e" + std::to_string(i + 1));
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : "*") + p;
  return out.empty() ? "1" : out;
}

std::string format_element(const Element& x) {
  if (x.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c0] : x.terms()) {
    Coeff c = c0;
    bool negative = is_signed_single(c) && c.numerator().leading().coeff < 0;
    if (negative) c = -c;
    if (first) out += negative ? "-" : "";
    else out += negative ? " - " : " + ";
    first = false;
    if (m.is_unit()) {
      out += coefficient_factor(c);
    } else if (c.is_one()) {
      out += format_monomial(m);
    } else {
      out += coefficient_factor(c) + "*" + format_monomial(m);
    }
  }
  return out;
}

std::string Element::str() const { return format_element(*this); }

namespace {

using detail::Token;
using detail::TokenCursor;
using detail::TokenKind;

class ElementParser {
 public:
  ElementParser(SpecPtr spec, std::string_view text) : spec_(std::move(spec)), cur_(detail::tokenize(text)) {}

  Element parse() {
    Element v = expr();
    if (cur_.peek().kind != TokenKind::End) throw ParseError("trailing input", cur_.peek().pos);
    return v;
  }

 private:
  Element expr() {
    bool neg = false;
    if (cur_.accept(TokenKind::Minus)) neg = true;
    else cur_.accept(TokenKind::Plus);
    Element v = term();
    if (neg) v = -v;
    for (;;) {
      if (cur_.accept(TokenKind::Plus)) v += term();
      else if (cur_.accept(TokenKind::Minus)) v -= term();
      else return v;
    }
  }

  Element term() {
    Element v = factor();
    for (;;) {
      if (cur_.accept(TokenKind::Star)) {
        v = v * factor();
      } else if (cur_.peek().kind == TokenKind::Slash) {
        std::size_t pos = cur_.next().pos;
        Element d = factor();
        if (!is_scalar(d) || d.is_zero()) throw ParseError("division by a non-scalar or zero", pos);
        v = d.constant_term().inverse() * v;
      } else {
        return v;
      }
    }
  }

  static bool is_scalar(const Element& x) {
    for (const auto& [m, c] : x.terms())
      if (!m.is_unit()) return false;
    return true;
  }

  Element factor() {
    const Token& t = cur_.peek();
    if (t.kind == TokenKind::Number) {
      mpq_class n(cur_.next().text);
      Element v(spec_, Coeff(LaurentScalar(n)));
      if (cur_.accept(TokenKind::Caret)) v = power(v);
      return v;
    }
    if (t.kind == TokenKind::LParen) {
      cur_.next();
      Element v = expr();
      cur_.expect(TokenKind::RParen, "')'");
      if (cur_.accept(TokenKind::Caret)) v = power(v);
      return v;
    }
    if (t.kind == TokenKind::Ident) return generator(cur_.next());
    throw ParseError("expected element", t.pos);
  }

  Element power(const Element& base) {
    std::size_t pos = cur_.peek().pos;
    Exponent e = cur_.exponent();
    if (e.denominator() != 1) throw ParseError("fractional power of an element", pos);
    try {
      return base.pow(static_cast<int>(e.numerator()));
    } catch (const std::domain_error& err) {
      throw ParseError(err.what(), pos);
    }
  }

  Element generator(const Token& id) {
    const std::string& s = id.text;
    if (s == "r" || s == "s" || s == "q") {
      Exponent e = 1;
      if (cur_.accept(TokenKind::Caret)) e = cur_.exponent();
      LaurentScalar v = s == "r" ? LaurentScalar::r_power(e)
                        : s == "s" ? LaurentScalar::s_power(e)
                                   : LaurentScalar::q_power(e);
      return Element(spec_, Coeff(v));
    }
    std::size_t split = 0;
    while (split < s.size() && !(s[split] >= '0' && s[split] <= '9')) ++split;
    std::string head = s.substr(0, split), digits = s.substr(split);
    if (digits.empty() || digits.size() > 3) throw ParseError("unknown symbol '" + s + "'", id.pos);
    int idx = std::stoi(digits) - 1;
    if (idx < 0 || idx >= spec_->rank()) throw ParseError("generator index out of range in '" + s + "'", id.pos);
    int k = 1;
    if (cur_.accept(TokenKind::Caret)) {
      std::size_t pos = cur_.peek().pos;
      Exponent e = cur_.exponent();
      if (e.denominator() != 1) throw ParseError("fractional power of a generator", pos);
      k = static_cast<int>(e.numerator());
    }
    int n = spec_->rank();
    if (head == "w" || head == "K") return Element::omega(spec_, k * unit_root(n, idx));
    if (head == "w'" || head == "K'") return Element::omega_prime(spec_, k * unit_root(n, idx));
    if (head == "e" || head == "E" || head == "f" || head == "F") {
      if (k < 0) throw ParseError("negative power of '" + s + "'", id.pos);
      Word w(k, idx);
      return (head == "e" || head == "E") ? Element::e_word(spec_, w) : Element::f_word(spec_, w);
    }
    throw ParseError("unknown symbol '" + s + "'", id.pos);
  }

  SpecPtr spec_;
  TokenCursor cur_;
};

}  // namespace

Element parse_element(const SpecPtr& spec, std::string_view text) { return ElementParser(spec, text).parse(); }

}  // namespace qtwist

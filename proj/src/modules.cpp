#include "qtwist/modules.hpp"

#include "qtwist/pairing.hpp"

#include <cctype>
#include <map>
#include <tuple>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace qtwist {

namespace {

Exponent to_exponent(const mpq_class& x) {
  mpq_class y = x;
  y.canonicalize();
  return Exponent(y.get_num().get_si(), y.get_den().get_si());
}

LatticeVector sub(LatticeVector a, const RootVector& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

LatticeVector add(LatticeVector a, const LatticeVector& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

std::string format_lattice(const LatticeVector& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + v[i].get_str();
  return out;
}

std::string word_label(const Word& w) {
  if (w.empty()) return "v";
  std::string out;
  for (int i : w) out += "f" + std::to_string(i + 1) + "*";
  return out + "v";
}

CoeffMatrix diagonal(const std::vector<Coeff>& d) {
  CoeffMatrix m(d.size(), d.size());
  for (std::size_t k = 0; k < d.size(); ++k) m(k, k) = d[k];
  return m;
}

// Verma layer of degree beta: F-basis words and the reduced contravariant form.
struct Layer {
  std::vector<Word> fwords;
  std::map<Word, std::size_t> index;
  CoeffMatrix rref;
  std::vector<std::size_t> pivots;
  std::size_t offset = 0;
};

}  // namespace

std::vector<int> parse_highest_weight(const CartanDatum& cartan, const std::string& text) {
  int n = cartan.rank();
  std::vector<int> labels(n, 0);
  if (text == "0") return labels;
  if (text.empty() || text.back() == '+') throw std::invalid_argument("bad weight '" + text + "'");
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, '+')) {
    auto w = item.find('w');
    if (w == std::string::npos || w + 1 >= item.size()) throw std::invalid_argument("bad weight term '" + item + "'");
    int c = 1;
    try {
      if (w > 0) c = std::stoi(item.substr(0, w));
      std::size_t used = 0;
      int k = std::stoi(item.substr(w + 1), &used);
      if (used != item.size() - w - 1 || k < 1 || k > n) throw std::invalid_argument(item);
      labels[k - 1] += c;
    } catch (const std::logic_error&) {
      throw std::invalid_argument("bad weight term '" + item + "'");
    }
  }
  return labels;
}

WeightModule build_highest_weight_module(const CartanDatum& cartan, const std::vector<int>& labels, int height_cap) {
  int n = cartan.rank();
  for (int l : labels)
    if (l < 0) throw std::invalid_argument("highest weight must be dominant");
  SpecPtr q = make_q_spec(cartan);
  LatticeVector lambda = cartan.weight(labels);

  // E_i on free F-words applied to v: E_i F_j X = F_j E_i X + delta_ij t_i^{-1} (K_i - K'_i) X.
  using Vec = std::map<Word, Coeff>;
  std::map<std::pair<int, Word>, Vec> memo;
  auto raise = [&](auto&& self, int i, const Word& w) -> Vec {
    auto key = std::make_pair(i, w);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    Vec out;
    if (!w.empty()) {
      Word rest(w.begin() + 1, w.end());
      for (const auto& [u, c] : self(self, i, rest)) {
        Word v{w[0]};
        v.insert(v.end(), u.begin(), u.end());
        out[v] += c;
      }
      if (w[0] == i) {
        LatticeVector mu = sub(lambda, word_weight(rest, n));
        LatticeVector ai = to_lattice(unit_root(n, i));
        Coeff k = Coeff(q->chi_omega()(ai, mu) - q->chi_omega_prime()(ai, mu)) * q->t_inverse(i);
        out[rest] += k;
      }
      for (auto jt = out.begin(); jt != out.end();) jt = jt->second.is_zero() ? out.erase(jt) : std::next(jt);
    }
    return memo.emplace(key, out).first->second;
  };
  auto raise_vec = [&](int i, const Vec& x) {
    Vec out;
    for (const auto& [w, c] : x)
      for (const auto& [u, d] : raise(raise, i, w)) out[u] += c * d;
    return out;
  };

  std::map<RootVector, Layer> layers;
  std::vector<RootVector> order;
  bool closed = false;
  for (int h = 0; h <= height_cap + 1 && !closed; ++h) {
    std::vector<RootVector> degs = h == 0 ? std::vector<RootVector>{RootVector(n, 0)} : degrees_of_height(n, h);
    closed = true;
    for (const auto& beta : degs) {
      Layer L;
      L.fwords = basis_words(q, Side::F, beta);
      auto es = basis_words(q, Side::E, beta);
      // contravariant form: coefficient of v in E_a F_b v
      CoeffMatrix s(es.size(), L.fwords.size());
      for (std::size_t b = 0; b < L.fwords.size(); ++b)
        for (std::size_t a = 0; a < es.size(); ++a) {
          Vec x{{L.fwords[b], Coeff(1)}};
          for (std::size_t k = es[a].size(); k-- > 0;) x = raise_vec(es[a][k], x);
          auto it = x.find(Word{});
          if (it != x.end()) s(a, b) = it->second;
        }
      L.rref = rref(s, &L.pivots);
      if (L.pivots.empty()) continue;
      if (h == height_cap + 1)
        throw std::runtime_error("module does not close within height cap " + std::to_string(height_cap) +
                                 "; increase cap");
      closed = false;
      for (std::size_t k = 0; k < L.fwords.size(); ++k) L.index[L.fwords[k]] = k;
      layers.emplace(beta, std::move(L));
      order.push_back(beta);
    }
  }

  WeightModule out;
  out.spec = q;
  out.algebra = "q";
  out.tops = {lambda};
  for (const auto& beta : order) {
    Layer& L = layers.at(beta);
    L.offset = out.weights.size();
    for (auto p : L.pivots) {
      out.labels.push_back(word_label(L.fwords[p]));
      out.weights.push_back(sub(lambda, beta));
    }
  }
  std::size_t d = out.dim();

  // Coordinates of a Verma vector (F-word combination of degree beta) in L(lambda).
  auto place = [&](CoeffMatrix& m, std::size_t col, const RootVector& beta, const Element& fpart) {
    auto it = layers.find(beta);
    if (it == layers.end()) return;
    const Layer& L = it->second;
    std::vector<Coeff> u(L.fwords.size());
    for (const auto& [mono, c] : fpart.terms()) u[L.index.at(mono.f)] += c;
    for (std::size_t r = 0; r < L.pivots.size(); ++r) {
      Coeff v;
      for (std::size_t k = 0; k < u.size(); ++k)
        if (!u[k].is_zero() && !L.rref(r, k).is_zero()) v += L.rref(r, k) * u[k];
      m(L.offset + r, col) = v;
    }
  };

  for (int i = 0; i < n; ++i) {
    CoeffMatrix e(d, d), f(d, d);
    std::vector<Coeff> w(d), wp(d);
    RootVector ai = unit_root(n, i);
    for (const auto& beta : order) {
      const Layer& L = layers.at(beta);
      for (std::size_t r = 0; r < L.pivots.size(); ++r) {
        std::size_t col = L.offset + r;
        const Word& word = L.fwords[L.pivots[r]];
        LatticeVector mu = out.weights[col];
        w[col] = Coeff(q->chi_omega()(to_lattice(ai), mu));
        wp[col] = Coeff(q->chi_omega_prime()(to_lattice(ai), mu));
        Word longer{i};
        longer.insert(longer.end(), word.begin(), word.end());
        place(f, col, beta + ai, serre_normal_form(Element::f_word(q, longer)));
        if (beta[i] == 0) continue;
        Element fpart(q);
        for (const auto& [u, c] : raise(raise, i, word)) fpart += c * Element::f_word(q, u);
        place(e, col, beta - ai, serre_normal_form(fpart));
      }
    }
    out.e.push_back(std::move(e));
    out.f.push_back(std::move(f));
    out.omega.push_back(std::move(w));
    out.omega_prime.push_back(std::move(wp));
  }
  return out;
}

WeightModule tensor_modules(const WeightModule& v, const WeightModule& w) {
  if (v.spec->name() != w.spec->name() || v.algebra != w.algebra || v.spec->cartan().label() != w.spec->cartan().label())
    throw std::invalid_argument("tensor of modules over different algebras");
  int n = v.spec->rank();
  WeightModule out;
  out.spec = v.spec;
  out.algebra = v.algebra;
  for (std::size_t a = 0; a < v.dim(); ++a)
    for (std::size_t b = 0; b < w.dim(); ++b) {
      out.labels.push_back(v.labels[a] + " (x) " + w.labels[b]);
      out.weights.push_back(add(v.weights[a], w.weights[b]));
    }
  for (const auto& s : v.tops)
    for (const auto& t : w.tops) out.tops.push_back(add(s, t));
  CoeffMatrix iv = CoeffMatrix::identity(v.dim()), iw = CoeffMatrix::identity(w.dim());
  for (int i = 0; i < n; ++i) {
    out.e.push_back(kronecker(v.e[i], iw) + kronecker(diagonal(v.omega[i]), w.e[i]));
    out.f.push_back(kronecker(iv, w.f[i]) + kronecker(v.f[i], diagonal(w.omega_prime[i])));
    std::vector<Coeff> om, omp;
    for (std::size_t a = 0; a < v.dim(); ++a)
      for (std::size_t b = 0; b < w.dim(); ++b) {
        om.push_back(v.omega[i][a] * w.omega[i][b]);
        omp.push_back(v.omega_prime[i][a] * w.omega_prime[i][b]);
      }
    out.omega.push_back(std::move(om));
    out.omega_prime.push_back(std::move(omp));
  }
  return out;
}

CoeffMatrix act(const WeightModule& m, const Generator& g) {
  switch (g.kind) {
    case Generator::Kind::E: return m.e.at(g.i);
    case Generator::Kind::F: return m.f.at(g.i);
    case Generator::Kind::Omega:
    case Generator::Kind::OmegaPrime: {
      const auto& table = g.kind == Generator::Kind::Omega ? m.omega : m.omega_prime;
      std::vector<Coeff> d(m.dim(), Coeff(1));
      for (std::size_t i = 0; i < g.mu.size(); ++i)
        if (g.mu[i] != 0)
          for (std::size_t k = 0; k < d.size(); ++k) d[k] *= table[i][k].pow(g.mu[i]);
      return diagonal(d);
    }
  }
  throw std::logic_error("bad generator");
}

CoeffMatrix act(const WeightModule& m, const GeneratorWord& w) {
  CoeffMatrix out = CoeffMatrix::identity(m.dim());
  for (const auto& g : w) out = out * act(m, g);
  return out;
}

namespace {

std::string matrix_residual(const CoeffMatrix& m) {
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (!m(r, c).is_zero()) return "entry (" + std::to_string(r) + "," + std::to_string(c) + ") = " + m(r, c).str();
  return "0";
}

}  // namespace

std::string module_relation_residual(const WeightModule& m, const std::string& relation_id) {
  Relation rel = relation(m.spec, relation_id);
  for (const auto& part : rel.parts) {
    CoeffMatrix sum(m.dim(), m.dim());
    for (const auto& [c, w] : part) sum = sum + c * act(m, w);
    std::string r = matrix_residual(sum);
    if (r != "0") return r;
  }
  return "0";
}

// ---------------------------------------------------------------------------
// Twisting

WeightModule twist_module(const WeightModule& v, const BigradedTwist& t) {
  if (v.algebra != "q" || v.spec->name() != t.base->name() || v.spec->cartan().label() != t.base->cartan().label())
    throw std::invalid_argument("twist needs a module over the twist's base algebra");
  int n = v.spec->rank();
  WeightModule out = v;
  out.spec = t.target;
  out.algebra = "q_zeta";
  for (int i = 0; i < n; ++i) {
    LatticeVector ai = to_lattice(unit_root(n, i));
    for (std::size_t col = 0; col < v.dim(); ++col) {
      // generators: a - b = alpha_i, zeta(a, b) = 1 for e, f and zeta(a, a)^{-1} = 1 for the torus
      Coeff z(t.zeta(ai, v.weights[col]));
      for (std::size_t row = 0; row < v.dim(); ++row) {
        if (!v.e[i](row, col).is_zero()) out.e[i](row, col) = z * v.e[i](row, col);
        if (!v.f[i](row, col).is_zero()) out.f[i](row, col) = t.f_scale[i] * z * v.f[i](row, col);
      }
      out.omega[i][col] = z * z * v.omega[i][col];
      out.omega_prime[i][col] = z * z * v.omega_prime[i][col];
    }
  }
  return out;
}

CoeffMatrix xi_iso(const WeightModule& v, const WeightModule& w, const Bicharacter& zeta) {
  std::vector<Coeff> d;
  for (std::size_t a = 0; a < v.dim(); ++a)
    for (std::size_t b = 0; b < w.dim(); ++b) d.push_back(Coeff(zeta(w.weights[b], v.weights[a])));
  return diagonal(d);
}

// ---------------------------------------------------------------------------
// Braiding

std::vector<ThetaTerm> compute_theta(const CartanDatum& cartan, int height_cap) {
  static std::mutex mu;
  static std::map<std::pair<std::string, int>, std::vector<ThetaTerm>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(cartan.label(), height_cap);
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  int n = cartan.rank();
  SpecPtr q = make_q_spec(cartan);
  auto p = pairing_for(PairingKind::Q, q);
  std::vector<ThetaTerm> out{{RootVector(n, 0), {}, {}, Coeff(1)}};
  for (int h = 1; h <= height_cap; ++h)
    for (const auto& beta : degrees_of_height(n, h)) {
      auto fs = basis_words(q, Side::F, beta);
      auto es = basis_words(q, Side::E, beta);
      auto inv = inverse(gram_matrix(*p, beta, height_cap));
      if (!inv) throw std::runtime_error("degenerate pairing in degree " + format_root(beta));
      for (std::size_t a = 0; a < fs.size(); ++a)
        for (std::size_t b = 0; b < es.size(); ++b)
          if (!(*inv)(b, a).is_zero()) out.push_back({beta, fs[a], es[b], (*inv)(b, a)});
    }
  cache.emplace(key, out);
  return out;
}

namespace {

CoeffMatrix word_matrix(const std::vector<CoeffMatrix>& gens, std::size_t d, const Word& w) {
  CoeffMatrix out = CoeffMatrix::identity(d);
  for (int i : w) out = out * gens[i];
  return out;
}

CoeffMatrix flip(std::size_t dv, std::size_t dw) {
  CoeffMatrix t(dv * dw, dv * dw);
  for (std::size_t a = 0; a < dv; ++a)
    for (std::size_t b = 0; b < dw; ++b) t(b * dv + a, a * dw + b) = Coeff(1);
  return t;
}

// largest height of top - weight over the module
int depth(const WeightModule& m) {
  int out = 0;
  for (const auto& mu : m.weights) {
    int best = -1;
    for (const auto& top : m.tops) {
      mpq_class h = 0;
      bool ok = true;
      for (std::size_t i = 0; i < mu.size(); ++i) {
        mpq_class d = top[i] - mu[i];
        if (d < 0 || d.get_den() != 1) ok = false;
        h += d;
      }
      int hi = static_cast<int>(h.get_num().get_si());
      if (ok && (best < 0 || hi < best)) best = hi;
    }
    out = std::max(out, best);
  }
  return out;
}

}  // namespace

CoeffMatrix braiding(const WeightModule& v, const WeightModule& w, int height_cap) {
  if (v.algebra != "q" || w.algebra != "q") throw std::invalid_argument("braiding needs U_q-modules");
  if (height_cap < std::min(depth(v), depth(w)))
    throw std::runtime_error("quasi-R-matrix truncated below module depth " +
                             std::to_string(std::min(depth(v), depth(w))) + "; increase cap");
  const CartanDatum& cartan = v.spec->cartan();
  std::size_t dv = v.dim(), dw = w.dim();
  CoeffMatrix theta(dv * dw, dv * dw);
  for (const auto& t : compute_theta(cartan, height_cap)) {
    if (t.f.empty()) {
      theta = theta + t.c * CoeffMatrix::identity(dv * dw);
      continue;
    }
    theta = theta + t.c * kronecker(word_matrix(w.f, dw, t.f), word_matrix(v.e, dv, t.e));
  }
  CoeffMatrix pi(dw * dv, dw * dv);
  for (std::size_t b = 0; b < dw; ++b)
    for (std::size_t a = 0; a < dv; ++a) {
      Exponent x = to_exponent(-cartan.sym(w.weights[b], v.weights[a]) / 2);
      pi(b * dv + a, b * dv + a) = Coeff(LaurentScalar::monomial(1, x, -x));
    }
  return theta * pi * flip(dv, dw);
}

CoeffMatrix twisted_braiding(const WeightModule& v, const WeightModule& w, const Bicharacter& zeta, int height_cap) {
  CoeffMatrix r = braiding(v, w, height_cap);
  auto back = inverse(xi_iso(v, w, zeta));
  return xi_iso(w, v, zeta) * r * *back;
}

// ---------------------------------------------------------------------------
// Endomorphisms and numeric spot checks

std::vector<CoeffMatrix> module_endomorphisms(const WeightModule& m) {
  std::size_t d = m.dim();
  // unknowns: weight-preserving entries only
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> slot;
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c)
      if (m.weights[r] == m.weights[c]) {
        slot[{r, c}] = slots.size();
        slots.emplace_back(r, c);
      }
  std::vector<const CoeffMatrix*> gens;
  for (const auto& a : m.e) gens.push_back(&a);
  for (const auto& a : m.f) gens.push_back(&a);
  CoeffMatrix eqs(gens.size() * d * d, slots.size());
  std::size_t row = 0;
  for (const auto* a : gens)
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c, ++row)
        for (std::size_t k = 0; k < d; ++k) {
          // (X A - A X)(r, c)
          if (auto it = slot.find({r, k}); it != slot.end() && !(*a)(k, c).is_zero()) eqs(row, it->second) += (*a)(k, c);
          if (auto it = slot.find({k, c}); it != slot.end() && !(*a)(r, k).is_zero()) eqs(row, it->second) -= (*a)(r, k);
        }
  CoeffMatrix ker = kernel(eqs);
  std::vector<CoeffMatrix> out;
  for (std::size_t j = 0; j < ker.cols(); ++j) {
    CoeffMatrix x(d, d);
    for (std::size_t k = 0; k < slots.size(); ++k) x(slots[k].first, slots[k].second) = ker(k, j);
    out.push_back(std::move(x));
  }
  return out;
}

std::vector<std::pair<mpq_class, std::size_t>> eigen_multiplicities(const CoeffMatrix& m, const mpq_class& r_value,
                                                                    const mpq_class& s_value) {
  std::size_t d = m.rows();
  if (d != m.cols() || d == 0) throw std::invalid_argument("eigenvalues need a nonempty square matrix");
  CoeffMatrix x(d, d);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c) {
      Specialization v = specialize(m(r, c), r_value, s_value);
      if (!v.exact) throw std::runtime_error("entry does not specialize to a rational: " + v.symbolic);
      x(r, c) = Coeff(LaurentScalar(v.value));
    }
  auto at = [](const Coeff& c) {
    Specialization v = specialize(c, 1, 1);
    return v.value;
  };
  // minimal polynomial from the Krylov sequence I, X, X^2
  std::vector<CoeffMatrix> powers{CoeffMatrix::identity(d)};
  std::vector<mpq_class> poly;
  for (std::size_t k = 1; k <= 2 && poly.empty(); ++k) {
    powers.push_back(powers.back() * x);
    CoeffMatrix krylov(d * d, k + 1);
    for (std::size_t j = 0; j <= k; ++j)
      for (std::size_t e = 0; e < d * d; ++e) krylov(e, j) = powers[j](e / d, e % d);
    CoeffMatrix ker = kernel(krylov);
    if (ker.cols() == 0) continue;
    mpq_class lead = at(ker(k, 0));
    for (std::size_t j = 0; j <= k; ++j) poly.push_back(at(ker(j, 0)) / lead);
  }
  if (poly.empty()) throw std::runtime_error("minimal polynomial has degree above 2");
  std::vector<mpq_class> roots;
  if (poly.size() == 2) {
    roots.push_back(-poly[0]);
  } else {
    mpq_class disc = poly[1] * poly[1] - 4 * poly[0];
    disc.canonicalize();
    if (disc < 0) throw std::runtime_error("complex eigenvalues");
    mpz_class num = sqrt(mpz_class(disc.get_num())), den = sqrt(mpz_class(disc.get_den()));
    if (num * num != disc.get_num() || den * den != disc.get_den()) throw std::runtime_error("irrational eigenvalues");
    mpq_class root(num, den);
    root.canonicalize();
    roots.push_back((-poly[1] - root) / 2);
    if (root != 0) roots.push_back((-poly[1] + root) / 2);
  }
  std::vector<std::pair<mpq_class, std::size_t>> out;
  std::size_t total = 0;
  for (const auto& lam : roots) {
    std::size_t mult = d - rank(x - Coeff(LaurentScalar(lam)) * CoeffMatrix::identity(d));
    total += mult;
    out.emplace_back(lam, mult);
  }
  if (total != d) throw std::runtime_error("matrix is not diagonalizable");
  return out;
}

// ---------------------------------------------------------------------------
// Module expressions

namespace {

struct ExpressionParser {
  const CartanDatum& cartan;
  int cap;
  std::string text;
  std::size_t pos = 0;

  WeightModule expr() {
    WeightModule out = term();
    while (pos < text.size() && text[pos] == '*') {
      ++pos;
      out = tensor_modules(out, term());
    }
    return out;
  }

  WeightModule term() {
    if (text.compare(pos, 2, "z(") == 0) {
      pos += 2;
      WeightModule inner = expr();
      if (pos >= text.size() || text[pos] != ')') throw std::invalid_argument("missing ')' in module expression");
      ++pos;
      return twist_module(inner, standard_twist(cartan));
    }
    std::size_t end = text.find_first_of("*()", pos);
    if (end == std::string::npos) end = text.size();
    std::string weight = text.substr(pos, end - pos);
    if (weight.empty()) throw std::invalid_argument("empty weight in module expression");
    pos = end;
    return build_highest_weight_module(cartan, parse_highest_weight(cartan, weight), cap);
  }
};

}  // namespace

std::shared_ptr<const WeightModule> module_by_expression(const CartanDatum& cartan, const std::string& text,
                                                         int height_cap) {
  static std::mutex mu;
  static std::map<std::tuple<std::string, std::string, int>, std::shared_ptr<const WeightModule>> cache;
  std::string clean;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) clean += c;
  auto key = std::make_tuple(cartan.label(), clean, height_cap);
  {
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  ExpressionParser p{cartan, height_cap, clean};
  auto m = std::make_shared<const WeightModule>(p.expr());
  if (p.pos != clean.size()) throw std::invalid_argument("trailing text in module expression '" + text + "'");
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(key, m).first->second;
}

// ---------------------------------------------------------------------------
// Properties. Inputs are module expressions; the height cap comes last.

namespace {

using Inputs = std::vector<std::string>;

void need(const Inputs& in, std::size_t k) {
  if (in.size() != k) throw std::invalid_argument("expected " + std::to_string(k) + " inputs");
}

int cap_of(const Inputs& in) {
  try {
    std::size_t used = 0;
    int c = std::stoi(in.back(), &used);
    if (used == in.back().size() && c >= 0) return c;
  } catch (const std::logic_error&) {
  }
  throw std::invalid_argument("bad height cap '" + in.back() + "'");
}

std::shared_ptr<const WeightModule> module_of(const SpecPtr& spec, const std::string& text, int cap) {
  return module_by_expression(spec->cartan(), text, cap);
}

std::shared_ptr<const WeightModule> q_module_of(const SpecPtr& spec, const std::string& text, int cap) {
  auto m = module_of(spec, text, cap);
  if (m->algebra != "q") throw std::invalid_argument("'" + text + "' is not a U_q-module");
  return m;
}

std::vector<std::pair<std::string, Generator>> generators(int n) {
  std::vector<std::pair<std::string, Generator>> out;
  for (int i = 0; i < n; ++i) {
    std::string k = std::to_string(i + 1);
    out.emplace_back("e" + k, Generator::e(i));
    out.emplace_back("f" + k, Generator::f(i));
    out.emplace_back("w" + k, Generator::omega(unit_root(n, i)));
    out.emplace_back("w'" + k, Generator::omega_prime(unit_root(n, i)));
  }
  return out;
}

// Residual of map o act(src) - act(dst) o map, naming the first failing generator.
std::string intertwine_residual(const CoeffMatrix& map, const WeightModule& src, const WeightModule& dst) {
  for (const auto& [name, g] : generators(src.spec->rank())) {
    std::string r = matrix_residual(map * act(src, g) - act(dst, g) * map);
    if (r != "0") return name + ": " + r;
  }
  return "0";
}

Coeff lattice_power(const mpq_class& r, const mpq_class& s) {
  return Coeff(LaurentScalar::monomial(1, to_exponent(r), to_exponent(s)));
}

// A U_q element acting on a U_q-module, term by term.
CoeffMatrix act_monomial(const WeightModule& m, const Monomial& mono) {
  CoeffMatrix out = word_matrix(m.f, m.dim(), mono.f);
  out = out * act(m, Generator::omega(mono.w)) * act(m, Generator::omega_prime(mono.wp));
  return out * word_matrix(m.e, m.dim(), mono.e);
}

CoeffMatrix braid(const std::string& kind, const WeightModule& v, const WeightModule& w, int cap) {
  if (kind == "q") return braiding(v, w, cap);
  if (kind == "zeta") return twisted_braiding(v, w, standard_twist(v.spec->cartan()).zeta, cap);
  throw std::invalid_argument("braiding kind must be q or zeta, got '" + kind + "'");
}

std::string module_relation(const SpecPtr& spec, const Inputs& in) {
  need(in, 3);
  return module_relation_residual(*module_of(spec, in[0], cap_of(in)), in[1]);
}

// Toral generators act by the weight rule of the acting algebra.
std::string module_weight_rule(const SpecPtr& spec, const Inputs& in) {
  need(in, 2);
  auto m = module_of(spec, in[0], cap_of(in));
  const CartanDatum& c = spec->cartan();
  int n = c.rank();
  for (int i = 0; i < n; ++i) {
    LatticeVector ai = to_lattice(unit_root(n, i));
    for (std::size_t k = 0; k < m->dim(); ++k) {
      const LatticeVector& lam = m->weights[k];
      Coeff w, wp;
      if (m->algebra == "q") {
        mpq_class h = c.sym(ai, lam) / 2;
        w = lattice_power(h, -h);
        wp = lattice_power(-h, h);
      } else {
        w = lattice_power(c.euler(lam, ai), -c.euler(ai, lam));
        wp = lattice_power(-c.euler(ai, lam), c.euler(lam, ai));
      }
      if (m->omega[i][k] != w) return "w" + std::to_string(i + 1) + " on " + m->labels[k] + ": " + m->omega[i][k].str();
      if (m->omega_prime[i][k] != wp)
        return "w'" + std::to_string(i + 1) + " on " + m->labels[k] + ": " + m->omega_prime[i][k].str();
    }
  }
  return "0";
}

// Every weight lies below one of the tops.
std::string module_cone(const SpecPtr& spec, const Inputs& in) {
  need(in, 2);
  auto m = module_of(spec, in[0], cap_of(in));
  for (std::size_t k = 0; k < m->dim(); ++k) {
    bool inside = false;
    for (const auto& top : m->tops) {
      bool ok = true;
      for (std::size_t i = 0; i < top.size(); ++i) {
        mpq_class d = top[i] - m->weights[k][i];
        if (d < 0 || d.get_den() != 1) ok = false;
      }
      inside = inside || ok;
    }
    if (!inside) return m->labels[k] + " has weight " + format_lattice(m->weights[k]);
  }
  return "0";
}

// A word in the U_{r,s} generators on z(V) against its image x under the
// twist, acting by x ._zeta v = zeta(a - b, lambda) zeta(a, b) x.v.
std::string twist_formula(const SpecPtr& spec, const Inputs& in) {
  need(in, 3);
  auto v = q_module_of(spec, in[0], cap_of(in));
  BigradedTwist t = standard_twist(spec->cartan());
  GeneratorWord word = parse_generator_word(in[1], spec->rank());
  WeightModule z = twist_module(*v, t);
  Element x = twist_word(t, word);
  CoeffMatrix rhs(v->dim(), v->dim());
  for (const auto& [mono, c] : x.terms()) {
    auto [a, b] = mono.bidegree();
    CoeffMatrix m = act_monomial(*v, mono);
    for (std::size_t col = 0; col < v->dim(); ++col) {
      Coeff k = c * Coeff(t.zeta(to_lattice(a - b), v->weights[col]) * t.zeta(a, b));
      for (std::size_t row = 0; row < v->dim(); ++row)
        if (!m(row, col).is_zero()) rhs(row, col) += k * m(row, col);
    }
  }
  return matrix_residual(act(z, word) - rhs);
}

std::string xi_intertwine(const SpecPtr& spec, const Inputs& in) {
  need(in, 3);
  int cap = cap_of(in);
  auto v = q_module_of(spec, in[0], cap), w = q_module_of(spec, in[1], cap);
  BigradedTwist t = standard_twist(spec->cartan());
  WeightModule src = twist_module(tensor_modules(*v, *w), t);
  WeightModule dst = tensor_modules(twist_module(*v, t), twist_module(*w, t));
  return intertwine_residual(xi_iso(*v, *w, t.zeta), src, dst);
}

std::string xi_invertible(const SpecPtr& spec, const Inputs& in) {
  need(in, 3);
  int cap = cap_of(in);
  auto v = q_module_of(spec, in[0], cap), w = q_module_of(spec, in[1], cap);
  CoeffMatrix x = xi_iso(*v, *w, standard_twist(spec->cartan()).zeta);
  auto inv = inverse(x);
  if (!inv) return "singular";
  return matrix_residual(*inv * x - CoeffMatrix::identity(x.rows()));
}

// xi commutes with endomorphisms of either factor.
std::string xi_naturality(const SpecPtr& spec, const Inputs& in) {
  need(in, 3);
  int cap = cap_of(in);
  auto v = q_module_of(spec, in[0], cap), w = q_module_of(spec, in[1], cap);
  Bicharacter zeta = standard_twist(spec->cartan()).zeta;
  CoeffMatrix iv = CoeffMatrix::identity(v->dim()), iw = CoeffMatrix::identity(w->dim());
  CoeffMatrix xvw = xi_iso(*v, *w, zeta), xwv = xi_iso(*w, *v, zeta);
  for (const auto& phi : module_endomorphisms(*v)) {
    std::string r = matrix_residual(xvw * kronecker(phi, iw) - kronecker(phi, iw) * xvw);
    if (r == "0") r = matrix_residual(xwv * kronecker(iw, phi) - kronecker(iw, phi) * xwv);
    if (r != "0") return r;
  }
  return "0";
}

std::string braid_intertwine(const SpecPtr& spec, const Inputs& in) {
  need(in, 4);
  int cap = cap_of(in);
  auto v = q_module_of(spec, in[1], cap), w = q_module_of(spec, in[2], cap);
  CoeffMatrix r = braid(in[0], *v, *w, cap);
  if (!inverse(r)) return "singular";
  if (in[0] == "q") return intertwine_residual(r, tensor_modules(*v, *w), tensor_modules(*w, *v));
  BigradedTwist t = standard_twist(spec->cartan());
  WeightModule zv = twist_module(*v, t), zw = twist_module(*w, t);
  return intertwine_residual(r, tensor_modules(zv, zw), tensor_modules(zw, zv));
}

// R sends v_a (x) w_b into sums of w_b' (x) v_a' with wt v_a' - wt v_a in Q_+.
std::string braid_graded(const SpecPtr& spec, const Inputs& in) {
  need(in, 3);
  int cap = cap_of(in);
  auto v = q_module_of(spec, in[0], cap), w = q_module_of(spec, in[1], cap);
  CoeffMatrix r = braiding(*v, *w, cap);
  std::size_t dv = v->dim(), dw = w->dim();
  for (std::size_t a = 0; a < dv; ++a)
    for (std::size_t b = 0; b < dw; ++b)
      for (std::size_t b2 = 0; b2 < dw; ++b2)
        for (std::size_t a2 = 0; a2 < dv; ++a2) {
          if (r(b2 * dv + a2, a * dw + b).is_zero()) continue;
          bool ok = true;
          for (std::size_t i = 0; i < v->weights[a].size(); ++i) {
            mpq_class up = v->weights[a2][i] - v->weights[a][i];
            mpq_class down = w->weights[b][i] - w->weights[b2][i];
            if (up != down || up < 0 || up.get_den() != 1) ok = false;
          }
          if (!ok) return v->labels[a] + " (x) " + w->labels[b] + " -> " + w->labels[b2] + " (x) " + v->labels[a2];
        }
  return "0";
}

std::string braid_relation(const SpecPtr& spec, const Inputs& in) {
  need(in, 5);
  int cap = cap_of(in);
  auto u = q_module_of(spec, in[1], cap), v = q_module_of(spec, in[2], cap), w = q_module_of(spec, in[3], cap);
  CoeffMatrix iu = CoeffMatrix::identity(u->dim()), iv = CoeffMatrix::identity(v->dim()),
              iw = CoeffMatrix::identity(w->dim());
  CoeffMatrix ruv = braid(in[0], *u, *v, cap), ruw = braid(in[0], *u, *w, cap), rvw = braid(in[0], *v, *w, cap);
  CoeffMatrix lhs = kronecker(rvw, iu) * kronecker(iv, ruw) * kronecker(ruv, iw);
  CoeffMatrix rhs = kronecker(iw, ruv) * kronecker(ruw, iv) * kronecker(iu, rvw);
  return matrix_residual(lhs - rhs);
}

const Property& find(const std::vector<Property>& props, const std::string& name) {
  for (const auto& p : props)
    if (p.name == name) return p;
  throw std::logic_error("no property " + name);
}

}  // namespace

std::vector<Property> module_properties() {
  return {
      {"rep-relation", module_relation},       // {module, relation id, cap}
      {"module-weight-rule", module_weight_rule},  // {module, cap}
      {"module-cone", module_cone},            // {module, cap}
      {"twist-formula", twist_formula},        // {U_q module, generator word, cap}
      {"xi-intertwine", xi_intertwine},        // {v, w, cap}
      {"xi-invertible", xi_invertible},        // {v, w, cap}
      {"xi-naturality", xi_naturality},        // {v, w, cap}
      {"braid-intertwine", braid_intertwine},  // {q|zeta, v, w, cap}
      {"braid-graded", braid_graded},          // {v, w, cap}
      {"braid-relation", braid_relation},      // {q|zeta, u, v, w, cap}
  };
}

Report verify_category_equivalence(const CartanDatum& cartan, const std::vector<std::string>& samples, int height_cap) {
  if (samples.empty()) throw std::invalid_argument("no sample modules");
  if (height_cap < 1) throw std::invalid_argument("height cap must be at least 1");
  Report rep;
  rep.check = "category";
  SpecPtr q = make_q_spec(cartan);
  SpecPtr rs = make_rs_spec(cartan);
  int n = cartan.rank();
  auto props = module_properties();
  std::string cap = std::to_string(height_cap);
  auto run = [&](const char* name, Inputs in) {
    in.push_back(cap);
    run_property(rep, find(props, name), q, std::move(in));
  };

  std::vector<std::string> words;
  for (const auto& [a, g] : generators(n)) {
    words.push_back(a);
    for (const auto& [b, h] : generators(n)) words.push_back(a + "*" + b);
  }
  for (const auto& s : samples) {
    q_module_of(q, s, height_cap);
    std::string z = "z(" + s + ")";
    for (const auto& r : defining_relations(q)) run("rep-relation", {s, r.id});
    for (const auto& r : defining_relations(rs)) run("rep-relation", {z, r.id});
    for (const auto& m : {s, z}) {
      run("module-weight-rule", {m});
      run("module-cone", {m});
    }
    for (const auto& w : words) run("twist-formula", {s, w});
  }
  for (std::size_t a = 0; a < samples.size(); ++a)
    for (std::size_t b = a; b < samples.size(); ++b)
      for (int swap = 0; swap < (a == b ? 1 : 2); ++swap) {
        const std::string& v = swap ? samples[b] : samples[a];
        const std::string& w = swap ? samples[a] : samples[b];
        run("xi-intertwine", {v, w});
        run("xi-invertible", {v, w});
        run("xi-naturality", {v, w});
        run("braid-graded", {v, w});
        run("braid-intertwine", {"q", v, w});
        run("braid-intertwine", {"zeta", v, w});
      }
  std::vector<std::vector<std::string>> triples{{samples[0], samples[0], samples[0]}};
  if (samples.size() >= 3) triples.push_back({samples[0], samples[1], samples[2]});
  for (const auto& t : triples)
    for (const char* kind : {"q", "zeta"}) run("braid-relation", {kind, t[0], t[1], t[2]});
  return rep;
}

}  // namespace qtwist

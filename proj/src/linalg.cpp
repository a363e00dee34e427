#include "qtwist/linalg.hpp"

namespace qtwist {

namespace {

// Prefer short pivots; they keep the intermediate polynomials small.
template <class T>
std::optional<std::size_t> choose_pivot(const Matrix<T>& m, std::size_t from, std::size_t col, std::size_t (*size)(const T&)) {
  std::optional<std::size_t> best;
  for (std::size_t i = from; i < m.rows(); ++i) {
    if (m(i, col).is_zero()) continue;
    if (!best || size(m(i, col)) < size(m(*best, col))) best = i;
  }
  return best;
}

std::size_t poly_size(const LaurentScalar& x) { return x.size(); }
std::size_t coeff_size(const Coeff& x) { return x.numerator().size() + x.denominator().size(); }

}  // namespace

FractionFreeForm fraction_free_rref(PolyMatrix m) {
  FractionFreeForm out;
  LaurentScalar prev(1);
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    auto p = choose_pivot(m, r, c, &poly_size);
    if (!p) continue;
    m.swap_rows(*p, r);
    LaurentScalar piv = m(r, c);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r) continue;
      LaurentScalar f = m(i, c);
      for (std::size_t j = 0; j < m.cols(); ++j) {
        if (j == c) continue;
        LaurentScalar v = piv * m(i, j) - f * m(r, j);
        if (v.is_zero()) {
          m(i, j) = LaurentScalar();
          continue;
        }
        auto q = exact_divide(v, prev);
        if (!q) throw std::logic_error("fraction-free step left a nonzero remainder");
        m(i, j) = std::move(*q);
      }
      m(i, c) = LaurentScalar();
    }
    out.pivots.push_back(c);
    prev = piv;
    ++r;
  }
  out.scale = prev;
  out.rows = std::move(m);
  return out;
}

PolyMatrix clear_denominators(const CoeffMatrix& m) {
  PolyMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    LaurentScalar l(1);
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const auto& den = m(i, j).denominator();
      if (den.is_one()) continue;
      LaurentScalar g = polynomial_gcd(l, den);
      l = l * *exact_divide(den, g);
    }
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const auto& x = m(i, j);
      if (x.is_zero()) continue;
      out(i, j) = x.numerator() * *exact_divide(l, x.denominator());
    }
  }
  return out;
}

std::size_t rank(const PolyMatrix& m) { return fraction_free_rref(m).pivots.size(); }

std::size_t rank(const CoeffMatrix& m) { return rank(clear_denominators(m)); }

CoeffMatrix rref(CoeffMatrix m, std::vector<std::size_t>* pivots) {
  std::size_t r = 0;
  if (pivots) pivots->clear();
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    auto p = choose_pivot(m, r, c, &coeff_size);
    if (!p) continue;
    m.swap_rows(*p, r);
    Coeff inv = m(r, c).inverse();
    for (std::size_t j = c; j < m.cols(); ++j)
      if (!m(r, j).is_zero()) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      Coeff f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (!m(r, j).is_zero()) m(i, j) -= f * m(r, j);
    }
    if (pivots) pivots->push_back(c);
    ++r;
  }
  return m;
}

std::optional<CoeffMatrix> inverse(const CoeffMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse of a non-square matrix");
  std::size_t n = m.rows();
  CoeffMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = Coeff(1);
  }
  std::vector<std::size_t> piv;
  aug = rref(aug, &piv);
  if (piv.size() < n || piv[n - 1] != n - 1) return std::nullopt;
  CoeffMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = aug(i, n + j);
  return out;
}

CoeffMatrix kernel(const CoeffMatrix& m) {
  std::vector<std::size_t> piv;
  CoeffMatrix r = rref(m, &piv);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : piv) is_pivot[c] = true;
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) free.push_back(c);
  CoeffMatrix out(m.cols(), free.size());
  for (std::size_t k = 0; k < free.size(); ++k) {
    out(free[k], k) = Coeff(1);
    for (std::size_t i = 0; i < piv.size(); ++i) out(piv[i], k) = -r(i, free[k]);
  }
  return out;
}

CoeffMatrix kronecker(const CoeffMatrix& a, const CoeffMatrix& b) {
  CoeffMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j).is_zero()) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          if (!b(k, l).is_zero()) out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  return out;
}

CoeffMatrix to_coeff(const PolyMatrix& m) {
  CoeffMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = Coeff(m(i, j));
  return out;
}

}  // namespace qtwist

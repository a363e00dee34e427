#include "qtwist/cartan.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace qtwist;

namespace {

const char* kTypes[] = {"A1", "A2", "A3", "B2", "B3", "C2", "C3", "D4", "D5", "E6", "E7", "E8", "F4", "G2"};

// Standard determinants of finite Cartan matrices.
long long expected_det(const CartanDatum& c) {
  int n = c.rank();
  switch (c.type()) {
    case 'A': return n + 1;
    case 'B': case 'C': return 2;
    case 'D': return 4;
    case 'E': return 9 - n;
    default: return 1;
  }
}

mpq_class det(std::vector<std::vector<mpq_class>> m) {
  int n = static_cast<int>(m.size());
  mpq_class d = 1;
  for (int c = 0; c < n; ++c) {
    int p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      d = -d;
    }
    d *= m[c][c];
    for (int i = c + 1; i < n; ++i) {
      mpq_class f = m[i][c] / m[c][c];
      for (int j = c; j < n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  return d;
}

}  // namespace

TEST(Cartan, A2) {
  auto c = CartanDatum::load('A', 2);
  EXPECT_EQ(c.a(0, 1), -1);
  EXPECT_EQ(c.a(1, 0), -1);
  EXPECT_EQ(c.d(0), 1);
  EXPECT_EQ(c.d(1), 1);
  EXPECT_EQ(c.lattice_index(), 3);
}

TEST(Cartan, B2) {
  auto c = CartanDatum::load('B', 2);
  EXPECT_EQ(c.a(0, 1), -1);
  EXPECT_EQ(c.a(1, 0), -2);
  EXPECT_EQ(c.d(0), 2);
  EXPECT_EQ(c.d(1), 1);
}

TEST(Cartan, A1) {
  auto c = CartanDatum::load('A', 1);
  EXPECT_EQ(c.a(0, 0), 2);
  EXPECT_EQ(c.d(0), 1);
  EXPECT_EQ(c.lattice_index(), 2);
}

TEST(Cartan, G2Serre) {
  auto c = CartanDatum::parse("G2");
  EXPECT_EQ(c.a(0, 1), -3);
  EXPECT_EQ(c.a(1, 0), -1);
}

TEST(Cartan, Rejects) {
  EXPECT_THROW(CartanDatum::load('B', 1), std::invalid_argument);
  EXPECT_THROW(CartanDatum::load('D', 3), std::invalid_argument);
  EXPECT_THROW(CartanDatum::load('E', 9), std::invalid_argument);
  EXPECT_THROW(CartanDatum::load('F', 3), std::invalid_argument);
  EXPECT_THROW(CartanDatum::parse("X2"), std::invalid_argument);
  EXPECT_THROW(CartanDatum::parse("A"), std::invalid_argument);
}

TEST(Cartan, EulerExamples) {
  auto c = CartanDatum::load('A', 2);
  RootVector a1 = unit_root(2, 0), a2 = unit_root(2, 1);
  EXPECT_EQ(c.euler(a1, a2), -1);
  EXPECT_EQ(c.euler(a2, a1), 0);
  EXPECT_EQ(c.euler(a1, a1), 1);
  EXPECT_EQ(c.sym(a1, a1), 2);
  EXPECT_EQ(c.sym(a1, a2), -1);
  EXPECT_EQ(c.sym(a1, RootVector{0, 0}), 0);
}

TEST(Cartan, Invariants) {
  for (const char* label : kTypes) {
    auto c = CartanDatum::parse(label);
    int n = c.rank();
    int g = 0;
    std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(n));
    for (int i = 0; i < n; ++i) {
      g = std::gcd(g, c.d(i));
      for (int j = 0; j < n; ++j) {
        a[i][j] = c.a(i, j);
        EXPECT_EQ(c.d(i) * c.a(i, j), c.d(j) * c.a(j, i)) << label;
        if (i == j) {
          EXPECT_EQ(c.a(i, i), 2);
        } else {
          EXPECT_LE(c.a(i, j), 0);
          EXPECT_EQ(c.a(i, j) == 0, c.a(j, i) == 0);
        }
        EXPECT_EQ(c.euler(i, j) + c.euler(j, i), i == j ? 2 * c.d(i) : c.d(i) * c.a(i, j));
      }
    }
    EXPECT_EQ(g, 1) << label;
    EXPECT_EQ(det(a), mpq_class(static_cast<long>(expected_det(c)))) << label;
    // (varpi_k, alpha_i) = d_i delta_ik
    for (int k = 0; k < n; ++k) {
      auto w = c.fundamental_weight(k);
      EXPECT_TRUE(c.in_weight_lattice(w));
      for (int i = 0; i < n; ++i) EXPECT_EQ(c.sym(w, to_lattice(unit_root(n, i))), i == k ? c.d(i) : 0) << label;
    }
  }
}

TEST(Cartan, Bilinearity) {
  std::mt19937 rng(2);
  for (const char* label : {"A2", "B2", "G2", "D4"}) {
    auto c = CartanDatum::parse(label);
    int n = c.rank(), m = c.lattice_index();
    std::uniform_int_distribution<int> coord(-3 * m, 3 * m);
    auto rnd = [&] {
      LatticeVector v(n);
      for (auto& x : v) {
        x = mpq_class(coord(rng), m);
        x.canonicalize();
      }
      return v;
    };
    for (int t = 0; t < 20; ++t) {
      auto x = rnd(), y = rnd(), z = rnd();
      LatticeVector xy(n);
      for (int i = 0; i < n; ++i) xy[i] = x[i] + 2 * y[i];
      EXPECT_EQ(c.euler(xy, z), c.euler(x, z) + 2 * c.euler(y, z));
      EXPECT_EQ(c.euler(z, xy), c.euler(z, x) + 2 * c.euler(z, y));
      EXPECT_EQ(c.sym(x, y), c.sym(y, x));
    }
  }
}

TEST(Cartan, ConjugationExponent) {
  // K_i E_j K_i^{-1} = q_i^{a_ij} E_j needs (alpha_i, alpha_j) = d_i a_ij.
  auto c = CartanDatum::parse("B3");
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) EXPECT_EQ(c.sym(unit_root(3, i), unit_root(3, j)), c.d(i) * c.a(i, j));
}

TEST(Cartan, RootText) {
  EXPECT_EQ(parse_root("2,0,1", 3), (RootVector{2, 0, 1}));
  EXPECT_EQ(format_root({1, 1}), "1,1");
  EXPECT_THROW(parse_root("1,x", 2), std::invalid_argument);
  EXPECT_THROW(parse_root("1", 2), std::invalid_argument);
}

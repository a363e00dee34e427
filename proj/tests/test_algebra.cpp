#include "qtwist/algebra.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace qtwist;

namespace {

LaurentScalar r(Exponent e = 1) { return LaurentScalar::r_power(e); }
LaurentScalar s(Exponent e = 1) { return LaurentScalar::s_power(e); }

struct Fixture {
  CartanDatum cartan;
  SpecPtr spec;
};

Fixture rs(const char* label) {
  auto c = CartanDatum::parse(label);
  return {c, make_rs_spec(c)};
}

Element random_element(const SpecPtr& spec, std::mt19937& rng, int max_len, int terms) {
  int n = spec->rank();
  std::uniform_int_distribution<int> gen(0, n - 1), len(0, max_len), coin(0, 2), tor(-1, 1);
  Element out(spec);
  for (int t = 0; t < terms; ++t) {
    Monomial m = Monomial::unit(n);
    int lf = len(rng), le = len(rng);
    if (lf + le > max_len) lf = max_len - le;
    for (int k = 0; k < lf; ++k) m.f.push_back(gen(rng));
    for (int i = 0; i < n; ++i) {
      if (coin(rng) == 0) m.w[i] = tor(rng);
      if (coin(rng) == 0) m.wp[i] = tor(rng);
    }
    for (int k = 0; k < le; ++k) m.e.push_back(gen(rng));
    out.add(m, Coeff(LaurentScalar::monomial(t + 1, tor(rng), tor(rng))));
  }
  return out;
}

// Kostant partition function over hard-coded positive roots.
int partitions(const std::vector<RootVector>& roots, RootVector beta, std::size_t from = 0) {
  if (is_zero(beta)) return 1;
  int total = 0;
  for (std::size_t k = from; k < roots.size(); ++k) {
    RootVector rest = beta - roots[k];
    if (is_nonnegative(rest)) total += partitions(roots, rest, k);
  }
  return total;
}

}  // namespace

TEST(Algebra, CommutatorRelation) {
  auto [c, spec] = rs("A2");
  Element x = Element::e(spec, 0) * Element::f(spec, 0);
  Element expect = Element::f_word(spec, {0}) * Element::e(spec, 0) +
                   Coeff(1, r() - s()) * (Element::omega(spec, {1, 0}) - Element::omega_prime(spec, {1, 0}));
  EXPECT_EQ(x, expect);
  EXPECT_TRUE((Element::e(spec, 0) * Element::f(spec, 1) - Element::f(spec, 1) * Element::e(spec, 0)).is_zero());
}

TEST(Algebra, TorusCommutation) {
  auto [c, spec] = rs("A2");
  // omega_1 e_2 = s e_2 omega_1
  EXPECT_EQ(Element::omega(spec, {1, 0}) * Element::e(spec, 1),
            Coeff(s()) * (Element::e(spec, 1) * Element::omega(spec, {1, 0})));
  // omega'_1 f_2 = r^{-1} f_2 omega'_1
  EXPECT_EQ(Element::omega_prime(spec, {1, 0}) * Element::f(spec, 1),
            Coeff(r(-1)) * (Element::f(spec, 1) * Element::omega_prime(spec, {1, 0})));
}

TEST(Algebra, RelationsR3R4Generic) {
  for (const char* label : {"A2", "B2", "G2"}) {
    auto [c, spec] = rs(label);
    int n = c.rank();
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        LaurentScalar ew = r(c.euler(j, i)) * s(-c.euler(i, j));
        LaurentScalar ewp = r(-c.euler(i, j)) * s(c.euler(j, i));
        auto wi = Element::omega(spec, unit_root(n, i)), wpi = Element::omega_prime(spec, unit_root(n, i));
        auto ej = Element::e(spec, j), fj = Element::f(spec, j);
        EXPECT_EQ(wi * ej, Coeff(ew) * (ej * wi));
        EXPECT_EQ(wpi * ej, Coeff(ewp) * (ej * wpi));
        EXPECT_EQ(wi * fj, Coeff(ew.inverse()) * (fj * wi));
        EXPECT_EQ(wpi * fj, Coeff(ewp.inverse()) * (fj * wpi));
      }
  }
}

TEST(Algebra, Associativity) {
  std::mt19937 rng(7);
  for (const char* label : {"A2", "B2"}) {
    auto c = CartanDatum::parse(label);
    for (auto spec : {make_rs_spec(c), make_q_spec(c)}) {
      for (int t = 0; t < 12; ++t) {
        Element x = random_element(spec, rng, 2, 2), y = random_element(spec, rng, 2, 2),
                z = random_element(spec, rng, 2, 2);
        EXPECT_EQ(x * (y * z), (x * y) * z) << label << " " << spec->name();
      }
    }
  }
}

TEST(Algebra, SerreExample) {
  auto [c, spec] = rs("A2");
  Element x = Element::e_word(spec, {0, 0, 1});
  Element expect = Coeff(r() + s()) * Element::e_word(spec, {0, 1, 0}) - Coeff(r() * s()) * Element::e_word(spec, {1, 0, 0});
  EXPECT_EQ(serre_normal_form(x, 3), expect);
  EXPECT_EQ(serre_normal_form(Element::e(spec, 0), 1), Element::e(spec, 0));
  EXPECT_THROW(serre_normal_form(x, 2), std::out_of_range);
  auto a1 = make_rs_spec(CartanDatum::parse("A1"));
  Element w = Element::e_word(a1, {0, 0, 0, 0});
  EXPECT_EQ(serre_normal_form(w, 4), w);
}

TEST(Algebra, DisconnectedNodesCommute) {
  auto [c, spec] = rs("A3");
  EXPECT_EQ(serre_normal_form(Element::e_word(spec, {0, 2})), serre_normal_form(Element::e_word(spec, {2, 0})));
  EXPECT_EQ(enumerate_basis(spec, RootVector{1, 0, 1}).size(), 1u);
}

TEST(Algebra, SerreElementsVanish) {
  for (const char* label : {"A2", "B2", "G2", "A3", "D4"}) {
    auto c = CartanDatum::parse(label);
    for (auto spec : {make_rs_spec(c), make_q_spec(c)}) {
      for (int i = 0; i < c.rank(); ++i)
        for (int j = 0; j < c.rank(); ++j) {
          if (i == j) continue;
          for (Side side : {Side::E, Side::F}) {
            Element x(spec);
            for (const auto& [w, k] : spec->serre_element(side, i, j))
              x += Coeff(k) * (side == Side::E ? Element::e_word(spec, w) : Element::f_word(spec, w));
            EXPECT_TRUE(equal_mod_ideal(x, Element(spec))) << label;
          }
        }
    }
  }
}

TEST(Algebra, QSerreIsSymmetricBinomial) {
  for (const char* label : {"A2", "B2", "G2"}) {
    auto c = CartanDatum::parse(label);
    auto spec = make_q_spec(c);
    for (int i = 0; i < c.rank(); ++i)
      for (int j = 0; j < c.rank(); ++j) {
        if (i == j) continue;
        int n = 1 - c.a(i, j);
        auto rel = spec->serre_element(Side::E, i, j);
        LaurentScalar qi = LaurentScalar::q_power(c.d(i));
        for (int k = 0; k <= n; ++k) {
          LaurentScalar expect = quantum_binomial(qi, n, k);
          if (k % 2) expect = -expect;
          EXPECT_EQ(rel[k].second, expect) << label << " k=" << k;
        }
      }
  }
}

TEST(Algebra, SerreProjection) {
  std::mt19937 rng(9);
  auto [c, spec] = rs("B2");
  for (int t = 0; t < 10; ++t) {
    Element x = random_element(spec, rng, 4, 3);
    Element nf = serre_normal_form(x, 4);
    EXPECT_EQ(serre_normal_form(nf, 4), nf);
  }
  // annihilates exactly the relation span
  for (RootVector beta : {RootVector{2, 1}, RootVector{1, 3}, RootVector{2, 2}}) {
    auto red = spec->reduction(Side::E, beta);
    EXPECT_EQ(red->words.size() - red->relation_rank, enumerate_basis(spec, beta).size());
  }
}

TEST(Algebra, GradedDimensions) {
  struct Case {
    const char* label;
    std::vector<RootVector> roots;
  };
  std::vector<Case> cases = {{"A2", {{1, 0}, {0, 1}, {1, 1}}}, {"B2", {{1, 0}, {0, 1}, {1, 1}, {1, 2}}}};
  for (const auto& cs : cases) {
    auto c = CartanDatum::parse(cs.label);
    for (auto spec : {make_rs_spec(c), make_q_spec(c)})
      for (int a = 0; a <= 5; ++a)
        for (int b = 0; a + b <= 5; ++b) {
          RootVector beta{a, b};
          EXPECT_EQ(static_cast<int>(enumerate_basis(spec, beta).size()), partitions(cs.roots, beta))
              << cs.label << " " << spec->name() << " beta=" << format_root(beta);
        }
  }
}

TEST(Algebra, BasisExamples) {
  auto [c, spec] = rs("A2");
  auto b = enumerate_basis(spec, {1, 1});
  ASSERT_EQ(b.size(), 2u);
  EXPECT_EQ(b[0], (Word{0, 1}));
  EXPECT_EQ(b[1], (Word{1, 0}));
  EXPECT_EQ(enumerate_basis(spec, {2, 1}).size(), 2u);
  auto z = enumerate_basis(spec, {0, 0});
  ASSERT_EQ(z.size(), 1u);
  EXPECT_TRUE(z[0].empty());
  EXPECT_FALSE(equal_mod_ideal(Element::e_word(spec, {0, 1}), Element::e_word(spec, {1, 0}), 2));
}

TEST(Algebra, Bidegree) {
  std::mt19937 rng(4);
  auto [c, spec] = rs("A2");
  for (int t = 0; t < 20; ++t) {
    Element x = random_element(spec, rng, 2, 1), y = random_element(spec, rng, 2, 1);
    auto bx = x.bidegree(), by = y.bidegree();
    ASSERT_TRUE(bx && by);
    Element p = x * y;
    if (p.is_zero()) continue;
    auto bp = p.bidegree();
    ASSERT_TRUE(bp);
    EXPECT_EQ(bp->first, bx->first + by->first);
    EXPECT_EQ(bp->second, bx->second + by->second);
  }
}

TEST(Algebra, ParseExamples) {
  auto [c, spec] = rs("A2");
  Element x = parse_element(spec, "e1*f1 - f1*e1");
  EXPECT_EQ(x, Coeff(1, r() - s()) * (Element::omega(spec, {1, 0}) - Element::omega_prime(spec, {1, 0})));
  EXPECT_EQ(parse_element(spec, "w1^-1*w1"), Element(spec, Coeff(1)));
  auto qspec = make_q_spec(c);
  EXPECT_EQ(parse_element(qspec, "e1*e2 - q*e2*e1").size(), 2u);
  EXPECT_EQ(parse_element(spec, "K'2*E1"), Element::omega_prime(spec, {0, 1}) * Element::e(spec, 0));
  EXPECT_THROW(parse_element(spec, "e3"), ParseError);
  EXPECT_THROW(parse_element(spec, "e1 +"), ParseError);
  EXPECT_THROW(parse_element(spec, "e1/e2"), ParseError);
}

TEST(Algebra, FormatRoundTrip) {
  std::mt19937 rng(21);
  for (const char* label : {"A2", "B2"}) {
    auto c = CartanDatum::parse(label);
    for (auto spec : {make_rs_spec(c), make_q_spec(c)})
      for (int t = 0; t < 15; ++t) {
        Element x = random_element(spec, rng, 3, 3) * random_element(spec, rng, 1, 2);
        std::string text = format_element(x);
        EXPECT_EQ(parse_element(spec, text), x) << text;
        EXPECT_EQ(format_element(parse_element(spec, text)), text);
      }
  }
}

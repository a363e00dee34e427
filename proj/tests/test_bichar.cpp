#include "qtwist/bichar.hpp"

#include <gtest/gtest.h>

using namespace qtwist;

namespace {

CartanDatum cd(const char* label) { return CartanDatum::parse(label); }

LaurentScalar mono(Exponent r, Exponent s) { return LaurentScalar::monomial(1, r, s); }

void expect_pass(const Report& r) {
  EXPECT_TRUE(r.passed()) << r.failed << " of " << r.cases << " failed; first: "
                          << (r.failures.empty() ? std::string()
                                                 : r.failures[0].property + " [" + r.failures[0].inputs.back() +
                                                       "] -> " + r.failures[0].residual);
  EXPECT_GT(r.cases, 0u);
}

// Matrix from rows of (r, s) exponent pairs.
using Row = std::vector<std::pair<int, int>>;

}  // namespace

TEST(Bichar, PValues) {
  auto a2 = cd("A2");
  EXPECT_EQ(p_value(a2, 0, 1), mono(Exponent(1, 2), Exponent(1, 2)));
  EXPECT_EQ(p_value(a2, 1, 0), mono(Exponent(-1, 2), Exponent(-1, 2)));
  EXPECT_TRUE(p_value(a2, 0, 0).is_one());
  for (const char* label : {"A3", "B2", "C3", "D4", "G2", "F4"}) {
    auto c = cd(label);
    for (int i = 0; i < c.rank(); ++i)
      for (int j = 0; j < c.rank(); ++j) EXPECT_TRUE((p_value(c, i, j) * p_value(c, j, i)).is_one()) << label;
  }
  Bicharacter z = Bicharacter::square_root(a2, p_table(a2));
  EXPECT_EQ(z(RootVector{1, 0}, RootVector{0, 1}), mono(Exponent(1, 4), Exponent(1, 4)));
}

TEST(Bichar, LatticeExtension) {
  auto a2 = cd("A2");
  Bicharacter z = Bicharacter::square_root(a2, p_table(a2));
  // (2/3 * 2/3 - 1/3 * 1/3) / 4
  EXPECT_EQ(z(a2.fundamental_weight(0), a2.fundamental_weight(1)), mono(Exponent(1, 12), Exponent(1, 12)));
  LatticeVector odd{mpq_class(1, 5), mpq_class(0)};
  EXPECT_THROW(z(odd, LatticeVector{mpq_class(0), mpq_class(1)}), std::domain_error);
}

TEST(Bichar, CircExamples) {
  auto t = standard_twist(cd("A2"));
  auto el = [&](const char* s) { return parse_element(t.base, s); };
  Coeff quarter(mono(Exponent(1, 4), Exponent(1, 4)));
  EXPECT_EQ(circ_multiply(t.zeta, el("K1"), el("E2")), quarter * el("K1*E2"));
  EXPECT_EQ(circ_multiply(t.zeta, el("E1"), el("E2")), quarter * el("E1*E2"));
  EXPECT_EQ(circ_multiply(t.zeta, el("E1"), el("F2")), el("E1*F2"));
  // K_i o E_j = r^{<j,i>} s^{-<i,j>} E_j o K_i, the U_{r,s} constant.
  const CartanDatum& c = t.base->cartan();
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      Element k = Element::omega(t.base, unit_root(2, i)), e = Element::e(t.base, j);
      Coeff m(mono(c.euler(j, i), -c.euler(i, j)));
      EXPECT_EQ(serre_normal_form(circ_multiply(t.zeta, k, e)), serre_normal_form(m * circ_multiply(t.zeta, e, k)));
    }
}

TEST(Bichar, Prop53A2) { expect_pass(verify_bigraded_twist(standard_twist(cd("A2")), 3)); }

TEST(Bichar, Prop53B2) { expect_pass(verify_bigraded_twist(standard_twist(cd("B2")), 2)); }

TEST(Bichar, Prop53G2) { expect_pass(verify_bigraded_twist(standard_twist(cd("G2")), 1)); }

TEST(Bichar, RelationsFailWithoutRescaling) {
  // E o F - F o E keeps the U_q denominator q - q^{-1}.
  auto t = standard_twist(cd("A2"));
  auto check = [&](const BigradedTwist& tw) {
    Relation rel = relation(tw.target, "R5:1,1");
    Element sum(tw.base);
    for (const auto& [c, w] : rel.parts[0]) sum += c * twist_word(tw, w);
    return serre_normal_form(sum);
  };
  EXPECT_TRUE(check(t).is_zero());
  t.f_scale.assign(2, Coeff(1));
  EXPECT_FALSE(check(t).is_zero());
}

TEST(Bichar, PositivePartsA2) { expect_pass(compare_positive_parts(standard_twist(cd("A2")), 4)); }

TEST(Bichar, PositivePartsB2) { expect_pass(compare_positive_parts(standard_twist(cd("B2")), 3)); }

TEST(Bichar, D4Matrices) {
  auto d4 = cd("D4");
  // w_j e_i = M_ij e_i w_j
  std::vector<Row> plain{{{1, -1}, {-1, 0}, {0, 0}, {0, 0}},
                         {{0, 1}, {1, -1}, {-1, 0}, {-1, 0}},
                         {{0, 0}, {0, 1}, {1, -1}, {0, 0}},
                         {{0, 0}, {0, 1}, {0, 0}, {1, -1}}};
  std::vector<Row> primed = plain;
  primed[2][3] = {-1, -1};
  primed[3][2] = {1, 1};
  auto m = relation_constant_matrix(make_rs_spec(d4));
  auto mp = relation_constant_matrix(make_dn_prime_spec(d4));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      EXPECT_EQ(m[i][j], mono(plain[i][j].first, plain[i][j].second)) << i << j;
      EXPECT_EQ(mp[i][j], mono(primed[i][j].first, primed[i][j].second)) << i << j;
    }
  Character p = dn_variant_p(d4);
  EXPECT_EQ(p(2, 3), mono(-1, -1));
  EXPECT_EQ(p(3, 2), mono(1, 1));
  EXPECT_TRUE(p(0, 1).is_one());
}

TEST(Bichar, D4Variant) { expect_pass(verify_dn_variant(cd("D4"), 2)); }

TEST(Bichar, RejectsOtherTypes) {
  EXPECT_THROW(dn_variant_p(cd("A3")), std::invalid_argument);
  EXPECT_THROW(twist_by_name(cd("A2"), "other"), std::invalid_argument);
}

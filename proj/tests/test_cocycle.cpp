#include "qtwist/cocycle.hpp"

#include <gtest/gtest.h>

using namespace qtwist;

namespace {

SpecPtr qspec(const char* label) { return make_q_spec(CartanDatum::parse(label)); }

Monomial toral(int n, const RootVector& w, const RootVector& wp) {
  Monomial m = Monomial::unit(n);
  m.w = w;
  m.wp = wp;
  return m;
}

Coeff mono(Exponent r, Exponent s) { return Coeff(LaurentScalar::monomial(1, r, s)); }

void expect_pass(const Report& r) {
  EXPECT_TRUE(r.passed()) << r.failed << " of " << r.cases << " failed; first: "
                          << (r.failures.empty() ? std::string()
                                                 : r.failures[0].property + " [" + r.failures[0].inputs.back() +
                                                       "] -> " + r.failures[0].residual);
  EXPECT_GT(r.cases, 0u);
}

}  // namespace

TEST(Cocycle, Values) {
  auto spec = qspec("A2");
  ToralCocycle s(spec, CocycleVariant::Sigma);
  EXPECT_EQ(s(toral(2, {1, 0}, {0, 0}), toral(2, {0, 1}, {0, 0})), mono(0, Exponent(1, 2)));
  EXPECT_EQ(s(toral(2, {0, 1}, {0, 0}), toral(2, {1, 0}, {0, 0})), mono(Exponent(-1, 2), 0));
  // K and K' carry the same value.
  EXPECT_EQ(s(toral(2, {0, 0}, {1, 0}), toral(2, {0, 1}, {0, 0})), mono(0, Exponent(1, 2)));
  Monomial e1 = Monomial::unit(2);
  e1.e = {0};
  EXPECT_TRUE(s(e1, toral(2, {0, 1}, {0, 0})).is_zero());
  ToralCocycle sp(spec, CocycleVariant::SigmaPrime);
  // (q/r)^{<1,2>} = (rs)^{1/2}
  EXPECT_EQ(sp(toral(2, {1, 0}, {0, 0}), toral(2, {0, 1}, {0, 0})), mono(Exponent(1, 2), Exponent(1, 2)));
  EXPECT_EQ(sp(toral(2, {1, 0}, {0, 0}), toral(2, {1, 0}, {0, 0})), mono(Exponent(-1, 2), Exponent(-1, 2)));
}

TEST(Cocycle, RejectsRsSpec) {
  EXPECT_THROW(ToralCocycle(make_rs_spec(CartanDatum::parse("A2")), CocycleVariant::Sigma), std::invalid_argument);
}

TEST(Cocycle, TwistedProductExamples) {
  auto spec = qspec("A2");
  ToralCocycle s(spec, CocycleVariant::Sigma);
  auto el = [&](const char* t) { return parse_element(spec, t); };
  EXPECT_EQ(twisted_multiply(s, el("K1"), el("E2")), mono(0, Exponent(1, 2)) * el("K1*E2"));
  Element comm = twisted_multiply(s, el("E1"), el("F1")) - twisted_multiply(s, el("F1"), el("E1"));
  Coeff denom = Coeff(spec->t(0)).inverse();
  EXPECT_EQ(comm, denom * (el("K1") - el("K'1")));
  Element x = el("F2*K1*E1*E2");
  EXPECT_EQ(twisted_multiply(s, Element(spec, Coeff(1)), x), x);
  EXPECT_EQ(twisted_multiply(s, el("K1"), el("K1^-1")), Element(spec, Coeff(1)));
}

TEST(Cocycle, TwistedAntipodeExamples) {
  auto spec = qspec("A2");
  ToralCocycle s(spec, CocycleVariant::Sigma);
  auto el = [&](const char* t) { return parse_element(spec, t); };
  EXPECT_EQ(twisted_antipode(s, el("K1")), el("K1^-1"));
  // sigma(K_1, K_1^-1) = q^-1
  Coeff qinv = mono(Exponent(-1, 2), Exponent(1, 2));
  EXPECT_EQ(twisted_antipode(s, el("E1")), -(qinv * el("K1^-1*E1")));
  EXPECT_EQ(twisted_antipode_printed(s, el("E1")), -(qinv.inverse() * el("K1^-1*E1")));
  EXPECT_EQ(twisted_antipode(s, Element(spec, Coeff(1))), Element(spec, Coeff(1)));
}

TEST(Cocycle, ConditionsSigma) { expect_pass(verify_cocycle_conditions(ToralCocycle(qspec("A2"), CocycleVariant::Sigma), 2)); }

TEST(Cocycle, ConditionsSigmaPrime) {
  expect_pass(verify_cocycle_conditions(ToralCocycle(qspec("A2"), CocycleVariant::SigmaPrime), 2));
}

TEST(Cocycle, PhiA2) { expect_pass(verify_phi_isomorphism(ToralCocycle(qspec("A2"), CocycleVariant::Sigma), 3)); }

TEST(Cocycle, PhiA2SigmaPrime) {
  expect_pass(verify_phi_isomorphism(ToralCocycle(qspec("A2"), CocycleVariant::SigmaPrime), 2));
}

TEST(Cocycle, PhiB2) { expect_pass(verify_phi_isomorphism(ToralCocycle(qspec("B2"), CocycleVariant::Sigma), 2)); }

TEST(Cocycle, PhiG2) { expect_pass(verify_phi_isomorphism(ToralCocycle(qspec("G2"), CocycleVariant::Sigma), 1)); }

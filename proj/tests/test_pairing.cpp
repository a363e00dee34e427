#include "qtwist/pairing.hpp"

#include "qtwist/deriv.hpp"

#include <gtest/gtest.h>

using namespace qtwist;

namespace {

LaurentScalar mono(Exponent r, Exponent s) { return LaurentScalar::monomial(1, r, s); }

// <F_w, E_u> on free words: peel the first letter of w against each
// occurrence in u, weighted by the torus value on the prefix.
Coeff word_oracle(const CartanDatum& c, bool q, const Word& w, const Word& u) {
  if (w.size() != u.size()) return Coeff();
  if (w.empty()) return Coeff(1);
  int n = c.rank(), i = w[0];
  LaurentScalar qi = LaurentScalar::q_power(c.d(i));
  Coeff kappa = Coeff(qi.inverse() - qi).inverse();
  Word rest_w(w.begin() + 1, w.end());
  Coeff out;
  for (std::size_t k = 0; k < u.size(); ++k) {
    if (u[k] != i) continue;
    RootVector g = word_weight(Word(u.begin(), u.begin() + static_cast<long>(k)), n), a = unit_root(n, i);
    LaurentScalar t = q ? LaurentScalar::q_power(c.sym(a, g)) : mono(c.euler(a, g), -c.euler(g, a));
    Word rest_u = u;
    rest_u.erase(rest_u.begin() + static_cast<long>(k));
    out += kappa * Coeff(t) * word_oracle(c, q, rest_w, rest_u);
  }
  return out;
}

void expect_pass(const Report& r) {
  EXPECT_TRUE(r.passed()) << r.failed << " of " << r.cases << " failed; first: "
                          << (r.failures.empty() ? std::string()
                                                 : r.failures[0].property + " [" + r.failures[0].inputs.back() +
                                                       "] -> " + r.failures[0].residual);
  EXPECT_GT(r.cases, 0u);
}

}  // namespace

TEST(Pairing, BaseValues) {
  auto a2 = CartanDatum::parse("A2");
  auto q = make_q_spec(a2), rs = make_rs_spec(a2);
  Pairing pq(PairingKind::Q, q);
  LaurentScalar q1 = LaurentScalar::q_power(1);
  EXPECT_EQ(pq(parse_element(q, "F1"), parse_element(q, "E1")), Coeff(q1.inverse() - q1).inverse());
  EXPECT_TRUE(pq(parse_element(q, "F1"), parse_element(q, "E2")).is_zero());
  Element one(rs, Coeff(1));
  for (PairingKind k : {PairingKind::QZeta, PairingKind::RS}) {
    Pairing p(k, rs);
    EXPECT_EQ(p(parse_element(rs, "w'1"), parse_element(rs, "w2")), Coeff(mono(-1, 0)));
    EXPECT_EQ(p(one, one), Coeff(1));
    EXPECT_TRUE(p(one, parse_element(rs, "e1*e2")).is_zero());
  }
  EXPECT_EQ(pq(parse_element(q, "K'1"), parse_element(q, "K2")), Coeff(LaurentScalar::q_power(-1)));
}

TEST(Pairing, RejectsOutsideBorel) {
  auto rs = make_rs_spec(CartanDatum::parse("A2"));
  Pairing p(PairingKind::RS, rs);
  EXPECT_THROW(p(parse_element(rs, "e1"), parse_element(rs, "e1")), std::invalid_argument);
  EXPECT_THROW(p(parse_element(rs, "f1"), parse_element(rs, "f1")), std::invalid_argument);
  EXPECT_THROW(p(parse_element(rs, "w1"), parse_element(rs, "w1")), std::invalid_argument);
  EXPECT_THROW(Pairing(PairingKind::Q, rs), std::invalid_argument);
  EXPECT_THROW(parse_pairing_kind("other"), std::invalid_argument);
}

TEST(Pairing, GramMatchesWordOracle) {
  for (auto [label, bound] : {std::pair{"A2", 4}, std::pair{"B2", 3}}) {
    auto c = CartanDatum::parse(label);
    for (bool q : {true, false}) {
      auto spec = q ? make_q_spec(c) : make_rs_spec(c);
      Pairing p(q ? PairingKind::Q : PairingKind::RS, spec);
      for (int h = 1; h <= bound; ++h)
        for (const auto& beta : degrees_of_height(2, h)) {
          auto fs = basis_words(spec, Side::F, beta), es = basis_words(spec, Side::E, beta);
          CoeffMatrix g = gram_matrix(p, beta, bound);
          for (std::size_t a = 0; a < fs.size(); ++a)
            for (std::size_t b = 0; b < es.size(); ++b)
              EXPECT_EQ(g(a, b), word_oracle(c, q, fs[a], es[b])) << label << " " << format_root(beta);
        }
    }
  }
}

TEST(Pairing, GramExamples) {
  auto a2 = CartanDatum::parse("A2");
  auto rs = make_rs_spec(a2);
  Pairing p(PairingKind::RS, rs);
  CoeffMatrix g1 = gram_matrix(p, {1, 0}, 1);
  ASSERT_EQ(g1.rows(), 1u);
  EXPECT_EQ(g1(0, 0), p.kappa(0));
  CoeffMatrix g11 = gram_matrix(p, {1, 1}, 2);
  EXPECT_EQ(g11.rows(), 2u);
  EXPECT_EQ(rank(g11), 2u);
  EXPECT_EQ(gram_matrix(p, {2, 0}, 2).rows(), 1u);
  EXPECT_EQ(gram_rank(p, {2, 0}, 2), 1u);
  EXPECT_THROW(gram_matrix(p, {2, 1}, 2), std::out_of_range);
}

TEST(Pairing, NondegenerateUpToHeight) {
  for (auto [label, bound] : {std::pair{"A2", 4}, std::pair{"B2", 3}}) {
    auto c = CartanDatum::parse(label);
    auto rs = make_rs_spec(c), q = make_q_spec(c);
    for (int h = 1; h <= bound; ++h)
      for (const auto& beta : degrees_of_height(2, h)) {
        std::size_t dim = enumerate_basis(rs, beta).size();
        EXPECT_EQ(gram_rank(*pairing_for(PairingKind::Q, q), beta, bound), dim);
        EXPECT_EQ(gram_rank(*pairing_for(PairingKind::QZeta, rs), beta, bound), dim);
        EXPECT_EQ(gram_rank(*pairing_for(PairingKind::RS, rs), beta, bound), dim);
      }
  }
}

TEST(Pairing, AdjointExample) {
  auto rs = make_rs_spec(CartanDatum::parse("A2"));
  Pairing p(PairingKind::RS, rs);
  Element x = parse_element(rs, "e1*e2");
  Coeff lhs = p(parse_element(rs, "f1*f2"), x);
  Coeff rhs = p.kappa(0) * p(parse_element(rs, "f2"), skew_derivative({Derivation::LeftHat, 0}, x));
  EXPECT_EQ(lhs, rhs);
  auto props = pairing_properties();
  for (const auto& pr : props) {
    if (pr.name == "pairing-adjoint-left") EXPECT_EQ(pr.eval(rs, {"rs", "1", "f2", "e1*e2"}), "0");
    // without kappa_i and the hat normalization the identity is off by -(r s)^{1/2}
    if (pr.name == "pairing-adjoint-left-printed") EXPECT_NE(pr.eval(rs, {"rs", "1", "1", "e1"}), "0");
  }
}

TEST(Pairing, VerifyA2) { expect_pass(verify_pairing_properties(CartanDatum::parse("A2"), 3)); }

TEST(Pairing, VerifyB2) { expect_pass(verify_pairing_properties(CartanDatum::parse("B2"), 2)); }

#include "qtwist/hopf.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace qtwist;

namespace {

Element random_homogeneous(const SpecPtr& spec, std::mt19937& rng, int max_len) {
  int n = spec->rank();
  std::uniform_int_distribution<int> gen(0, n - 1), len(0, max_len), tor(-1, 1);
  Monomial m = Monomial::unit(n);
  int lf = len(rng), le = len(rng);
  if (lf + le > max_len) lf = max_len - le;
  for (int k = 0; k < lf; ++k) m.f.push_back(gen(rng));
  for (int k = 0; k < n; ++k) {
    m.w[k] = tor(rng);
    m.wp[k] = tor(rng);
  }
  for (int k = 0; k < le; ++k) m.e.push_back(gen(rng));
  Element x(spec, m);
  // A second word with the same letters keeps x homogeneous.
  std::shuffle(m.e.begin(), m.e.end(), rng);
  std::shuffle(m.f.begin(), m.f.end(), rng);
  x += Coeff(LaurentScalar::monomial(2, tor(rng), tor(rng))) * Element(spec, m);
  return x;
}

Element straighten(const SpecPtr& spec, const char* text) { return parse_element(spec, text); }

}  // namespace

TEST(Hopf, CoproductOfWordExample) {
  auto spec = make_rs_spec(CartanDatum::parse("A2"));
  TensorElement got = coproduct(parse_element(spec, "e1*e2"));
  auto one = Element(spec, Coeff(1));
  TensorElement expect = TensorElement::pure({straighten(spec, "e1*e2"), one}) +
                         TensorElement::pure({straighten(spec, "e1*w2"), straighten(spec, "e2")}) +
                         TensorElement::pure({straighten(spec, "s*e2*w1"), straighten(spec, "e1")}) +
                         TensorElement::pure({straighten(spec, "w1*w2"), straighten(spec, "e1*e2")});
  EXPECT_EQ(got, expect);
  EXPECT_TRUE(coproduct_respects_grading(parse_element(spec, "e1*e2"), got));
}

TEST(Hopf, GroupLikeAndIterated) {
  auto c = CartanDatum::parse("A2");
  auto rs = make_rs_spec(c);
  auto w = parse_element(rs, "w1");
  EXPECT_EQ(coproduct(w), TensorElement::pure({w, w}));
  auto q = make_q_spec(c);
  auto E = parse_element(q, "E1"), K = parse_element(q, "K1"), one = Element(q, Coeff(1));
  TensorElement expect =
      TensorElement::pure({E, one, one}) + TensorElement::pure({K, E, one}) + TensorElement::pure({K, K, E});
  EXPECT_EQ(coproduct(E, 3), expect);
}

TEST(Hopf, Counit) {
  auto spec = make_rs_spec(CartanDatum::parse("A2"));
  EXPECT_TRUE(counit(parse_element(spec, "e1")).is_zero());
  EXPECT_TRUE(counit(parse_element(spec, "w1*w'2^-1")).is_one());
  EXPECT_TRUE(counit(parse_element(spec, "e1*f1 - f1*e1")).is_zero());
  EXPECT_TRUE(counit(parse_element(spec, "e1*f1")).is_zero());
}

TEST(Hopf, Antipode) {
  auto spec = make_rs_spec(CartanDatum::parse("A2"));
  EXPECT_EQ(antipode(parse_element(spec, "e1")), parse_element(spec, "-w1^-1*e1"));
  EXPECT_EQ(antipode(parse_element(spec, "w1")), parse_element(spec, "w1^-1"));
  EXPECT_EQ(antipode(parse_element(spec, "f2")), parse_element(spec, "-f2*w'2^-1"));
  EXPECT_EQ(antipode(parse_element(spec, "e1*e2")), antipode(parse_element(spec, "e2")) * antipode(parse_element(spec, "e1")));
}

TEST(Hopf, AntipodeOnGenerator) {
  auto spec = make_rs_spec(CartanDatum::parse("A2"));
  Element e1 = parse_element(spec, "e1");
  Element lhs = multiply_legs(map_leg(coproduct(e1), 0, [&](const Monomial& m) { return antipode(spec, m); }));
  EXPECT_TRUE(lhs.is_zero());
}

TEST(Hopf, Axioms) {
  std::mt19937 rng(13);
  for (const char* label : {"A2", "B2"}) {
    auto c = CartanDatum::parse(label);
    for (auto spec : {make_rs_spec(c), make_q_spec(c)}) {
      for (int t = 0; t < 8; ++t) {
        Element x = random_homogeneous(spec, rng, 3);
        TensorElement d = coproduct(x);
        EXPECT_TRUE(coproduct_respects_grading(x, d));
        // coassociativity: left-nested vs right-nested
        TensorElement right(spec, 3);
        for (const auto& [tt, cc] : d.terms()) {
          TensorElement d2 = coproduct(spec, tt[1]);
          for (const auto& [u, v] : d2.terms()) right.add({tt[0], u[0], u[1]}, cc * v);
        }
        EXPECT_EQ(tensor_normal_form(coproduct(x, 3)), tensor_normal_form(right));
        // counit
        Element l1(spec), l2(spec);
        for (const auto& [tt, cc] : d.terms()) {
          l1 += (cc * counit(tt[0])) * Element(spec, tt[1]);
          l2 += (cc * counit(tt[1])) * Element(spec, tt[0]);
        }
        EXPECT_EQ(l1, x);
        EXPECT_EQ(l2, x);
        // antipode
        Element eps = Element(spec, counit(x));
        auto S = [&](const Monomial& m) { return antipode(spec, m); };
        EXPECT_TRUE(equal_mod_ideal(multiply_legs(map_leg(d, 0, S)), eps));
        EXPECT_TRUE(equal_mod_ideal(multiply_legs(map_leg(d, 1, S)), eps));
        // S(H_{a,b}) in H_{b,a}
        auto bd = x.bidegree();
        auto sb = antipode(x).bidegree();
        ASSERT_TRUE(bd && sb);
        EXPECT_EQ(sb->first, bd->second);
        EXPECT_EQ(sb->second, bd->first);
      }
    }
  }
}

TEST(Hopf, CoproductIsAlgebraMap) {
  std::mt19937 rng(19);
  for (const char* label : {"A2", "B2"}) {
    auto c = CartanDatum::parse(label);
    for (auto spec : {make_rs_spec(c), make_q_spec(c)})
      for (int t = 0; t < 6; ++t) {
        Element x = random_homogeneous(spec, rng, 2), y = random_homogeneous(spec, rng, 2);
        EXPECT_EQ(tensor_normal_form(coproduct(x * y)), tensor_normal_form(coproduct(x) * coproduct(y)));
      }
  }
}

TEST(Hopf, VerifyRandomSuites) {
  for (const char* label : {"A2", "B2"}) {
    auto c = CartanDatum::parse(label);
    for (auto spec : {make_rs_spec(c), make_q_spec(c)}) {
      Report r = verify_hopf_axioms(spec, 3, 25, 5);
      EXPECT_TRUE(r.passed()) << label << " " << spec->name() << " "
                              << (r.failures.empty() ? "" : r.failures[0].property + " " + r.failures[0].inputs[0]);
      EXPECT_EQ(r.cases, 1u + 25u * 5u);
    }
  }
}

TEST(Hopf, RandomElementsAreReproducible) {
  auto spec = make_rs_spec(CartanDatum::parse("A2"));
  std::uint64_t a = 42, b = 42;
  for (int t = 0; t < 5; ++t) {
    Element x = random_homogeneous(spec, 3, a);
    EXPECT_EQ(x, random_homogeneous(spec, 3, b));
    EXPECT_TRUE(x.bidegree().has_value());
    EXPECT_EQ(parse_element(spec, format_element(x)), x);
  }
  EXPECT_THROW(verify_hopf_axioms(spec, 0, 5, 1), std::invalid_argument);
}

// Hopf structure: coproduct, counit, antipode on normal-ordered elements.
#pragma once

#include "qtwist/algebra.hpp"
#include "qtwist/property.hpp"
#include "qtwist/report.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace qtwist {

using MonomialTuple = std::vector<Monomial>;

class TensorElement {
 public:
  using Terms = std::map<MonomialTuple, Coeff>;

  TensorElement(SpecPtr spec, int legs) : spec_(std::move(spec)), legs_(legs) {}
  /// x_1 (x) x_2 (x) ... for elements over one spec.
  static TensorElement pure(const std::vector<Element>& factors);

  const SpecPtr& spec() const { return spec_; }
  int legs() const { return legs_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(const MonomialTuple& t, const Coeff& c);
  TensorElement& operator+=(const TensorElement& o);
  TensorElement& operator-=(const TensorElement& o);
  friend TensorElement operator+(TensorElement a, const TensorElement& b) { return a += b; }
  friend TensorElement operator-(TensorElement a, const TensorElement& b) { return a -= b; }
  friend TensorElement operator*(const Coeff& c, TensorElement x);
  /// Legwise product.
  friend TensorElement operator*(const TensorElement& a, const TensorElement& b);
  friend bool operator==(const TensorElement& a, const TensorElement& b) { return a.terms_ == b.terms_; }

  std::string str() const;

 private:
  SpecPtr spec_;
  int legs_;
  Terms terms_;
};

/// n-fold coproduct, left nested: Delta_n = (Delta (x) id ...) Delta_{n-1}.
TensorElement coproduct(const Element& x, int n = 2);
TensorElement coproduct(const SpecPtr& spec, const Monomial& m, int n = 2);
Coeff counit(const Element& x);
Coeff counit(const Monomial& m);
Element antipode(const Element& x);
Element antipode(const SpecPtr& spec, const Monomial& m);

/// Applies a linear map to one leg.
TensorElement map_leg(const TensorElement& t, int leg, const std::function<Element(const Monomial&)>& f);
/// Multiplies all legs together in order.
Element multiply_legs(const TensorElement& t);
/// Serre normal form on every leg.
TensorElement tensor_normal_form(const TensorElement& t);

/// Every term of Delta(x) for x in H_{a,b} lies in H_{a,g} (x) H_{-g,b}.
bool coproduct_respects_grading(const Element& x, const TensorElement& delta);

/// hopf-coassoc {x}, hopf-counit {x}, hopf-antipode {x}, hopf-grading {x},
/// hopf-multiplicative {x, y}.
std::vector<Property> hopf_properties();

/// Random homogeneous elements of degree <= deg_bound (a word and a
/// reshuffle of it with random torus factors), reproducible from seed.
Element random_homogeneous(const SpecPtr& spec, int deg_bound, std::uint64_t& state);

/// Coassociativity, counit and antipode laws, grading of Delta and S, and
/// multiplicativity of Delta on `trials` random elements.
Report verify_hopf_axioms(const SpecPtr& spec, int deg_bound, int trials, std::uint64_t seed);

}  // namespace qtwist

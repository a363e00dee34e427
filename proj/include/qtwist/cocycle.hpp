// Toral Hopf 2-cocycles on U_q and the deformed product and antipode.
#pragma once

#include "qtwist/algebra.hpp"
#include "qtwist/hopf.hpp"
#include "qtwist/property.hpp"
#include "qtwist/relations.hpp"
#include "qtwist/report.hpp"

#include <string>
#include <vector>

namespace qtwist {

enum class CocycleVariant { Sigma, SigmaPrime };

std::string variant_name(CocycleVariant v);
/// "sigma" or "sigma-prime".
CocycleVariant parse_variant(const std::string& name);

/// sigma(K_mu K'_nu, K_la K'_rho) depends on mu+nu and la+rho only; zero
/// unless both arguments are toral.
///   Sigma:      r^{<b,a>/2} s^{-<a,b>/2}
///   SigmaPrime: (q/r)^{<a,b>}
class ToralCocycle {
 public:
  /// `spec` must be a U_q spec.
  ToralCocycle(SpecPtr spec, CocycleVariant variant);

  const SpecPtr& spec() const { return spec_; }
  CocycleVariant variant() const { return variant_; }

  LaurentScalar on_lattice(const RootVector& a, const RootVector& b) const;
  Coeff operator()(const Monomial& x, const Monomial& y) const;
  /// Pointwise inverse on torals, zero elsewhere.
  Coeff inverse(const Monomial& x, const Monomial& y) const;
  Coeff operator()(const Element& x, const Element& y) const;
  Coeff inverse(const Element& x, const Element& y) const;

 private:
  SpecPtr spec_;
  CocycleVariant variant_;
};

/// m^sigma(x (x) y) = sum sigma(x1, y1) x2 y2 sigma^{-1}(x3, y3), Serre-reduced.
Element twisted_multiply(const ToralCocycle& c, const Element& x, const Element& y);
/// S^sigma(x) = sum sigma(x1, S x2) S(x3) sigma^{-1}(S x4, x5).
Element twisted_antipode(const ToralCocycle& c, const Element& x);
/// The same sum with sigma and sigma^{-1} exchanged; not an antipode for m^sigma.
Element twisted_antipode_printed(const ToralCocycle& c, const Element& x);

/// Image of a U_{r,s} generator: e -> E, f -> (s_i q_i)^{-1} F, w -> K, w' -> K'.
Element phi(const ToralCocycle& c, const Generator& g);
/// Product of phi-images in (U_q, *).
Element phi_word(const ToralCocycle& c, const GeneratorWord& w);

std::vector<Property> cocycle_properties();

Report verify_cocycle_conditions(const ToralCocycle& c, int deg_bound);
/// (R1)-(R7) of U_{r,s} through phi (always in full), plus the Hopf
/// structure of (U_q, *, Delta, eps, S^sigma) on elements of degree <= deg_bound.
Report verify_phi_isomorphism(const ToralCocycle& c, int deg_bound);

}  // namespace qtwist

// Finite-dimensional weight modules: highest-weight quotients of Verma
// modules, tensor products, the zeta-twist, the tensor isomorphism xi and a
// truncated quasi-R-matrix braiding.
#pragma once

#include "qtwist/algebra.hpp"
#include "qtwist/bichar.hpp"
#include "qtwist/linalg.hpp"
#include "qtwist/property.hpp"
#include "qtwist/relations.hpp"
#include "qtwist/report.hpp"

#include <memory>
#include <utility>
#include <string>
#include <vector>

namespace qtwist {

struct WeightModule {
  SpecPtr spec;         // acting algebra (U_q, or U_{r,s} for twisted modules)
  std::string algebra;  // "q", "rs" or "q_zeta"
  std::vector<std::string> labels;
  std::vector<LatticeVector> weights;
  std::vector<LatticeVector> tops;  // wt(V) lies below one of these
  std::vector<CoeffMatrix> e, f;
  std::vector<std::vector<Coeff>> omega, omega_prime;  // [i][basis vector]

  std::size_t dim() const { return weights.size(); }
};

/// Dynkin labels from "0", "w2", "2w1+w2".
std::vector<int> parse_highest_weight(const CartanDatum& cartan, const std::string& text);

/// L(lambda) over U_q. Throws std::runtime_error ("increase cap") when the
/// module does not close within height_cap.
WeightModule build_highest_weight_module(const CartanDatum& cartan, const std::vector<int>& labels, int height_cap);

/// Action through Delta(e) = e (x) 1 + w (x) e, Delta(f) = 1 (x) f + f (x) w'.
WeightModule tensor_modules(const WeightModule& v, const WeightModule& w);

/// Matrix of a generator; words act as the product of their letters.
CoeffMatrix act(const WeightModule& m, const Generator& g);
CoeffMatrix act(const WeightModule& m, const GeneratorWord& w);

/// Residual of one defining relation of the acting algebra.
std::string module_relation_residual(const WeightModule& m, const std::string& relation_id);

/// x ._zeta v = zeta(a - b, lambda) zeta(a, b) x.v for x of bidegree (a, b),
/// presented as a U_{r,s}-module through e -> E, f -> (s_i q_i)^{-1} F.
WeightModule twist_module(const WeightModule& v, const BigradedTwist& t);

/// xi : z(V (x) W) -> z(V) (x) z(W), v (x) v' -> zeta(mu', mu) v (x) v'.
CoeffMatrix xi_iso(const WeightModule& v, const WeightModule& w, const Bicharacter& zeta);

/// Theta_beta = sum (G_beta^{-1})_{ba} F_a (x) E_b over the Gram matrix of <,>_q.
struct ThetaTerm {
  RootVector beta;
  Word f, e;
  Coeff c;
};
std::vector<ThetaTerm> compute_theta(const CartanDatum& cartan, int height_cap);

/// Theta o Pi o tau : V (x) W -> W (x) V, Pi = q^{-(wt w, wt v)}, Theta on W (x) V.
/// Throws std::runtime_error ("increase cap") when the cap is below the module depth.
CoeffMatrix braiding(const WeightModule& v, const WeightModule& w, int height_cap);
/// xi_{W,V} o R^q_{V,W} o xi_{V,W}^{-1} : z(V) (x) z(W) -> z(W) (x) z(V).
CoeffMatrix twisted_braiding(const WeightModule& v, const WeightModule& w, const Bicharacter& zeta, int height_cap);

/// Modules named by expressions: weights ("w1", "0", "w1+w2"), tensor
/// products with '*', and z(...) for the zeta-twist of U_q-modules.
std::shared_ptr<const WeightModule> module_by_expression(const CartanDatum& cartan, const std::string& text,
                                                         int height_cap);

/// Basis of the U-module endomorphisms of m.
std::vector<CoeffMatrix> module_endomorphisms(const WeightModule& m);

/// Distinct eigenvalues with multiplicities at r = r_value, s = s_value.
/// Throws std::runtime_error unless the specialized matrix is diagonalizable
/// with rational eigenvalues and a minimal polynomial of degree at most 2.
std::vector<std::pair<mpq_class, std::size_t>> eigen_multiplicities(const CoeffMatrix& m, const mpq_class& r_value,
                                                                    const mpq_class& s_value);

std::vector<Property> module_properties();

/// Pairs from `samples`, and the triple of the first sample, at height_cap.
Report verify_category_equivalence(const CartanDatum& cartan, const std::vector<std::string>& samples, int height_cap);

}  // namespace qtwist

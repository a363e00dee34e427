// Bigraded twists: skew bicharacters zeta on Q, the product
// a o b = zeta(al, al') zeta(be, be')^{-1} ab, and the comparisons it enables.
#pragma once

#include "qtwist/algebra.hpp"
#include "qtwist/property.hpp"
#include "qtwist/relations.hpp"
#include "qtwist/report.hpp"

#include <string>
#include <utility>
#include <vector>

namespace qtwist {

using Bidegree = std::pair<RootVector, RootVector>;

class Bicharacter {
 public:
  /// zeta(alpha_i, alpha_j) = r^{table.r(i,j)} s^{table.s(i,j)}.
  Bicharacter(CartanDatum cartan, Character table) : cartan_(std::move(cartan)), table_(std::move(table)) {}
  /// zeta = p^{1/2} on simple roots (positive branch).
  static Bicharacter square_root(const CartanDatum& cartan, const Character& p);

  const CartanDatum& cartan() const { return cartan_; }
  const Character& table() const { return table_; }

  LaurentScalar operator()(const RootVector& mu, const RootVector& nu) const;
  /// Bimultiplicative extension to the weight lattice; throws
  /// std::domain_error when an exponent leaves the 1/(4m) lattice.
  LaurentScalar operator()(const LatticeVector& mu, const LatticeVector& nu) const;
  /// zeta~((a, b), (a', b')) = zeta(a, a') zeta(b, b')^{-1}.
  LaurentScalar tilde(const Bidegree& g, const Bidegree& h) const;

 private:
  CartanDatum cartan_;
  Character table_;
};

/// p_ij = r^{<j,i>} s^{-<i,j>} q^{-d_i a_ij}.
Character p_table(const CartanDatum& cartan);
LaurentScalar p_value(const CartanDatum& cartan, int i, int j);
/// D_n: p_ij = (rs)^{delta_{i,n} delta_{j,n-1} - delta_{i,n-1} delta_{j,n}}.
Character dn_variant_p(const CartanDatum& cartan);
/// U'_{r,s}(D_n): the Euler table with <n-1, n> = -1 and <n, n-1> = 1.
SpecPtr make_dn_prime_spec(const CartanDatum& cartan);

/// M_ij with w_j e_i = M_ij e_i w_j.
std::vector<std::vector<LaurentScalar>> relation_constant_matrix(const SpecPtr& spec);

/// A twist of `base` by zeta realising `target`; generators map
/// e -> E, f -> f_scale_i F, w -> K, w' -> K'.
struct BigradedTwist {
  std::string name;
  SpecPtr base, target;
  Bicharacter zeta;
  std::vector<Coeff> f_scale;
};

/// U_q twisted by p^{1/2} of p_table, realising U_{r,s}.
BigradedTwist standard_twist(const CartanDatum& cartan);
/// U'_{r,s}(D_n) twisted by the D_n p-table, realising U_{r,s}(D_n).
BigradedTwist dn_twist(const CartanDatum& cartan);
/// "standard" or "dn".
BigradedTwist twist_by_name(const CartanDatum& cartan, const std::string& name);

Element circ_multiply(const Bicharacter& zeta, const Element& x, const Element& y);
Element twist_generator(const BigradedTwist& t, const Generator& g);
/// o-product of the generator images, left to right.
Element twist_word(const BigradedTwist& t, const GeneratorWord& w);

std::vector<Property> bichar_properties();

Report verify_bigraded_twist(const BigradedTwist& t, int deg_bound);
Report compare_positive_parts(const BigradedTwist& t, int deg_bound);
/// The two constant matrices, the p-table relation between them, and the
/// twist checks for the D_n pair.
Report verify_dn_variant(const CartanDatum& cartan, int deg_bound);

}  // namespace qtwist

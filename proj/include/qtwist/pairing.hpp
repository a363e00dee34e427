// Skew Hopf pairings between the Borel halves U^{<=0} x U^{>=0}, computed by
// the recursion <y, x1 x2> = sum <y(1), x2><y(2), x1>, <y1 y2, x> = sum <y1, x(1)><y2, x(2)>.
#pragma once

#include "qtwist/algebra.hpp"
#include "qtwist/linalg.hpp"
#include "qtwist/property.hpp"
#include "qtwist/report.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

namespace qtwist {

enum class PairingKind { Q, QZeta, RS };

struct BigradedTwist;

std::string pairing_kind_name(PairingKind k);
PairingKind parse_pairing_kind(const std::string& name);

class Pairing {
 public:
  /// Q needs a U_q spec; RS and QZeta take U_{r,s} arguments.
  Pairing(PairingKind kind, SpecPtr spec);

  PairingKind kind() const { return kind_; }
  const SpecPtr& spec() const { return spec_; }

  /// y must lie in U^{<=0} (f-words times w'), x in U^{>=0} (w times e-words);
  /// std::invalid_argument otherwise.
  Coeff operator()(const Element& y, const Element& x) const;
  Coeff operator()(const Monomial& y, const Monomial& x) const;

  /// <f_i, e_i>.
  Coeff kappa(int i) const;

 private:
  Coeff direct(const Monomial& y, const Monomial& x) const;
  LaurentScalar toral(const RootVector& mu, const RootVector& nu) const;

  PairingKind kind_;
  SpecPtr spec_;
  std::shared_ptr<const Pairing> inner_;  // <,>_q behind q_zeta
  std::shared_ptr<const BigradedTwist> twist_;
  mutable std::mutex mu_;
  mutable std::map<std::pair<Monomial, Monomial>, Coeff> memo_;
};

/// Shared instance per (kind, spec).
std::shared_ptr<const Pairing> pairing_for(PairingKind kind, const SpecPtr& spec);

/// Basis words of U^{+}_beta (Side::E) or U^{-}_{-beta} (Side::F).
std::vector<Word> basis_words(const SpecPtr& spec, Side side, const RootVector& beta);

/// Rows: F-basis words, columns: E-basis words of degree beta.
CoeffMatrix gram_matrix(const Pairing& p, const RootVector& beta, int deg_bound);
std::size_t gram_rank(const Pairing& p, const RootVector& beta, int deg_bound);

std::vector<Property> pairing_properties();

Report verify_pairing_properties(const CartanDatum& cartan, int deg_bound);
/// Gram rank equals the graded dimension for every degree up to deg_bound, all kinds.
Report verify_gram_ranks(const CartanDatum& cartan, int deg_bound);

}  // namespace qtwist

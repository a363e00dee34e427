// Skew derivations of U^+ and the module-algebra action of U on U^+.
#pragma once

#include "qtwist/algebra.hpp"
#include "qtwist/property.hpp"
#include "qtwist/relations.hpp"
#include "qtwist/report.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace qtwist {

enum class Derivation {
  RightHat,  // Delta(x) = x (x) 1 + sum d^_i(x) w_i (x) e_i + ...
  LeftHat,   // Delta(x) = w_b (x) x + sum e_i w_{b-a_i} (x) _id^(x) + ...
  Right,     // d^_i / (r_i - s_i)
  Left,
  BarRight,  // weight prefactor times Left
  BarLeft,   // weight prefactor times Right
};

struct DerivationKind {
  Derivation tag;
  int i;
};

std::string derivation_tag_name(Derivation d);
Derivation parse_derivation_tag(const std::string& name);

/// Degree of a nonzero homogeneous element of U^+; nullopt for zero.
/// Throws std::invalid_argument for anything else.
std::optional<RootVector> positive_degree(const Element& x);

/// Reads the derivation off the coproduct.
Element skew_derivative(DerivationKind k, const Element& x);
/// Same map via the word-by-word Leibniz expansion.
Element skew_derivative_leibniz(DerivationKind k, const Element& x);
/// ops[0](ops[1](...ops.back()(x))).
Element apply_derivations(const std::vector<DerivationKind>& ops, const Element& x);

/// h |> x for a single generator.
Element module_action(const SpecPtr& spec, const Generator& g, const Element& x);
/// Generator words act right to left.
Element module_action(const SpecPtr& spec, const GeneratorWord& w, const Element& x);
Element module_action(const Element& h, const Element& x);

std::vector<Property> derivation_properties();
std::vector<Property> module_algebra_properties();

Report verify_derivation_identities(const SpecPtr& spec, int deg_bound);
Report verify_module_algebra(const SpecPtr& spec, int deg_bound, int trials, std::uint64_t seed);

}  // namespace qtwist

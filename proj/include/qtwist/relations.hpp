// Defining relations (R1)-(R7) as formal sums of generator words, so they
// can be evaluated in any representation or deformed product.
#pragma once

#include "qtwist/algebra.hpp"

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qtwist {

struct Generator {
  enum class Kind { E, F, Omega, OmegaPrime };
  Kind kind;
  int i = 0;       // for E, F
  RootVector mu;   // for Omega, OmegaPrime

  static Generator e(int i) { return {Kind::E, i, {}}; }
  static Generator f(int i) { return {Kind::F, i, {}}; }
  static Generator omega(RootVector mu) { return {Kind::Omega, 0, std::move(mu)}; }
  static Generator omega_prime(RootVector mu) { return {Kind::OmegaPrime, 0, std::move(mu)}; }
};

/// Product read left to right.
using GeneratorWord = std::vector<Generator>;

/// One relation "sum c * word = 0".
using RelationSum = std::vector<std::pair<Coeff, GeneratorWord>>;

struct Relation {
  std::string id;                   // e.g. "R5:1,2" (1-based)
  std::vector<RelationSum> parts;   // all must vanish
};

/// Every instance of (R1)-(R7) for the spec's rank.
std::vector<Relation> defining_relations(const SpecPtr& spec);
/// Looks up one relation by id; throws std::invalid_argument if unknown.
Relation relation(const SpecPtr& spec, std::string_view id);

Element generator_element(const SpecPtr& spec, const Generator& g);
/// Straightened product of a generator word in the algebra itself.
Element evaluate_word(const SpecPtr& spec, const GeneratorWord& w);
std::string format_generator_word(const GeneratorWord& w);
/// Inverse of format_generator_word: "e1*w'2^-1*f3", "1" for the empty word.
GeneratorWord parse_generator_word(const std::string& text, int rank);
/// The generator word f.. w w' e.. spelling a normal-ordered monomial.
GeneratorWord monomial_word(const Monomial& m);

}  // namespace qtwist

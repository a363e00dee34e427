// Normal-ordered elements of U_{r,s}(g) and U_q(g) and their products.
//
// A monomial is f-word * omega^a * omega'^b * e-word. Products are
// straightened with the commutation relations; the Serre ideal is handled
// separately by degree-bounded linear algebra (see serre_normal_form).
#pragma once

#include "qtwist/cartan.hpp"
#include "qtwist/linalg.hpp"
#include "qtwist/scalar.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qtwist {

using Word = std::vector<int>;

/// Bicharacter on Q x Q with unit-monomial values r^R s^S.
class Character {
 public:
  Character() = default;
  explicit Character(int rank)
      : r_(rank, std::vector<Exponent>(rank, 0)), s_(rank, std::vector<Exponent>(rank, 0)) {}

  void set(int i, int j, Exponent r_exp, Exponent s_exp) {
    r_[i][j] = r_exp;
    s_[i][j] = s_exp;
  }
  Exponent r_exponent(int i, int j) const { return r_[i][j]; }
  Exponent s_exponent(int i, int j) const { return s_[i][j]; }

  LaurentScalar operator()(int i, int j) const { return LaurentScalar::monomial(1, r_[i][j], s_[i][j]); }
  LaurentScalar operator()(const RootVector& mu, const RootVector& beta) const;
  /// Value on the weight lattice; exponents stay exact rationals.
  LaurentScalar operator()(const LatticeVector& mu, const LatticeVector& beta) const;
  Character inverse() const;
  Character transpose() const;
  friend Character operator*(const Character& a, const Character& b);

 private:
  std::vector<std::vector<Exponent>> r_, s_;
};

enum class Side { E, F };

class AlgebraSpec;
using SpecPtr = std::shared_ptr<const AlgebraSpec>;

/// Reduction of words of one degree modulo the Serre relations.
struct SerreReduction {
  std::vector<Word> words;  // lex ascending
  std::vector<bool> basis;  // non-pivot words
  // For each word index, its expansion in basis word indices.
  std::vector<std::vector<std::pair<std::size_t, Coeff>>> image;
  std::map<Word, std::size_t> index;
  std::size_t relation_rank = 0;
};

/// Structure constants of one presentation.
class AlgebraSpec : public std::enable_shared_from_this<AlgebraSpec> {
 public:
  enum class Kind { RS, Q, Custom };

  AlgebraSpec(std::string name, CartanDatum cartan, Kind kind, Character chi_w, Character chi_wp,
              std::vector<LaurentScalar> t, std::vector<LaurentScalar> base);

  const std::string& name() const { return name_; }
  const CartanDatum& cartan() const { return cartan_; }
  int rank() const { return cartan_.rank(); }
  Kind kind() const { return kind_; }

  /// omega_mu e_beta = chi_omega(mu, beta) e_beta omega_mu.
  const Character& chi_omega() const { return chi_w_; }
  /// omega'_mu e_beta = chi_omega'(mu, beta) e_beta omega'_mu.
  const Character& chi_omega_prime() const { return chi_wp_; }
  /// Divisor in [e_i, f_i] = (omega_i - omega'_i)/t_i.
  const LaurentScalar& t(int i) const { return t_[i]; }
  const Coeff& t_inverse(int i) const { return t_inv_[i]; }
  /// Base of the Gaussian binomials in the Serre relations.
  const LaurentScalar& binomial_base(int i) const { return base_[i]; }

  /// Serre element for (i, j) on the given side, as (word, coefficient).
  std::vector<std::pair<Word, LaurentScalar>> serre_element(Side side, int i, int j) const;
  /// c^{(k)}_{ij} = b_i^{k(k-1)/2} chi_omega(alpha_i, alpha_j)^k.
  LaurentScalar serre_constant(int i, int j, int k) const;

  /// Memoized; safe for concurrent callers, computed once per key.
  std::shared_ptr<const SerreReduction> reduction(Side side, const RootVector& beta) const;

 private:
  std::shared_ptr<const SerreReduction> build_reduction(Side side, const RootVector& beta) const;

  std::string name_;
  CartanDatum cartan_;
  Kind kind_;
  Character chi_w_, chi_wp_;
  std::vector<LaurentScalar> t_, base_;
  std::vector<Coeff> t_inv_;

  struct Slot {
    std::once_flag once;
    std::shared_ptr<const SerreReduction> value;
  };
  mutable std::mutex cache_mutex_;
  mutable std::map<std::pair<Side, RootVector>, std::shared_ptr<Slot>> cache_;
};

/// Euler-form character table used by U_{r,s}: chi_omega(i,j) = r^{<j,i>} s^{-<i,j>}.
/// `euler` overrides the Euler table (for variant presentations).
SpecPtr make_rs_spec(const CartanDatum& cartan);
SpecPtr make_rs_spec(const CartanDatum& cartan, const std::vector<std::vector<int>>& euler, std::string name);
/// U_q with q = r^{1/2} s^{-1/2}: chi_omega(i,j) = q^{(i,j)}.
SpecPtr make_q_spec(const CartanDatum& cartan);
std::vector<std::vector<int>> euler_table(const CartanDatum& cartan);

struct Monomial {
  Word f;
  RootVector w;   // omega exponents
  RootVector wp;  // omega' exponents
  Word e;

  static Monomial unit(int rank) { return {{}, RootVector(rank, 0), RootVector(rank, 0), {}}; }
  bool is_unit() const;
  bool is_toral() const { return f.empty() && e.empty(); }
  /// (alpha, beta) bidegree: e contributes (+wt, 0), f (0, -wt), toral parts (mu, -mu).
  std::pair<RootVector, RootVector> bidegree() const;
  /// Q-weight: wt(e) - wt(f).
  RootVector weight() const;
  auto operator<=>(const Monomial&) const = default;
};

RootVector word_weight(const Word& w, int rank);

class Element {
 public:
  using Terms = std::map<Monomial, Coeff>;

  explicit Element(SpecPtr spec) : spec_(std::move(spec)) {}
  Element(SpecPtr spec, const Coeff& c);
  Element(SpecPtr spec, const Monomial& m, const Coeff& c = Coeff(1));

  static Element e(SpecPtr spec, int i);
  static Element f(SpecPtr spec, int i);
  static Element omega(SpecPtr spec, const RootVector& mu);
  static Element omega_prime(SpecPtr spec, const RootVector& mu);
  static Element e_word(SpecPtr spec, const Word& w);
  static Element f_word(SpecPtr spec, const Word& w);

  const SpecPtr& spec() const { return spec_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  /// Coefficient of the unit monomial.
  Coeff constant_term() const;
  /// Present iff every monomial has the same bidegree.
  std::optional<std::pair<RootVector, RootVector>> bidegree() const;
  int max_word_length() const;

  void add(const Monomial& m, const Coeff& c);
  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);
  Element operator-() const;
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(const Element& a, const Element& b);
  friend Element operator*(const Coeff& c, Element x);
  friend bool operator==(const Element& a, const Element& b) { return a.terms_ == b.terms_; }

  Element pow(int k) const;
  std::string str() const;

 private:
  SpecPtr spec_;
  Terms terms_;
};

/// Product of normal-ordered monomials, straightened (Serre ideal not applied).
Element multiply(const SpecPtr& spec, const Monomial& a, const Monomial& b);

/// Canonical representative modulo the Serre ideals; words longer than
/// deg_bound are rejected with std::out_of_range.
Element serre_normal_form(const Element& x, int deg_bound);
Element serre_normal_form(const Element& x);
bool equal_mod_ideal(const Element& x, const Element& y, int deg_bound);
bool equal_mod_ideal(const Element& x, const Element& y);

/// Non-pivot e-words of degree beta.
std::vector<Word> enumerate_basis(const SpecPtr& spec, const RootVector& beta, int deg_bound);
std::vector<Word> enumerate_basis(const SpecPtr& spec, const RootVector& beta);
/// All words with the given letter counts, lex ascending.
std::vector<Word> words_of_degree(const RootVector& beta);

Element parse_element(const SpecPtr& spec, std::string_view text);
std::string format_element(const Element& x);
std::string format_monomial(const Monomial& m);

}  // namespace qtwist

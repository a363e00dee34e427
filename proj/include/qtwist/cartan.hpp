// Finite-type Cartan data, the Euler form and lattice vectors.
//
// Nodes are numbered 0..n-1 internally in Bourbaki order; text formats are
// 1-based. Convention: d_i a_ij = (alpha_i, alpha_j).
#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace qtwist {

/// Element of the root lattice Q in simple-root coordinates.
using RootVector = std::vector<int>;
/// Element of the weight lattice (coordinates in simple roots, denominators | m).
using LatticeVector = std::vector<mpq_class>;

RootVector unit_root(int rank, int i);
RootVector operator+(RootVector a, const RootVector& b);
RootVector operator-(RootVector a, const RootVector& b);
RootVector operator-(RootVector a);
RootVector operator*(int k, RootVector a);
int height(const RootVector& beta);
bool is_nonnegative(const RootVector& beta);
bool is_zero(const RootVector& beta);
/// All beta in Q^+ with height(beta) = h.
std::vector<RootVector> degrees_of_height(int rank, int h);
LatticeVector to_lattice(const RootVector& beta);
std::string format_root(const RootVector& beta);
/// "1,1" or "2,0,1" -> root vector of the given rank.
RootVector parse_root(std::string_view text, int rank);

class CartanDatum {
 public:
  /// Throws std::invalid_argument for unsupported (type, rank).
  static CartanDatum load(char type, int rank);
  /// Accepts labels like "A2", "g2", "D4".
  static CartanDatum parse(std::string_view label);

  char type() const { return type_; }
  int rank() const { return rank_; }
  std::string label() const { return std::string(1, type_) + std::to_string(rank_); }

  int a(int i, int j) const { return a_[i][j]; }
  int d(int i) const { return d_[i]; }
  /// (alpha_i, alpha_j) = d_i a_ij.
  int sym(int i, int j) const { return d_[i] * a_[i][j]; }
  /// <i, j>: d_i a_ij for i < j, d_i for i = j, 0 for i > j.
  int euler(int i, int j) const;

  int lattice_index() const { return m_; }
  /// Exponent denominator for scalars over this datum.
  long long scalar_denominator() const { return 4LL * m_; }

  long long euler(const RootVector& mu, const RootVector& nu) const;
  long long sym(const RootVector& mu, const RootVector& nu) const;
  mpq_class euler(const LatticeVector& mu, const LatticeVector& nu) const;
  mpq_class sym(const LatticeVector& mu, const LatticeVector& nu) const;

  /// Fundamental weight in simple-root coordinates.
  LatticeVector fundamental_weight(int k) const;
  /// sum_k c_k varpi_k.
  LatticeVector weight(const std::vector<int>& dynkin_labels) const;
  /// True when every coordinate has denominator dividing m.
  bool in_weight_lattice(const LatticeVector& v) const;

 private:
  CartanDatum(char type, int rank, std::vector<int> d, std::vector<std::vector<int>> b);

  char type_;
  int rank_;
  std::vector<int> d_;
  std::vector<std::vector<int>> a_;
  std::vector<std::vector<mpq_class>> inverse_;
  int m_ = 1;
};

}  // namespace qtwist

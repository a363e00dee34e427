#include "qtwist/cartan.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qtwist {

RootVector unit_root(int rank, int i) {
  RootVector v(rank, 0);
  v.at(i) = 1;
  return v;
}

RootVector operator+(RootVector a, const RootVector& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

RootVector operator-(RootVector a, const RootVector& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

RootVector operator-(RootVector a) {
  for (auto& x : a) x = -x;
  return a;
}

RootVector operator*(int k, RootVector a) {
  for (auto& x : a) x *= k;
  return a;
}

int height(const RootVector& beta) { return std::accumulate(beta.begin(), beta.end(), 0); }

bool is_nonnegative(const RootVector& beta) {
  for (int x : beta)
    if (x < 0) return false;
  return true;
}

bool is_zero(const RootVector& beta) {
  for (int x : beta)
    if (x != 0) return false;
  return true;
}

std::vector<RootVector> degrees_of_height(int rank, int h) {
  std::vector<RootVector> out;
  RootVector cur(rank, 0);
  auto rec = [&](auto&& self, int i, int left) -> void {
    if (i == rank - 1) {
      cur[i] = left;
      out.push_back(cur);
      return;
    }
    for (int k = left; k >= 0; --k) {
      cur[i] = k;
      self(self, i + 1, left - k);
    }
  };
  if (rank > 0 && h >= 0) rec(rec, 0, h);
  return out;
}

LatticeVector to_lattice(const RootVector& beta) { return LatticeVector(beta.begin(), beta.end()); }

std::string format_root(const RootVector& beta) {
  std::string out;
  for (std::size_t i = 0; i < beta.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(beta[i]);
  }
  return out;
}

RootVector parse_root(std::string_view text, int rank) {
  RootVector out;
  std::string item;
  std::istringstream in{std::string(text)};
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad root coordinate '" + item + "'");
    }
  }
  if (static_cast<int>(out.size()) != rank)
    throw std::invalid_argument("root '" + std::string(text) + "' needs " + std::to_string(rank) + " coordinates");
  return out;
}

namespace {

using Table = std::vector<std::vector<int>>;

Table chain(int n, int d_edge_default) {
  Table b(n, std::vector<int>(n, 0));
  for (int i = 0; i + 1 < n; ++i) b[i][i + 1] = b[i + 1][i] = d_edge_default;
  return b;
}

void edge(Table& b, int i, int j, int v) { b[i][j] = b[j][i] = v; }

}  // namespace

CartanDatum CartanDatum::load(char type, int rank) {
  auto reject = [&] {
    return std::invalid_argument("unsupported Cartan type " + std::string(1, type) + std::to_string(rank));
  };
  if (rank < 1) throw reject();
  std::vector<int> d(rank, 1);
  Table b;
  switch (type) {
    case 'A':
      b = chain(rank, -1);
      break;
    case 'B':
      if (rank < 2) throw reject();
      d.assign(rank, 2);
      d[rank - 1] = 1;
      b = chain(rank, -2);
      break;
    case 'C':
      if (rank < 2) throw reject();
      d[rank - 1] = 2;
      b = chain(rank, -1);
      edge(b, rank - 2, rank - 1, -2);
      break;
    case 'D':
      if (rank < 4) throw reject();
      b = chain(rank - 1, -1);
      for (auto& row : b) row.push_back(0);
      b.emplace_back(rank, 0);
      edge(b, rank - 3, rank - 1, -1);
      break;
    case 'E':
      if (rank < 6 || rank > 8) throw reject();
      b.assign(rank, std::vector<int>(rank, 0));
      edge(b, 0, 2, -1);
      edge(b, 1, 3, -1);
      for (int i = 2; i + 1 < rank; ++i) edge(b, i, i + 1, -1);
      break;
    case 'F':
      if (rank != 4) throw reject();
      d = {2, 2, 1, 1};
      b = chain(4, -1);
      edge(b, 0, 1, -2);
      edge(b, 1, 2, -2);
      break;
    case 'G':
      if (rank != 2) throw reject();
      d = {1, 3};
      b = chain(2, -3);
      break;
    default:
      throw reject();
  }
  for (int i = 0; i < rank; ++i) b[i][i] = 2 * d[i];
  return CartanDatum(type, rank, d, b);
}

CartanDatum CartanDatum::parse(std::string_view label) {
  if (label.size() < 2) throw std::invalid_argument("bad Cartan label '" + std::string(label) + "'");
  char t = static_cast<char>(std::toupper(static_cast<unsigned char>(label[0])));
  int n = 0;
  for (char c : label.substr(1)) {
    if (c < '0' || c > '9') throw std::invalid_argument("bad Cartan label '" + std::string(label) + "'");
    n = n * 10 + (c - '0');
    if (n > 64) throw std::invalid_argument("unsupported Cartan rank in '" + std::string(label) + "'");
  }
  return load(t, n);
}

CartanDatum::CartanDatum(char type, int rank, std::vector<int> d, std::vector<std::vector<int>> b)
    : type_(type), rank_(rank), d_(std::move(d)), a_(rank, std::vector<int>(rank)) {
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) {
      if (b[i][j] % d_[i] != 0) throw std::logic_error("symmetrizer does not divide row");
      a_[i][j] = b[i][j] / d_[i];
    }

  // Gauss-Jordan over Q for A^{-1}.
  std::vector<std::vector<mpq_class>> m(rank, std::vector<mpq_class>(2 * rank));
  for (int i = 0; i < rank; ++i) {
    for (int j = 0; j < rank; ++j) m[i][j] = a_[i][j];
    m[i][rank + i] = 1;
  }
  for (int c = 0; c < rank; ++c) {
    int p = c;
    while (m[p][c] == 0) ++p;
    std::swap(m[p], m[c]);
    mpq_class inv = 1 / m[c][c];
    for (auto& x : m[c]) x *= inv;
    for (int i = 0; i < rank; ++i) {
      if (i == c || m[i][c] == 0) continue;
      mpq_class f = m[i][c];
      for (int j = 0; j < 2 * rank; ++j) m[i][j] -= f * m[c][j];
    }
  }
  inverse_.assign(rank, std::vector<mpq_class>(rank));
  mpz_class l = 1;
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) {
      inverse_[i][j] = m[i][rank + j];
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), inverse_[i][j].get_den_mpz_t());
    }
  m_ = static_cast<int>(l.get_si());
}

int CartanDatum::euler(int i, int j) const {
  if (i < j) return d_[i] * a_[i][j];
  if (i == j) return d_[i];
  return 0;
}

long long CartanDatum::euler(const RootVector& mu, const RootVector& nu) const {
  long long total = 0;
  for (int i = 0; i < rank_; ++i) {
    if (mu[i] == 0) continue;
    for (int j = i; j < rank_; ++j) total += static_cast<long long>(mu[i]) * nu[j] * euler(i, j);
  }
  return total;
}

long long CartanDatum::sym(const RootVector& mu, const RootVector& nu) const {
  long long total = 0;
  for (int i = 0; i < rank_; ++i) {
    if (mu[i] == 0) continue;
    for (int j = 0; j < rank_; ++j) total += static_cast<long long>(mu[i]) * nu[j] * sym(i, j);
  }
  return total;
}

mpq_class CartanDatum::euler(const LatticeVector& mu, const LatticeVector& nu) const {
  mpq_class total = 0;
  for (int i = 0; i < rank_; ++i) {
    if (mu[i] == 0) continue;
    for (int j = i; j < rank_; ++j) total += mu[i] * nu[j] * euler(i, j);
  }
  return total;
}

mpq_class CartanDatum::sym(const LatticeVector& mu, const LatticeVector& nu) const {
  return euler(mu, nu) + euler(nu, mu);
}

LatticeVector CartanDatum::fundamental_weight(int k) const {
  LatticeVector out(rank_);
  for (int j = 0; j < rank_; ++j) out[j] = inverse_[j][k];
  return out;
}

LatticeVector CartanDatum::weight(const std::vector<int>& labels) const {
  if (static_cast<int>(labels.size()) != rank_) throw std::invalid_argument("weight needs one label per node");
  LatticeVector out(rank_, 0);
  for (int k = 0; k < rank_; ++k) {
    if (labels[k] == 0) continue;
    auto w = fundamental_weight(k);
    for (int j = 0; j < rank_; ++j) out[j] += labels[k] * w[j];
  }
  return out;
}

bool CartanDatum::in_weight_lattice(const LatticeVector& v) const {
  for (const auto& x : v)
    if (m_ % x.get_den().get_si() != 0) return false;
  return true;
}

}  // namespace qtwist

#pragma once

#include <compare>
#include <string>
#include <vector>

#include "spflag/linalg.hpp"

namespace spflag {

enum class Kind { A, C };

// TypeA(m) is sl_m; TypeC(n) is sp_2n.
class RootSystem {
 public:
  static RootSystem type_a(int m);
  static RootSystem type_c(int n);

  Kind kind() const { return kind_; }
  // m for type A, n for type C.
  int size() const { return size_; }
  int rank() const { return kind_ == Kind::A ? size_ - 1 : size_; }
  // Length of epsilon-coordinate vectors.
  int eps_dim() const { return size_; }
  int root_count() const;
  bool has_root(int i, int j) const;
  std::string name() const;

  friend bool operator==(const RootSystem&, const RootSystem&) = default;

 private:
  RootSystem(Kind k, int s) : kind_(k), size_(s) {}
  Kind kind_;
  int size_;
};

// Positive root alpha_{i,j}; the owning system is passed alongside.
struct Root {
  int i = 0;
  int j = 0;
  friend auto operator<=>(const Root&, const Root&) = default;
};

std::string to_string(const Root& r);

struct Weight {
  std::vector<int> eps;

  Weight() = default;
  explicit Weight(int dim) : eps(dim, 0) {}
  explicit Weight(std::vector<int> e) : eps(std::move(e)) {}

  int dim() const { return static_cast<int>(eps.size()); }
  Weight& operator+=(const Weight& o);
  Weight& operator-=(const Weight& o);
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator*(int s, Weight a) {
    for (int& x : a.eps) x *= s;
    return a;
  }
  friend auto operator<=>(const Weight&, const Weight&) = default;
};

// lambda = sum m_i omega_i with m_i >= 0.
struct DominantWeight {
  std::vector<int> m;

  DominantWeight() = default;
  explicit DominantWeight(std::vector<int> coeffs);
  int total() const;
  friend bool operator==(const DominantWeight&, const DominantWeight&) = default;
};

// Epsilon coordinates of lambda: lambda_k = m_k + ... + m_rank.
Weight to_eps(const DominantWeight& lambda, const RootSystem& sys);
// Fundamental-weight coordinates of an epsilon weight (inverse of to_eps on the weight lattice).
std::vector<int> eps_to_omega(const Weight& w, const RootSystem& sys);

// All positive roots ordered by j descending, then i ascending.
std::vector<Root> positive_roots(const RootSystem& sys);

Weight root_weight(const RootSystem& sys, const Root& r);

// Half sum of positive roots, doubled so that entries stay integral.
Weight two_rho(const RootSystem& sys);

// Maps (i,j) to its position in positive_roots.
class RootIndex {
 public:
  explicit RootIndex(const RootSystem& sys);
  const RootSystem& system() const { return sys_; }
  const std::vector<Root>& roots() const { return roots_; }
  std::size_t size() const { return roots_.size(); }
  // -1 if (i,j) is not a positive root.
  int find(int i, int j) const;
  int find(const Root& r) const { return find(r.i, r.j); }
  int at(int i, int j) const;

 private:
  RootSystem sys_;
  std::vector<Root> roots_;
  int width_;
  std::vector<int> pos_;
};

// Root vector f_{i,j} of sp_2n as a 2n x 2n matrix.
QMatrix root_vector_matrix(const Root& r, int n);

// The type-C root alpha_{i,j} viewed as a root of sl_2n.
Root phi_embed(const Root& r, int n);

std::vector<Root> radical_roots(const std::vector<int>& d, int n);
std::vector<Root> boundary_set_B(const std::vector<int>& d, int n);

// Parabolic datum d with its radical P_d and boundary set B_d.
class Parabolic {
 public:
  Parabolic(int n, std::vector<int> d);
  static Parabolic complete(int n);

  int n() const { return n_; }
  const std::vector<int>& d() const { return d_; }
  int k() const { return static_cast<int>(d_.size()); }
  bool is_complete() const { return k() == n_; }
  bool contains_d(int i) const;

  // P_d in positive_roots order.
  const std::vector<Root>& radical() const { return radical_; }
  const std::vector<Root>& boundary() const { return boundary_; }
  bool contains(int i, int j) const;
  bool contains(const Root& r) const { return contains(r.i, r.j); }
  bool in_boundary(int i, int j) const;

  std::string to_string() const;

 private:
  int n_;
  std::vector<int> d_;
  std::vector<Root> radical_;
  std::vector<Root> boundary_;
  std::vector<char> member_;
  std::vector<char> boundary_member_;
};

void validate_d(const std::vector<int>& d, int n);

// Every nonempty strictly increasing d in {1..n}.
std::vector<std::vector<int>> all_parabolics(int n);

}  // namespace spflag

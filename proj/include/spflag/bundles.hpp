#pragma once

#include <map>
#include <string>
#include <vector>

#include "spflag/rootsys.hpp"

namespace spflag {

// Element of the free abelian group on the omega_{i,j} and O(Z_{i,j}).
struct BundleLedger {
  std::map<Root, long> omega;
  std::map<Root, long> divisor;

  void add_omega(const Root& r, long c);
  void add_divisor(const Root& r, long c);
  bool is_zero() const { return omega.empty() && divisor.empty(); }

  BundleLedger& operator+=(const BundleLedger& o);
  BundleLedger& operator-=(const BundleLedger& o);
  friend BundleLedger operator+(BundleLedger a, const BundleLedger& b) { return a += b; }
  friend BundleLedger operator-(BundleLedger a, const BundleLedger& b) { return a -= b; }
  friend BundleLedger operator*(long s, const BundleLedger& a);
  friend bool operator==(const BundleLedger&, const BundleLedger&) = default;

  std::string to_string() const;
};

// omega-expansion of O(Z_{i,j}); indices past the boundary are dropped.
BundleLedger divisor_class(int i, int j, const Parabolic& p);

// Closed-form discrepancy coefficient b_{i,j}.
long discrepancy_b(int i, int j, const Parabolic& p);

// b_{i,j} solved from the omega-coefficients one index at a time, increasing j
// then decreasing i.
std::map<Root, long> discrepancy_b_triangular(const Parabolic& p);

bool is_exceptional(int i, int j, const Parabolic& p);
std::vector<Root> non_exceptional_list(const Parabolic& p);

// Inverse of the candidate canonical bundle, supported on the (d_l, d_l).
BundleLedger tilde_omega_inverse(const Parabolic& p);

// -sum_{B_d} omega_{i,j} + tilde omega^{-1}.
BundleLedger canonical_lhs(const Parabolic& p);

struct IdentityCheck {
  bool ok = false;
  BundleLedger residual;  // lhs minus sum b_{i,j} O(Z_{i,j}), in omega coordinates
};

IdentityCheck verify_canonical_identity(const Parabolic& p);

}  // namespace spflag

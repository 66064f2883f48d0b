#pragma once

#include <gmpxx.h>

#include <map>
#include <stdexcept>
#include <vector>

#include "spflag/fixedpoints.hpp"
#include "spflag/linalg.hpp"
#include "spflag/rootsys.hpp"

namespace spflag {

// <w_i, w_{2n+1-i}> = 1 for i <= n and -1 for i > n.
QMatrix symplectic_form(int n);

mpq_class pairing(const QMatrix& j, const Vec& u, const Vec& v);

bool is_isotropic(const Subspace& u, const QMatrix& j);
bool is_isotropic(const Subspace& u);
Subspace perp(const Subspace& u, const QMatrix& j);
Subspace perp(const Subspace& u);

// Consecutive integers lo..hi (empty if hi < lo).
std::vector<int> coord_range(int lo, int hi);

// W_{i,j} = span(w_1..w_i, w_{j+1}..w_{2n}).
Subspace w_space(int i, int j, int n);

bool in_sp_grass_a(const Subspace& u, int k, int n);

struct FlagPoint {
  std::vector<int> d;
  std::vector<Subspace> spaces;

  const Subspace& at_dim(int k) const;
  friend bool operator==(const FlagPoint&, const FlagPoint&) = default;
};

FlagPoint coordinate_flag(const std::vector<int>& d, int n);

bool in_sp_flag_a(const FlagPoint& f, int n);

// Degenerate type-A flag condition: pr_{d_l+1} ... pr_{d_{l+1}} V_{d_l} in V_{d_{l+1}}.
bool in_sl_flag_a(const std::vector<Subspace>& spaces, const std::vector<int>& dims);

struct ResolutionPoint {
  int n = 0;
  std::map<Root, Subspace> spaces;

  const Subspace& at(int i, int j) const;
  friend bool operator==(const ResolutionPoint&, const ResolutionPoint&) = default;
};

ResolutionPoint highest_weight_point(const Parabolic& p);

// Throws std::invalid_argument if the index set differs from P_d.
bool in_resolution(const ResolutionPoint& pt, const Parabolic& p);

FlagPoint project_pi(const ResolutionPoint& pt, const Parabolic& p);

struct InfeasibleLift : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Builds V_{i,j} by increasing j, then decreasing i. Where the fiber is not a
// point, the span is extended by the first RREF basis row of the feasible
// subspace not already present, one vector at a time.
ResolutionPoint lift(const FlagPoint& f, const Parabolic& p);

// Fixed point of the torus: V_{i,j} = span(w_l : l in S_{i,j}).
ResolutionPoint fixed_point_realization(const AdmissibleCollection& c);

// Image of the section s_{i,j}: V_{i,j} = V_{i-1,j+1} + span(w_{j+1}).
bool in_divisor(const ResolutionPoint& pt, int i, int j);

// Minor of the basis on columns 1..i; nonzero iff p_{1..i}(V) != 0.
mpq_class leading_pluecker(const Subspace& v);

bool on_some_divisor(const ResolutionPoint& pt, const Parabolic& p);
bool all_leading_pluecker_nonzero(const ResolutionPoint& pt);

// (V_1, ..., V_{2n-1}) -> (V_{2n-1}^perp, ..., V_1^perp).
std::vector<Subspace> sigma_involution(const std::vector<Subspace>& flags);

QMatrix flat_family_form(const mpq_class& s, int n, int k);
QMatrix eta(const mpq_class& s, int n, int k);
Subspace apply(const QMatrix& g, const Subspace& u);

struct TransportCheck {
  bool matrix_identity = false;   // eta(s)^T J_1 eta(s) = J_{s^2}
  bool premise = false;           // U isotropic for J_1
  bool transported = false;       // eta(1/s) U isotropic for J_{s^2}
  bool j0_matches_grass = false;  // J_0-isotropy agrees with in_sp_grass_a
  bool ok() const { return matrix_identity && (!premise || transported) && j0_matches_grass; }
};

TransportCheck isotropy_transport_check(const Subspace& u, const mpq_class& s, int n, int k);

}  // namespace spflag

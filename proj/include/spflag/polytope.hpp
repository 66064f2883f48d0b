#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "spflag/charring.hpp"
#include "spflag/rootsys.hpp"

namespace spflag {

struct DyckPath {
  std::vector<Root> roots;

  const Root& start() const { return roots.front(); }
  const Root& end() const { return roots.back(); }
  friend auto operator<=>(const DyckPath&, const DyckPath&) = default;
};

// Every path from a simple root to an admissible end root, sorted.
std::vector<DyckPath> dyck_paths(const RootSystem& sys);

// Bound index range of a path: m_first + ... + m_last.
std::pair<int, int> path_bound_range(const DyckPath& p, const RootSystem& sys);

struct Inequality {
  // Positions into PolytopeSpec::roots.
  std::vector<int> support;
  long bound = 0;
  friend auto operator<=>(const Inequality&, const Inequality&) = default;
};

struct PolytopeSpec {
  RootSystem system = RootSystem::type_c(1);
  DominantWeight lambda;
  // positive_roots(system); lattice points are indexed the same way.
  std::vector<Root> roots;
  std::vector<Inequality> inequalities;
};

PolytopeSpec polytope_spec(const DominantWeight& lambda, const RootSystem& sys);

struct LatticePoint {
  std::vector<int> s;
  friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

bool satisfies(const PolytopeSpec& spec, const LatticePoint& p);

// Integer points in lexicographic order. `threads` only affects speed.
std::vector<LatticePoint> lattice_points(const PolytopeSpec& spec, int threads = 1);
std::uint64_t count_lattice_points(const PolytopeSpec& spec, int threads = 1);

// (q-degree, epsilon weight) -> multiplicity; map order is the serialization order.
class GradedCharacter {
 public:
  using Key = std::pair<int, std::vector<int>>;

  explicit GradedCharacter(int eps_dim = 0) : eps_dim_(eps_dim) {}
  void add(int qdeg, const Weight& w, std::uint64_t mult = 1);
  const std::map<Key, std::uint64_t>& terms() const { return terms_; }
  int eps_dim() const { return eps_dim_; }
  std::uint64_t total() const;
  LaurentPoly to_laurent() const;
  friend bool operator==(const GradedCharacter&, const GradedCharacter&) = default;

 private:
  int eps_dim_;
  std::map<Key, std::uint64_t> terms_;
};

// Weight and PBW degree of the monomial f^s applied to the highest weight vector.
std::pair<Weight, int> point_weight(const PolytopeSpec& spec, const LatticePoint& p);

GradedCharacter graded_character(const DominantWeight& lambda, const RootSystem& sys,
                                 int threads = 1);
std::uint64_t dimension(const DominantWeight& lambda, const RootSystem& sys, int threads = 1);

// lambda for sp_2n reread as an sl_2n weight (m_{n+1} = ... = m_{2n-1} = 0).
DominantWeight extend_to_sl(const DominantWeight& lambda, int n);

// Pushes a type-C point into the sl_2n polytope; throws std::logic_error on violation.
LatticePoint phi_point_embed(const LatticePoint& p, const DominantWeight& lambda, int n);

}  // namespace spflag

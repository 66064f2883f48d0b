#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "spflag/charring.hpp"
#include "spflag/random.hpp"
#include "spflag/rootsys.hpp"

namespace spflag {

// Subset of {1..2n} as a bitmask; bit l-1 stands for w_l.
using IndexSet = std::uint32_t;

IndexSet index_set(const std::vector<int>& members);
std::vector<int> members(IndexSet s);
int set_size(IndexSet s);
inline bool has(IndexSet s, int l) { return (s >> (l - 1)) & 1u; }

// Family S_{i,j} over the positive roots of C_n (1 <= i <= j, i + j <= 2n).
class AdmissibleCollection {
 public:
  explicit AdmissibleCollection(int n);

  int n() const { return n_; }
  const RootIndex& index() const { return *index_; }
  IndexSet at(int i, int j) const { return sets_[index_->at(i, j)]; }
  // S_{i-1,j}, with S_{0,j} empty.
  IndexSet below(int i, int j) const { return i == 1 ? 0u : at(i - 1, j); }
  void set(int i, int j, IndexSet s) { sets_[index_->at(i, j)] = s; }
  const std::vector<IndexSet>& sets() const { return sets_; }

  static AdmissibleCollection highest_weight(int n);

  friend bool operator==(const AdmissibleCollection& a, const AdmissibleCollection& b) {
    return a.n_ == b.n_ && a.sets_ == b.sets_;
  }
  friend bool operator<(const AdmissibleCollection& a, const AdmissibleCollection& b) {
    return a.sets_ < b.sets_;
  }

  std::string to_string() const;

 private:
  int n_;
  std::shared_ptr<const RootIndex> index_;
  std::vector<IndexSet> sets_;
};

// Checks the three defining conditions directly.
bool is_admissible(const AdmissibleCollection& c);

// All admissible collections; 2^{n^2} of them.
std::vector<AdmissibleCollection> enumerate_fixed_points(int n);

// (a, b) with S_{i,j} = S_{i-1,j} + {a}; b is the other admissible choice.
std::pair<int, int> ab_pair(const AdmissibleCollection& c, int i, int j);

struct ExtendedWeight {
  Weight weight;
  int qdeg = 0;

  Monomial monomial() const { return Monomial{weight.eps, qdeg}; }
  friend bool operator==(const ExtendedWeight&, const ExtendedWeight&) = default;
};

ExtendedWeight wtq_component(IndexSet s, int i, int n);
ExtendedWeight abl_numerator_weight(const AdmissibleCollection& c, const DominantWeight& lambda);

// One fixed-point contribution e^{numerator} / prod (1 - e^{delta}).
struct AblTerm {
  Monomial numerator;
  std::vector<Monomial> deltas;
};

std::vector<AblTerm> abl_terms(const DominantWeight& lambda, int n);

struct DenominatorZero : std::domain_error {
  using std::domain_error::domain_error;
};

mpq_class abl_evaluate(const std::vector<AblTerm>& terms, const RationalPoint& pt,
                       int threads = 1);
mpq_class abl_evaluate(const DominantWeight& lambda, const RationalPoint& pt, int threads = 1);

enum class Convention { Direct, Inverted };
std::string to_string(Convention c);

struct AblPointResult {
  RationalPoint point;
  mpq_class abl;
  mpq_class polytope;
  bool equal = false;
};

struct AblReport {
  std::vector<AblPointResult> points;
  bool matched = false;
  Convention convention = Convention::Direct;
  int resampled = 0;
};

// Random rational point with numerators and denominators drawn from small primes.
RationalPoint sample_rational_point(Rng& rng, int nvars);

AblReport abl_verify(const DominantWeight& lambda, int trials, std::uint64_t seed, int threads = 1);

// Clears denominators and compares polynomials; feasible for n <= 2.
bool abl_symbolic_check(const DominantWeight& lambda, Convention convention = Convention::Direct);

}  // namespace spflag

#pragma once

#include <gmpxx.h>

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "spflag/rootsys.hpp"

namespace spflag {

// z^e q^k; ordered by q first, then z lexicographically.
struct Monomial {
  std::vector<int> z;
  int q = 0;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    if (auto c = a.q <=> b.q; c != 0) return c;
    return a.z <=> b.z;
  }
  Monomial operator*(const Monomial& o) const;
  Monomial inverse() const;
};

// Element of Q[z_1^{+-1}, ..., z_n^{+-1}, q^{+-1}].
class LaurentPoly {
 public:
  explicit LaurentPoly(int nvars = 0) : nvars_(nvars) {}
  static LaurentPoly constant(int nvars, const mpq_class& c);
  static LaurentPoly monomial(const Monomial& m, const mpq_class& c = 1);

  int nvars() const { return nvars_; }
  const std::map<Monomial, mpq_class>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  mpq_class coefficient(const Monomial& m) const;
  bool q_free() const;

  void add_term(const Monomial& m, const mpq_class& c);

  const Monomial& leading() const;
  const Monomial& trailing() const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly operator-() const;
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(const mpq_class& s, const LaurentPoly& a);
  LaurentPoly times(const Monomial& m) const;
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  std::string to_string() const;

 private:
  void check_vars(const LaurentPoly& o) const;
  void check_vars(const Monomial& m) const;
  int nvars_;
  std::map<Monomial, mpq_class> terms_;
};

// Exact quotient num/den; throws std::domain_error if den does not divide num.
LaurentPoly exact_divide(const LaurentPoly& num, const LaurentPoly& den);

struct RationalPoint {
  std::vector<mpq_class> z;
  mpq_class q = 1;

  RationalPoint inverted() const;
  std::string to_string() const;
};

mpq_class evaluate(const LaurentPoly& p, const RationalPoint& pt);
mpq_class evaluate(const Monomial& m, const RationalPoint& pt);

// Sums coefficients over q-exponents.
LaurentPoly specialize_q1(const LaurentPoly& p);

// Re-expresses exponents in fundamental-weight coordinates.
LaurentPoly to_omega_basis(const LaurentPoly& p, const RootSystem& sys);

mpz_class weyl_dimension(const DominantWeight& lambda, const RootSystem& sys);

// Alternating sum over the Weyl group divided by the Weyl denominator.
LaurentPoly weyl_character(const DominantWeight& lambda, const RootSystem& sys);

}  // namespace spflag

#include <doctest.h>

#include <algorithm>

#include "gen.hpp"
#include "spflag/charring.hpp"
#include "spflag/polytope.hpp"

using namespace spflag;

namespace {

LaurentPoly random_poly(Rng& rng, int nvars) {
  LaurentPoly p(nvars);
  const int terms = static_cast<int>(rng.uniform(0, 4));
  for (int t = 0; t < terms; ++t) {
    Monomial m{std::vector<int>(nvars), static_cast<int>(rng.uniform(-2, 2))};
    for (int& e : m.z) e = static_cast<int>(rng.uniform(-2, 2));
    p.add_term(m, testgen::small_q(rng));
  }
  return p;
}

// Weyl dimension product over the positive roots e_a - e_b, e_a + e_b, 2 e_a,
// with rho = (n, n-1, ..., 1).
mpq_class weyl_dim_oracle(const std::vector<int>& m) {
  const int n = static_cast<int>(m.size());
  std::vector<int> lam(n, 0);
  for (int k = n - 1; k >= 0; --k) lam[k] = m[k] + (k + 1 < n ? lam[k + 1] : 0);
  std::vector<int> shifted(n), rho(n);
  for (int k = 0; k < n; ++k) {
    rho[k] = n - k;
    shifted[k] = lam[k] + rho[k];
  }
  mpq_class num = 1, den = 1;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      num *= (shifted[a] - shifted[b]) * (shifted[a] + shifted[b]);
      den *= (rho[a] - rho[b]) * (rho[a] + rho[b]);
    }
    num *= shifted[a];
    den *= rho[a];
  }
  return num / den;
}

Monomial mono(std::vector<int> z, int q = 0) { return Monomial{std::move(z), q}; }

}  // namespace

TEST_SUITE("charring") {
  TEST_CASE("ring axioms on random Laurent polynomials") {
    Rng rng(21);
    for (int t = 0; t < 60; ++t) {
      const LaurentPoly a = random_poly(rng, 2), b = random_poly(rng, 2), c = random_poly(rng, 2);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a * b == b * a);
      CHECK((a - a).is_zero());
      CHECK(a + (-a) == LaurentPoly(2));
      CHECK(a * LaurentPoly::constant(2, 1) == a);
    }
  }

  TEST_CASE("exact division recovers the factor and rejects non-divisors") {
    Rng rng(22);
    for (int t = 0; t < 30; ++t) {
      const LaurentPoly a = random_poly(rng, 2);
      LaurentPoly b = random_poly(rng, 2);
      if (b.is_zero()) b = LaurentPoly::constant(2, 3);
      CHECK(exact_divide(a * b, b) == a);
    }
    LaurentPoly num(1);
    num.add_term(mono({1}), 1);
    num.add_term(mono({0}), 1);
    LaurentPoly den(1);
    den.add_term(mono({1}), 1);
    den.add_term(mono({0}), -1);
    CHECK_THROWS_AS(exact_divide(num, den), std::domain_error);
  }

  TEST_CASE("evaluation") {
    LaurentPoly p(1);
    p.add_term(mono({1}), 1);
    p.add_term(mono({-1}, 1), 1);
    CHECK(evaluate(p, RationalPoint{{mpq_class(2)}, mpq_class(3)}) == mpq_class(7, 2));
    CHECK(evaluate(LaurentPoly::constant(3, 1), RationalPoint{{2, 5, mpq_class(1, 7)}, 11}) == 1);
    const LaurentPoly ch = graded_character(DominantWeight({1}), RootSystem::type_c(1)).to_laurent();
    CHECK(evaluate(ch, RationalPoint{{mpq_class(2)}, 1}) == mpq_class(5, 2));
    CHECK(evaluate(mono({-3, 2}, -1), RationalPoint{{2, 3}, 5}) == mpq_class(9, 40));
  }

  TEST_CASE("q specialization") {
    LaurentPoly p(1);
    p.add_term(mono({1}, 1), 1);
    p.add_term(mono({1}, 0), 1);
    CHECK(specialize_q1(p) == LaurentPoly::monomial(mono({1}), 2));
    CHECK(specialize_q1(LaurentPoly(2)).is_zero());
    CHECK(specialize_q1(p).q_free());
  }

  TEST_CASE("Weyl dimension") {
    const RootSystem c2 = RootSystem::type_c(2);
    CHECK(weyl_dimension(DominantWeight({1, 0}), c2) == 4);
    CHECK(weyl_dimension(DominantWeight({0, 1}), c2) == 5);
    CHECK(weyl_dimension(DominantWeight({1, 1}), c2) == 16);
    CHECK(weyl_dimension(DominantWeight({0, 1, 0}), RootSystem::type_c(3)) == 14);
    CHECK(weyl_dimension(DominantWeight({0, 0, 0, 0}), RootSystem::type_c(4)) == 1);
    CHECK(weyl_dimension(DominantWeight({1, 1}), RootSystem::type_a(3)) == 8);
    for (int n = 1; n <= 4; ++n)
      for (int t = 0; t < 10; ++t) {
        std::vector<int> m(n);
        for (int s = 0; s < n; ++s) m[s] = (t + 2 * s * t + s) % 3;
        CHECK(mpq_class(weyl_dimension(DominantWeight(m), RootSystem::type_c(n))) == weyl_dim_oracle(m));
      }
  }

  TEST_CASE("Weyl character values") {
    LaurentPoly c1(1);
    c1.add_term(mono({1}), 1);
    c1.add_term(mono({-1}), 1);
    CHECK(weyl_character(DominantWeight({1}), RootSystem::type_c(1)) == c1);
    LaurentPoly c2(2);
    for (auto z : {std::vector<int>{1, 0}, {0, 1}, {0, -1}, {-1, 0}}) c2.add_term(mono(z), 1);
    CHECK(weyl_character(DominantWeight({1, 0}), RootSystem::type_c(2)) == c2);
  }

  TEST_CASE("Weyl characters are invariant under signed permutations and count the dimension") {
    for (int n = 1; n <= 3; ++n)
      for (int t = 0; t < 6; ++t) {
        std::vector<int> m(n);
        for (int s = 0; s < n; ++s) m[s] = (t + s) % 2 + (s == 0 && t > 3);
        const RootSystem sys = RootSystem::type_c(n);
        const LaurentPoly ch = weyl_character(DominantWeight(m), sys);
        mpq_class total = 0;
        for (const auto& [mon, c] : ch.terms()) {
          total += c;
          CHECK(mon.q == 0);
          Monomial flipped = mon;
          flipped.z[0] = -flipped.z[0];
          CHECK(ch.coefficient(flipped) == c);
          if (n > 1) {
            Monomial swapped = mon;
            std::swap(swapped.z[0], swapped.z[n - 1]);
            CHECK(ch.coefficient(swapped) == c);
          }
        }
        CHECK(total == mpq_class(weyl_dimension(DominantWeight(m), sys)));
      }
  }

  TEST_CASE("omega basis conversion") {
    // e_1 + e_2 = omega_2 and e_1 = omega_1 in C_2.
    const LaurentPoly p = LaurentPoly::monomial(mono({1, 1}, 2), 3) + LaurentPoly::monomial(mono({1, 0}), 1);
    const LaurentPoly o = to_omega_basis(p, RootSystem::type_c(2));
    CHECK(o.coefficient(mono({0, 1}, 2)) == 3);
    CHECK(o.coefficient(mono({1, 0})) == 1);
  }
}

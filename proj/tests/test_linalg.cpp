#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "gen.hpp"
#include "spflag/linalg.hpp"

using namespace spflag;

namespace {

// Leibniz expansion, fine for the tiny sizes used here.
mpq_class leibniz_det(const QMatrix& m) {
  const int n = m.rows();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  mpq_class total = 0;
  do {
    int inversions = 0;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        if (perm[a] > perm[b]) ++inversions;
    mpq_class term = inversions % 2 ? -1 : 1;
    for (int r = 0; r < n; ++r) term *= m(r, perm[r]);
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

Vec v(std::initializer_list<int> xs) {
  Vec out;
  for (int x : xs) out.emplace_back(x);
  return out;
}

}  // namespace

TEST_SUITE("linalg") {
  TEST_CASE("span is canonical: scaled and permuted generators give the same subspace") {
    const Subspace a = Subspace::span({v({1, 2, 0, 1}), v({0, 1, 1, 0})}, 4);
    const Subspace b = Subspace::span({v({0, -3, -3, 0}), v({2, 4, 0, 2}), v({1, 3, 1, 1})}, 4);
    CHECK(a == b);
    CHECK(a.dim() == 2);
    CHECK(a.basis()(0, 0) == 1);
  }

  TEST_CASE("coordinate subspaces and membership") {
    const Subspace s = Subspace::coordinate({1, 3}, 4);
    CHECK(s.dim() == 2);
    CHECK(s.contains(v({5, 0, -1, 0})));
    CHECK_FALSE(s.contains(v({0, 1, 0, 0})));
    CHECK(Subspace::whole(4).contains(s));
    CHECK(s.contains(Subspace(4)));
  }

  TEST_CASE("determinant agrees with the Leibniz expansion") {
    Rng rng(11);
    for (int t = 0; t < 40; ++t) {
      const int n = static_cast<int>(rng.uniform(1, 4));
      const QMatrix m = testgen::random_matrix(rng, n, n);
      CHECK(determinant(m) == leibniz_det(m));
    }
  }

  TEST_CASE("null space is annihilated and has complementary dimension") {
    Rng rng(12);
    for (int t = 0; t < 40; ++t) {
      const int rows = static_cast<int>(rng.uniform(1, 4));
      const int cols = static_cast<int>(rng.uniform(1, 6));
      const QMatrix m = testgen::random_matrix(rng, rows, cols, 1);
      const QMatrix ns = null_space(m);
      QMatrix r = m;
      const int rank = static_cast<int>(rref(r).size());
      CHECK(ns.rows() == cols - rank);
      if (ns.rows() > 0) CHECK((m * ns.transpose()).is_zero());
    }
  }

  TEST_CASE("dimension formula for sum and intersection") {
    Rng rng(13);
    for (int t = 0; t < 60; ++t) {
      const int amb = static_cast<int>(rng.uniform(2, 6));
      const Subspace u = testgen::random_span(rng, amb, static_cast<int>(rng.uniform(0, amb)));
      const Subspace w = testgen::random_span(rng, amb, static_cast<int>(rng.uniform(0, amb)));
      const Subspace s = u + w;
      const Subspace i = u.intersect(w);
      CHECK(u.dim() + w.dim() == s.dim() + i.dim());
      CHECK(u.contains(i));
      CHECK(w.contains(i));
      CHECK(s.contains(u));
      CHECK(s.contains(w));
    }
  }

  TEST_CASE("annihilator is orthogonal and involutive") {
    Rng rng(14);
    for (int t = 0; t < 40; ++t) {
      const int amb = static_cast<int>(rng.uniform(1, 6));
      const Subspace u = testgen::random_span(rng, amb, static_cast<int>(rng.uniform(0, amb)));
      const Subspace a = u.annihilator();
      CHECK(a.dim() == amb - u.dim());
      for (const Vec& x : u.vectors())
        for (const Vec& y : a.vectors()) CHECK(dot(x, y) == 0);
      CHECK(a.annihilator() == u);
    }
  }

  TEST_CASE("kill zeroes coordinates and kill_preimage is its preimage") {
    Rng rng(15);
    for (int t = 0; t < 40; ++t) {
      const Subspace u = testgen::random_span(rng, 5, static_cast<int>(rng.uniform(1, 4)));
      const std::vector<int> coords{2, 4};
      const Subspace k = u.kill(coords);
      for (const Vec& x : k.vectors()) {
        CHECK(x[1] == 0);
        CHECK(x[3] == 0);
      }
      // Direct image computed vector by vector.
      std::vector<Vec> images;
      for (Vec x : u.vectors()) {
        x[1] = 0;
        x[3] = 0;
        images.push_back(x);
      }
      CHECK(k == Subspace::span(images, 5));
      const Subspace pre = k.kill_preimage(coords);
      CHECK(pre.contains(u));
      CHECK(pre.kill(coords) == k);
      CHECK(pre.dim() == k.dim() + 2);
    }
  }

  TEST_CASE("matrix arithmetic") {
    const QMatrix a = QMatrix::from_rows({v({1, 2}), v({3, 4})}, 2);
    const QMatrix b = QMatrix::from_rows({v({0, 1}), v({1, 0})}, 2);
    CHECK(a * b == QMatrix::from_rows({v({2, 1}), v({4, 3})}, 2));
    CHECK(a.transpose()(0, 1) == 3);
    CHECK((a - a).is_zero());
    CHECK(a * QMatrix::identity(2) == a);
    CHECK(mpq_class(2) * b + b == mpq_class(3) * b);
  }
}

#include <doctest.h>

#include "gen.hpp"
#include "spflag/geometry.hpp"
#include "spflag/sampling.hpp"

using namespace spflag;

namespace {

Vec w(int n, std::initializer_list<std::pair<int, int>> entries) {
  Vec v(2 * n, mpq_class(0));
  for (const auto& [idx, c] : entries) v[idx - 1] = c;
  return v;
}

Subspace span(int n, std::initializer_list<Vec> vs) { return Subspace::span(std::vector<Vec>(vs), 2 * n); }

std::vector<int> all_dims(int n) { return coord_range(1, 2 * n - 1); }

}  // namespace

TEST_SUITE("geometry") {
  TEST_CASE("symplectic form") {
    QMatrix j1(2, 2);
    j1(0, 1) = 1;
    j1(1, 0) = -1;
    CHECK(symplectic_form(1) == j1);
    for (int n = 1; n <= 5; ++n) {
      const QMatrix j = symplectic_form(n);
      CHECK(j.transpose() == mpq_class(-1) * j);
      if (n <= 4) CHECK(determinant(j) == 1);
      for (int i = 1; i <= 2 * n; ++i)
        CHECK(pairing(j, w(n, {{i, 1}}), w(n, {{2 * n + 1 - i, 1}})) == (i <= n ? 1 : -1));
    }
  }

  TEST_CASE("isotropy and orthogonal complements") {
    for (int n = 1; n <= 3; ++n) {
      CHECK(is_isotropic(Subspace::coordinate({1}, 2 * n)));
      CHECK_FALSE(is_isotropic(Subspace::coordinate({1, 2 * n}, 2 * n)));
    }
    Rng rng(41);
    for (int t = 0; t < 50; ++t) {
      const int n = static_cast<int>(rng.uniform(1, 3));
      const Subspace u = testgen::random_span(rng, 2 * n, static_cast<int>(rng.uniform(0, 2 * n)));
      const Subspace p = perp(u);
      CHECK(p.dim() == 2 * n - u.dim());
      CHECK(perp(p) == u);
      CHECK(is_isotropic(u) == p.contains(u));
    }
  }

  TEST_CASE("degenerate symplectic Grassmannian") {
    for (int k = 1; k <= 3; ++k) CHECK(in_sp_grass_a(Subspace::coordinate(coord_range(1, k), 6), k, 3));
    CHECK(in_sp_grass_a(span(2, {w(2, {{1, 1}, {4, 1}})}), 1, 2));
    // For k = n nothing is projected away; this plane is Lagrangian.
    CHECK(in_sp_grass_a(span(2, {w(2, {{1, 1}, {4, 1}}), w(2, {{2, 1}, {3, 1}})}), 2, 2));
    CHECK_FALSE(in_sp_grass_a(span(2, {w(2, {{1, 1}, {4, 1}}), w(2, {{2, 1}, {4, 1}})}), 2, 2));
    // n=3, k=2: coordinates 3,4 are dropped, leaving span(w_1, w_6).
    CHECK_FALSE(in_sp_grass_a(span(3, {w(3, {{1, 1}, {3, 1}}), w(3, {{6, 1}, {4, 1}})}), 2, 3));
    CHECK(in_sp_grass_a(span(3, {w(3, {{1, 1}, {4, 1}}), w(3, {{2, 1}, {3, 1}})}), 2, 3));
    CHECK_THROWS_AS(in_sp_grass_a(Subspace::coordinate({1}, 4), 2, 2), std::invalid_argument);
  }

  TEST_CASE("degenerate flag membership") {
    for (int n = 1; n <= 3; ++n)
      for (const auto& d : all_parabolics(n)) CHECK(in_sp_flag_a(coordinate_flag(d, n), n));
    const FlagPoint bad{{1, 2}, {span(2, {w(2, {{2, 1}})}), span(2, {w(2, {{2, 1}}), w(2, {{3, 1}})})}};
    CHECK_FALSE(in_sp_flag_a(bad, 2));
    const FlagPoint wrong_dim{{1, 2}, {Subspace::coordinate({1, 2}, 4), Subspace::coordinate({1, 2}, 4)}};
    CHECK_THROWS_AS(in_sp_flag_a(wrong_dim, 2), std::invalid_argument);
  }

  TEST_CASE("resolution membership") {
    for (int n = 1; n <= 3; ++n)
      for (const auto& d : all_parabolics(n)) CHECK(in_resolution(highest_weight_point(Parabolic(n, d)), Parabolic(n, d)));
    for (int n = 1; n <= 3; ++n)
      for (const auto& c : enumerate_fixed_points(n)) CHECK(in_resolution(fixed_point_realization(c), Parabolic::complete(n)));

    ResolutionPoint pt = highest_weight_point(Parabolic::complete(2));
    pt.spaces[Root{1, 2}] = Subspace::coordinate({3}, 4);
    CHECK_FALSE(in_resolution(pt, Parabolic::complete(2)));
    pt.spaces.erase(Root{1, 2});
    CHECK_THROWS_AS(in_resolution(pt, Parabolic::complete(2)), std::invalid_argument);
  }

  TEST_CASE("coordinate points of the resolution are exactly the admissible collections") {
    for (int n = 1; n <= 2; ++n) {
      const auto roots = positive_roots(RootSystem::type_c(n));
      std::vector<std::vector<IndexSet>> options;
      for (const Root& r : roots) {
        std::vector<IndexSet> opts;
        for (IndexSet s = 0; s < (1u << 2 * n); ++s) {
          if (set_size(s) != r.i) continue;
          bool inside = true;
          for (int l : members(s)) inside = inside && (l <= r.i || l > r.j);
          if (inside) opts.push_back(s);
        }
        options.push_back(opts);
      }
      std::vector<std::size_t> pick(roots.size(), 0);
      int members_found = 0;
      while (true) {
        AdmissibleCollection c(n);
        for (std::size_t t = 0; t < roots.size(); ++t) c.set(roots[t].i, roots[t].j, options[t][pick[t]]);
        const bool in = in_resolution(fixed_point_realization(c), Parabolic::complete(n));
        CHECK(in == is_admissible(c));
        members_found += in;
        std::size_t t = 0;
        while (t < roots.size() && ++pick[t] == options[t].size()) pick[t++] = 0;
        if (t == roots.size()) break;
      }
      CHECK(members_found == (n == 1 ? 2 : 16));
    }
  }

  TEST_CASE("projection and lift") {
    for (int n = 1; n <= 3; ++n)
      for (const auto& d : all_parabolics(n)) {
        const Parabolic p(n, d);
        CHECK(project_pi(highest_weight_point(p), p) == coordinate_flag(d, n));
        CHECK(lift(coordinate_flag(d, n), p) == highest_weight_point(p));
      }
    const FlagPoint bad{{1, 2}, {span(2, {w(2, {{2, 1}})}), span(2, {w(2, {{2, 1}}), w(2, {{3, 1}})})}};
    CHECK_THROWS_AS(lift(bad, Parabolic::complete(2)), InfeasibleLift);
  }

  TEST_CASE("lift round-trips on open-cell flags") {
    Rng rng(42);
    for (int n = 1; n <= 3; ++n)
      for (const auto& d : all_parabolics(n)) {
        const Parabolic p(n, d);
        for (int t = 0; t < 20; ++t) {
          const FlagPoint f = random_open_cell_flag(rng, p);
          REQUIRE(in_sp_flag_a(f, n));
          const ResolutionPoint pt = lift(f, p);
          CHECK(in_resolution(pt, p));
          CHECK(project_pi(pt, p) == f);
        }
      }
  }

  TEST_CASE("lift round-trips on special points") {
    Rng rng(43);
    for (int n = 1; n <= 3; ++n) {
      const Parabolic p = Parabolic::complete(n);
      for (const auto& c : enumerate_fixed_points(n)) {
        const FlagPoint f = project_pi(fixed_point_realization(c), p);
        REQUIRE(in_sp_flag_a(f, n));
        CHECK(project_pi(lift(f, p), p) == f);
      }
      for (const auto& d : all_parabolics(n)) {
        const Parabolic q(n, d);
        for (int t = 0; t < 20; ++t) {
          const FlagPoint f = project_pi(random_resolution_point(rng, q), q);
          REQUIRE(in_sp_flag_a(f, n));
          CHECK(project_pi(lift(f, q), q) == f);
        }
      }
    }
  }

  TEST_CASE("random resolution points are members") {
    Rng rng(44);
    for (int n = 1; n <= 3; ++n)
      for (const auto& d : all_parabolics(n))
        for (int t = 0; t < 10; ++t) CHECK(in_resolution(random_resolution_point(rng, Parabolic(n, d)), Parabolic(n, d)));
  }

  TEST_CASE("open cell criterion: leading Pluecker coordinates versus divisors") {
    Rng rng(45);
    int on = 0, off = 0;
    for (int n = 1; n <= 3; ++n) {
      const Parabolic p = Parabolic::complete(n);
      for (int t = 0; t < 60; ++t) {
        const ResolutionPoint pt = random_resolution_point(rng, p);
        const bool divisor = on_some_divisor(pt, p);
        CHECK(all_leading_pluecker_nonzero(pt) == !divisor);
        (divisor ? on : off)++;
      }
      for (int t = 0; t < 10; ++t) {
        const ResolutionPoint pt = lift(random_open_cell_flag(rng, p), p);
        CHECK(all_leading_pluecker_nonzero(pt));
        CHECK_FALSE(on_some_divisor(pt, p));
      }
      // Explicit divisor points: V_{i,j} = V_{i-1,j+1} + w_{j+1} at one position.
      for (const Root& r : p.radical()) {
        for (int t = 0; t < 5; ++t) {
          ResolutionPoint pt = random_resolution_point(rng, p);
          if (!in_divisor(pt, r.i, r.j)) continue;
          CHECK_FALSE(all_leading_pluecker_nonzero(pt));
        }
      }
    }
    CHECK(on > 0);
    CHECK(off > 0);
  }

  TEST_CASE("sections give divisor points") {
    for (int n = 1; n <= 3; ++n) {
      const Parabolic p = Parabolic::complete(n);
      for (const Root& r : p.radical()) {
        int hits = 0;
        for (const auto& c : enumerate_fixed_points(n)) {
          const ResolutionPoint pt = fixed_point_realization(c);
          if (!in_divisor(pt, r.i, r.j)) continue;
          ++hits;
          CHECK(pt.at(r.i, r.j).contains(w(n, {{r.j + 1, 1}})));
          CHECK_FALSE(all_leading_pluecker_nonzero(pt));
        }
        CHECK(hits > 0);
      }
    }
  }

  TEST_CASE("sigma involution") {
    Rng rng(46);
    for (int n = 1; n <= 3; ++n) {
      std::vector<Subspace> coord;
      for (int i = 1; i <= 2 * n - 1; ++i) coord.push_back(Subspace::coordinate(coord_range(1, i), 2 * n));
      CHECK(sigma_involution(coord) == coord);
      for (int t = 0; t < 50; ++t) {
        std::vector<Subspace> flags;
        for (int i = 1; i <= 2 * n - 1; ++i) flags.push_back(random_subspace(rng, 2 * n, i));
        CHECK(sigma_involution(sigma_involution(flags)) == flags);
      }
      for (int t = 0; t < 50; ++t) {
        const std::vector<Subspace> flags = open_cell_sl_flag(random_radical_element(rng, n));
        REQUIRE(in_sl_flag_a(flags, all_dims(n)));
        CHECK(sigma_involution(flags) == flags);
        FlagPoint trunc{coord_range(1, n), std::vector<Subspace>(flags.begin(), flags.begin() + n)};
        CHECK(in_sp_flag_a(trunc, n));
      }
    }
    CHECK_THROWS_AS(sigma_involution({Subspace::coordinate({1}, 4), Subspace::coordinate({1}, 4)}), std::invalid_argument);
  }

  TEST_CASE("flat family forms") {
    for (int n = 1; n <= 3; ++n)
      for (int k = 0; k <= n; ++k) CHECK(flat_family_form(1, n, k) == symplectic_form(n));
    const QMatrix j = flat_family_form(mpq_class(3), 2, 1);
    CHECK(j(0, 3) == 1);
    CHECK(j(1, 2) == 3);
    CHECK(j(2, 1) == -3);
    CHECK(j(3, 0) == -1);
  }

  TEST_CASE("isotropy transport along the flat family") {
    Rng rng(47);
    for (int t = 0; t < 30; ++t) {
      const int n = static_cast<int>(rng.uniform(1, 3));
      const int k = static_cast<int>(rng.uniform(1, n));
      const Subspace u = random_isotropic(rng, n, k);
      REQUIRE(u.dim() == k);
      mpq_class s = random_small_rational(rng);
      const TransportCheck c = isotropy_transport_check(u, s, n, k);
      CHECK(c.matrix_identity);
      CHECK(c.premise);
      CHECK(c.transported);
      CHECK(c.j0_matches_grass);
      CHECK(c.ok());
    }
    // J_0 isotropy versus the projection criterion on arbitrary k-spaces.
    for (int t = 0; t < 60; ++t) {
      const int n = static_cast<int>(rng.uniform(1, 3));
      const int k = static_cast<int>(rng.uniform(1, n));
      const Subspace u = random_subspace(rng, 2 * n, k, 1);
      CHECK(is_isotropic(u, flat_family_form(0, n, k)) == in_sp_grass_a(u, k, n));
    }
  }
}

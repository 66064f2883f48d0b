#include <doctest.h>

#include <set>

#include "spflag/polytope.hpp"

using namespace spflag;

namespace {

using Path = std::vector<Root>;

std::set<Path> path_set(const RootSystem& sys) {
  std::set<Path> out;
  for (const DyckPath& p : dyck_paths(sys)) out.insert(p.roots);
  return out;
}

// Every point of the box [0, max bound]^N that satisfies the inequalities.
std::vector<LatticePoint> box_enumerate(const PolytopeSpec& spec) {
  long cap = 0;
  for (const auto& q : spec.inequalities) cap = std::max(cap, q.bound);
  const std::size_t dim = spec.roots.size();
  std::vector<LatticePoint> out;
  LatticePoint p{std::vector<int>(dim, 0)};
  while (true) {
    if (satisfies(spec, p)) out.push_back(p);
    std::size_t k = dim;
    while (k > 0) {
      --k;
      if (p.s[k] < cap) {
        ++p.s[k];
        break;
      }
      p.s[k] = 0;
      if (k == 0) return out;
    }
    if (dim == 0) return out;
  }
}

std::vector<std::vector<int>> weights_up_to(int rank, int total) {
  std::vector<std::vector<int>> out;
  std::vector<int> m(rank, 0);
  while (true) {
    int s = 0;
    for (int x : m) s += x;
    if (s <= total) out.push_back(m);
    int k = 0;
    while (k < rank && m[k] == total) m[k++] = 0;
    if (k == rank) return out;
    ++m[k];
  }
}

LatticePoint point_of(const PolytopeSpec& spec, std::initializer_list<std::pair<Root, int>> entries) {
  LatticePoint p{std::vector<int>(spec.roots.size(), 0)};
  for (const auto& [r, v] : entries)
    for (std::size_t t = 0; t < spec.roots.size(); ++t)
      if (spec.roots[t] == r) p.s[t] = v;
  return p;
}

}  // namespace

TEST_SUITE("polytope") {
  TEST_CASE("Dyck paths") {
    CHECK(path_set(RootSystem::type_c(1)) == std::set<Path>{{{1, 1}}});
    CHECK(path_set(RootSystem::type_c(2)) ==
          std::set<Path>{{{1, 1}}, {{2, 2}}, {{1, 1}, {1, 2}, {1, 3}}, {{1, 1}, {1, 2}, {2, 2}}});
    CHECK(path_set(RootSystem::type_a(3)) == std::set<Path>{{{1, 1}}, {{2, 2}}, {{1, 1}, {1, 2}, {2, 2}}});
    for (int n = 1; n <= 4; ++n) {
      const RootSystem sys = RootSystem::type_c(n);
      for (const DyckPath& p : dyck_paths(sys)) {
        CHECK(p.start().i == p.start().j);
        for (std::size_t t = 1; t < p.roots.size(); ++t) {
          const Root a = p.roots[t - 1], b = p.roots[t];
          CHECK(((b.i == a.i && b.j == a.j + 1) || (b.i == a.i + 1 && b.j == a.j)));
          CHECK(sys.has_root(b.i, b.j));
        }
        CHECK((p.end().i == p.end().j || p.end().i + p.end().j == 2 * n));
      }
    }
  }

  TEST_CASE("inequalities for C2 and omega_1") {
    const PolytopeSpec spec = polytope_spec(DominantWeight({1, 0}), RootSystem::type_c(2));
    std::set<std::pair<std::set<Root>, long>> got;
    for (const Inequality& q : spec.inequalities) {
      std::set<Root> support;
      for (int k : q.support) support.insert(spec.roots[k]);
      got.insert({support, q.bound});
    }
    const std::set<std::pair<std::set<Root>, long>> expect{
        {{{1, 1}}, 1}, {{{2, 2}}, 0}, {{{1, 1}, {1, 2}, {1, 3}}, 1}, {{{1, 1}, {1, 2}, {2, 2}}, 1}};
    CHECK(got == expect);
    for (const Inequality& q : polytope_spec(DominantWeight({0, 0}), RootSystem::type_c(2)).inequalities)
      CHECK(q.bound == 0);
    const PolytopeSpec c1 = polytope_spec(DominantWeight({5}), RootSystem::type_c(1));
    REQUIRE(c1.inequalities.size() == 1);
    CHECK(c1.inequalities[0].bound == 5);
  }

  TEST_CASE("lattice points: hand values") {
    const PolytopeSpec w1 = polytope_spec(DominantWeight({1, 0}), RootSystem::type_c(2));
    const std::vector<LatticePoint> expect1{point_of(w1, {}), point_of(w1, {{{1, 1}, 1}}),
                                            point_of(w1, {{{1, 2}, 1}}), point_of(w1, {{{1, 3}, 1}})};
    const auto got1 = lattice_points(w1);
    CHECK(std::set<LatticePoint>(expect1.begin(), expect1.end()) == std::set<LatticePoint>(got1.begin(), got1.end()));
    const PolytopeSpec w2 = polytope_spec(DominantWeight({0, 1}), RootSystem::type_c(2));
    const std::vector<LatticePoint> expect2{point_of(w2, {}), point_of(w2, {{{2, 2}, 1}}),
                                            point_of(w2, {{{1, 2}, 1}}), point_of(w2, {{{1, 3}, 1}}),
                                            point_of(w2, {{{1, 3}, 1}, {{2, 2}, 1}})};
    const auto got2 = lattice_points(w2);
    CHECK(std::set<LatticePoint>(expect2.begin(), expect2.end()) == std::set<LatticePoint>(got2.begin(), got2.end()));
    const auto zero = lattice_points(polytope_spec(DominantWeight({0, 0, 0}), RootSystem::type_c(3)));
    REQUIRE(zero.size() == 1);
    CHECK(zero[0].s == std::vector<int>(9, 0));
  }

  TEST_CASE("DFS enumeration agrees with brute-force box search") {
    for (int n = 1; n <= 2; ++n)
      for (const auto& m : weights_up_to(n, 2)) {
        const PolytopeSpec spec = polytope_spec(DominantWeight(m), RootSystem::type_c(n));
        CHECK(lattice_points(spec) == box_enumerate(spec));
      }
    for (const auto& m : weights_up_to(2, 2)) {
      const PolytopeSpec spec = polytope_spec(DominantWeight(m), RootSystem::type_a(3));
      CHECK(lattice_points(spec) == box_enumerate(spec));
    }
    const PolytopeSpec c3 = polytope_spec(DominantWeight({1, 0, 0}), RootSystem::type_c(3));
    CHECK(lattice_points(c3) == box_enumerate(c3));
  }

  TEST_CASE("results do not depend on the thread count") {
    const PolytopeSpec spec = polytope_spec(DominantWeight({1, 1, 1}), RootSystem::type_c(3));
    const auto one = lattice_points(spec, 1);
    CHECK(lattice_points(spec, 3) == one);
    CHECK(count_lattice_points(spec, 4) == one.size());
    CHECK(graded_character(DominantWeight({2, 1}), RootSystem::type_c(2), 1) ==
          graded_character(DominantWeight({2, 1}), RootSystem::type_c(2), 5));
  }

  TEST_CASE("graded characters") {
    const GradedCharacter ch = graded_character(DominantWeight({1, 0}), RootSystem::type_c(2));
    GradedCharacter expect(2);
    expect.add(0, Weight(std::vector<int>{1, 0}));
    expect.add(1, Weight(std::vector<int>{0, 1}));
    expect.add(1, Weight(std::vector<int>{0, -1}));
    expect.add(1, Weight(std::vector<int>{-1, 0}));
    CHECK(ch == expect);
    for (int m = 0; m <= 5; ++m) {
      GradedCharacter c1(1);
      for (int k = 0; k <= m; ++k) c1.add(k, Weight(std::vector<int>{m - 2 * k}));
      CHECK(graded_character(DominantWeight({m}), RootSystem::type_c(1)) == c1);
    }
    const GradedCharacter triv = graded_character(DominantWeight({0, 0}), RootSystem::type_c(2));
    CHECK(triv.terms().size() == 1);
    CHECK(triv.total() == 1);
  }

  TEST_CASE("dimensions and Weyl agreement for type A") {
    CHECK(dimension(DominantWeight({1, 0}), RootSystem::type_c(2)) == 4);
    CHECK(dimension(DominantWeight({0, 1}), RootSystem::type_c(2)) == 5);
    CHECK(dimension(DominantWeight({0, 1, 0}), RootSystem::type_c(3)) == 14);
    for (int m = 2; m <= 4; ++m)
      for (const auto& w : weights_up_to(m - 1, 2)) {
        const RootSystem sys = RootSystem::type_a(m);
        CHECK(mpz_class(std::to_string(dimension(DominantWeight(w), sys))) ==
              weyl_dimension(DominantWeight(w), sys));
        CHECK(specialize_q1(graded_character(DominantWeight(w), sys).to_laurent()) ==
              weyl_character(DominantWeight(w), sys));
      }
  }

  TEST_CASE("monotonicity in lambda") {
    for (int n = 1; n <= 3; ++n)
      for (const auto& m : weights_up_to(n, 1))
        for (int k = 0; k < n; ++k) {
          auto bigger = m;
          ++bigger[k];
          const auto small = lattice_points(polytope_spec(DominantWeight(m), RootSystem::type_c(n)));
          const auto large = polytope_spec(DominantWeight(bigger), RootSystem::type_c(n));
          for (const LatticePoint& p : small) CHECK(satisfies(large, p));
        }
  }

  TEST_CASE("type C points embed into the type A polytope") {
    const DominantWeight w2({0, 1});
    const PolytopeSpec c = polytope_spec(w2, RootSystem::type_c(2));
    const PolytopeSpec a = polytope_spec(extend_to_sl(w2, 2), RootSystem::type_a(4));
    std::set<LatticePoint> images;
    for (const LatticePoint& p : lattice_points(c)) {
      const LatticePoint e = phi_point_embed(p, w2, 2);
      CHECK(satisfies(a, e));
      images.insert(e);
    }
    CHECK(images.size() == 5);
    const LatticePoint zero = phi_point_embed(LatticePoint{std::vector<int>(4, 0)}, w2, 2);
    CHECK(zero.s == std::vector<int>(6, 0));
    CHECK(extend_to_sl(DominantWeight({1, 2}), 2).m == std::vector<int>{1, 2, 0});
  }
}

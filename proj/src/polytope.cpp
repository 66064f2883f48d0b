#include "spflag/polytope.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <thread>

namespace spflag {

namespace {

bool is_path_end(const Root& r, const RootSystem& sys) {
  if (sys.kind() == Kind::A) return r.i == r.j;
  const int n = sys.size();
  return (r.i == r.j && r.j < n) || (r.i + r.j == 2 * n);
}

}  // namespace

std::vector<DyckPath> dyck_paths(const RootSystem& sys) {
  std::vector<DyckPath> out;
  std::vector<Root> cur;
  std::function<void()> walk = [&]() {
    const Root last = cur.back();
    if (is_path_end(last, sys)) out.push_back(DyckPath{cur});
    for (const Root next : {Root{last.i, last.j + 1}, Root{last.i + 1, last.j}}) {
      if (!sys.has_root(next.i, next.j)) continue;
      cur.push_back(next);
      walk();
      cur.pop_back();
    }
  };
  for (int i = 1; i <= sys.rank(); ++i) {
    cur = {Root{i, i}};
    walk();
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::pair<int, int> path_bound_range(const DyckPath& p, const RootSystem& sys) {
  const Root s = p.start(), e = p.end();
  if (s.i != s.j) throw std::invalid_argument("Dyck path must start at a simple root");
  if (sys.kind() == Kind::A || (e.i == e.j && e.j < sys.size())) return {s.i, e.j};
  return {s.i, sys.size()};
}

PolytopeSpec polytope_spec(const DominantWeight& lambda, const RootSystem& sys) {
  if (static_cast<int>(lambda.m.size()) != sys.rank())
    throw std::invalid_argument("lambda needs " + std::to_string(sys.rank()) + " coefficients for " +
                                sys.name());
  PolytopeSpec spec;
  spec.system = sys;
  spec.lambda = lambda;
  const RootIndex idx(sys);
  spec.roots = idx.roots();
  for (const DyckPath& p : dyck_paths(sys)) {
    Inequality q;
    for (const Root& r : p.roots) q.support.push_back(idx.at(r.i, r.j));
    std::sort(q.support.begin(), q.support.end());
    const auto [a, b] = path_bound_range(p, sys);
    for (int t = a; t <= b; ++t) q.bound += lambda.m[t - 1];
    spec.inequalities.push_back(std::move(q));
  }
  std::sort(spec.inequalities.begin(), spec.inequalities.end());
  spec.inequalities.erase(std::unique(spec.inequalities.begin(), spec.inequalities.end()),
                          spec.inequalities.end());
  return spec;
}

bool satisfies(const PolytopeSpec& spec, const LatticePoint& p) {
  if (p.s.size() != spec.roots.size()) return false;
  for (int v : p.s)
    if (v < 0) return false;
  for (const Inequality& q : spec.inequalities) {
    long sum = 0;
    for (int k : q.support) sum += p.s[k];
    if (sum > q.bound) return false;
  }
  return true;
}

namespace {

// Depth-first enumeration: every constraint is a bounded sum of nonnegative
// variables, so any partial assignment with nonnegative slack extends by zeros
// and the search never dead-ends.
class Enumerator {
 public:
  explicit Enumerator(const PolytopeSpec& spec) : spec_(spec) {
    by_root_.resize(spec.roots.size());
    for (std::size_t q = 0; q < spec.inequalities.size(); ++q)
      for (int k : spec.inequalities[q].support) by_root_[k].push_back(static_cast<int>(q));
  }

  long cap(int k, const std::vector<long>& slack) const {
    long c = -1;
    for (int q : by_root_[k]) c = (c < 0) ? slack[q] : std::min(c, slack[q]);
    // Roots appear in some path (the start of each path is simple), so c >= 0 here.
    return c;
  }

  template <class Visit>
  void run(int k, std::vector<int>& cur, std::vector<long>& slack, Visit& visit) const {
    if (k == static_cast<int>(cur.size())) {
      visit(cur);
      return;
    }
    const long c = cap(k, slack);
    for (long v = 0; v <= c; ++v) {
      cur[k] = static_cast<int>(v);
      for (int q : by_root_[k]) slack[q] -= v;
      run(k + 1, cur, slack, visit);
      for (int q : by_root_[k]) slack[q] += v;
    }
    cur[k] = 0;
  }

  std::vector<long> initial_slack() const {
    std::vector<long> s;
    for (const auto& q : spec_.inequalities) s.push_back(q.bound);
    return s;
  }

  const PolytopeSpec& spec() const { return spec_; }

 private:
  const PolytopeSpec& spec_;
  std::vector<std::vector<int>> by_root_;
};

// Splits the search on the value of the first coordinate. Each branch fills
// its own accumulator, so results do not depend on the thread count.
template <class Acc, class Visit>
std::vector<Acc> enumerate_branches(const PolytopeSpec& spec, int threads, Visit visit) {
  const Enumerator en(spec);
  const std::size_t nroots = spec.roots.size();
  if (nroots == 0) {
    std::vector<Acc> parts(1);
    std::vector<int> cur;
    visit(parts[0], cur);
    return parts;
  }
  const std::vector<long> slack0 = en.initial_slack();
  const int branches = static_cast<int>(en.cap(0, slack0) + 1);
  std::vector<Acc> parts(static_cast<std::size_t>(branches));
  auto branch = [&](int v) {
    std::vector<int> cur(nroots, 0);
    std::vector<long> slack = slack0;
    cur[0] = v;
    for (std::size_t q = 0; q < spec.inequalities.size(); ++q)
      for (int k : spec.inequalities[q].support)
        if (k == 0) slack[q] -= v;
    Acc& acc = parts[v];
    auto leaf = [&](const std::vector<int>& s) { visit(acc, s); };
    en.run(1, cur, slack, leaf);
  };
  threads = std::max(1, std::min(threads, branches));
  if (threads == 1) {
    for (int v = 0; v < branches; ++v) branch(v);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t)
      pool.emplace_back([&, t]() {
        for (int v = t; v < branches; v += threads) branch(v);
      });
    for (auto& th : pool) th.join();
  }
  return parts;
}

}  // namespace

std::vector<LatticePoint> lattice_points(const PolytopeSpec& spec, int threads) {
  auto parts = enumerate_branches<std::vector<LatticePoint>>(
      spec, threads,
      [](std::vector<LatticePoint>& acc, const std::vector<int>& s) { acc.push_back({s}); });
  std::vector<LatticePoint> all;
  for (auto& p : parts)
    for (auto& x : p) all.push_back(std::move(x));
  std::sort(all.begin(), all.end());
  return all;
}

std::uint64_t count_lattice_points(const PolytopeSpec& spec, int threads) {
  auto parts = enumerate_branches<std::uint64_t>(
      spec, threads, [](std::uint64_t& acc, const std::vector<int>&) { ++acc; });
  std::uint64_t total = 0;
  for (auto c : parts) total += c;
  return total;
}

void GradedCharacter::add(int qdeg, const Weight& w, std::uint64_t mult) {
  if (w.dim() != eps_dim_) throw std::invalid_argument("GradedCharacter: weight dimension mismatch");
  if (mult == 0) return;
  terms_[Key{qdeg, w.eps}] += mult;
}

std::uint64_t GradedCharacter::total() const {
  std::uint64_t t = 0;
  for (const auto& [k, v] : terms_) t += v;
  return t;
}

LaurentPoly GradedCharacter::to_laurent() const {
  LaurentPoly p(eps_dim_);
  for (const auto& [k, v] : terms_) p.add_term(Monomial{k.second, k.first}, mpz_class(v));
  return p;
}

std::pair<Weight, int> point_weight(const PolytopeSpec& spec, const LatticePoint& p) {
  Weight w = to_eps(spec.lambda, spec.system);
  int q = 0;
  for (std::size_t k = 0; k < spec.roots.size(); ++k) {
    if (p.s[k] == 0) continue;
    w -= p.s[k] * root_weight(spec.system, spec.roots[k]);
    q += p.s[k];
  }
  return {w, q};
}

GradedCharacter graded_character(const DominantWeight& lambda, const RootSystem& sys,
                                 int threads) {
  const PolytopeSpec spec = polytope_spec(lambda, sys);
  GradedCharacter ch(sys.eps_dim());
  for (const LatticePoint& p : lattice_points(spec, threads)) {
    const auto [w, q] = point_weight(spec, p);
    ch.add(q, w);
  }
  return ch;
}

std::uint64_t dimension(const DominantWeight& lambda, const RootSystem& sys, int threads) {
  return count_lattice_points(polytope_spec(lambda, sys), threads);
}

DominantWeight extend_to_sl(const DominantWeight& lambda, int n) {
  if (static_cast<int>(lambda.m.size()) != n)
    throw std::invalid_argument("extend_to_sl: lambda needs n coefficients");
  std::vector<int> m = lambda.m;
  m.resize(2 * n - 1, 0);
  return DominantWeight(m);
}

LatticePoint phi_point_embed(const LatticePoint& p, const DominantWeight& lambda, int n) {
  const RootSystem c = RootSystem::type_c(n);
  const RootSystem a = RootSystem::type_a(2 * n);
  const RootIndex cidx(c), aidx(a);
  if (p.s.size() != cidx.size()) throw std::invalid_argument("phi_point_embed: wrong point size");
  LatticePoint out{std::vector<int>(aidx.size(), 0)};
  for (std::size_t k = 0; k < cidx.size(); ++k) {
    const Root g = phi_embed(cidx.roots()[k], n);
    out.s[aidx.at(g.i, g.j)] = p.s[k];
  }
  if (!satisfies(polytope_spec(extend_to_sl(lambda, n), a), out))
    throw std::logic_error("embedded point violates an sl inequality");
  return out;
}

}  // namespace spflag

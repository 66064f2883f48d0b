#include "spflag/fixedpoints.hpp"

#include <algorithm>
#include <exception>
#include <bit>
#include <map>
#include <thread>

#include "spflag/polytope.hpp"

namespace spflag {

IndexSet index_set(const std::vector<int>& ms) {
  IndexSet s = 0;
  for (int l : ms) {
    if (l < 1 || l > 32) throw std::out_of_range("index_set: index out of range");
    s |= 1u << (l - 1);
  }
  return s;
}

std::vector<int> members(IndexSet s) {
  std::vector<int> out;
  for (int l = 1; s != 0; ++l, s >>= 1)
    if (s & 1u) out.push_back(l);
  return out;
}

int set_size(IndexSet s) { return std::popcount(s); }

namespace {

// Basis indices of W_{i,j}: {1..i} and {j+1..2n}.
IndexSet ambient(int i, int j, int n) {
  IndexSet s = 0;
  for (int l = 1; l <= i; ++l) s |= 1u << (l - 1);
  for (int l = j + 1; l <= 2 * n; ++l) s |= 1u << (l - 1);
  return s;
}

IndexSet mirror(IndexSet s, int n) {
  IndexSet m = 0;
  for (int l : members(s)) m |= 1u << (2 * n - l);
  return m;
}

// The two admissible values of S_{i,j} \ S_{i-1,j} given the entries chosen before it.
IndexSet choices(const AdmissibleCollection& c, int i, int j) {
  const int n = c.n();
  const IndexSet base = c.below(i, j);
  if (i + j < 2 * n) return (c.at(i, j + 1) | (1u << j)) & ~base;
  // The chosen vector must also avoid base itself, not only its mirror, or the
  // span would not grow.
  return ambient(i, j, n) & ~base & ~mirror(base, n);
}

}  // namespace

AdmissibleCollection::AdmissibleCollection(int n)
    : n_(n), index_(std::make_shared<const RootIndex>(RootSystem::type_c(n))) {
  if (2 * n > 32) throw std::invalid_argument("AdmissibleCollection supports n <= 16");
  sets_.assign(index_->size(), 0u);
}

AdmissibleCollection AdmissibleCollection::highest_weight(int n) {
  AdmissibleCollection c(n);
  for (const Root& r : c.index().roots()) {
    std::vector<int> ms;
    for (int l = 1; l <= r.i; ++l) ms.push_back(l);
    c.set(r.i, r.j, index_set(ms));
  }
  return c;
}

std::string AdmissibleCollection::to_string() const {
  std::string s;
  for (const Root& r : index_->roots()) {
    s += "S" + std::to_string(r.i) + "," + std::to_string(r.j) + "={";
    const auto ms = members(at(r.i, r.j));
    for (std::size_t k = 0; k < ms.size(); ++k) s += (k ? "," : "") + std::to_string(ms[k]);
    s += "} ";
  }
  return s;
}

bool is_admissible(const AdmissibleCollection& c) {
  const int n = c.n();
  for (const Root& r : c.index().roots()) {
    const int i = r.i, j = r.j;
    const IndexSet s = c.at(i, j);
    if (set_size(s) != i || (s & ~ambient(i, j, n)) != 0) return false;
    if (c.index().find(i + 1, j) >= 0 && (s & ~c.at(i + 1, j)) != 0) return false;
    if (c.index().find(i, j + 1) >= 0 && (s & ~(c.at(i, j + 1) | (1u << j))) != 0) return false;
    if (i + j == 2 * n && (s & mirror(s, n)) != 0) return false;
  }
  return true;
}

std::vector<AdmissibleCollection> enumerate_fixed_points(int n) {
  AdmissibleCollection cur(n);
  const std::vector<Root>& order = cur.index().roots();
  std::vector<AdmissibleCollection> out;
  // Roots are ordered so that (i-1,j) and (i,j+1) precede (i,j).
  auto dfs = [&](auto&& self, std::size_t k) -> void {
    if (k == order.size()) {
      out.push_back(cur);
      return;
    }
    const Root r = order[k];
    const IndexSet opts = choices(cur, r.i, r.j);
    if (set_size(opts) != 2)
      throw std::logic_error("fixed point enumeration: expected two choices at " + to_string(r));
    for (int l : members(opts)) {
      cur.set(r.i, r.j, cur.below(r.i, r.j) | (1u << (l - 1)));
      self(self, k + 1);
    }
    cur.set(r.i, r.j, 0u);
  };
  dfs(dfs, 0);
  return out;
}

std::pair<int, int> ab_pair(const AdmissibleCollection& c, int i, int j) {
  const IndexSet opts = choices(c, i, j);
  if (set_size(opts) != 2)
    throw std::domain_error("ab_pair: candidate set at " + to_string(Root{i, j}) + " has " +
                            std::to_string(set_size(opts)) + " elements, expected 2");
  const IndexSet added = c.at(i, j) & ~c.below(i, j);
  if (set_size(added) != 1 || (added & opts) == 0 || (c.below(i, j) & ~c.at(i, j)) != 0)
    throw std::domain_error("ab_pair: S_{i,j} is not S_{i-1,j} plus one candidate at " +
                            to_string(Root{i, j}));
  const int a = std::countr_zero(added) + 1;
  const int b = std::countr_zero(opts & ~added) + 1;
  return {a, b};
}

ExtendedWeight wtq_component(IndexSet s, int i, int n) {
  ExtendedWeight w{Weight(n), 0};
  for (int l : members(s)) {
    if (l > 2 * n) throw std::out_of_range("wtq_component: index beyond 2n");
    if (l <= n)
      w.weight.eps[l - 1] += 1;
    else
      w.weight.eps[2 * n - l] -= 1;
    if (l > i) ++w.qdeg;
  }
  return w;
}

ExtendedWeight abl_numerator_weight(const AdmissibleCollection& c, const DominantWeight& lambda) {
  const int n = c.n();
  if (static_cast<int>(lambda.m.size()) != n)
    throw std::invalid_argument("abl_numerator_weight: lambda needs n coefficients");
  ExtendedWeight w{Weight(n), 0};
  for (int i = 1; i <= n; ++i) {
    const ExtendedWeight wi = wtq_component(c.at(i, i), i, n);
    w.weight += lambda.m[i - 1] * wi.weight;
    w.qdeg += lambda.m[i - 1] * wi.qdeg;
  }
  return w;
}

std::vector<AblTerm> abl_terms(const DominantWeight& lambda, int n) {
  std::vector<AblTerm> out;
  for (const AdmissibleCollection& c : enumerate_fixed_points(n)) {
    AblTerm t;
    t.numerator = abl_numerator_weight(c, lambda).monomial();
    for (const Root& r : c.index().roots()) {
      const auto [a, b] = ab_pair(c, r.i, r.j);
      const IndexSet s = c.at(r.i, r.j);
      const IndexSet swapped = (s & ~(1u << (a - 1))) | (1u << (b - 1));
      const ExtendedWeight from = wtq_component(s, r.i, n);
      const ExtendedWeight to = wtq_component(swapped, r.i, n);
      t.deltas.push_back(Monomial{(to.weight - from.weight).eps, to.qdeg - from.qdeg});
    }
    out.push_back(std::move(t));
  }
  return out;
}

namespace {

mpq_class term_value(const AblTerm& t, const RationalPoint& pt) {
  mpq_class den = 1;
  for (const Monomial& d : t.deltas) {
    const mpq_class f = 1 - evaluate(d, pt);
    if (sgn(f) == 0) throw DenominatorZero("ABL denominator vanishes at " + pt.to_string());
    den *= f;
  }
  return evaluate(t.numerator, pt) / den;
}

}  // namespace

mpq_class abl_evaluate(const std::vector<AblTerm>& terms, const RationalPoint& pt, int threads) {
  threads = std::max(1, std::min<int>(threads, static_cast<int>(terms.size())));
  if (threads <= 1) {
    mpq_class s = 0;
    for (const AblTerm& t : terms) s += term_value(t, pt);
    return s;
  }
  std::vector<mpq_class> partial(threads);
  std::vector<std::exception_ptr> errors(threads);
  std::vector<std::thread> pool;
  const std::size_t chunk = (terms.size() + threads - 1) / threads;
  for (int k = 0; k < threads; ++k)
    pool.emplace_back([&, k]() {
      try {
        const std::size_t lo = k * chunk, hi = std::min(terms.size(), lo + chunk);
        for (std::size_t x = lo; x < hi; ++x) partial[k] += term_value(terms[x], pt);
      } catch (...) {
        errors[k] = std::current_exception();
      }
    });
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  mpq_class s = 0;
  for (const auto& p : partial) s += p;
  return s;
}

mpq_class abl_evaluate(const DominantWeight& lambda, const RationalPoint& pt, int threads) {
  const int n = static_cast<int>(lambda.m.size());
  if (static_cast<int>(pt.z.size()) != n)
    throw std::invalid_argument("abl_evaluate: point has wrong number of coordinates");
  return abl_evaluate(abl_terms(lambda, n), pt, threads);
}

std::string to_string(Convention c) { return c == Convention::Direct ? "direct" : "inverted"; }

RationalPoint sample_rational_point(Rng& rng, int nvars) {
  static const int primes[] = {2, 3, 5, 7, 11, 13, 17};
  auto coord = [&rng]() {
    const int a = primes[rng.uniform(0, 6)];
    int b;
    do b = primes[rng.uniform(0, 6)];
    while (b == a);
    return mpq_class(a, b);
  };
  // Coordinates equal to each other or to an inverse zero out root factors
  // such as 1 - z_a/z_b, so those are redrawn.
  std::vector<mpq_class> used;
  auto fresh = [&]() {
    while (true) {
      const mpq_class c = coord();
      const bool clash = std::any_of(used.begin(), used.end(),
                                     [&](const mpq_class& u) { return u == c || u * c == 1; });
      if (!clash || used.size() >= 20) {
        used.push_back(c);
        return c;
      }
    }
  };
  RationalPoint pt;
  for (int k = 0; k < nvars; ++k) pt.z.push_back(fresh());
  pt.q = fresh();
  return pt;
}

AblReport abl_verify(const DominantWeight& lambda, int trials, std::uint64_t seed, int threads) {
  if (trials < 1) throw std::invalid_argument("abl_verify: trials must be positive");
  const int n = static_cast<int>(lambda.m.size());
  const RootSystem sys = RootSystem::type_c(n);
  const LaurentPoly ch = graded_character(lambda, sys, threads).to_laurent();
  const std::vector<AblTerm> terms = abl_terms(lambda, n);

  Rng rng(seed);
  AblReport report;
  const int max_attempts = 50 * trials;
  int attempts = 0;
  while (static_cast<int>(report.points.size()) < trials && attempts < max_attempts) {
    ++attempts;
    const RationalPoint pt = sample_rational_point(rng, n);
    AblPointResult r;
    try {
      r.abl = abl_evaluate(terms, pt, threads);
    } catch (const DenominatorZero&) {
      ++report.resampled;
      continue;
    }
    r.point = pt;
    r.polytope = evaluate(ch, pt);
    r.equal = r.abl == r.polytope;
    report.points.push_back(std::move(r));
  }
  if (report.points.empty())
    throw std::runtime_error("abl_verify: every sampled point hit a vanishing denominator (" +
                             std::to_string(attempts) + " attempts)");

  const auto all_equal = [](const std::vector<AblPointResult>& ps) {
    return std::all_of(ps.begin(), ps.end(), [](const AblPointResult& p) { return p.equal; });
  };
  if (all_equal(report.points)) {
    report.matched = static_cast<int>(report.points.size()) == trials;
    return report;
  }
  // Retry with z -> 1/z, q -> 1/q on the fixed-point side.
  std::vector<AblPointResult> inverted = report.points;
  for (auto& r : inverted) {
    r.abl = abl_evaluate(terms, r.point.inverted(), threads);
    r.equal = r.abl == r.polytope;
  }
  if (all_equal(inverted)) {
    report.points = std::move(inverted);
    report.convention = Convention::Inverted;
    report.matched = static_cast<int>(report.points.size()) == trials;
  }
  return report;
}

bool abl_symbolic_check(const DominantWeight& lambda, Convention convention) {
  const int n = static_cast<int>(lambda.m.size());
  const std::vector<AblTerm> terms = abl_terms(lambda, n);

  // Rewrite every factor as 1/(1 - e^c) with c the larger of delta, -delta:
  // 1/(1 - e^{-c}) = -e^{c}/(1 - e^{c}).
  struct Normalized {
    LaurentPoly numerator;
    std::map<Monomial, int> mult;
  };
  std::vector<Normalized> norm;
  std::map<Monomial, int> max_mult;
  for (const AblTerm& t : terms) {
    Normalized x{LaurentPoly::monomial(t.numerator), {}};
    for (const Monomial& d : t.deltas) {
      const Monomial inv = d.inverse();
      if (d == inv) throw std::logic_error("abl_symbolic_check: zero denominator weight");
      if (d < inv) {
        x.numerator = (-1) * x.numerator.times(inv);
        ++x.mult[inv];
      } else {
        ++x.mult[d];
      }
    }
    for (const auto& [c, k] : x.mult) max_mult[c] = std::max(max_mult[c], k);
    norm.push_back(std::move(x));
  }

  const LaurentPoly one = LaurentPoly::constant(n, 1);
  auto factor = [&](const Monomial& c) { return one - LaurentPoly::monomial(c); };
  LaurentPoly lhs(n);
  for (const Normalized& x : norm) {
    LaurentPoly p = x.numerator;
    for (const auto& [c, k] : max_mult) {
      const auto it = x.mult.find(c);
      const int have = it == x.mult.end() ? 0 : it->second;
      for (int e = have; e < k; ++e) p = p * factor(c);
    }
    lhs += p;
  }

  LaurentPoly ch = graded_character(lambda, RootSystem::type_c(n)).to_laurent();
  if (convention == Convention::Inverted) {
    LaurentPoly inv(n);
    for (const auto& [m, c] : ch.terms()) inv.add_term(m.inverse(), c);
    ch = inv;
  }
  LaurentPoly rhs = ch;
  for (const auto& [c, k] : max_mult)
    for (int e = 0; e < k; ++e) rhs = rhs * factor(c);
  return lhs == rhs;
}

}  // namespace spflag

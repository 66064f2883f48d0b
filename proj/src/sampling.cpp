#include "spflag/sampling.hpp"

#include <stdexcept>

namespace spflag {

QMatrix random_radical_element(Rng& rng, int n, int bound) {
  QMatrix x(2 * n, 2 * n);
  for (const Root& r : positive_roots(RootSystem::type_c(n))) {
    const long c = rng.uniform(-bound, bound);
    if (c != 0) x = x + mpq_class(c) * root_vector_matrix(r, n);
  }
  return x;
}

Subspace open_cell_space(const QMatrix& x, int k) {
  const int dim = x.rows();
  std::vector<Vec> cols;
  for (int c = 1; c <= k; ++c) {
    Vec v(dim, mpq_class(0));
    v[c - 1] = 1;
    for (int r = k + 1; r <= dim; ++r) v[r - 1] = x(r - 1, c - 1);
    cols.push_back(std::move(v));
  }
  return Subspace::span(cols, dim);
}

FlagPoint open_cell_flag(const QMatrix& x, const std::vector<int>& d) {
  FlagPoint f{d, {}};
  for (int k : d) f.spaces.push_back(open_cell_space(x, k));
  return f;
}

std::vector<Subspace> open_cell_sl_flag(const QMatrix& x) {
  std::vector<Subspace> out;
  for (int k = 1; k < x.rows(); ++k) out.push_back(open_cell_space(x, k));
  return out;
}

FlagPoint random_open_cell_flag(Rng& rng, const Parabolic& p) {
  return open_cell_flag(random_radical_element(rng, p.n()), p.d());
}

namespace {

// A vector of `upper` outside `lower`: sometimes a basis row, otherwise a
// random small combination.
Vec pick_outside(Rng& rng, const Subspace& upper, const Subspace& lower) {
  const std::vector<Vec> basis = upper.vectors();
  if (rng.uniform(0, 2) == 0) {
    std::vector<const Vec*> outside;
    for (const Vec& b : basis)
      if (!lower.contains(b)) outside.push_back(&b);
    if (outside.empty()) throw std::logic_error("pick_outside: fiber is empty");
    return *outside[rng.uniform(0, static_cast<std::int64_t>(outside.size()) - 1)];
  }
  for (int attempt = 0; attempt < 1000; ++attempt) {
    Vec v(upper.ambient(), mpq_class(0));
    for (const Vec& b : basis) {
      const long c = rng.uniform(-2, 2);
      if (c == 0) continue;
      for (std::size_t t = 0; t < v.size(); ++t) v[t] += c * b[t];
    }
    if (!lower.contains(v)) return v;
  }
  throw std::logic_error("pick_outside: could not leave the lower bound");
}

}  // namespace

ResolutionPoint random_resolution_point(Rng& rng, const Parabolic& p) {
  const int n = p.n();
  const QMatrix j = symplectic_form(n);
  ResolutionPoint pt{n, {}};
  for (const Root& r : p.radical()) {
    const Subspace lower = r.i == 1 ? Subspace(2 * n) : pt.at(r.i - 1, r.j);
    Subspace upper = w_space(r.i, r.j, n);
    if (r.i + r.j < 2 * n)
      upper = upper.intersect(pt.at(r.i, r.j + 1) + Subspace::coordinate({r.j + 1}, 2 * n));
    else
      upper = upper.intersect(perp(lower, j));
    if (upper.dim() != r.i + 1 || !upper.contains(lower))
      throw std::logic_error("random_resolution_point: fiber at " + to_string(r) + " is not a line pencil");
    const Vec v = pick_outside(rng, upper, lower);
    pt.spaces.emplace(r, lower + Subspace::span({v}, 2 * n));
  }
  return pt;
}

Subspace random_isotropic(Rng& rng, int n, int k, int steps) {
  if (k > n) throw std::invalid_argument("random_isotropic: k must not exceed n");
  const QMatrix j = symplectic_form(n);
  std::vector<Vec> vs = Subspace::coordinate(coord_range(1, k), 2 * n).vectors();
  for (int s = 0; s < steps; ++s) {
    Vec t(2 * n, mpq_class(0));
    for (auto& x : t) x = rng.uniform(-2, 2);
    long c = 0;
    while (c == 0) c = rng.uniform(-2, 2);
    for (Vec& x : vs) {
      const mpq_class f = c * pairing(j, t, x);
      for (int m = 0; m < 2 * n; ++m) x[m] += f * t[m];
    }
  }
  return Subspace::span(vs, 2 * n);
}

Subspace random_subspace(Rng& rng, int ambient, int dim, int bound) {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<Vec> vs(dim, Vec(ambient));
    for (auto& v : vs)
      for (auto& x : v) x = rng.uniform(-bound, bound);
    Subspace s = Subspace::span(vs, ambient);
    if (s.dim() == dim) return s;
  }
  throw std::logic_error("random_subspace: rank deficiency persisted");
}

mpq_class random_small_rational(Rng& rng, int bound) {
  long a = 0;
  while (a == 0) a = rng.uniform(-bound, bound);
  mpq_class q{mpz_class(a), mpz_class(static_cast<long>(rng.uniform(1, bound)))};
  q.canonicalize();
  return q;
}

}  // namespace spflag

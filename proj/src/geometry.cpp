#include "spflag/geometry.hpp"

#include <algorithm>
#include <string>

namespace spflag {

QMatrix symplectic_form(int n) {
  if (n < 1) throw std::invalid_argument("symplectic_form: n must be positive");
  QMatrix j(2 * n, 2 * n);
  for (int r = 1; r <= 2 * n; ++r) j(r - 1, 2 * n - r) = r <= n ? 1 : -1;
  return j;
}

mpq_class pairing(const QMatrix& j, const Vec& u, const Vec& v) {
  mpq_class s = 0;
  for (int r = 0; r < j.rows(); ++r) {
    if (sgn(u[r]) == 0) continue;
    for (int c = 0; c < j.cols(); ++c)
      if (sgn(j(r, c)) != 0 && sgn(v[c]) != 0) s += u[r] * j(r, c) * v[c];
  }
  return s;
}

static int half(const Subspace& u) {
  if (u.ambient() % 2 != 0 || u.ambient() == 0)
    throw std::invalid_argument("symplectic ambient space must have even positive dimension");
  return u.ambient() / 2;
}

bool is_isotropic(const Subspace& u, const QMatrix& j) {
  const QMatrix& b = u.basis();
  return (b * j * b.transpose()).is_zero();
}

bool is_isotropic(const Subspace& u) { return is_isotropic(u, symplectic_form(half(u))); }

Subspace perp(const Subspace& u, const QMatrix& j) {
  if (u.dim() == 0) return Subspace::whole(u.ambient());
  return Subspace::span(null_space(u.basis() * j));
}

Subspace perp(const Subspace& u) { return perp(u, symplectic_form(half(u))); }

std::vector<int> coord_range(int lo, int hi) {
  std::vector<int> out;
  for (int x = lo; x <= hi; ++x) out.push_back(x);
  return out;
}

Subspace w_space(int i, int j, int n) {
  std::vector<int> idx = coord_range(1, i);
  for (int l = j + 1; l <= 2 * n; ++l) idx.push_back(l);
  return Subspace::coordinate(idx, 2 * n);
}

bool in_sp_grass_a(const Subspace& u, int k, int n) {
  if (u.ambient() != 2 * n) throw std::invalid_argument("in_sp_grass_a: ambient dimension is not 2n");
  if (u.dim() != k || k > n)
    throw std::invalid_argument("in_sp_grass_a: expected a " + std::to_string(k) +
                                "-dimensional subspace with k <= n, got dimension " +
                                std::to_string(u.dim()));
  return is_isotropic(u.kill(coord_range(k + 1, 2 * n - k)));
}

const Subspace& FlagPoint::at_dim(int k) const {
  for (std::size_t l = 0; l < d.size(); ++l)
    if (d[l] == k) return spaces.at(l);
  throw std::out_of_range("flag has no space of dimension " + std::to_string(k));
}

FlagPoint coordinate_flag(const std::vector<int>& d, int n) {
  validate_d(d, n);
  FlagPoint f{d, {}};
  for (int k : d) f.spaces.push_back(Subspace::coordinate(coord_range(1, k), 2 * n));
  return f;
}

static void check_flag_shape(const FlagPoint& f, int n) {
  validate_d(f.d, n);
  if (f.spaces.size() != f.d.size()) throw std::invalid_argument("flag: one space per entry of d");
  for (std::size_t l = 0; l < f.d.size(); ++l) {
    if (f.spaces[l].ambient() != 2 * n) throw std::invalid_argument("flag: ambient dimension is not 2n");
    if (f.spaces[l].dim() != f.d[l])
      throw std::invalid_argument("flag: V_" + std::to_string(f.d[l]) + " has dimension " +
                                  std::to_string(f.spaces[l].dim()));
  }
}

bool in_sp_flag_a(const FlagPoint& f, int n) {
  check_flag_shape(f, n);
  for (std::size_t l = 0; l < f.d.size(); ++l)
    if (!in_sp_grass_a(f.spaces[l], f.d[l], n)) return false;
  return in_sl_flag_a(f.spaces, f.d);
}

bool in_sl_flag_a(const std::vector<Subspace>& spaces, const std::vector<int>& dims) {
  if (spaces.size() != dims.size()) throw std::invalid_argument("in_sl_flag_a: shape mismatch");
  for (std::size_t l = 0; l < spaces.size(); ++l)
    if (spaces[l].dim() != dims[l]) throw std::invalid_argument("in_sl_flag_a: dimension mismatch");
  for (std::size_t l = 0; l + 1 < spaces.size(); ++l) {
    const Subspace projected = spaces[l].kill(coord_range(dims[l] + 1, dims[l + 1]));
    if (!spaces[l + 1].contains(projected)) return false;
  }
  return true;
}

const Subspace& ResolutionPoint::at(int i, int j) const {
  auto it = spaces.find(Root{i, j});
  if (it == spaces.end()) throw std::out_of_range("resolution point has no V" + to_string(Root{i, j}));
  return it->second;
}

ResolutionPoint highest_weight_point(const Parabolic& p) {
  ResolutionPoint pt{p.n(), {}};
  for (const Root& r : p.radical())
    pt.spaces.emplace(r, Subspace::coordinate(coord_range(1, r.i), 2 * p.n()));
  return pt;
}

bool in_resolution(const ResolutionPoint& pt, const Parabolic& p) {
  const int n = p.n();
  if (pt.n != n || pt.spaces.size() != p.radical().size())
    throw std::invalid_argument("resolution point shape does not match P_d");
  for (const Root& r : p.radical())
    if (!pt.spaces.count(r)) throw std::invalid_argument("resolution point lacks V" + to_string(r));
  for (const auto& [r, v] : pt.spaces) {
    if (v.ambient() != 2 * n) throw std::invalid_argument("resolution point: ambient is not 2n");
    if (v.dim() != r.i) return false;
    if (!w_space(r.i, r.j, n).contains(v)) return false;
    if (p.contains(r.i + 1, r.j) && !pt.at(r.i + 1, r.j).contains(v)) return false;
    if (p.contains(r.i, r.j + 1) && !pt.at(r.i, r.j + 1).contains(v.kill({r.j + 1}))) return false;
    if (r.i + r.j == 2 * n && !is_isotropic(v)) return false;
  }
  return true;
}

FlagPoint project_pi(const ResolutionPoint& pt, const Parabolic& p) {
  FlagPoint f{p.d(), {}};
  for (int k : p.d()) f.spaces.push_back(pt.at(k, k));
  return f;
}

namespace {

// Rows whose vanishing against v means <P v, P b> = 0 for each basis vector b,
// where P zeroes the coordinates in `killed`.
Subspace isotropy_constraints(const Subspace& v, const std::vector<int>& killed, const QMatrix& j) {
  const Subspace pv = v.kill(killed);
  std::vector<Vec> rows;
  for (const Vec& b : pv.vectors()) {
    Vec r(j.cols(), mpq_class(0));
    for (int c = 0; c < j.cols(); ++c) {
      mpq_class s = 0;
      for (int k = 0; k < j.rows(); ++k)
        if (sgn(b[k]) != 0 && sgn(j(k, c)) != 0) s += b[k] * j(k, c);
      r[c] = s;
    }
    for (int l : killed) r[l - 1] = 0;
    rows.push_back(std::move(r));
  }
  return Subspace::span(rows, j.cols());
}

}  // namespace

ResolutionPoint lift(const FlagPoint& f, const Parabolic& p) {
  const int n = p.n();
  check_flag_shape(f, n);
  if (f.d != p.d()) throw std::invalid_argument("lift: flag indices differ from d");
  const QMatrix jform = symplectic_form(n);
  ResolutionPoint out{n, {}};
  auto fail = [](const Root& r, const std::string& why) {
    throw InfeasibleLift("lift infeasible at V" + to_string(r) + ": " + why);
  };

  for (int j = 1; j <= 2 * n - 1; ++j)
    for (int i = j; i >= 1; --i) {
      if (!p.contains(i, j)) continue;
      const Root r{i, j};
      Subspace lower(2 * n);
      for (int a = 1; a <= i; ++a)
        if (p.contains(a, j - 1)) lower = lower + out.at(a, j - 1).kill({j});
      Subspace upper = w_space(i, j, n);
      if (p.contains(i + 1, j)) upper = upper.intersect(out.at(i + 1, j));
      for (std::size_t l = 0; l < f.d.size(); ++l)
        if (f.d[l] > j) upper = upper.intersect(f.spaces[l].kill_preimage(coord_range(j + 1, f.d[l])));
      // Isotropy that V_{i,2n-i} will inherit from this space.
      const std::vector<int> killed = coord_range(j + 1, 2 * n - i);

      if (!upper.contains(lower)) fail(r, "lower bound escapes upper bound");
      if (lower.dim() > i) fail(r, "lower bound has dimension " + std::to_string(lower.dim()));
      Subspace v = lower;
      if (i == j && p.contains_d(i)) {
        v = f.at_dim(i);
        if (!v.contains(lower)) fail(r, "given V_" + std::to_string(i) + " misses the lower bound");
        if (!upper.contains(v)) fail(r, "given V_" + std::to_string(i) + " exceeds the upper bound");
      } else {
        while (v.dim() < i) {
          const Subspace feasible = upper.intersect(isotropy_constraints(v, killed, jform).annihilator());
          bool grown = false;
          for (const Vec& cand : feasible.vectors())
            if (!v.contains(cand)) {
              v = v + Subspace::span({cand}, 2 * n);
              grown = true;
              break;
            }
          if (!grown) fail(r, "no admissible extension");
        }
      }
      if (!is_isotropic(v.kill(killed), jform)) fail(r, "projection is not isotropic");
      out.spaces.emplace(r, std::move(v));
    }
  if (!in_resolution(out, p)) throw InfeasibleLift("lift produced a point outside the resolution");
  return out;
}

ResolutionPoint fixed_point_realization(const AdmissibleCollection& c) {
  ResolutionPoint pt{c.n(), {}};
  for (const Root& r : c.index().roots())
    pt.spaces.emplace(r, Subspace::coordinate(members(c.at(r.i, r.j)), 2 * c.n()));
  return pt;
}

bool in_divisor(const ResolutionPoint& pt, int i, int j) {
  const int n = pt.n;
  const Subspace e = Subspace::coordinate({j + 1}, 2 * n);
  const Subspace section = i == 1 ? e : pt.at(i - 1, j + 1) + e;
  return pt.at(i, j) == section;
}

mpq_class leading_pluecker(const Subspace& v) {
  const int k = v.dim();
  QMatrix m(k, k);
  for (int r = 0; r < k; ++r)
    for (int c = 0; c < k; ++c) m(r, c) = v.basis()(r, c);
  return determinant(m);
}

bool on_some_divisor(const ResolutionPoint& pt, const Parabolic& p) {
  for (const Root& r : p.radical())
    if (in_divisor(pt, r.i, r.j)) return true;
  return false;
}

bool all_leading_pluecker_nonzero(const ResolutionPoint& pt) {
  for (const auto& [r, v] : pt.spaces)
    if (sgn(leading_pluecker(v)) == 0) return false;
  return true;
}

std::vector<Subspace> sigma_involution(const std::vector<Subspace>& flags) {
  if (flags.empty() || flags.size() % 2 == 0)
    throw std::invalid_argument("sigma_involution: expected 2n-1 subspaces");
  const int n = static_cast<int>(flags.size() + 1) / 2;
  const QMatrix j = symplectic_form(n);
  std::vector<Subspace> out;
  for (int i = 1; i <= 2 * n - 1; ++i) {
    const Subspace& v = flags[i - 1];
    if (v.ambient() != 2 * n || v.dim() != i)
      throw std::invalid_argument("sigma_involution: V_" + std::to_string(i) + " has dimension " +
                                  std::to_string(v.dim()));
  }
  for (int i = 1; i <= 2 * n - 1; ++i) out.push_back(perp(flags[2 * n - i - 1], j));
  return out;
}

QMatrix flat_family_form(const mpq_class& s, int n, int k) {
  if (k < 0 || k > n) throw std::invalid_argument("flat_family_form: need 0 <= k <= n");
  QMatrix j(2 * n, 2 * n);
  for (int r = 1; r <= 2 * n; ++r) {
    const bool outer = r <= k || r > 2 * n - k;
    const mpq_class mag = outer ? mpq_class(1) : s;
    j(r - 1, 2 * n - r) = r <= n ? mag : mpq_class(-mag);
  }
  return j;
}

QMatrix eta(const mpq_class& s, int n, int k) {
  if (k < 0 || k > n) throw std::invalid_argument("eta: need 0 <= k <= n");
  QMatrix e(2 * n, 2 * n);
  for (int r = 1; r <= 2 * n; ++r) e(r - 1, r - 1) = (r <= k || r > 2 * n - k) ? mpq_class(1) : s;
  return e;
}

Subspace apply(const QMatrix& g, const Subspace& u) {
  if (u.dim() == 0) return u;
  // Rows of the basis are vectors, so the image rows are (g b)^T = b^T g^T.
  return Subspace::span(u.basis() * g.transpose());
}

TransportCheck isotropy_transport_check(const Subspace& u, const mpq_class& s, int n, int k) {
  if (sgn(s) == 0) throw std::invalid_argument("isotropy_transport_check: s must be nonzero");
  if (u.ambient() != 2 * n) throw std::invalid_argument("isotropy_transport_check: ambient is not 2n");
  TransportCheck c;
  const QMatrix e = eta(s, n, k);
  c.matrix_identity = e.transpose() * flat_family_form(1, n, k) * e == flat_family_form(s * s, n, k);
  c.premise = is_isotropic(u, flat_family_form(1, n, k));
  c.transported = is_isotropic(apply(eta(1 / s, n, k), u), flat_family_form(s * s, n, k));
  c.j0_matches_grass = is_isotropic(u, flat_family_form(0, n, k)) == in_sp_grass_a(u, k, n);
  return c;
}

}  // namespace spflag

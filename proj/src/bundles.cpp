#include "spflag/bundles.hpp"

#include <algorithm>
#include <stdexcept>

namespace spflag {

namespace {

void bump(std::map<Root, long>& m, const Root& r, long c) {
  if (c == 0) return;
  auto [it, inserted] = m.try_emplace(r, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) m.erase(it);
  }
}

void require_member(int i, int j, const Parabolic& p, const char* who) {
  if (!p.contains(i, j))
    throw std::invalid_argument(std::string(who) + ": " + to_string(Root{i, j}) + " is not in P_d for d=" +
                                p.to_string());
}

}  // namespace

void BundleLedger::add_omega(const Root& r, long c) { bump(omega, r, c); }
void BundleLedger::add_divisor(const Root& r, long c) { bump(divisor, r, c); }

BundleLedger& BundleLedger::operator+=(const BundleLedger& o) {
  for (const auto& [r, c] : o.omega) add_omega(r, c);
  for (const auto& [r, c] : o.divisor) add_divisor(r, c);
  return *this;
}

BundleLedger& BundleLedger::operator-=(const BundleLedger& o) {
  for (const auto& [r, c] : o.omega) add_omega(r, -c);
  for (const auto& [r, c] : o.divisor) add_divisor(r, -c);
  return *this;
}

BundleLedger operator*(long s, const BundleLedger& a) {
  BundleLedger out;
  for (const auto& [r, c] : a.omega) out.add_omega(r, s * c);
  for (const auto& [r, c] : a.divisor) out.add_divisor(r, s * c);
  return out;
}

std::string BundleLedger::to_string() const {
  std::string s;
  for (const auto& [r, c] : omega)
    s += (s.empty() ? "" : " ") + std::to_string(c) + "*w" + std::to_string(r.i) + "," + std::to_string(r.j);
  for (const auto& [r, c] : divisor)
    s += (s.empty() ? "" : " ") + std::to_string(c) + "*Z" + std::to_string(r.i) + "," + std::to_string(r.j);
  return s.empty() ? "0" : s;
}

BundleLedger divisor_class(int i, int j, const Parabolic& p) {
  require_member(i, j, p, "divisor_class");
  const int n = p.n();
  BundleLedger out;
  // Neighbours are valid pairs or dropped at the boundary; valid ones lie in
  // P_d because P_d is closed under decreasing i and increasing j.
  auto term = [&](int a, int b, long c) {
    if (a < 1 || b > 2 * n - 1 || a + b > 2 * n) return;
    require_member(a, b, p, "divisor_class neighbour");
    out.add_omega(Root{a, b}, c);
  };
  term(i, j, 1);
  if (i == 1) {
    term(1, j + 1, -1);
  } else if (i + j < 2 * n) {
    term(i - 1, j, -1);
    term(i, j + 1, -1);
    term(i - 1, j + 1, 1);
  } else {
    term(i - 1, j, -2);
    term(i - 1, j + 1, 1);
  }
  return out;
}

long discrepancy_b(int i, int j, const Parabolic& p) {
  require_member(i, j, p, "discrepancy_b");
  const int n = p.n();
  const int k = p.k();
  // dd[0] = 0, dd[l] = d_l.
  std::vector<long> dd{0};
  for (int x : p.d()) dd.push_back(x);
  std::vector<long> values;

  if (k >= 2 && dd[1] <= j && j <= dd[2] - 1 && 1 <= i && i <= dd[1]) values.push_back(dd[2] - j + i - 1);
  for (int s = 2; s <= k; ++s)
    for (int l = 0; l < s; ++l) {
      if (s == 2 && l == 0) continue;  // same region as the first case
      if (dd[s - 1] <= j && j <= dd[s] - 1 && dd[l] + 1 <= i && i <= dd[l + 1])
        values.push_back(dd[s] - dd[l] - j + i - 1);
    }
  for (int l = 0; l < k; ++l)
    if (dd[k] <= j && j < 2 * n - dd[k] && dd[l] + 1 <= i && i <= dd[l + 1])
      values.push_back(2 * n - dd[k] - dd[l] - j + i);
  for (int s = 1; s <= k; ++s) {
    if (!(2 * n - dd[s] <= j && j <= 2 * n - dd[s - 1] - 1)) continue;
    if (i == 2 * n - j) values.push_back(2 * n - j - dd[s - 1]);
    if (dd[s - 1] + 1 <= i && i <= dd[s] - 1 && i < 2 * n - j)
      values.push_back(2 * n - 2 * dd[s - 1] - j + i);
    for (int l = 1; l <= s - 1; ++l)
      if (dd[l - 1] + 1 <= i && i <= dd[l]) values.push_back(2 * n - dd[s - 1] - dd[l - 1] - j + i);
  }
  if (values.size() != 1)
    throw std::logic_error("discrepancy_b: " + std::to_string(values.size()) + " cases match " +
                           to_string(Root{i, j}) + " for d=" + p.to_string());
  return values.front();
}

BundleLedger tilde_omega_inverse(const Parabolic& p) {
  const int n = p.n();
  const int k = p.k();
  std::vector<long> dd{0};
  for (int x : p.d()) dd.push_back(x);
  BundleLedger out;
  for (int l = 1; l <= k; ++l) {
    const long e = l == k ? 2 * n + 1 - dd[k] - dd[k - 1] : dd[l + 1] - dd[l - 1];
    out.add_omega(Root{static_cast<int>(dd[l]), static_cast<int>(dd[l])}, e);
  }
  return out;
}

BundleLedger canonical_lhs(const Parabolic& p) {
  BundleLedger out = tilde_omega_inverse(p);
  for (const Root& r : p.boundary()) out.add_omega(r, -1);
  return out;
}

std::map<Root, long> discrepancy_b_triangular(const Parabolic& p) {
  const int n = p.n();
  const BundleLedger lhs = canonical_lhs(p);
  std::map<Root, long> b;
  auto get = [&](int a, int c) -> long {
    auto it = b.find(Root{a, c});
    return it == b.end() ? 0 : it->second;
  };
  for (int j = 1; j <= 2 * n - 1; ++j)
    for (int i = j; i >= 1; --i) {
      if (!p.contains(i, j)) continue;
      auto it = lhs.omega.find(Root{i, j});
      long v = it == lhs.omega.end() ? 0 : it->second;
      if (p.contains(i + 1, j)) v += (i + 1 + j == 2 * n ? 2 : 1) * get(i + 1, j);
      if (p.contains(i, j - 1)) v += get(i, j - 1);
      if (p.contains(i + 1, j - 1)) v -= get(i + 1, j - 1);
      b[Root{i, j}] = v;
    }
  return b;
}

std::vector<Root> non_exceptional_list(const Parabolic& p) {
  const int n = p.n();
  const int k = p.k();
  const std::vector<int>& d = p.d();
  std::vector<Root> out;
  for (int a = 2; a <= k; ++a) out.push_back({1, d[a - 1] - 1});
  for (int a = 1; a <= k; ++a)
    for (int c = a + 2; c <= k; ++c) out.push_back({d[a - 1] + 1, d[c - 1] - 1});
  out.push_back({1, 2 * n - 1});
  for (int a = 1; a <= k - 1; ++a) out.push_back({d[a - 1] + 1, 2 * n - d[a - 1] - 1});
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool is_exceptional(int i, int j, const Parabolic& p) {
  require_member(i, j, p, "is_exceptional");
  const auto ne = non_exceptional_list(p);
  return !std::binary_search(ne.begin(), ne.end(), Root{i, j});
}

IdentityCheck verify_canonical_identity(const Parabolic& p) {
  BundleLedger rhs;
  for (const Root& r : p.radical()) rhs += discrepancy_b(r.i, r.j, p) * divisor_class(r.i, r.j, p);
  IdentityCheck c;
  c.residual = canonical_lhs(p) - rhs;
  c.ok = c.residual.is_zero();
  return c;
}

}  // namespace spflag

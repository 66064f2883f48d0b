#include "spflag/rootsys.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace spflag {

RootSystem RootSystem::type_a(int m) {
  if (m < 2) throw std::invalid_argument("TypeA(m) requires m >= 2");
  return RootSystem(Kind::A, m);
}

RootSystem RootSystem::type_c(int n) {
  if (n < 1) throw std::invalid_argument("TypeC(n) requires n >= 1");
  return RootSystem(Kind::C, n);
}

int RootSystem::root_count() const {
  return kind_ == Kind::A ? size_ * (size_ - 1) / 2 : size_ * size_;
}

bool RootSystem::has_root(int i, int j) const {
  if (i < 1 || j < i) return false;
  if (kind_ == Kind::A) return j <= size_ - 1;
  return (j <= size_) || (i <= size_ && i + j <= 2 * size_);
}

std::string RootSystem::name() const {
  return kind_ == Kind::A ? "A" + std::to_string(size_ - 1) : "C" + std::to_string(size_);
}

std::string to_string(const Root& r) {
  return "a(" + std::to_string(r.i) + "," + std::to_string(r.j) + ")";
}

Weight& Weight::operator+=(const Weight& o) {
  if (o.eps.size() != eps.size()) throw std::invalid_argument("Weight: dimension mismatch");
  for (std::size_t k = 0; k < eps.size(); ++k) eps[k] += o.eps[k];
  return *this;
}

Weight& Weight::operator-=(const Weight& o) {
  if (o.eps.size() != eps.size()) throw std::invalid_argument("Weight: dimension mismatch");
  for (std::size_t k = 0; k < eps.size(); ++k) eps[k] -= o.eps[k];
  return *this;
}

DominantWeight::DominantWeight(std::vector<int> coeffs) : m(std::move(coeffs)) {
  for (int x : m)
    if (x < 0) throw std::invalid_argument("dominant weight coefficients must be nonnegative");
}

int DominantWeight::total() const { return std::accumulate(m.begin(), m.end(), 0); }

Weight to_eps(const DominantWeight& lambda, const RootSystem& sys) {
  if (static_cast<int>(lambda.m.size()) != sys.rank())
    throw std::invalid_argument("weight has " + std::to_string(lambda.m.size()) +
                                " coefficients, " + sys.name() + " needs " +
                                std::to_string(sys.rank()));
  Weight w(sys.eps_dim());
  int acc = 0;
  for (int k = sys.rank() - 1; k >= 0; --k) {
    acc += lambda.m[k];
    w.eps[k] = acc;
  }
  return w;
}

std::vector<int> eps_to_omega(const Weight& w, const RootSystem& sys) {
  if (w.dim() != sys.eps_dim()) throw std::invalid_argument("eps_to_omega: dimension mismatch");
  std::vector<int> c(sys.rank());
  for (int k = 0; k < sys.rank(); ++k) {
    const int next = (k + 1 < w.dim()) ? w.eps[k + 1] : 0;
    c[k] = w.eps[k] - next;
  }
  return c;
}

std::vector<Root> positive_roots(const RootSystem& sys) {
  std::vector<Root> out;
  const int jmax = sys.kind() == Kind::A ? sys.size() - 1 : 2 * sys.size() - 1;
  for (int j = jmax; j >= 1; --j)
    for (int i = 1; i <= j; ++i)
      if (sys.has_root(i, j)) out.push_back({i, j});
  return out;
}

Weight root_weight(const RootSystem& sys, const Root& r) {
  if (!sys.has_root(r.i, r.j))
    throw std::invalid_argument(to_string(r) + " is not a root of " + sys.name());
  Weight w(sys.eps_dim());
  if (sys.kind() == Kind::A) {
    w.eps[r.i - 1] += 1;
    w.eps[r.j] -= 1;
    return w;
  }
  const int n = sys.size();
  if (r.j < n) {
    w.eps[r.i - 1] += 1;
    w.eps[r.j] -= 1;
  } else if (r.j < 2 * n - r.i) {
    w.eps[r.i - 1] += 1;
    w.eps[2 * n - r.j - 1] += 1;
  } else {
    w.eps[r.i - 1] += 2;
  }
  return w;
}

Weight two_rho(const RootSystem& sys) {
  Weight s(sys.eps_dim());
  for (const Root& r : positive_roots(sys)) s += root_weight(sys, r);
  return s;
}

RootIndex::RootIndex(const RootSystem& sys)
    : sys_(sys), roots_(positive_roots(sys)), width_(2 * sys.size() + 1) {
  pos_.assign(static_cast<std::size_t>(width_) * width_, -1);
  for (std::size_t k = 0; k < roots_.size(); ++k)
    pos_[roots_[k].i * width_ + roots_[k].j] = static_cast<int>(k);
}

int RootIndex::find(int i, int j) const {
  if (i < 0 || j < 0 || i >= width_ || j >= width_) return -1;
  return pos_[i * width_ + j];
}

int RootIndex::at(int i, int j) const {
  const int k = find(i, j);
  if (k < 0) throw std::out_of_range(to_string(Root{i, j}) + " is not a root of " + sys_.name());
  return k;
}

QMatrix root_vector_matrix(const Root& r, int n) {
  const RootSystem sys = RootSystem::type_c(n);
  if (!sys.has_root(r.i, r.j))
    throw std::invalid_argument(to_string(r) + " is not a root of " + sys.name());
  QMatrix f(2 * n, 2 * n);
  // E_{a,b} with 1-based indices.
  auto e = [&f](int a, int b, int v) { f(a - 1, b - 1) += v; };
  const int i = r.i, j = r.j;
  if (j < n) {
    e(j + 1, i, 1);
    e(2 * n + 1 - i, 2 * n - j, -1);
  } else if (i + j < 2 * n) {
    e(j + 1, i, 1);
    e(2 * n + 1 - i, 2 * n - j, 1);
  } else {
    e(2 * n + 1 - i, i, 1);
  }
  return f;
}

Root phi_embed(const Root& r, int n) {
  if (!RootSystem::type_c(n).has_root(r.i, r.j))
    throw std::invalid_argument(to_string(r) + " is not a root of C" + std::to_string(n));
  return r;
}

void validate_d(const std::vector<int>& d, int n) {
  if (d.empty()) throw std::invalid_argument("parabolic index list d must be nonempty");
  for (std::size_t k = 0; k < d.size(); ++k) {
    if (d[k] < 1 || d[k] > n)
      throw std::invalid_argument("d entries must lie in 1.." + std::to_string(n));
    if (k > 0 && d[k] <= d[k - 1]) throw std::invalid_argument("d must be strictly increasing");
  }
}

std::vector<Root> radical_roots(const std::vector<int>& d, int n) {
  validate_d(d, n);
  const RootSystem sys = RootSystem::type_c(n);
  std::vector<Root> out;
  for (const Root& r : positive_roots(sys)) {
    const Weight w = root_weight(sys, r);
    // (alpha, omega_{d_l}) is the sum of the first d_l epsilon coordinates.
    bool in = false;
    for (int dl : d) {
      int pairing = 0;
      for (int t = 0; t < dl; ++t) pairing += w.eps[t];
      if (pairing > 0) in = true;
    }
    if (in) out.push_back(r);
  }
  return out;
}

std::vector<Root> boundary_set_B(const std::vector<int>& d, int n) {
  validate_d(d, n);
  std::vector<Root> out;
  const int k = static_cast<int>(d.size());
  int prev = 0;
  for (int l = 0; l < k; ++l) {
    for (int i = prev + 1; i <= d[l]; ++i) out.push_back({i, d[l]});
    if (l + 1 < k)
      for (int j = d[l] + 1; j <= d[l + 1]; ++j) out.push_back({d[l], j});
    prev = d[l];
  }
  for (int j = d[k - 1] + 1; j <= 2 * n - d[k - 1]; ++j) out.push_back({d[k - 1], j});
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Parabolic::Parabolic(int n, std::vector<int> d) : n_(n), d_(std::move(d)) {
  validate_d(d_, n_);
  radical_ = radical_roots(d_, n_);
  boundary_ = boundary_set_B(d_, n_);
  const int w = 2 * n_ + 1;
  member_.assign(static_cast<std::size_t>(w) * w, 0);
  boundary_member_.assign(static_cast<std::size_t>(w) * w, 0);
  for (const Root& r : radical_) member_[r.i * w + r.j] = 1;
  for (const Root& r : boundary_) boundary_member_[r.i * w + r.j] = 1;
}

Parabolic Parabolic::complete(int n) {
  std::vector<int> d(n);
  std::iota(d.begin(), d.end(), 1);
  return Parabolic(n, d);
}

bool Parabolic::contains_d(int i) const {
  return std::binary_search(d_.begin(), d_.end(), i);
}

bool Parabolic::contains(int i, int j) const {
  const int w = 2 * n_ + 1;
  if (i < 0 || j < 0 || i >= w || j >= w) return false;
  return member_[i * w + j] != 0;
}

bool Parabolic::in_boundary(int i, int j) const {
  const int w = 2 * n_ + 1;
  if (i < 0 || j < 0 || i >= w || j >= w) return false;
  return boundary_member_[i * w + j] != 0;
}

std::string Parabolic::to_string() const {
  std::string s = "(";
  for (std::size_t k = 0; k < d_.size(); ++k) s += (k ? "," : "") + std::to_string(d_[k]);
  return s + ")";
}

std::vector<std::vector<int>> all_parabolics(int n) {
  std::vector<std::vector<int>> out;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<int> d;
    for (int i = 1; i <= n; ++i)
      if (mask & (1u << (i - 1))) d.push_back(i);
    out.push_back(std::move(d));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace spflag

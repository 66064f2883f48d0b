#include "spflag/charring.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace spflag {

Monomial Monomial::operator*(const Monomial& o) const {
  if (o.z.size() != z.size()) throw std::invalid_argument("Monomial: variable count mismatch");
  Monomial m = *this;
  for (std::size_t k = 0; k < z.size(); ++k) m.z[k] += o.z[k];
  m.q += o.q;
  return m;
}

Monomial Monomial::inverse() const {
  Monomial m = *this;
  for (int& e : m.z) e = -e;
  m.q = -m.q;
  return m;
}

LaurentPoly LaurentPoly::constant(int nvars, const mpq_class& c) {
  LaurentPoly p(nvars);
  p.add_term(Monomial{std::vector<int>(nvars, 0), 0}, c);
  return p;
}

LaurentPoly LaurentPoly::monomial(const Monomial& m, const mpq_class& c) {
  LaurentPoly p(static_cast<int>(m.z.size()));
  p.add_term(m, c);
  return p;
}

mpq_class LaurentPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? mpq_class(0) : it->second;
}

bool LaurentPoly::q_free() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.first.q == 0; });
}

void LaurentPoly::check_vars(const LaurentPoly& o) const {
  if (o.nvars_ != nvars_) throw std::invalid_argument("LaurentPoly: variable count mismatch");
}

void LaurentPoly::check_vars(const Monomial& m) const {
  if (static_cast<int>(m.z.size()) != nvars_)
    throw std::invalid_argument("LaurentPoly: monomial has wrong variable count");
}

void LaurentPoly::add_term(const Monomial& m, const mpq_class& c) {
  check_vars(m);
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

const Monomial& LaurentPoly::leading() const {
  if (terms_.empty()) throw std::domain_error("leading monomial of zero polynomial");
  return terms_.rbegin()->first;
}

const Monomial& LaurentPoly::trailing() const {
  if (terms_.empty()) throw std::domain_error("trailing monomial of zero polynomial");
  return terms_.begin()->first;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  check_vars(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  check_vars(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p = *this;
  for (auto& t : p.terms_) t.second = -t.second;
  return p;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  a.check_vars(b);
  LaurentPoly p(a.nvars_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) p.add_term(ma * mb, ca * cb);
  return p;
}

LaurentPoly operator*(const mpq_class& s, const LaurentPoly& a) {
  if (sgn(s) == 0) return LaurentPoly(a.nvars_);
  LaurentPoly p = a;
  for (auto& t : p.terms_) t.second *= s;
  return p;
}

LaurentPoly LaurentPoly::times(const Monomial& m) const {
  check_vars(m);
  LaurentPoly p(nvars_);
  for (const auto& [mm, c] : terms_) p.terms_.emplace(mm * m, c);
  return p;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    os << (first ? "" : " + ") << c.get_str();
    first = false;
    if (m.q != 0) os << "*q^" << m.q;
    for (std::size_t k = 0; k < m.z.size(); ++k)
      if (m.z[k] != 0) os << "*z" << (k + 1) << "^" << m.z[k];
  }
  return os.str();
}

LaurentPoly exact_divide(const LaurentPoly& num, const LaurentPoly& den) {
  if (den.is_zero()) throw std::domain_error("exact_divide: division by zero");
  if (num.nvars() != den.nvars()) throw std::invalid_argument("exact_divide: variable mismatch");
  LaurentPoly quot(num.nvars());
  if (num.is_zero()) return quot;

  // Per-variable degree windows the quotient must live in; a candidate term
  // outside them proves non-divisibility and also bounds the loop.
  const int nv = num.nvars();
  auto range = [nv](const LaurentPoly& p, std::vector<int>& lo, std::vector<int>& hi, int& qlo,
                    int& qhi) {
    lo.assign(nv, 0);
    hi.assign(nv, 0);
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
      for (int k = 0; k < nv; ++k) {
        lo[k] = first ? m.z[k] : std::min(lo[k], m.z[k]);
        hi[k] = first ? m.z[k] : std::max(hi[k], m.z[k]);
      }
      qlo = first ? m.q : std::min(qlo, m.q);
      qhi = first ? m.q : std::max(qhi, m.q);
      first = false;
    }
  };
  std::vector<int> nlo, nhi, dlo, dhi;
  int nqlo = 0, nqhi = 0, dqlo = 0, dqhi = 0;
  range(num, nlo, nhi, nqlo, nqhi);
  range(den, dlo, dhi, dqlo, dqhi);

  const Monomial dlead = den.leading();
  const mpq_class dcoef = den.terms().rbegin()->second;
  const Monomial dinv = dlead.inverse();
  LaurentPoly rem = num;
  while (!rem.is_zero()) {
    const Monomial t = rem.leading() * dinv;
    for (int k = 0; k < nv; ++k)
      if (t.z[k] < nlo[k] - dlo[k] || t.z[k] > nhi[k] - dhi[k])
        throw std::domain_error("exact_divide: nonzero remainder");
    if (t.q < nqlo - dqlo || t.q > nqhi - dqhi)
      throw std::domain_error("exact_divide: nonzero remainder");
    const mpq_class c = rem.terms().rbegin()->second / dcoef;
    quot.add_term(t, c);
    rem -= c * den.times(t);
  }
  return quot;
}

RationalPoint RationalPoint::inverted() const {
  RationalPoint p;
  for (const auto& x : z) p.z.push_back(1 / x);
  p.q = 1 / q;
  return p;
}

std::string RationalPoint::to_string() const {
  std::string s = "(z=[";
  for (std::size_t k = 0; k < z.size(); ++k) s += (k ? "," : "") + z[k].get_str();
  return s + "], q=" + q.get_str() + ")";
}

static mpq_class qpow(const mpq_class& base, int e) {
  if (sgn(base) == 0) throw std::domain_error("evaluation at a zero coordinate");
  mpz_class num = base.get_num(), den = base.get_den();
  if (e < 0) {
    std::swap(num, den);
    e = -e;
  }
  mpz_class rn, rd;
  mpz_pow_ui(rn.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(rd.get_mpz_t(), den.get_mpz_t(), static_cast<unsigned long>(e));
  mpq_class r(rn, rd);
  r.canonicalize();
  return r;
}

mpq_class evaluate(const Monomial& m, const RationalPoint& pt) {
  if (m.z.size() != pt.z.size()) throw std::invalid_argument("evaluate: variable count mismatch");
  mpq_class v = qpow(pt.q, m.q);
  for (std::size_t k = 0; k < m.z.size(); ++k)
    if (m.z[k] != 0) v *= qpow(pt.z[k], m.z[k]);
  return v;
}

mpq_class evaluate(const LaurentPoly& p, const RationalPoint& pt) {
  if (static_cast<int>(pt.z.size()) != p.nvars())
    throw std::invalid_argument("evaluate: variable count mismatch");
  mpq_class s = 0;
  for (const auto& [m, c] : p.terms()) s += c * evaluate(m, pt);
  return s;
}

LaurentPoly specialize_q1(const LaurentPoly& p) {
  LaurentPoly r(p.nvars());
  for (const auto& [m, c] : p.terms()) r.add_term(Monomial{m.z, 0}, c);
  return r;
}

LaurentPoly to_omega_basis(const LaurentPoly& p, const RootSystem& sys) {
  if (p.nvars() != sys.eps_dim()) throw std::invalid_argument("to_omega_basis: variable mismatch");
  LaurentPoly r(sys.rank());
  for (const auto& [m, c] : p.terms())
    r.add_term(Monomial{eps_to_omega(Weight(m.z), sys), m.q}, c);
  return r;
}

static Weight rho_eps(const RootSystem& sys) {
  // rho in epsilon coordinates: (n, n-1, ..., 1) for C_n, (m-1, ..., 0) for A_{m-1} at gl level.
  Weight r(sys.eps_dim());
  for (int k = 0; k < sys.eps_dim(); ++k)
    r.eps[k] = sys.kind() == Kind::C ? sys.size() - k : sys.size() - 1 - k;
  return r;
}

mpz_class weyl_dimension(const DominantWeight& lambda, const RootSystem& sys) {
  const Weight lam = to_eps(lambda, sys);
  const Weight rho = rho_eps(sys);
  mpq_class prod = 1;
  for (const Root& r : positive_roots(sys)) {
    const Weight a = root_weight(sys, r);
    long num = 0, den = 0;
    for (int k = 0; k < a.dim(); ++k) {
      num += static_cast<long>(lam.eps[k] + rho.eps[k]) * a.eps[k];
      den += static_cast<long>(rho.eps[k]) * a.eps[k];
    }
    prod *= mpq_class(num, den);
  }
  prod.canonicalize();
  if (prod.get_den() != 1) throw std::logic_error("weyl_dimension: non-integral result");
  return prod.get_num();
}

namespace {

int permutation_sign(const std::vector<int>& p) {
  int s = 1;
  std::vector<char> seen(p.size(), 0);
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (seen[k]) continue;
    std::size_t len = 0;
    for (std::size_t x = k; !seen[x]; x = static_cast<std::size_t>(p[x])) {
      seen[x] = 1;
      ++len;
    }
    if (len % 2 == 0) s = -s;
  }
  return s;
}

// sum over W of sgn(w) e^{w v}.
LaurentPoly alternant(const Weight& v, const RootSystem& sys) {
  const int d = sys.eps_dim();
  LaurentPoly out(d);
  std::vector<int> perm(d);
  std::iota(perm.begin(), perm.end(), 0);
  const unsigned flips = sys.kind() == Kind::C ? (1u << d) : 1u;
  do {
    const int ps = permutation_sign(perm);
    for (unsigned mask = 0; mask < flips; ++mask) {
      Monomial m{std::vector<int>(d), 0};
      int sign = ps;
      for (int k = 0; k < d; ++k) {
        int e = v.eps[perm[k]];
        if (mask & (1u << k)) {
          e = -e;
          sign = -sign;
        }
        m.z[k] = e;
      }
      out.add_term(m, sign);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace

LaurentPoly weyl_character(const DominantWeight& lambda, const RootSystem& sys) {
  const Weight lam = to_eps(lambda, sys);
  const Weight rho = rho_eps(sys);
  return exact_divide(alternant(lam + rho, sys), alternant(rho, sys));
}

}  // namespace spflag

#include "nichols/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace nichols {

namespace {

// --- dense univariate polynomials over Q, ascending coefficients -----------

using Poly = std::vector<Rational>;

void trim(Poly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

Poly mul(const Poly& x, const Poly& y) {
  if (x.empty() || y.empty()) return {};
  Poly r(x.size() + y.size() - 1, Rational::zero());
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j)
      r[i + j] += x[i] * y[j];
  trim(r);
  return r;
}

// In-place remainder of p modulo a nonzero divisor d; returns the quotient.
Poly divmod(Poly& p, const Poly& d) {
  if (d.empty()) throw std::domain_error("polynomial division by zero");
  Poly q;
  if (p.size() >= d.size()) q.assign(p.size() - d.size() + 1, Rational::zero());
  const Rational lead_inv = d.back().inverse();
  while (p.size() >= d.size()) {
    const Rational c = p.back() * lead_inv;
    const std::size_t shift = p.size() - d.size();
    q[shift] = c;
    for (std::size_t i = 0; i < d.size(); ++i) p[shift + i] -= c * d[i];
    trim(p);  // the leading term was cleared, so the degree strictly drops
  }
  return q;
}

std::vector<unsigned long> divisors(unsigned long n) {
  std::vector<unsigned long> d;
  for (unsigned long i = 1; i * i <= n; ++i) {
    if (n % i == 0) {
      d.push_back(i);
      if (i != n / i) d.push_back(n / i);
    }
  }
  std::sort(d.begin(), d.end());
  return d;
}

std::vector<unsigned long> prime_factors(unsigned long n) {
  std::vector<unsigned long> ps;
  for (unsigned long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      ps.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) ps.push_back(n);
  return ps;
}

// Thread-safe cache of Phi_N (values immutable once published).  Filling in
// ascending divisor order guarantees every proper divisor is present first.
std::shared_ptr<const Poly> cyclotomic_cached(unsigned long N) {
  static std::mutex mu;
  static std::map<unsigned long, std::shared_ptr<const Poly>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto compute = [&](unsigned long n) {
    // Phi_n = (x^n - 1) / prod of Phi_d over proper divisors d | n.
    Poly num(n + 1, Rational::zero());
    num[0] = -Rational::one();
    num[n] = Rational::one();
    Poly denom{Rational::one()};
    for (unsigned long d : divisors(n))
      if (d != n) denom = mul(denom, *cache.at(d));
    Poly rem = std::move(num);
    Poly q = divmod(rem, denom);
    if (!rem.empty()) throw std::logic_error("cyclotomic division left a remainder");
    return std::make_shared<const Poly>(std::move(q));
  };
  for (unsigned long d : divisors(N))
    if (!cache.count(d)) cache.emplace(d, compute(d));
  return cache.at(N);
}

}  // namespace

unsigned long euler_phi(unsigned long n) {
  unsigned long r = n;
  for (unsigned long p : prime_factors(n)) r -= r / p;
  return r;
}

std::vector<Rational> cyclotomic_polynomial(unsigned long N) {
  if (N == 0) throw std::domain_error("cyclotomic_polynomial: N must be positive");
  return *cyclotomic_cached(N);
}

// --- CyclotomicNumber ------------------------------------------------------

CyclotomicNumber::CyclotomicNumber() : conductor_(1), c_{Rational::zero()} {}

void CyclotomicNumber::reduce_from(std::vector<Rational> raw) {
  auto phi_n = cyclotomic_cached(conductor_);
  const Poly& mod = *phi_n;
  const std::size_t deg = mod.size() - 1;  // = phi(conductor)
  trim(raw);
  if (raw.size() > deg) divmod(raw, mod);
  raw.resize(deg, Rational::zero());
  c_ = std::move(raw);
}

CyclotomicNumber CyclotomicNumber::zero(unsigned long conductor) {
  CyclotomicNumber x;
  x.conductor_ = conductor;
  x.c_.assign(euler_phi(conductor), Rational::zero());
  return x;
}

CyclotomicNumber CyclotomicNumber::one(unsigned long conductor) {
  CyclotomicNumber x = zero(conductor);
  x.c_[0] = Rational::one();
  return x;
}

CyclotomicNumber CyclotomicNumber::from_rational(const Rational& q, unsigned long conductor) {
  CyclotomicNumber x = zero(conductor);
  x.c_[0] = q;
  return x;
}

CyclotomicNumber CyclotomicNumber::zeta(unsigned long N, long k) {
  if (N == 0) throw std::domain_error("zeta: conductor must be positive");
  long m = k % static_cast<long>(N);
  if (m < 0) m += static_cast<long>(N);
  CyclotomicNumber x = zero(N);
  std::vector<Rational> raw(static_cast<std::size_t>(m) + 1, Rational::zero());
  raw[static_cast<std::size_t>(m)] = Rational::one();
  x.reduce_from(std::move(raw));
  return x;
}

bool CyclotomicNumber::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& q) { return q.is_zero(); });
}

bool CyclotomicNumber::is_one() const {
  if (!c_[0].is_one()) return false;
  return std::all_of(c_.begin() + 1, c_.end(), [](const Rational& q) { return q.is_zero(); });
}

bool CyclotomicNumber::is_rational() const {
  return std::all_of(c_.begin() + 1, c_.end(), [](const Rational& q) { return q.is_zero(); });
}

Rational CyclotomicNumber::rational_value() const {
  if (!is_rational()) throw std::domain_error("rational_value: element not in Q");
  return c_[0];
}

CyclotomicNumber CyclotomicNumber::to_conductor(unsigned long M) const {
  if (M == conductor_) return *this;
  if (M % conductor_ != 0)
    throw std::domain_error("to_conductor: target is not a multiple of current conductor");
  const unsigned long step = M / conductor_;
  CyclotomicNumber r = zero(M);
  std::vector<Rational> raw((c_.size() - 1) * step + 1, Rational::zero());
  for (std::size_t i = 0; i < c_.size(); ++i) raw[i * step] = c_[i];
  r.reduce_from(std::move(raw));
  return r;
}

CyclotomicNumber CyclotomicNumber::minimal_conductor_form() const {
  const std::size_t dim = c_.size();
  for (unsigned long M = 1; M < conductor_; ++M) {
    if (conductor_ % M != 0) continue;
    const std::size_t cols = euler_phi(M);
    // Solve sum_j y_j * (zeta_M^j promoted) = *this by Gaussian elimination
    // on the augmented coordinate matrix over the conductor's basis.
    std::vector<std::vector<Rational>> aug(dim,
                                           std::vector<Rational>(cols + 1));
    for (std::size_t j = 0; j < cols; ++j) {
      CyclotomicNumber basis =
          zeta(M, static_cast<long>(j)).to_conductor(conductor_);
      for (std::size_t i = 0; i < dim; ++i) aug[i][j] = basis.coeffs()[i];
    }
    for (std::size_t i = 0; i < dim; ++i) aug[i][cols] = c_[i];

    std::vector<long> pivot_col(dim, -1);
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < dim; ++col) {
      std::size_t p = row;
      while (p < dim && aug[p][col].is_zero()) ++p;
      if (p == dim) continue;
      std::swap(aug[row], aug[p]);
      Rational inv = aug[row][col].inverse();
      for (std::size_t j = col; j <= cols; ++j) aug[row][j] *= inv;
      for (std::size_t i = 0; i < dim; ++i) {
        if (i == row || aug[i][col].is_zero()) continue;
        Rational f = aug[i][col];
        for (std::size_t j = col; j <= cols; ++j)
          aug[i][j] -= f * aug[row][j];
      }
      pivot_col[row] = static_cast<long>(col);
      ++row;
    }
    bool consistent = true;
    for (std::size_t i = row; i < dim; ++i)
      if (!aug[i][cols].is_zero()) consistent = false;
    if (!consistent) continue;
    std::vector<Rational> y(cols, Rational::zero());
    for (std::size_t i = 0; i < row; ++i)
      y[static_cast<std::size_t>(pivot_col[i])] = aug[i][cols];
    CyclotomicNumber r = zero(M);
    r.reduce_from(std::move(y));
    return r;
  }
  return *this;
}

CyclotomicNumber& CyclotomicNumber::operator+=(const CyclotomicNumber& o) {
  if (conductor_ != o.conductor_) {
    unsigned long m = std::lcm(conductor_, o.conductor_);
    *this = to_conductor(m);
    return *this += o.to_conductor(m);
  }
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

CyclotomicNumber& CyclotomicNumber::operator-=(const CyclotomicNumber& o) {
  if (conductor_ != o.conductor_) {
    unsigned long m = std::lcm(conductor_, o.conductor_);
    *this = to_conductor(m);
    return *this -= o.to_conductor(m);
  }
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

CyclotomicNumber& CyclotomicNumber::operator*=(const CyclotomicNumber& o) {
  if (conductor_ != o.conductor_) {
    unsigned long m = std::lcm(conductor_, o.conductor_);
    *this = to_conductor(m);
    return *this *= o.to_conductor(m);
  }
  std::vector<Rational> raw(2 * c_.size(), Rational::zero());
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) {
      if (o.c_[j].is_zero()) continue;
      raw[i + j] += c_[i] * o.c_[j];
    }
  }
  reduce_from(std::move(raw));
  return *this;
}

CyclotomicNumber CyclotomicNumber::operator-() const {
  CyclotomicNumber r = *this;
  for (Rational& q : r.c_) q = -q;
  return r;
}

bool operator==(const CyclotomicNumber& x, const CyclotomicNumber& y) {
  if (x.conductor_ == y.conductor_) return x.c_ == y.c_;
  unsigned long m = std::lcm(x.conductor_, y.conductor_);
  return x.to_conductor(m).c_ == y.to_conductor(m).c_;
}

CyclotomicNumber CyclotomicNumber::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero cyclotomic number");
  // Extended Euclid on (Phi_N, A): maintain u with u*A = r (mod Phi_N).
  Poly r0 = *cyclotomic_cached(conductor_);
  Poly r1 = c_;
  trim(r1);
  Poly u0;                    // 0
  Poly u1{Rational::one()};   // 1
  while (!r1.empty()) {
    Poly rem = r0;
    Poly q = divmod(rem, r1);
    Poly u2 = u0;
    Poly qu = mul(q, u1);
    if (u2.size() < qu.size()) u2.resize(qu.size(), Rational::zero());
    for (std::size_t i = 0; i < qu.size(); ++i) u2[i] -= qu[i];
    trim(u2);
    r0 = std::move(r1);
    r1 = std::move(rem);
    u0 = std::move(u1);
    u1 = std::move(u2);
  }
  // r0 = gcd = nonzero constant (Phi_N irreducible); u0 * A == r0 (mod Phi_N).
  if (r0.size() != 1) throw std::logic_error("cyclotomic gcd not constant");
  const Rational scale = r0[0].inverse();
  for (Rational& q : u0) q *= scale;
  CyclotomicNumber inv = zero(conductor_);
  inv.reduce_from(std::move(u0));
  return inv;
}

CyclotomicNumber CyclotomicNumber::pow(long n) const {
  if (n < 0) return inverse().pow(-n);
  CyclotomicNumber r = one(conductor_);
  CyclotomicNumber base = *this;
  unsigned long m = static_cast<unsigned long>(n);
  while (m > 0) {
    if (m & 1) r *= base;
    base *= base;
    m >>= 1;
  }
  return r;
}

std::string CyclotomicNumber::str() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    const Rational& q = c_[i];
    if (q.is_zero()) continue;
    Rational mag = q;
    if (first) {
      if (q.sign() < 0) {
        os << "-";
        mag = -q;
      }
    } else {
      os << (q.sign() < 0 ? " - " : " + ");
      if (q.sign() < 0) mag = -q;
    }
    first = false;
    if (i == 0) {
      os << mag.str();
    } else {
      if (!mag.is_one()) os << mag.str() << "*";
      os << "z";
      if (i > 1) os << "^" << i;
    }
  }
  if (first) return "0";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const CyclotomicNumber& x) {
  return os << x.str();
}

unsigned long multiplicative_order(const CyclotomicNumber& x) {
  if (x.is_zero()) return 0;
  // Roots of unity in Q(zeta_N) all have order dividing lcm(2, N).
  const unsigned long L = std::lcm(2ul, x.conductor());
  if (!x.pow(static_cast<long>(L)).is_one()) return 0;
  for (unsigned long d : divisors(L))
    if (x.pow(static_cast<long>(d)).is_one()) return d;
  return 0;  // unreachable
}

bool is_primitive_root(const CyclotomicNumber& x, unsigned long n) {
  if (n == 0) return false;
  if (!x.pow(static_cast<long>(n)).is_one()) return false;
  for (unsigned long p : prime_factors(n))
    if (x.pow(static_cast<long>(n / p)).is_one()) return false;
  return true;
}

// --- ParamPoint / evaluate -------------------------------------------------

ParamPoint::ParamPoint(CyclotomicNumber a_, CyclotomicNumber b_, CyclotomicNumber e_) {
  unsigned long m = std::lcm(std::lcm(a_.conductor(), b_.conductor()), e_.conductor());
  a = a_.to_conductor(m);
  b = b_.to_conductor(m);
  e = e_.to_conductor(m);
  if ((a * b * e).is_zero())
    throw std::domain_error("ParamPoint requires a*b*e != 0");
}

std::string ParamPoint::str() const {
  return "(a=" + a.str() + ", b=" + b.str() + ", e=" + e.str() +
         ", conductor=" + std::to_string(a.conductor()) + ")";
}

CyclotomicNumber evaluate(const MultiPoly& p, const ParamPoint& pt) {
  // Cached power tables per variable over the terms present.
  std::uint32_t da = 0, db = 0, de = 0;
  for (const auto& [x, c] : p.terms()) {
    da = std::max(da, x.a);
    db = std::max(db, x.b);
    de = std::max(de, x.e);
  }
  const unsigned long N = pt.a.conductor();
  auto powers = [N](const CyclotomicNumber& base, std::uint32_t maxdeg) {
    std::vector<CyclotomicNumber> t;
    t.reserve(maxdeg + 1);
    t.push_back(CyclotomicNumber::one(N));
    for (std::uint32_t k = 1; k <= maxdeg; ++k) t.push_back(t.back() * base);
    return t;
  };
  const auto pa = powers(pt.a, da), pb = powers(pt.b, db), pe = powers(pt.e, de);
  CyclotomicNumber r = CyclotomicNumber::zero(N);
  for (const auto& [x, c] : p.terms())
    r += CyclotomicNumber::from_rational(c, N) * pa[x.a] * pb[x.b] * pe[x.e];
  return r;
}

}  // namespace nichols

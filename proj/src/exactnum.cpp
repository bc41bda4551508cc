#include "kdw/exactnum.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <utility>

#include "kdw/error.hpp"

namespace kdw {

// ---------------------------------------------------------------------------
// BigRational

BigRational::BigRational(long value) : q_(value) {}

BigRational::BigRational(long num, long den) {
  if (den == 0) throw Error(Errc::DivisionByZero, "rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

BigRational::BigRational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

BigRational BigRational::parse(std::string_view text) {
  std::string s(text);
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return BigRational(mpq_class(mpz_class(s)));
    mpz_class num(s.substr(0, slash));
    mpz_class den(s.substr(slash + 1));
    if (den == 0) throw Error(Errc::DivisionByZero, "rational with zero denominator");
    return BigRational(mpq_class(num, den));
  } catch (const std::invalid_argument&) {
    throw Error(Errc::InvalidArgument, "malformed rational '" + s + "'");
  }
}

BigRational& BigRational::operator+=(const BigRational& rhs) {
  q_ += rhs.q_;
  return *this;
}
BigRational& BigRational::operator-=(const BigRational& rhs) {
  q_ -= rhs.q_;
  return *this;
}
BigRational& BigRational::operator*=(const BigRational& rhs) {
  q_ *= rhs.q_;
  return *this;
}
BigRational& BigRational::operator/=(const BigRational& rhs) {
  if (rhs.is_zero()) throw Error(Errc::DivisionByZero, "rational division by zero");
  q_ /= rhs.q_;
  return *this;
}

std::string BigRational::to_string() const {
  if (is_zero()) return "0";
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

// ---------------------------------------------------------------------------
// ModOneOdd

ModOneOdd::ModOneOdd(std::int64_t num, std::int64_t den) {
  if (den == 0) throw Error(Errc::DivisionByZero, "fraction with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  num %= den;
  if (num < 0) num += den;
  const std::int64_t g = std::gcd(num, den);
  num /= g;
  den /= g;
  if (den % 2 == 0) {
    throw Error(Errc::EvenDenominator,
                std::to_string(num) + "/" + std::to_string(den) + " is not in Z_(2)/Z");
  }
  num_ = num;
  den_ = den;
}

ModOneOdd ModOneOdd::parse(std::string_view text) {
  const BigRational q = BigRational::parse(text);
  return mod_one(q);
}

ModOneOdd ModOneOdd::operator-() const { return ModOneOdd(-num_, den_); }

ModOneOdd operator+(const ModOneOdd& a, const ModOneOdd& b) {
  const std::int64_t g = std::gcd(a.den_, b.den_);
  const std::int64_t den = a.den_ / g * b.den_;
  return ModOneOdd(a.num_ * (den / a.den_) + b.num_ * (den / b.den_), den);
}

std::string ModOneOdd::to_string() const {
  return std::to_string(num_) + "/" + std::to_string(den_);
}

ModOneOdd mod_one(const BigRational& q) {
  const mpz_class den = q.denominator();
  if (mpz_even_p(den.get_mpz_t())) {
    throw Error(Errc::EvenDenominator, q.to_string() + " has even denominator");
  }
  if (!den.fits_slong_p()) throw Error(Errc::TooLarge, "denominator exceeds 64 bits");
  mpz_class num = q.numerator();
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return ModOneOdd(r.get_si(), den.get_si());
}

// ---------------------------------------------------------------------------
// Cyclotomic polynomials

namespace {

using IntPoly = std::vector<long>;

// Exact quotient of a by a monic integer polynomial b.
IntPoly exact_divide(IntPoly a, const IntPoly& b) {
  const std::size_t db = b.size() - 1;
  IntPoly q(a.size() - db, 0);
  for (std::size_t i = a.size(); i-- > db;) {
    const long c = a[i];
    q[i - db] = c;
    for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
  }
  return q;
}

}  // namespace

std::vector<long> cyclotomic_polynomial(unsigned n) {
  if (n == 0) throw Error(Errc::InvalidArgument, "conductor must be positive");
  static std::mutex mu;
  static std::map<unsigned, IntPoly> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  IntPoly poly(n + 1, 0);  // x^n - 1
  poly[0] = -1;
  poly[n] = 1;
  for (unsigned d = 1; d < n; ++d) {
    if (n % d == 0) poly = exact_divide(poly, cyclotomic_polynomial(d));
  }
  std::lock_guard lock(mu);
  cache.emplace(n, poly);
  return poly;
}

CyclotomicField::CyclotomicField(unsigned conductor)
    : n_(conductor), phi_(cyclotomic_polynomial(conductor)) {}

void CyclotomicField::reduce(std::vector<mpq_class>& poly) const {
  const std::size_t d = degree();
  for (std::size_t i = poly.size(); i-- > d;) {
    if (sgn(poly[i]) == 0) continue;
    const mpq_class c = poly[i];
    for (std::size_t j = 0; j <= d; ++j) {
      if (phi_[j] != 0) poly[i - d + j] -= c * phi_[j];
    }
  }
  poly.resize(d);
}

std::shared_ptr<const CyclotomicField> cyclotomic_field(unsigned conductor) {
  static std::mutex mu;
  static std::map<unsigned, std::shared_ptr<const CyclotomicField>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[conductor];
  if (!slot) slot = std::make_shared<const CyclotomicField>(conductor);
  return slot;
}

// ---------------------------------------------------------------------------
// Polynomials over Q, used by the inverse

namespace {

using QPoly = std::vector<mpq_class>;

void trim(QPoly& a) {
  while (!a.empty() && sgn(a.back()) == 0) a.pop_back();
}

QPoly poly_mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

QPoly poly_sub(QPoly a, const QPoly& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

// a = q*b + r with deg r < deg b; b nonzero and trimmed.
std::pair<QPoly, QPoly> poly_divmod(QPoly a, const QPoly& b) {
  trim(a);
  if (a.size() < b.size()) return {{}, a};
  QPoly q(a.size() - b.size() + 1);
  const mpq_class lead = b.back();
  const std::size_t db = b.size() - 1;
  for (std::size_t i = a.size(); i-- > db;) {
    const mpq_class c = a[i] / lead;
    q[i - db] = c;
    if (sgn(c) != 0) {
      for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
    }
  }
  trim(a);
  trim(q);
  return {q, a};
}

}  // namespace

// ---------------------------------------------------------------------------
// CycNum

CycNum::CycNum(unsigned conductor)
    : field_(cyclotomic_field(conductor)), c_(field_->degree()) {}

CycNum::CycNum(std::shared_ptr<const CyclotomicField> field, std::vector<mpq_class> c)
    : field_(std::move(field)), c_(std::move(c)) {
  field_->reduce(c_);
}

CycNum CycNum::rational(unsigned conductor, const BigRational& value) {
  CycNum r(conductor);
  if (!r.c_.empty()) r.c_[0] = value.raw();
  return r;
}

CycNum CycNum::zeta_power(unsigned conductor, long exponent) {
  return rational(conductor, BigRational(1)).times_zeta_power(exponent);
}

CycNum CycNum::from_coeffs(unsigned conductor, const std::vector<BigRational>& coeffs) {
  std::vector<mpq_class> c;
  c.reserve(coeffs.size());
  for (const auto& q : coeffs) c.push_back(q.raw());
  auto field = cyclotomic_field(conductor);
  if (c.size() < field->degree()) c.resize(field->degree());
  return CycNum(std::move(field), std::move(c));
}

std::vector<BigRational> CycNum::coeffs() const {
  std::vector<BigRational> out;
  out.reserve(c_.size());
  for (const auto& q : c_) out.emplace_back(q);
  return out;
}

bool CycNum::is_zero() const {
  for (const auto& q : c_) {
    if (sgn(q) != 0) return false;
  }
  return true;
}

bool CycNum::is_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i) {
    if (sgn(c_[i]) != 0) return false;
  }
  return true;
}

void CycNum::check_same_field(const CycNum& other) const {
  if (conductor() != other.conductor()) {
    throw Error(Errc::ConductorMismatch, "conductors " + std::to_string(conductor()) +
                                             " and " + std::to_string(other.conductor()));
  }
}

CycNum CycNum::operator-() const {
  CycNum r = *this;
  for (auto& q : r.c_) q = -q;
  return r;
}

CycNum& CycNum::operator+=(const CycNum& rhs) {
  check_same_field(rhs);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += rhs.c_[i];
  return *this;
}

CycNum& CycNum::operator-=(const CycNum& rhs) {
  check_same_field(rhs);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= rhs.c_[i];
  return *this;
}

CycNum& CycNum::operator*=(const CycNum& rhs) {
  check_same_field(rhs);
  const std::size_t d = c_.size();
  std::vector<mpq_class> prod(d == 0 ? 0 : 2 * d - 1);
  for (std::size_t i = 0; i < d; ++i) {
    if (sgn(c_[i]) == 0) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (sgn(rhs.c_[j]) != 0) prod[i + j] += c_[i] * rhs.c_[j];
    }
  }
  field_->reduce(prod);
  c_ = std::move(prod);
  return *this;
}

CycNum CycNum::scaled(const BigRational& factor) const {
  CycNum r = *this;
  for (auto& q : r.c_) q *= factor.raw();
  return r;
}

CycNum CycNum::times_zeta_power(long exponent) const {
  const long n = conductor();
  const long e = ((exponent % n) + n) % n;
  std::vector<mpq_class> shifted(c_.size() + e);
  for (std::size_t i = 0; i < c_.size(); ++i) shifted[i + e] = c_[i];
  // x^n = 1 holds modulo Phi_n, so wrap before the (shorter) Phi_n reduction.
  if (shifted.size() > static_cast<std::size_t>(n)) {
    for (std::size_t i = n; i < shifted.size(); ++i) shifted[i - n] += shifted[i];
    shifted.resize(n);
  }
  return CycNum(field_, std::move(shifted));
}

CycNum CycNum::inverse() const {
  if (is_zero()) throw Error(Errc::DivisionByZero, "inverse of zero in Q(zeta)");
  QPoly r0(field_->modulus().begin(), field_->modulus().end());
  QPoly r1 = c_;
  trim(r1);
  QPoly s0;
  QPoly s1{mpq_class(1)};
  while (r1.size() > 1) {
    auto [q, r] = poly_divmod(r0, r1);
    QPoly s2 = poly_sub(s0, poly_mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // Phi_n is irreducible, so the last remainder is a nonzero constant.
  const mpq_class c = r1.at(0);
  for (auto& q : s1) q /= c;
  return CycNum(field_, std::move(s1));
}

BigRational CycNum::rational_part() const {
  if (!is_rational()) throw Error(Errc::NotRational, to_string() + " is not rational");
  return c_.empty() ? BigRational(0) : BigRational(c_[0]);
}

bool operator==(const CycNum& a, const CycNum& b) {
  return a.conductor() == b.conductor() && a.c_ == b.c_;
}

std::string CycNum::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (sgn(c_[i]) == 0) continue;
    if (!first) out << " + ";
    first = false;
    out << BigRational(c_[i]).to_string();
    if (i == 1) out << "*z";
    if (i > 1) out << "*z^" << i;
  }
  if (first) out << "0";
  return out.str();
}

CycNum cyc_arith(const CycNum& a, const CycNum& b, CycOp op) {
  switch (op) {
    case CycOp::Add: return a + b;
    case CycOp::Sub: return a - b;
    case CycOp::Mul: return a * b;
  }
  throw Error(Errc::InvalidArgument, "unknown cyclotomic operation");
}

CycNum cyc_inv(const CycNum& a) { return a.inverse(); }

BigRational cyc_rational_part(const CycNum& a) { return a.rational_part(); }

}  // namespace kdw

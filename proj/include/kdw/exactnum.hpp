#pragma once

// Exact scalars: arbitrary-precision rationals, the group Z_(2)/Z of mod-1
// fractions with odd denominator, and the cyclotomic fields Q(zeta_n).

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace kdw {

class BigRational {
 public:
  BigRational() = default;
  BigRational(long value);  // NOLINT(google-explicit-constructor)
  BigRational(long num, long den);
  explicit BigRational(mpq_class q);

  /// Parses "num/den", "num" or "0".
  static BigRational parse(std::string_view text);

  mpz_class numerator() const { return q_.get_num(); }
  mpz_class denominator() const { return q_.get_den(); }
  const mpq_class& raw() const { return q_; }

  bool is_zero() const { return sgn(q_) == 0; }

  BigRational operator-() const { return BigRational(mpq_class(-q_)); }
  BigRational& operator+=(const BigRational& rhs);
  BigRational& operator-=(const BigRational& rhs);
  BigRational& operator*=(const BigRational& rhs);
  BigRational& operator/=(const BigRational& rhs);

  friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
  friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
  friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
  friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }

  friend bool operator==(const BigRational& a, const BigRational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  /// "num/den" in lowest terms, "0" for zero.
  std::string to_string() const;

 private:
  mpq_class q_;
};

/// An element of Z_(2)/Z: a fraction in [0, 1) with odd denominator.
class ModOneOdd {
 public:
  ModOneOdd() = default;
  /// Reduces num/den mod 1. Throws EvenDenominator if the reduced denominator is even.
  ModOneOdd(std::int64_t num, std::int64_t den);

  static ModOneOdd parse(std::string_view text);

  std::int64_t numerator() const { return num_; }
  std::int64_t denominator() const { return den_; }
  bool is_zero() const { return num_ == 0; }

  ModOneOdd operator-() const;
  friend ModOneOdd operator+(const ModOneOdd& a, const ModOneOdd& b);
  friend ModOneOdd operator-(const ModOneOdd& a, const ModOneOdd& b) { return a + (-b); }
  ModOneOdd& operator+=(const ModOneOdd& rhs) { return *this = *this + rhs; }

  friend bool operator==(const ModOneOdd& a, const ModOneOdd& b) = default;
  // Ordered by value in [0, 1).
  friend std::strong_ordering operator<=>(const ModOneOdd& a, const ModOneOdd& b) {
    return static_cast<__int128>(a.num_) * b.den_ <=> static_cast<__int128>(b.num_) * a.den_;
  }

  /// "num/den" with 0 <= num < den ("0/1" for zero).
  std::string to_string() const;

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

ModOneOdd mod_one(const BigRational& q);

/// Q(zeta_n) presented as Q[x]/Phi_n(x).
class CyclotomicField {
 public:
  explicit CyclotomicField(unsigned conductor);

  unsigned conductor() const { return n_; }
  unsigned degree() const { return static_cast<unsigned>(phi_.size()) - 1; }
  /// Coefficients of Phi_n, lowest degree first; monic.
  const std::vector<long>& modulus() const { return phi_; }

  /// Reduces a polynomial (lowest degree first) modulo Phi_n in place.
  void reduce(std::vector<mpq_class>& poly) const;

 private:
  unsigned n_;
  std::vector<long> phi_;
};

/// Shared, cached field instance for conductor n.
std::shared_ptr<const CyclotomicField> cyclotomic_field(unsigned conductor);

/// Integer coefficients of the n-th cyclotomic polynomial, lowest degree first.
std::vector<long> cyclotomic_polynomial(unsigned n);

class CycNum {
 public:
  /// Zero of Q(zeta_n).
  explicit CycNum(unsigned conductor);

  static CycNum rational(unsigned conductor, const BigRational& value);
  static CycNum zeta_power(unsigned conductor, long exponent);
  /// Builds from power-basis coefficients; reduces modulo Phi_n.
  static CycNum from_coeffs(unsigned conductor, const std::vector<BigRational>& coeffs);

  unsigned conductor() const { return field_->conductor(); }
  /// Coefficients on 1, zeta, ..., zeta^(phi(n)-1).
  std::vector<BigRational> coeffs() const;

  bool is_zero() const;
  bool is_rational() const;

  CycNum operator-() const;
  CycNum& operator+=(const CycNum& rhs);
  CycNum& operator-=(const CycNum& rhs);
  CycNum& operator*=(const CycNum& rhs);
  friend CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
  friend CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }
  friend CycNum operator*(CycNum a, const CycNum& b) { return a *= b; }
  friend CycNum operator/(const CycNum& a, const CycNum& b) { return a * b.inverse(); }

  CycNum scaled(const BigRational& factor) const;
  /// this * zeta^e, computed by shifting before reduction.
  CycNum times_zeta_power(long exponent) const;

  /// Extended Euclid against Phi_n. Throws DivisionByZero on zero.
  CycNum inverse() const;
  /// The constant coefficient; throws NotRational if any other coefficient is nonzero.
  BigRational rational_part() const;

  friend bool operator==(const CycNum& a, const CycNum& b);

  std::string to_string() const;

 private:
  CycNum(std::shared_ptr<const CyclotomicField> field, std::vector<mpq_class> c);
  void check_same_field(const CycNum& other) const;

  std::shared_ptr<const CyclotomicField> field_;
  std::vector<mpq_class> c_;  // length = degree
};

enum class CycOp { Add, Sub, Mul };

CycNum cyc_arith(const CycNum& a, const CycNum& b, CycOp op);
CycNum cyc_inv(const CycNum& a);
BigRational cyc_rational_part(const CycNum& a);

}  // namespace kdw

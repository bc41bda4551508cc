#pragma once

// Arithmetic in F_p and F_{p^2} = F_p(sqrt(Delta)).

#include <cstdint>
#include <vector>

namespace kdw {

bool is_prime(std::int64_t n);
/// Throws InvalidArgument unless p is a prime >= 5.
void require_field_prime(std::int64_t p);

/// Distinct prime factors in increasing order.
std::vector<std::int64_t> prime_factors(std::int64_t n);

class Fp {
 public:
  Fp() = default;
  Fp(std::uint32_t p, std::int64_t value);

  std::uint32_t modulus() const { return p_; }
  std::uint32_t value() const { return v_; }

  friend Fp operator+(Fp a, Fp b) { return Fp::raw(a.p_, (a.v_ + b.v_) % a.p_); }
  friend Fp operator-(Fp a, Fp b) { return Fp::raw(a.p_, (a.v_ + a.p_ - b.v_) % a.p_); }
  friend Fp operator*(Fp a, Fp b) {
    return Fp::raw(a.p_, static_cast<std::uint32_t>(std::uint64_t{a.v_} * b.v_ % a.p_));
  }
  Fp operator-() const { return Fp::raw(p_, (p_ - v_) % p_); }
  friend bool operator==(Fp a, Fp b) { return a.v_ == b.v_; }

  Fp pow(std::int64_t e) const;
  /// Throws DivisionByZero on zero.
  Fp inverse() const;
  friend Fp operator/(Fp a, Fp b) { return a * b.inverse(); }

  bool is_zero() const { return v_ == 0; }

 private:
  static Fp raw(std::uint32_t p, std::uint32_t v) {
    Fp r;
    r.p_ = p;
    r.v_ = v;
    return r;
  }
  std::uint32_t p_ = 0;
  std::uint32_t v_ = 0;
};

/// True iff a is a square in F_p (zero included), by Euler's criterion.
bool is_square(Fp a);
/// Smallest positive non-square mod p.
Fp min_nonsquare(std::uint32_t p);
/// Smallest primitive root mod p.
Fp primitive_root(std::uint32_t p);
/// Multiplicative order of a nonzero element.
std::int64_t multiplicative_order(Fp a);

/// x + y*sqrt(delta).
class Fp2 {
 public:
  Fp2(Fp x, Fp y, Fp delta) : x_(x), y_(y), d_(delta) {}

  Fp x() const { return x_; }
  Fp y() const { return y_; }
  Fp delta() const { return d_; }

  friend Fp2 operator*(const Fp2& a, const Fp2& b) {
    return Fp2(a.x_ * b.x_ + a.d_ * a.y_ * b.y_, a.x_ * b.y_ + a.y_ * b.x_, a.d_);
  }
  friend bool operator==(const Fp2& a, const Fp2& b) { return a.x_ == b.x_ && a.y_ == b.y_; }

  Fp2 pow(std::int64_t e) const;
  /// x^2 - delta*y^2.
  Fp norm() const { return x_ * x_ - d_ * y_ * y_; }
  bool is_one() const { return x_.value() == 1 && y_.is_zero(); }

 private:
  Fp x_, y_, d_;
};

/// Multiplicative order of a nonzero element of F_{p^2}.
std::int64_t multiplicative_order(const Fp2& a);

/// A generator of the norm-one subgroup mu_{p+1}: g^(p-1) for the
/// lexicographically first generator g of F_{p^2}^x.
Fp2 mu_plus_generator(std::uint32_t p, Fp delta);

}  // namespace kdw

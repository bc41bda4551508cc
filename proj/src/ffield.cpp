#include "kdw/ffield.hpp"

#include <string>

#include "kdw/error.hpp"

namespace kdw {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

void require_field_prime(std::int64_t p) {
  if (p < 5 || !is_prime(p)) {
    throw Error(Errc::InvalidArgument, "p must be a prime >= 5, got " + std::to_string(p));
  }
  if (p > 65521) throw Error(Errc::TooLarge, "p too large: " + std::to_string(p));
}

std::vector<std::int64_t> prime_factors(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

Fp::Fp(std::uint32_t p, std::int64_t value) : p_(p) {
  std::int64_t r = value % static_cast<std::int64_t>(p);
  if (r < 0) r += p;
  v_ = static_cast<std::uint32_t>(r);
}

Fp Fp::pow(std::int64_t e) const {
  if (e < 0) return inverse().pow(-e);
  Fp base = *this;
  Fp acc = Fp::raw(p_, 1 % p_);
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

Fp Fp::inverse() const {
  if (v_ == 0) throw Error(Errc::DivisionByZero, "inverse of 0 in F_" + std::to_string(p_));
  return pow(p_ - 2);
}

bool is_square(Fp a) {
  if (a.is_zero()) return true;
  return a.pow((a.modulus() - 1) / 2).value() == 1;
}

Fp min_nonsquare(std::uint32_t p) {
  require_field_prime(p);
  for (std::uint32_t a = 2;; ++a) {
    if (!is_square(Fp(p, a))) return Fp(p, a);
  }
}

std::int64_t multiplicative_order(Fp a) {
  if (a.is_zero()) throw Error(Errc::InvalidArgument, "order of 0");
  std::int64_t n = a.modulus() - 1;
  for (std::int64_t q : prime_factors(n)) {
    while (n % q == 0 && a.pow(n / q).value() == 1) n /= q;
  }
  return n;
}

Fp primitive_root(std::uint32_t p) {
  require_field_prime(p);
  for (std::uint32_t g = 2;; ++g) {
    if (multiplicative_order(Fp(p, g)) == static_cast<std::int64_t>(p) - 1) return Fp(p, g);
  }
}

Fp2 Fp2::pow(std::int64_t e) const {
  const std::uint32_t p = x_.modulus();
  Fp2 base = *this;
  Fp2 acc(Fp(p, 1), Fp(p, 0), d_);
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

std::int64_t multiplicative_order(const Fp2& a) {
  const std::int64_t p = a.x().modulus();
  std::int64_t n = p * p - 1;
  for (std::int64_t q : prime_factors(n)) {
    while (n % q == 0 && a.pow(n / q).is_one()) n /= q;
  }
  return n;
}

Fp2 mu_plus_generator(std::uint32_t p, Fp delta) {
  require_field_prime(p);
  if (is_square(delta)) {
    throw Error(Errc::InvalidArgument, "delta " + std::to_string(delta.value()) + " is a square mod " +
                                           std::to_string(p));
  }
  const std::int64_t group_order = std::int64_t{p} * p - 1;
  for (std::uint32_t x = 0; x < p; ++x) {
    for (std::uint32_t y = 0; y < p; ++y) {
      if (x == 0 && y == 0) continue;
      const Fp2 g(Fp(p, x), Fp(p, y), delta);
      if (multiplicative_order(g) == group_order) return g.pow(p - 1);
    }
  }
  throw Error(Errc::NoSolution, "F_p^2 has no generator");
}

}  // namespace kdw

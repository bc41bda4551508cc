#include "kdw/cyclicrep.hpp"

#include <numeric>

#include "kdw/error.hpp"
#include "kdw/ffield.hpp"

namespace kdw {

namespace {

std::int64_t mod(std::int64_t a, std::int64_t k) { return ((a % k) + k) % k; }

// (z^e + 1) / (z^e - 1) for e != 0 mod k.
CycNum cayley(unsigned k, std::int64_t e) {
  const CycNum z = CycNum::zeta_power(k, e);
  const CycNum one = CycNum::rational(k, 1);
  return (z + one) / (z - one);
}

}  // namespace

bool XiVector::is_zero() const {
  for (const auto& e : entries) {
    if (!e.is_zero()) return false;
  }
  return true;
}

std::int64_t common_denominator(const std::vector<ModOneOdd>& v) {
  std::int64_t d = 1;
  for (const auto& e : v) d = std::lcm(d, e.denominator());
  return d;
}

std::string vector_text(const std::vector<ModOneOdd>& v) {
  const std::int64_t d = common_denominator(v);
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(v[i].numerator() * (d / v[i].denominator()));
  }
  return out + ")/" + std::to_string(d);
}

std::string XiVector::text() const { return vector_text(entries); }

std::strong_ordering operator<=>(const XiVector& a, const XiVector& b) {
  if (auto c = a.k <=> b.k; c != 0) return c;
  return a.entries <=> b.entries;
}

void require_odd_prime(std::int64_t k) {
  if (k < 3 || k % 2 == 0 || !is_prime(k)) {
    throw Error(Errc::InvalidArgument, "k must be an odd prime, got " + std::to_string(k));
  }
}

CycNum alpha_character(std::int64_t k, const std::vector<std::int64_t>& ls, std::int64_t h) {
  require_odd_prime(k);
  if (ls.empty()) throw Error(Errc::InvalidArgument, "at least one twist parameter is required");
  for (std::int64_t l : ls) {
    if (std::gcd(l, k) != 1) {
      throw Error(Errc::NotCoprime, "l=" + std::to_string(l) + " is not coprime to k=" +
                                        std::to_string(k));
    }
  }
  const auto kk = static_cast<unsigned>(k);
  h = mod(h, k);
  if (h == 0) return CycNum(kk);
  CycNum value = -cayley(kk, h);
  for (std::int64_t l : ls) value *= cayley(kk, mod(h * l, k));
  return value;
}

XiVector xi_vector(std::int64_t k, const std::vector<std::int64_t>& ls) {
  const auto kk = static_cast<unsigned>(k);
  std::vector<CycNum> alpha;
  alpha.reserve(static_cast<std::size_t>(k));
  for (std::int64_t h = 0; h < k; ++h) alpha.push_back(alpha_character(k, ls, h));

  XiVector out{k, {}};
  out.entries.reserve(static_cast<std::size_t>(k));
  for (std::int64_t i = 0; i < k; ++i) {
    CycNum sum(kk);
    for (std::int64_t h = 1; h < k; ++h) sum += alpha[h].times_zeta_power(-h * i);
    const BigRational a = sum.rational_part() / BigRational(k);
    out.entries.push_back(mod_one(a));
  }
  return out;
}

XiVector perm_apply(std::int64_t h, const XiVector& v) {
  const std::int64_t k = v.k;
  if (std::gcd(h, k) != 1) {
    throw Error(Errc::NotCoprime, "h=" + std::to_string(h) + " is not a unit mod " + std::to_string(k));
  }
  XiVector out{k, std::vector<ModOneOdd>(v.entries.size())};
  for (std::int64_t i = 0; i < k; ++i) out.entries[i] = v.entries[mod(h * i, k)];
  return out;
}

FormalSum<XiVector> lens_kdw_cyclic(std::int64_t k, const std::vector<std::int64_t>& ls) {
  const XiVector xi = xi_vector(k, ls);
  FormalSum<XiVector> fs;
  fs.add(XiVector{k, std::vector<ModOneOdd>(static_cast<std::size_t>(k))});
  for (std::int64_t h = 1; h < k; ++h) fs.add(perm_apply(h, xi));
  return fs;
}

}  // namespace kdw

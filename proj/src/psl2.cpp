#include "kdw/psl2.hpp"

#include <algorithm>
#include <sstream>

#include <omp.h>

#include "kdw/error.hpp"

namespace kdw::psl2 {

namespace {

std::int64_t nu(std::int64_t n, std::int64_t q) {
  std::int64_t e = 0;
  while (n % q == 0) {
    n /= q;
    ++e;
  }
  return e;
}

std::int64_t ipow(std::int64_t b, std::int64_t e) {
  std::int64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

}  // namespace

// ---------------------------------------------------------------------------
// Generators

Generators Generators::defaults(std::uint32_t p) {
  require_field_prime(p);
  const Fp delta = min_nonsquare(p);
  return Generators{delta, primitive_root(p), mu_plus_generator(p, delta)};
}

Generators Generators::from_values(std::uint32_t p, std::int64_t delta, std::int64_t zeta_minus,
                                   std::int64_t zeta_plus_x, std::int64_t zeta_plus_y) {
  require_field_prime(p);
  const Fp d(p, delta);
  Generators g{d, Fp(p, zeta_minus), Fp2(Fp(p, zeta_plus_x), Fp(p, zeta_plus_y), d)};
  g.validate(p);
  return g;
}

void Generators::validate(std::uint32_t p) const {
  if (delta.modulus() != p || zeta_minus.modulus() != p || zeta_plus.x().modulus() != p) {
    throw Error(Errc::InvalidArgument, "generators belong to a different field");
  }
  if (is_square(delta)) {
    throw Error(Errc::InvalidArgument, "delta=" + std::to_string(delta.value()) + " is a square");
  }
  if (zeta_minus.is_zero() || multiplicative_order(zeta_minus) != static_cast<std::int64_t>(p) - 1) {
    throw Error(Errc::InvalidArgument,
                "zeta_minus=" + std::to_string(zeta_minus.value()) + " is not a primitive root");
  }
  if (!(zeta_plus.delta() == delta)) {
    throw Error(Errc::InvalidArgument, "zeta_plus uses a different delta");
  }
  if (zeta_plus.norm().value() != 1) {
    throw Error(Errc::InvalidArgument, "zeta_plus does not have norm 1");
  }
  if (multiplicative_order(zeta_plus) != static_cast<std::int64_t>(p) + 1) {
    throw Error(Errc::InvalidArgument, "zeta_plus does not have order p+1");
  }
}

std::string Generators::describe() const {
  return "delta=" + std::to_string(delta.value()) +
         " zeta_minus=" + std::to_string(zeta_minus.value()) + " zeta_plus=" +
         std::to_string(zeta_plus.x().value()) + "+" + std::to_string(zeta_plus.y().value()) +
         "*sqrt(" + std::to_string(delta.value()) + ")";
}

std::string_view class_tag_name(ClassTag tag) {
  switch (tag) {
    case ClassTag::Identity: return "identity";
    case ClassTag::UnipotentSquare: return "unipotent-square";
    case ClassTag::UnipotentNonsquare: return "unipotent-nonsquare";
    case ClassTag::Split: return "split";
    case ClassTag::Nonsplit: return "nonsplit";
  }
  return "?";
}

std::string_view subgroup_kind_name(SubgroupKind kind) {
  switch (kind) {
    case SubgroupKind::Split: return "split";
    case SubgroupKind::Unipotent: return "unipotent";
    case SubgroupKind::Nonsplit: return "nonsplit";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Group

Group::Group(std::uint32_t p) : p_(p), gens_(Generators::defaults(p)) {}

Group::Group(std::uint32_t p, Generators gens) : p_(p), gens_(std::move(gens)) {
  require_field_prime(p);
  gens_.validate(p);
}

std::int64_t Group::order() const {
  const std::int64_t p = p_;
  return (p * p * p - p) / 2;
}

Elem Group::negate(Elem x) const {
  return Elem{(p_ - x.a) % p_, (p_ - x.b) % p_, (p_ - x.c) % p_, (p_ - x.d) % p_};
}

Elem Group::canonical(Elem x) const {
  const std::uint32_t half = (p_ - 1) / 2;
  for (std::uint32_t v : {x.a, x.b, x.c, x.d}) {
    if (v != 0) return v <= half ? x : negate(x);
  }
  return x;
}

Elem Group::make(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) const {
  const Fp fa(p_, a), fb(p_, b), fc(p_, c), fd(p_, d);
  if ((fa * fd - fb * fc).value() != 1) {
    throw Error(Errc::InvalidArgument, "matrix does not have determinant 1");
  }
  return canonical(Elem{fa.value(), fb.value(), fc.value(), fd.value()});
}

Elem Group::mul_raw(Elem x, Elem y) const {
  const std::uint64_t p = p_;
  auto dot = [p](std::uint64_t u1, std::uint64_t v1, std::uint64_t u2, std::uint64_t v2) {
    return static_cast<std::uint32_t>((u1 * v1 + u2 * v2) % p);
  };
  return Elem{dot(x.a, y.a, x.b, y.c), dot(x.a, y.b, x.b, y.d), dot(x.c, y.a, x.d, y.c),
              dot(x.c, y.b, x.d, y.d)};
}

Elem Group::inv(Elem x) const { return canonical(Elem{x.d, (p_ - x.b) % p_, (p_ - x.c) % p_, x.a}); }

Elem Group::pow(Elem x, std::int64_t n) const {
  if (n < 0) {
    x = inv(x);
    n = -n;
  }
  Elem acc = identity();
  while (n > 0) {
    if (n & 1) acc = mul_raw(acc, x);
    x = mul_raw(x, x);
    n >>= 1;
  }
  return canonical(acc);
}

Elem Group::conj(Elem g, Elem x) const { return mul(mul_raw(g, x), inv(g)); }

std::uint32_t Group::trace_pm(Elem x) const {
  const std::uint32_t t = trace(x);
  return std::min(t, (p_ - t) % p_);
}

Elem Group::sigma_T(Fp x) const {
  if (x.modulus() != p_ || x.is_zero()) {
    throw Error(Errc::InvalidArgument, "sigma_T needs a nonzero element of F_p");
  }
  return canonical(Elem{x.value(), 0, 0, x.inverse().value()});
}

Elem Group::sigma_U(Fp x) const {
  if (x.modulus() != p_) throw Error(Errc::InvalidArgument, "sigma_U argument from another field");
  return canonical(Elem{1, x.value(), 0, 1});
}

Elem Group::sigma_B(const Fp2& z) const {
  if (z.x().modulus() != p_ || !(z.delta() == gens_.delta) || z.norm().value() != 1) {
    throw Error(Errc::InvalidArgument, "sigma_B needs an element of mu_{p+1}");
  }
  const Fp dy = gens_.delta * z.y();
  return canonical(Elem{z.x().value(), dy.value(), z.y().value(), z.x().value()});
}

std::int64_t Group::element_order(Elem x) const {
  x = canonical(x);
  const Elem id = identity();
  Elem acc = x;
  std::int64_t n = 1;
  while (acc != id) {
    acc = mul(acc, x);
    ++n;
  }
  return n;
}

ClassId Group::class_of(Elem x) const {
  x = canonical(x);
  if (x == identity()) return ClassId{ClassTag::Identity, 2};
  const std::uint32_t tpm = trace_pm(x);
  if (tpm == 2) {
    if (trace(x) != 2) x = negate(x);
    const Fp n11(p_, std::int64_t{x.a} - 1), n12(p_, x.b), n21(p_, x.c), n22(p_, std::int64_t{x.d} - 1);
    Fp u1, u2;
    if (!n11.is_zero() || !n12.is_zero()) {
      u1 = n12;
      u2 = -n11;
    } else {
      u1 = n22;
      u2 = -n21;
    }
    Fp w1(p_, 0), w2(p_, 0);
    if (!u1.is_zero()) {
      w2 = u1.inverse();
    } else {
      w1 = -u2.inverse();
    }
    const Fp nw1 = n11 * w1 + n12 * w2;
    const Fp nw2 = n21 * w1 + n22 * w2;
    const Fp b = !u1.is_zero() ? nw1 / u1 : nw2 / u2;
    return ClassId{is_square(b) ? ClassTag::UnipotentSquare : ClassTag::UnipotentNonsquare, 2};
  }
  const Fp t(p_, tpm);
  const Fp disc = t * t - Fp(p_, 4);
  return ClassId{is_square(disc) ? ClassTag::Split : ClassTag::Nonsplit, tpm};
}

std::vector<Elem> Group::elements() const {
  std::vector<Elem> out;
  out.reserve(static_cast<std::size_t>(order()));
  const std::uint32_t p = p_;
  for (std::uint32_t a = 0; a < p; ++a) {
    for (std::uint32_t b = 0; b < p; ++b) {
      for (std::uint32_t c = 0; c < p; ++c) {
        if (a != 0) {
          const Fp d = (Fp(p, 1) + Fp(p, b) * Fp(p, c)) / Fp(p, a);
          const Elem x{a, b, c, d.value()};
          if (canonical(x) == x) out.push_back(x);
        } else if ((Fp(p, b) * Fp(p, c)).value() == p - 1) {
          for (std::uint32_t d = 0; d < p; ++d) {
            const Elem x{a, b, c, d};
            if (canonical(x) == x) out.push_back(x);
          }
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ConjugacyClass> Group::classes(Exec exec) const {
  std::map<ClassId, Elem> reps;
  reps.emplace(class_of(identity()), identity());
  for (Fp s : {Fp(p_, 1), gens_.delta}) reps.emplace(class_of(sigma_U(s)), sigma_U(s));
  for (std::int64_t i = 1; i < static_cast<std::int64_t>(p_) - 1; ++i) {
    const Elem x = sigma_T(gens_.zeta_minus.pow(i));
    if (x != identity()) reps.emplace(class_of(x), x);
  }
  for (std::int64_t j = 1; j < static_cast<std::int64_t>(p_) + 1; ++j) {
    const Elem x = sigma_B(gens_.zeta_plus.pow(j));
    if (x != identity()) reps.emplace(class_of(x), x);
  }

  const std::vector<Elem> all = elements();
  std::map<ClassId, std::int64_t> sizes;
  const auto n = static_cast<std::int64_t>(all.size());
  if (exec == Exec::Serial) {
    for (const Elem& x : all) ++sizes[class_of(x)];
  } else {
#pragma omp parallel
    {
      std::map<ClassId, std::int64_t> local;
#pragma omp for schedule(static) nowait
      for (std::int64_t i = 0; i < n; ++i) ++local[class_of(all[i])];
#pragma omp critical
      for (const auto& [id, c] : local) sizes[id] += c;
    }
  }

  std::vector<ConjugacyClass> out;
  for (const auto& [id, rep] : reps) out.push_back(ConjugacyClass{id, rep, sizes[id]});
  return out;
}

bool is_odd_prime_divisor(std::uint32_t p, std::int64_t k) {
  if (k < 3 || k % 2 == 0 || !is_prime(k)) return false;
  return k == p || (p - 1) % k == 0 || (p + 1) % k == 0;
}

void require_odd_prime_divisor(std::uint32_t p, std::int64_t k) {
  if (!is_odd_prime_divisor(p, k)) {
    throw Error(Errc::NotADivisor, "k=" + std::to_string(k) +
                                       " is not an odd prime dividing |PSL_2(F_" +
                                       std::to_string(p) + ")|");
  }
}

CyclicSubgroup Group::subgroup_H(std::int64_t k) const {
  require_odd_prime_divisor(p_, k);
  if (k == p_) return CyclicSubgroup{k, sigma_U(Fp(p_, 1)), SubgroupKind::Unipotent};
  if ((p_ - 1) % k == 0) {
    return CyclicSubgroup{k, sigma_T(gens_.zeta_minus.pow((p_ - 1) / (2 * k))), SubgroupKind::Split};
  }
  return CyclicSubgroup{k, sigma_B(gens_.zeta_plus.pow((p_ + 1) / (2 * k))), SubgroupKind::Nonsplit};
}

CyclicSubgroup Group::torus_T() const {
  return CyclicSubgroup{(static_cast<std::int64_t>(p_) - 1) / 2, sigma_T(gens_.zeta_minus),
                        SubgroupKind::Split};
}

CyclicSubgroup Group::unipotent_U() const {
  return CyclicSubgroup{p_, sigma_U(Fp(p_, 1)), SubgroupKind::Unipotent};
}

CyclicSubgroup Group::torus_B() const {
  return CyclicSubgroup{(static_cast<std::int64_t>(p_) + 1) / 2, sigma_B(gens_.zeta_plus),
                        SubgroupKind::Nonsplit};
}

std::vector<Elem> Group::subgroup_elements(const CyclicSubgroup& h) const {
  std::vector<Elem> out;
  out.reserve(static_cast<std::size_t>(h.order));
  Elem x = identity();
  for (std::int64_t i = 0; i < h.order; ++i) {
    out.push_back(x);
    x = mul(x, h.generator);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Counting

std::int64_t r_count(std::uint32_t p, std::int64_t k) {
  require_field_prime(p);
  if (!is_prime(k)) throw Error(Errc::InvalidArgument, "k must be prime");
  const std::int64_t pm = (static_cast<std::int64_t>(p) - 1) / 2;
  const std::int64_t pp = (static_cast<std::int64_t>(p) + 1) / 2;
  if (k == p) return 2;
  if (k == 2) {
    const std::int64_t half = pm % 2 == 0 ? pm : pp;
    return ipow(2, nu(half, 2) - 1);
  }
  if (pm % k == 0) return (ipow(k, nu(pm, k)) - 1) / 2;
  if (pp % k == 0) return (ipow(k, nu(pp, k)) - 1) / 2;
  return 0;
}

std::map<std::int64_t, std::int64_t> k1_structure(std::uint32_t p) {
  require_field_prime(p);
  const std::int64_t pp = p;
  std::map<std::int64_t, std::int64_t> out;
  for (std::int64_t q : prime_factors((pp * pp * pp - pp) / 2)) {
    if (const std::int64_t r = r_count(p, q); r > 0) out[q] = r;
  }
  return out;
}

std::int64_t count_order_k_subgroups(std::uint32_t p, std::int64_t k) {
  require_odd_prime_divisor(p, k);
  const std::int64_t pp = p;
  if (k == pp) return pp + 1;
  if ((pp - 1) % k == 0) return (pp * pp + pp) / 2;
  return (pp * pp - pp) / 2;
}

std::string to_string(const Elem& x) {
  std::ostringstream out;
  out << "[[" << x.a << "," << x.b << "],[" << x.c << "," << x.d << "]]";
  return out.str();
}

std::string to_string(const ClassId& id) {
  std::string s(class_tag_name(id.tag));
  if (id.tag == ClassTag::Split || id.tag == ClassTag::Nonsplit) {
    s += "(" + std::to_string(id.trace_pm) + ")";
  }
  return s;
}

}  // namespace kdw::psl2

#include "kdw/induction.hpp"

#include <numeric>

#include "kdw/error.hpp"
#include "kdw/ffield.hpp"

namespace kdw {

namespace {

void require_brute(std::uint32_t p) {
  if (p > kBruteMaxP) {
    throw Error(Errc::TooLarge, "exhaustive induction is limited to p <= " + std::to_string(kBruteMaxP));
  }
}

std::int64_t mod(std::int64_t a, std::int64_t k) { return ((a % k) + k) % k; }

}  // namespace

bool ClassFunction::is_zero() const {
  for (const auto& [id, v] : values) {
    if (!v.is_zero()) return false;
  }
  return true;
}

InductionTable induction_table(const psl2::Group& g, const psl2::CyclicSubgroup& h, Exec exec) {
  require_brute(g.p());
  const std::uint32_t p = g.p();
  InductionTable t;
  t.p = p;
  t.subgroup = h;
  t.classes = g.classes(exec);

  std::vector<std::int32_t> exponent(static_cast<std::size_t>(p) * p * p * p, -1);
  const std::vector<psl2::Elem> powers = g.subgroup_elements(h);
  for (std::size_t j = 0; j < powers.size(); ++j) exponent[g.index(powers[j])] = static_cast<std::int32_t>(j);

  const std::vector<psl2::Elem> all = g.elements();
  const std::size_t nc = t.classes.size();
  const auto n = static_cast<std::size_t>(h.order);
  std::vector<std::int64_t> flat(nc * n, 0);
  auto scan = [&](std::int64_t xi, std::vector<std::int64_t>& acc) {
    const psl2::Elem x = all[xi];
    for (std::size_t c = 0; c < nc; ++c) {
      const std::int32_t e = exponent[g.index(g.conj(x, t.classes[c].rep))];
      if (e >= 0) ++acc[c * n + e];
    }
  };
  const auto total = static_cast<std::int64_t>(all.size());
  if (exec == Exec::Serial) {
    for (std::int64_t i = 0; i < total; ++i) scan(i, flat);
  } else {
#pragma omp parallel
    {
      std::vector<std::int64_t> local(nc * n, 0);
#pragma omp for schedule(static) nowait
      for (std::int64_t i = 0; i < total; ++i) scan(i, local);
#pragma omp critical
      for (std::size_t i = 0; i < flat.size(); ++i) flat[i] += local[i];
    }
  }
  t.counts.assign(nc, std::vector<std::int64_t>(n));
  for (std::size_t c = 0; c < nc; ++c) {
    for (std::size_t j = 0; j < n; ++j) t.counts[c][j] = flat[c * n + j];
  }
  return t;
}

ClassFunction induce(const InductionTable& t, const std::vector<std::int64_t>& coeffs) {
  const std::int64_t n = t.subgroup.order;
  if (static_cast<std::int64_t>(coeffs.size()) != n) {
    throw Error(Errc::InvalidArgument, "coefficient vector length must equal |H|");
  }
  const auto conductor = static_cast<unsigned>(n);
  // Character of sum_i coeffs[i] rho_i at h^j.
  std::vector<CycNum> chi(static_cast<std::size_t>(n), CycNum(conductor));
  for (std::int64_t j = 0; j < n; ++j) {
    std::vector<BigRational> poly(static_cast<std::size_t>(n), BigRational(0));
    for (std::int64_t i = 0; i < n; ++i) poly[mod(i * j, n)] += BigRational(coeffs[i]);
    CycNum acc(conductor);
    for (std::int64_t e = 0; e < n; ++e) {
      if (!poly[e].is_zero()) acc += CycNum::zeta_power(conductor, e).scaled(poly[e]);
    }
    chi[j] = acc;
  }
  ClassFunction f;
  f.p = t.p;
  const BigRational inv_n(1, n);
  for (std::size_t c = 0; c < t.classes.size(); ++c) {
    CycNum v(conductor);
    for (std::int64_t j = 0; j < n; ++j) {
      if (t.counts[c][j] != 0) v += chi[j].scaled(BigRational(t.counts[c][j]));
    }
    f.values.emplace(t.classes[c].id, v.scaled(inv_n));
  }
  return f;
}

ClassFunction induced_character(const InductionTable& t, std::int64_t i) {
  std::vector<std::int64_t> e(static_cast<std::size_t>(t.subgroup.order), 0);
  e[mod(i, t.subgroup.order)] = 1;
  return induce(t, e);
}

ClassFunction induced_character(const psl2::Group& g, const psl2::CyclicSubgroup& h, std::int64_t i,
                                Exec exec) {
  return induced_character(induction_table(g, h, exec), i);
}

std::vector<std::vector<std::int64_t>> kernel_generators(std::uint32_t p, std::int64_t k) {
  psl2::require_odd_prime_divisor(p, k);
  std::vector<std::vector<std::int64_t>> out;
  auto basis_diff = [k](std::int64_t i, std::int64_t j) {
    std::vector<std::int64_t> v(static_cast<std::size_t>(k), 0);
    v[mod(i, k)] += 1;
    v[mod(j, k)] -= 1;
    return v;
  };
  if (k != p) {
    for (std::int64_t i = 1; i <= (k - 1) / 2; ++i) out.push_back(basis_diff(i, -i));
    return out;
  }
  const std::int64_t delta = min_nonsquare(p).value();
  for (std::int64_t s = 2; s < k; ++s) {
    if (is_square(Fp(p, s))) out.push_back(basis_diff(1, s));
  }
  for (std::int64_t s = 2; s < k; ++s) {
    if (is_square(Fp(p, s))) out.push_back(basis_diff(delta, s * delta));
  }
  return out;
}

std::int64_t image_rank(const psl2::Group& g, const psl2::CyclicSubgroup& h, Exec exec) {
  const InductionTable t = induction_table(g, h, exec);
  std::vector<std::vector<CycNum>> rows;
  for (std::int64_t i = 0; i < h.order; ++i) {
    const ClassFunction f = induced_character(t, i);
    std::vector<CycNum> row;
    for (const auto& [id, v] : f.values) row.push_back(v);
    rows.push_back(std::move(row));
  }
  const std::size_t ncols = t.classes.size();
  std::int64_t rank = 0;
  std::size_t r = 0;
  for (std::size_t col = 0; col < ncols && r < rows.size(); ++col) {
    std::size_t pivot = r;
    while (pivot < rows.size() && rows[pivot][col].is_zero()) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[r], rows[pivot]);
    const CycNum inv = rows[r][col].inverse();
    for (std::size_t c = col; c < ncols; ++c) rows[r][c] *= inv;
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (rows[i][col].is_zero()) continue;
      const CycNum factor = rows[i][col];
      for (std::size_t c = col; c < ncols; ++c) rows[i][c] -= factor * rows[r][c];
    }
    ++r;
    ++rank;
  }
  return rank;
}

// ---------------------------------------------------------------------------
// Quotient coordinates

std::string_view quotient_kind_name(QuotientKind kind) {
  return kind == QuotientKind::Fold ? "fold" : "square-class";
}

bool QuotientCoord::is_zero() const {
  for (const auto& e : entries) {
    if (!e.is_zero()) return false;
  }
  return true;
}

std::strong_ordering operator<=>(const QuotientCoord& a, const QuotientCoord& b) {
  if (auto c = a.k <=> b.k; c != 0) return c;
  if (auto c = a.kind <=> b.kind; c != 0) return c;
  return a.entries <=> b.entries;
}

QuotientCoord zero_quotient(std::uint32_t p, std::int64_t k) {
  psl2::require_odd_prime_divisor(p, k);
  if (k == p) return QuotientCoord{k, QuotientKind::SquareClass, std::vector<ModOneOdd>(3)};
  return QuotientCoord{k, QuotientKind::Fold, std::vector<ModOneOdd>(static_cast<std::size_t>((k + 1) / 2))};
}

QuotientCoord to_quotient(std::uint32_t p, std::int64_t k, const XiVector& v) {
  QuotientCoord out = zero_quotient(p, k);
  if (v.k != k || static_cast<std::int64_t>(v.entries.size()) != k) {
    throw Error(Errc::InvalidArgument, "vector length does not match k=" + std::to_string(k));
  }
  out.entries[0] = v.entries[0];
  if (out.kind == QuotientKind::Fold) {
    for (std::int64_t i = 1; i <= (k - 1) / 2; ++i) out.entries[i] = v.entries[i] + v.entries[k - i];
    return out;
  }
  for (std::int64_t s = 1; s < k; ++s) out.entries[is_square(Fp(p, s)) ? 1 : 2] += v.entries[s];
  return out;
}

FormalSum<QuotientCoord> lens_kdw_psl2(std::uint32_t p, std::int64_t k, const std::vector<std::int64_t>& ls) {
  require_field_prime(p);
  psl2::require_odd_prime_divisor(p, k);
  const XiVector xi = xi_vector(k, ls);
  const std::int64_t mk = psl2::count_order_k_subgroups(p, k);
  FormalSum<QuotientCoord> fs;
  fs.add(zero_quotient(p, k));
  for (std::int64_t h = 1; h < k; ++h) fs.add(to_quotient(p, k, perm_apply(h, xi)), mk);
  return fs;
}

bool QuotientTriple::is_zero() const {
  return c[0].is_zero() && c[1].is_zero() && c[2].is_zero();
}

std::string QuotientTriple::text() const {
  return "(" + c[0].text() + ", " + c[1].text() + ", " + c[2].text() + ")";
}

std::strong_ordering operator<=>(const QuotientTriple& a, const QuotientTriple& b) {
  for (std::size_t i = 0; i < 3; ++i) {
    if (auto r = a.c[i] <=> b.c[i]; r != 0) return r;
  }
  return std::strong_ordering::equal;
}

}  // namespace kdw

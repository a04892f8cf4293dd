#pragma once

/**
 * @file matfp.hpp
 * @brief Dense matrices over F_p with exact determinants, plus builders for
 * D_p(c,d) = [(i^2 + cij + dj^2)^(p-2)], circulants, Cauchy matrices and the
 * sign of the multiplication permutation x -> ax.
 *
 * Entries follow the x^(p-2) convention throughout: the "reciprocal" of zero
 * is zero.
 */

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <span>
#include <stdexcept>
#include <vector>

#include "ffcore.hpp"

namespace trifield {

class MatFp {
 public:
  MatFp(const FieldCtx& ctx, std::size_t nrows, std::size_t ncols)
      : p_(ctx.p()), nrows_(nrows), ncols_(ncols), entries_(nrows * ncols, 0) {}

  static MatFp identity(const FieldCtx& ctx, std::size_t n) {
    MatFp m(ctx, n, n);
    for (std::size_t i = 0; i < n; ++i) m.entries_[i * n + i] = 1 % ctx.p();
    return m;
  }

  [[nodiscard]] FieldCtx ctx() const { return FieldCtx(p_); }
  [[nodiscard]] std::uint64_t modulus() const noexcept { return p_; }
  [[nodiscard]] std::size_t rows() const noexcept { return nrows_; }
  [[nodiscard]] std::size_t cols() const noexcept { return ncols_; }
  [[nodiscard]] bool is_square() const noexcept { return nrows_ == ncols_; }

  [[nodiscard]] FpElem at(std::size_t i, std::size_t j) const {
    return FpElem::from_canonical(entries_.at(i * ncols_ + j), p_);
  }
  void set(std::size_t i, std::size_t j, const FpElem& v) {
    if (v.modulus() != p_) throw std::invalid_argument("matrix entry has the wrong modulus");
    entries_.at(i * ncols_ + j) = v.value();
  }
  /// Canonical residues, row-major.
  [[nodiscard]] std::span<const std::uint64_t> raw() const noexcept { return entries_; }

  [[nodiscard]] MatFp transpose() const {
    MatFp t(ctx(), ncols_, nrows_);
    for (std::size_t i = 0; i < nrows_; ++i)
      for (std::size_t j = 0; j < ncols_; ++j) t.entries_[j * nrows_ + i] = entries_[i * ncols_ + j];
    return t;
  }

  friend MatFp operator*(const MatFp& a, const MatFp& b) {
    if (a.p_ != b.p_) throw std::invalid_argument("matrix product across moduli");
    if (a.ncols_ != b.nrows_) throw std::invalid_argument("matrix product dimension mismatch");
    MatFp out(a.ctx(), a.nrows_, b.ncols_);
    for (std::size_t i = 0; i < a.nrows_; ++i)
      for (std::size_t k = 0; k < a.ncols_; ++k) {
        const std::uint64_t aik = a.entries_[i * a.ncols_ + k];
        if (aik == 0) continue;
        for (std::size_t j = 0; j < b.ncols_; ++j) {
          auto& dst = out.entries_[i * out.ncols_ + j];
          dst = (dst + aik * b.entries_[k * b.ncols_ + j]) % a.p_;
        }
      }
    return out;
  }

  friend bool operator==(const MatFp&, const MatFp&) = default;

  /// Row-major decimal residues, space-separated, one row per line.
  void dump(std::ostream& os) const {
    for (std::size_t i = 0; i < nrows_; ++i) {
      for (std::size_t j = 0; j < ncols_; ++j) {
        if (j != 0) os << ' ';
        os << entries_[i * ncols_ + j];
      }
      os << '\n';
    }
  }

 private:
  std::uint64_t p_;
  std::size_t nrows_;
  std::size_t ncols_;
  std::vector<std::uint64_t> entries_;
};

/// Gaussian elimination with first-nonzero pivoting. O(n^3).
inline FpElem det(const MatFp& m) {
  if (!m.is_square()) throw DomainError("determinant of a non-square matrix");
  const std::uint64_t p = m.modulus();
  const std::size_t n = m.rows();
  std::vector<std::uint64_t> a(m.raw().begin(), m.raw().end());
  std::uint64_t result = 1 % p;
  bool negate = false;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv * n + col] == 0) ++piv;
    if (piv == n) return FpElem::from_canonical(0, p);
    if (piv != col) {
      for (std::size_t k = col; k < n; ++k) std::swap(a[piv * n + k], a[col * n + k]);
      negate = !negate;
    }
    const std::uint64_t pv = a[col * n + col];
    result = detail::mulmod(result, pv, p);
    const std::uint64_t inv = inverse(FpElem::from_canonical(pv, p)).value();
    const std::uint64_t* prow = &a[col * n];
    for (std::size_t r = col + 1; r < n; ++r) {
      std::uint64_t* row = &a[r * n];
      if (row[col] == 0) continue;
      const std::uint64_t f = p - detail::mulmod(row[col], inv, p);
      for (std::size_t k = col; k < n; ++k) row[k] = (row[k] + f * prow[k]) % p;
    }
  }
  if (negate && result != 0) result = p - result;
  return FpElem::from_canonical(result, p);
}

/// x^(p-2): the inverse of a nonzero residue, zero for zero.
inline FpElem recip_or_zero(const FpElem& x) { return x.is_zero() ? x : inverse(x); }

/// D_p(c,d), the (p-1)x(p-1) matrix with entry (i,j) = 1/(i^2 + cij + dj^2)
/// for 1 <= i,j <= p-1, or 0 where the form vanishes.
inline MatFp build_dp(const FieldCtx& ctx, const FpElem& c, const FpElem& d) {
  if (ctx.p() < 3) throw DomainError("build_dp requires p >= 3");
  const std::size_t n = ctx.p() - 1;
  MatFp m(ctx, n, n);
  for (std::size_t i = 1; i <= n; ++i) {
    const FpElem fi = ctx.elem(static_cast<std::int64_t>(i));
    for (std::size_t j = i; j <= n; ++j) {
      const FpElem fj = ctx.elem(static_cast<std::int64_t>(j));
      const FpElem q = fi * fi + c * fi * fj + d * fj * fj;
      m.set(i - 1, j - 1, recip_or_zero(q));
      if (j != i) {
        const FpElem qt = fj * fj + c * fi * fj + d * fi * fi;
        m.set(j - 1, i - 1, recip_or_zero(qt));
      }
    }
  }
  return m;
}

/// Generator a_0..a_{m-1} of the circulant whose (i,j) entry is a_{(i-j) mod m}.
struct CirculantProfile {
  std::vector<FpElem> a;

  [[nodiscard]] std::size_t size() const noexcept { return a.size(); }

  /// a_i = a_{m-i} for 1 <= i <= m-1.
  [[nodiscard]] bool is_palindromic() const {
    const std::size_t m = a.size();
    for (std::size_t i = 1; i < m; ++i)
      if (!(a[i] == a[m - i])) return false;
    return true;
  }

  [[nodiscard]] FpElem sum() const {
    FpElem s = a.at(0).ctx().zero();
    for (const auto& x : a) s += x;
    return s;
  }
  [[nodiscard]] FpElem alternating_sum() const {
    FpElem s = a.at(0).ctx().zero();
    for (std::size_t i = 0; i < a.size(); ++i) s = (i % 2 == 0) ? s + a[i] : s - a[i];
    return s;
  }
};

inline MatFp build_circulant(const CirculantProfile& profile) {
  const std::size_t m = profile.size();
  if (m == 0) throw DomainError("circulant of an empty profile");
  MatFp out(profile.a[0].ctx(), m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) out.set(i, j, profile.a[(i + m - j) % m]);
  return out;
}

/// a_i = g^i / (g^{2i} + c g^i + 1) for 0 <= i <= p-2, zero where the
/// denominator vanishes. det of its circulant equals det D_p(c, 1).
inline CirculantProfile circulant_profile(const FieldCtx& ctx, const FpElem& c, const FpElem& g) {
  if (!is_primitive_root(g)) throw DomainError("circulant_profile requires a primitive root");
  CirculantProfile prof;
  prof.a.reserve(ctx.p() - 1);
  FpElem gi = ctx.one();
  for (std::uint64_t i = 0; i + 1 < ctx.p(); ++i) {
    prof.a.push_back(gi * recip_or_zero(gi * gi + c * gi + ctx.one()));
    gi *= g;
  }
  return prof;
}

/// [recip_or_zero(x_i + y_j)].
inline MatFp build_cauchy(std::span<const FpElem> xs, std::span<const FpElem> ys) {
  if (xs.size() != ys.size() || xs.empty()) throw DomainError("Cauchy matrix needs equal nonempty lengths");
  MatFp m(xs[0].ctx(), xs.size(), ys.size());
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = 0; j < ys.size(); ++j) m.set(i, j, recip_or_zero(xs[i] + ys[j]));
  return m;
}

/// prod_{i<j} (x_i - x_j)(y_i - y_j) / prod_{i,j} (x_i + y_j).
/// Refuses inputs where some x_i + y_j vanishes.
inline FpElem cauchy_det(std::span<const FpElem> xs, std::span<const FpElem> ys) {
  if (xs.size() != ys.size() || xs.empty()) throw DomainError("cauchy_det needs equal nonempty lengths");
  const FieldCtx ctx = xs[0].ctx();
  FpElem num = ctx.one();
  FpElem den = ctx.one();
  const std::size_t n = xs.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const FpElem s = xs[i] + ys[j];
      if (s.is_zero()) throw DomainError("cauchy_det: some x_i + y_j = 0, closed form inapplicable");
      den *= s;
      if (i < j) num *= (xs[i] - xs[j]) * (ys[i] - ys[j]);
    }
  }
  return num / den;
}

/// det [1/(i^2 + j^2)] for 1 <= i,j <= (p-1)/2, p = 3 mod 4.
inline FpElem sun_half_det(const FieldCtx& ctx) {
  if (ctx.p() % 4 != 3) throw DomainError("sun_half_det requires p = 3 mod 4");
  const std::size_t n = (ctx.p() - 1) / 2;
  MatFp m(ctx, n, n);
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j)
      m.set(i - 1, j - 1, inverse(ctx.elem(static_cast<std::int64_t>(i * i + j * j))));
  return det(m);
}

/// Sign of the permutation x -> ax of F_p, from its cycle decomposition.
inline int perm_sign_mul(const FieldCtx& ctx, const FpElem& a) {
  if (a.is_zero()) throw DomainError("perm_sign_mul requires a != 0");
  const std::uint64_t p = ctx.p();
  std::vector<bool> seen(p, false);
  std::uint64_t transpositions = 0;
  for (std::uint64_t start = 0; start < p; ++start) {
    if (seen[start]) continue;
    std::uint64_t len = 0;
    for (std::uint64_t x = start; !seen[x]; x = detail::mulmod(x, a.value(), p)) {
      seen[x] = true;
      ++len;
    }
    transpositions += len - 1;
  }
  return transpositions % 2 == 0 ? 1 : -1;
}

}  // namespace trifield

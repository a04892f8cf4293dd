#pragma once

/**
 * @file trinom.hpp
 * @brief Trinomial coefficients binom(n,k)_c, the coefficient of x^k in
 * (x + c + 1/x)^n, reduced mod p.
 *
 * trinom_row is the reference computation. The remaining functions evaluate
 * closed forms for rows p, p-1 and p-2 and are compared against it by the
 * checks module.
 */

#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ffcore.hpp"

namespace trifield {

/// Row n of trinomial coefficients for k = 0..n. Negative k resolves through
/// binom(n,k)_c = binom(n,-k)_c and |k| > n gives 0.
class TrinomRow {
 public:
  TrinomRow(std::uint64_t n, FpElem c, std::vector<FpElem> coeffs)
      : n_(n), c_(c), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != n_ + 1) throw std::invalid_argument("TrinomRow needs n+1 coefficients");
  }

  [[nodiscard]] std::uint64_t n() const noexcept { return n_; }
  [[nodiscard]] const FpElem& c() const noexcept { return c_; }
  [[nodiscard]] const std::vector<FpElem>& coeffs() const noexcept { return coeffs_; }

  [[nodiscard]] FpElem at(std::int64_t k) const {
    const auto ak = static_cast<std::uint64_t>(k < 0 ? -k : k);
    if (ak > n_) return c_.ctx().zero();
    return coeffs_[ak];
  }

 private:
  std::uint64_t n_;
  FpElem c_;
  std::vector<FpElem> coeffs_;
};

/// Builds row n from row 0 = [1] using
/// binom(n,k) = binom(n-1,k-1) + c binom(n-1,k) + binom(n-1,k+1).
inline TrinomRow trinom_row(std::uint64_t n, const FpElem& c) {
  const FieldCtx ctx = c.ctx();
  // prev[k] holds binom(m-1, k) for k = 0..m-1; one spare slot keeps k+1 in range.
  std::vector<FpElem> prev{ctx.one(), ctx.zero()};
  for (std::uint64_t m = 1; m <= n; ++m) {
    std::vector<FpElem> next(m + 2, ctx.zero());
    for (std::uint64_t k = 0; k <= m; ++k) {
      // binom(m-1, k-1) with symmetry at k = 0.
      const FpElem left = k == 0 ? (m >= 2 ? prev[1] : ctx.zero()) : prev[k - 1];
      const FpElem mid = k < prev.size() ? prev[k] : ctx.zero();
      const FpElem right = k + 1 < prev.size() ? prev[k + 1] : ctx.zero();
      next[k] = left + c * mid + right;
    }
    prev = std::move(next);
  }
  prev.resize(n + 1, ctx.zero());
  return TrinomRow(n, c, std::move(prev));
}

inline FpElem trinom_coeff(std::uint64_t n, std::int64_t k, const FpElem& c) {
  if (static_cast<std::uint64_t>(std::llabs(k)) > n) return c.ctx().zero();
  return trinom_row(n, c).at(k);
}

/// binom(n,0)_c for n = 0..nmax via the three-term recurrence
/// (n+1) b_{n+1} = (2n+1) c b_n - n (c^2-4) b_{n-1}.
/// When n+1 = 0 mod p the division is impossible and the value is taken from
/// the full row recurrence instead.
inline std::vector<FpElem> central_seq(std::uint64_t nmax, const FpElem& c) {
  const FieldCtx ctx = c.ctx();
  if (!ctx.is_odd()) throw DomainError("central_seq requires odd p");
  std::vector<FpElem> out;
  out.reserve(nmax + 1);
  out.push_back(ctx.one());
  if (nmax == 0) return out;
  out.push_back(c);
  const FpElem disc = c * c - ctx.elem(4);
  for (std::uint64_t n = 1; n < nmax; ++n) {
    const FpElem n1 = ctx.elem(static_cast<std::int64_t>((n + 1) % ctx.p()));
    if (n1.is_zero()) {
      out.push_back(trinom_row(n + 1, c).at(0));
      continue;
    }
    const FpElem rhs =
        c.times(static_cast<std::int64_t>((2 * n + 1) % ctx.p())) * out[n] -
        disc.times(static_cast<std::int64_t>(n % ctx.p())) * out[n - 1];
    out.push_back(rhs / n1);
  }
  return out;
}

/// Row p: (x + c + 1/x)^p = x^p + c + x^-p.
inline FpElem row_p_closed(const FieldCtx& ctx, const FpElem& c, std::int64_t k) {
  const auto p = static_cast<std::int64_t>(ctx.p());
  if (k == 0) return c;
  if (k == p || k == -p) return ctx.one();
  return ctx.zero();
}

/// binom(p-1, 0)_c = chi(c^2 - 4).
inline FpElem central_pm1(const FieldCtx& ctx, const FpElem& c) {
  return embed_sign(ctx, legendre(c * c - ctx.elem(4)));
}

namespace detail {

inline FpElem nondegenerate_disc(const FieldCtx& ctx, const FpElem& c, const char* who) {
  if (!ctx.is_odd()) throw DomainError(std::string(who) + " requires odd p");
  const FpElem disc = c * c - ctx.elem(4);
  if (disc.is_zero()) throw DomainError(std::string(who) + " requires c != +-2");
  return disc;
}

}  // namespace detail

struct Pm2Anchors {
  FpElem k0;  ///< binom(p-2, 0)_c
  FpElem k1;  ///< binom(p-2, 1)_c
};

/// chi*c/(c^2-4) and -chi*2/(c^2-4), with chi = chi(c^2-4).
inline Pm2Anchors pm2_anchors(const FieldCtx& ctx, const FpElem& c) {
  const FpElem disc = detail::nondegenerate_disc(ctx, c, "pm2_anchors");
  if (ctx.p() < 5) throw DomainError("pm2_anchors requires p >= 5");
  const FpElem chi = embed_sign(ctx, legendre(disc));
  const FpElem inv_disc = inverse(disc);
  return {chi * c * inv_disc, -chi * ctx.elem(2) * inv_disc};
}

/// The claimed closed form for binom(p-2, (p-1)/2)_c, evaluated as written:
///   chi(c^2-4) = +1:  c / (2(c^2-4)) * chi(-c-2)
///   chi(c^2-4) = -1: -c / (c^2-4)    * chi(-c-2)
/// This is not guaranteed to agree with trinom_row; the lemma26 check
/// reports where it does not.
inline FpElem pm2_half_claimed(const FieldCtx& ctx, const FpElem& c) {
  const FpElem disc = detail::nondegenerate_disc(ctx, c, "pm2_half_claimed");
  if (ctx.p() < 5) throw DomainError("pm2_half_claimed requires p >= 5");
  const FpElem chi_shift = embed_sign(ctx, legendre(-c - ctx.elem(2)));
  if (legendre(disc) == 1) return c / (ctx.elem(2) * disc) * chi_shift;
  return -c / disc * chi_shift;
}

/// binom(p-1, k)_c through the roots alpha, beta of x^2 + cx + 1:
///   chi = +1: -(alpha^(k-1) - beta^(k-1)) / (alpha - beta)
///   chi = -1: -(alpha^(k+1) - beta^(k+1)) / (alpha - beta)
/// Throws std::logic_error if the result does not land in F_p.
inline FpElem pm1_row_closed(const FieldCtx& ctx, const FpElem& c, std::int64_t k) {
  detail::nondegenerate_disc(ctx, c, "pm1_row_closed");
  const auto p = static_cast<std::int64_t>(ctx.p());
  if (k < 0 || k > p - 1) throw DomainError("pm1_row_closed requires 0 <= k <= p-1");
  const QuadRoots roots = quad_roots(c);
  const std::int64_t e = roots.chi_disc == 1 ? k - 1 : k + 1;
  // alpha * beta = 1, so a negative exponent swaps the roots.
  const Fp2Elem& a = e < 0 ? roots.beta : roots.alpha;
  const Fp2Elem& b = e < 0 ? roots.alpha : roots.beta;
  const auto ue = static_cast<std::uint64_t>(std::llabs(e));
  const Fp2Elem v = -(pow(a, ue) - pow(b, ue)) / (roots.alpha - roots.beta);
  if (!v.in_base_field()) throw std::logic_error("pm1_row_closed: extension component did not cancel");
  return v.a();
}

}  // namespace trifield

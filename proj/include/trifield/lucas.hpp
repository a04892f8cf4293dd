#pragma once

// Lucas sequences u_n(A,B) over F_p and their values at the half indices
// (p-1)/2 and (p+1)/2.

#include <cstdint>

#include "ffcore.hpp"

namespace trifield {

struct LucasParams {
  FpElem A;
  FpElem B;
};

/// u_0 = 0, u_1 = 1, u_{n+1} = A u_n - B u_{n-1}. O(n).
inline FpElem lucas_u(std::uint64_t n, const LucasParams& params) {
  const FieldCtx ctx = params.A.ctx();
  FpElem prev = ctx.zero();
  FpElem cur = ctx.one();
  if (n == 0) return prev;
  for (std::uint64_t i = 1; i < n; ++i) {
    FpElem next = params.A * cur - params.B * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

struct LucasHalf {
  FpElem u_half_minus;  ///< predicted u_{(p-1)/2}
  FpElem u_half_plus;   ///< predicted u_{(p+1)/2}
};

/// Predicted half-index values for B = b^2 a nonzero square:
///   chi(A^2-4B) = +1:  u_{(p-1)/2} = 0,                     u_{(p+1)/2} = chi(A-2b)
///   chi(A^2-4B) = -1:  u_{(p-1)/2} = chi(A-2b) / b,         u_{(p+1)/2} = 0
/// The right-hand sides depend on which root b is supplied.
inline LucasHalf lucas_half_closed(const LucasParams& params, const FpElem& b) {
  const FieldCtx ctx = params.A.ctx();
  if (!ctx.is_odd()) throw DomainError("lucas_half_closed requires odd p");
  if (legendre(params.B) != 1) throw DomainError("lucas_half_closed requires B to be a nonzero square");
  if (!(b * b == params.B)) throw DomainError("lucas_half_closed requires b^2 = B");
  const int chi_disc = legendre(params.A * params.A - params.B.times(4));
  if (chi_disc == 0) throw DomainError("lucas_half_closed requires A^2 - 4B != 0");
  const FpElem chi_shift = embed_sign(ctx, legendre(params.A - b.times(2)));
  if (chi_disc == 1) return {ctx.zero(), chi_shift};
  return {chi_shift / b, ctx.zero()};
}

}  // namespace trifield

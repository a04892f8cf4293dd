#pragma once

/**
 * @file ffcore.hpp
 * @brief Exact arithmetic in F_p and F_{p^2}.
 *
 * Residues are stored canonically in [0, p). The modulus is bounded by 2^31
 * so that every product of two residues fits in a 64-bit intermediate.
 */

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace trifield {

/// Raised when an operation is applied outside its mathematical domain
/// (inverse of zero, character mod 2, degenerate roots, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

inline constexpr std::uint64_t kMaxModulus = std::uint64_t{1} << 31;

namespace detail {

constexpr bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

constexpr std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return (a * b) % p;
}

constexpr std::uint64_t powmod(std::uint64_t base, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  base %= p;
  while (e != 0) {
    if (e & 1) r = mulmod(r, base, p);
    base = mulmod(base, base, p);
    e >>= 1;
  }
  return r;
}

constexpr std::uint64_t reduce_signed(std::int64_t v, std::uint64_t p) {
  const auto sp = static_cast<std::int64_t>(p);
  std::int64_t r = v % sp;
  if (r < 0) r += sp;
  return static_cast<std::uint64_t>(r);
}

/// Distinct prime factors of n, ascending.
inline std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace detail

class FpElem;

/// A prime modulus. Construction verifies primality and the 2^31 bound.
class FieldCtx {
 public:
  explicit FieldCtx(std::uint64_t p) : p_(p) {
    if (p >= kMaxModulus) {
      throw std::invalid_argument("modulus " + std::to_string(p) + " exceeds 2^31");
    }
    if (!detail::is_prime_u64(p)) {
      throw std::invalid_argument("modulus " + std::to_string(p) + " is not prime");
    }
  }

  [[nodiscard]] std::uint64_t p() const noexcept { return p_; }
  [[nodiscard]] bool is_odd() const noexcept { return p_ != 2; }

  [[nodiscard]] FpElem elem(std::int64_t v) const;
  [[nodiscard]] FpElem zero() const;
  [[nodiscard]] FpElem one() const;

  bool operator==(const FieldCtx&) const = default;

 private:
  std::uint64_t p_;
};

/// Canonical residue modulo a prime. Mixing moduli throws std::invalid_argument.
class FpElem {
 public:
  FpElem(const FieldCtx& ctx, std::int64_t v) : v_(detail::reduce_signed(v, ctx.p())), p_(ctx.p()) {}

  [[nodiscard]] std::uint64_t value() const noexcept { return v_; }
  [[nodiscard]] std::uint64_t modulus() const noexcept { return p_; }
  [[nodiscard]] FieldCtx ctx() const { return FieldCtx(p_); }
  [[nodiscard]] bool is_zero() const noexcept { return v_ == 0; }

  /// Trusted construction from an already canonical residue.
  static FpElem from_canonical(std::uint64_t v, std::uint64_t p) noexcept { return FpElem(v, p); }

  friend FpElem operator+(const FpElem& a, const FpElem& b) {
    check_same(a, b);
    std::uint64_t s = a.v_ + b.v_;
    if (s >= a.p_) s -= a.p_;
    return FpElem(s, a.p_);
  }
  friend FpElem operator-(const FpElem& a, const FpElem& b) {
    check_same(a, b);
    return FpElem(a.v_ >= b.v_ ? a.v_ - b.v_ : a.v_ + a.p_ - b.v_, a.p_);
  }
  friend FpElem operator*(const FpElem& a, const FpElem& b) {
    check_same(a, b);
    return FpElem(detail::mulmod(a.v_, b.v_, a.p_), a.p_);
  }
  friend FpElem operator/(const FpElem& a, const FpElem& b);
  FpElem operator-() const { return FpElem(v_ == 0 ? 0 : p_ - v_, p_); }

  FpElem& operator+=(const FpElem& o) { return *this = *this + o; }
  FpElem& operator-=(const FpElem& o) { return *this = *this - o; }
  FpElem& operator*=(const FpElem& o) { return *this = *this * o; }

  /// Scalar multiple by an integer, reduced mod p.
  [[nodiscard]] FpElem times(std::int64_t k) const {
    return FpElem(detail::mulmod(v_, detail::reduce_signed(k, p_), p_), p_);
  }

  friend bool operator==(const FpElem& a, const FpElem& b) noexcept {
    return a.p_ == b.p_ && a.v_ == b.v_;
  }

 private:
  FpElem(std::uint64_t v, std::uint64_t p) noexcept : v_(v), p_(p) {}

  static void check_same(const FpElem& a, const FpElem& b) {
    if (a.p_ != b.p_) {
      throw std::invalid_argument("arithmetic between residues mod " + std::to_string(a.p_) +
                                  " and mod " + std::to_string(b.p_));
    }
  }

  std::uint64_t v_;
  std::uint64_t p_;
};

inline FpElem FieldCtx::elem(std::int64_t v) const { return FpElem(*this, v); }
inline FpElem FieldCtx::zero() const { return FpElem(*this, 0); }
inline FpElem FieldCtx::one() const { return FpElem(*this, 1); }

/// a^e by square-and-multiply; 0^0 = 1.
inline FpElem pow(const FpElem& a, std::uint64_t e) {
  return FpElem::from_canonical(detail::powmod(a.value(), e, a.modulus()), a.modulus());
}

/// Multiplicative inverse via extended Euclid. Agrees with a^(p-2).
inline FpElem inverse(const FpElem& a) {
  if (a.is_zero()) throw DomainError("inverse of zero");
  std::int64_t r0 = static_cast<std::int64_t>(a.modulus());
  std::int64_t r1 = static_cast<std::int64_t>(a.value());
  std::int64_t t0 = 0;
  std::int64_t t1 = 1;
  while (r1 != 0) {
    const std::int64_t q = r0 / r1;
    std::tie(r0, r1) = std::pair{r1, r0 - q * r1};
    std::tie(t0, t1) = std::pair{t1, t0 - q * t1};
  }
  return FpElem::from_canonical(detail::reduce_signed(t0, a.modulus()), a.modulus());
}

inline FpElem operator/(const FpElem& a, const FpElem& b) { return a * inverse(b); }

/// Quadratic character by Euler's criterion: 0, +1 or -1.
inline int legendre(const FpElem& a) {
  const std::uint64_t p = a.modulus();
  if (p == 2) throw DomainError("quadratic character is undefined for p = 2");
  if (a.is_zero()) return 0;
  return detail::powmod(a.value(), (p - 1) / 2, p) == 1 ? 1 : -1;
}

/// Embeds a sign in {-1, 0, +1} into F_p (-1 maps to p-1).
inline FpElem embed_sign(const FieldCtx& ctx, int s) { return ctx.elem(s); }

/// Square root by Tonelli-Shanks. Returns the smaller of {r, p-r}, or nothing
/// for a non-residue.
inline std::optional<FpElem> sqrt(const FpElem& a) {
  const std::uint64_t p = a.modulus();
  if (p == 2) throw DomainError("square roots are only supported for odd p");
  if (a.is_zero()) return a;
  if (legendre(a) != 1) return std::nullopt;

  std::uint64_t q = p - 1;
  unsigned s = 0;
  while ((q & 1) == 0) {
    q >>= 1;
    ++s;
  }
  std::uint64_t z = 2;
  while (detail::powmod(z, (p - 1) / 2, p) != p - 1) ++z;

  std::uint64_t m = s;
  std::uint64_t c = detail::powmod(z, q, p);
  std::uint64_t t = detail::powmod(a.value(), q, p);
  std::uint64_t r = detail::powmod(a.value(), (q + 1) / 2, p);
  while (t != 1) {
    std::uint64_t i = 0;
    std::uint64_t t2 = t;
    while (t2 != 1) {
      t2 = detail::mulmod(t2, t2, p);
      ++i;
    }
    std::uint64_t b = c;
    for (std::uint64_t j = 0; j + 1 < m - i; ++j) b = detail::mulmod(b, b, p);
    m = i;
    c = detail::mulmod(b, b, p);
    t = detail::mulmod(t, c, p);
    r = detail::mulmod(r, b, p);
  }
  return FpElem::from_canonical(std::min(r, p - r), p);
}

/// Multiplicative order of a nonzero element.
inline std::uint64_t multiplicative_order(const FpElem& a) {
  if (a.is_zero()) throw DomainError("zero has no multiplicative order");
  const std::uint64_t p = a.modulus();
  std::uint64_t order = p - 1;
  for (std::uint64_t q : detail::prime_factors(p - 1)) {
    while (order % q == 0 && detail::powmod(a.value(), order / q, p) == 1) order /= q;
  }
  return order;
}

inline bool is_primitive_root(const FpElem& g) {
  return !g.is_zero() && multiplicative_order(g) == g.modulus() - 1;
}

/// Smallest g >= 2 of order p-1.
inline FpElem primitive_root(const FieldCtx& ctx) {
  if (ctx.p() < 3) throw DomainError("primitive_root requires p >= 3");
  const auto factors = detail::prime_factors(ctx.p() - 1);
  for (std::uint64_t g = 2; g < ctx.p(); ++g) {
    bool ok = true;
    for (std::uint64_t q : factors) {
      if (detail::powmod(g, (ctx.p() - 1) / q, ctx.p()) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return ctx.elem(static_cast<std::int64_t>(g));
  }
  throw std::logic_error("no primitive root found");  // unreachable for prime p
}

// ---------------------------------------------------------------------------
// Quadratic extension F_p(sqrt(delta))

/// Base field plus a non-residue delta.
class Fp2Ctx {
 public:
  explicit Fp2Ctx(const FpElem& delta) : delta_(delta) {
    if (legendre(delta) != -1) throw DomainError("extension generator must be a non-residue");
  }

  /// Extension generated by the smallest non-residue.
  static Fp2Ctx with_smallest_nonresidue(const FieldCtx& ctx) {
    if (!ctx.is_odd()) throw DomainError("quadratic extension requires odd p");
    for (std::int64_t n = 2;; ++n) {
      const FpElem d = ctx.elem(n);
      if (legendre(d) == -1) return Fp2Ctx(d);
    }
  }

  [[nodiscard]] FieldCtx base() const { return delta_.ctx(); }
  [[nodiscard]] const FpElem& delta() const noexcept { return delta_; }

  bool operator==(const Fp2Ctx& o) const noexcept { return delta_ == o.delta_; }

 private:
  FpElem delta_;
};

/// a + b*sqrt(delta).
class Fp2Elem {
 public:
  Fp2Elem(const Fp2Ctx& ctx, const FpElem& a, const FpElem& b) : ctx_(ctx), a_(a), b_(b) {
    if (a.modulus() != ctx.delta().modulus() || b.modulus() != ctx.delta().modulus()) {
      throw std::invalid_argument("Fp2Elem components do not match the extension modulus");
    }
  }
  static Fp2Elem embed(const Fp2Ctx& ctx, const FpElem& a) { return {ctx, a, a.ctx().zero()}; }

  [[nodiscard]] const FpElem& a() const noexcept { return a_; }
  [[nodiscard]] const FpElem& b() const noexcept { return b_; }
  [[nodiscard]] const Fp2Ctx& ctx() const noexcept { return ctx_; }
  [[nodiscard]] bool in_base_field() const noexcept { return b_.is_zero(); }
  [[nodiscard]] bool is_zero() const noexcept { return a_.is_zero() && b_.is_zero(); }
  [[nodiscard]] Fp2Elem conjugate() const { return {ctx_, a_, -b_}; }
  /// a^2 - delta*b^2, an element of the base field.
  [[nodiscard]] FpElem norm() const { return a_ * a_ - ctx_.delta() * b_ * b_; }

  friend Fp2Elem operator+(const Fp2Elem& x, const Fp2Elem& y) {
    check_same(x, y);
    return {x.ctx_, x.a_ + y.a_, x.b_ + y.b_};
  }
  friend Fp2Elem operator-(const Fp2Elem& x, const Fp2Elem& y) {
    check_same(x, y);
    return {x.ctx_, x.a_ - y.a_, x.b_ - y.b_};
  }
  friend Fp2Elem operator*(const Fp2Elem& x, const Fp2Elem& y) {
    check_same(x, y);
    return {x.ctx_, x.a_ * y.a_ + x.ctx_.delta() * x.b_ * y.b_, x.a_ * y.b_ + y.a_ * x.b_};
  }
  Fp2Elem operator-() const { return {ctx_, -a_, -b_}; }

  friend bool operator==(const Fp2Elem& x, const Fp2Elem& y) noexcept {
    return x.ctx_ == y.ctx_ && x.a_ == y.a_ && x.b_ == y.b_;
  }

 private:
  static void check_same(const Fp2Elem& x, const Fp2Elem& y) {
    if (!(x.ctx_ == y.ctx_)) throw std::invalid_argument("arithmetic across different extensions");
  }

  Fp2Ctx ctx_;
  FpElem a_;
  FpElem b_;
};

inline Fp2Elem inverse(const Fp2Elem& x) {
  if (x.is_zero()) throw DomainError("inverse of zero");
  const FpElem n_inv = inverse(x.norm());
  return {x.ctx(), x.a() * n_inv, -x.b() * n_inv};
}

inline Fp2Elem operator/(const Fp2Elem& x, const Fp2Elem& y) { return x * inverse(y); }

inline Fp2Elem pow(Fp2Elem base, std::uint64_t e) {
  Fp2Elem r = Fp2Elem::embed(base.ctx(), base.a().ctx().one());
  while (e != 0) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

/// The two roots of x^2 + c x + 1.
struct QuadRoots {
  Fp2Elem alpha;
  Fp2Elem beta;
  int chi_disc;  ///< legendre(c^2 - 4)
};

/// alpha = (-c + d)/2, beta = (-c - d)/2 with d^2 = c^2 - 4. When c^2 - 4 is a
/// square the roots lie in the base field and the extension is the one built on
/// the smallest non-residue; otherwise the extension is F_p(sqrt(c^2 - 4)).
inline QuadRoots quad_roots(const FpElem& c) {
  const FieldCtx ctx = c.ctx();
  if (!ctx.is_odd()) throw DomainError("quad_roots requires odd p");
  const FpElem disc = c * c - ctx.elem(4);
  const int chi = legendre(disc);
  if (chi == 0) throw DomainError("c = +-2 gives a double root");
  const FpElem half = inverse(ctx.elem(2));
  if (chi == 1) {
    const Fp2Ctx ext = Fp2Ctx::with_smallest_nonresidue(ctx);
    const FpElem d = *sqrt(disc);
    return {Fp2Elem::embed(ext, (-c + d) * half), Fp2Elem::embed(ext, (-c - d) * half), chi};
  }
  const Fp2Ctx ext(disc);
  return {Fp2Elem(ext, -c * half, half), Fp2Elem(ext, -c * half, -half), chi};
}

}  // namespace trifield

#pragma once

/**
 * @file checks.hpp
 * @brief Each theorem, lemma and identity as a named check that compares a
 * closed form with an independent computation and returns a structured
 * verdict.
 *
 * Claims fall into two groups. The "safe" group has short independent proofs
 * and must pass everywhere; a failure there is a bug. The "under test" group
 * depends on long hand computations; disagreements there are findings and are
 * reported as status discrepancy.
 */

#include <algorithm>
#include <array>
#include <cstdint>
#include <exception>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "ffcore.hpp"
#include "lucas.hpp"
#include "matfp.hpp"
#include "trinom.hpp"

namespace trifield {

enum class CheckId { thm11, thm12, wsn, lemma26, lemma24, lemma31, lerch, cauchy, sun_intro, identities };

inline constexpr std::array<CheckId, 10> kAllChecks = {
    CheckId::thm11,   CheckId::thm12, CheckId::wsn,    CheckId::lemma26,   CheckId::lemma24,
    CheckId::lemma31, CheckId::lerch, CheckId::cauchy, CheckId::sun_intro, CheckId::identities};

inline std::string_view to_string(CheckId id) {
  switch (id) {
    case CheckId::thm11: return "thm11";
    case CheckId::thm12: return "thm12";
    case CheckId::wsn: return "wsn";
    case CheckId::lemma26: return "lemma26";
    case CheckId::lemma24: return "lemma24";
    case CheckId::lemma31: return "lemma31";
    case CheckId::lerch: return "lerch";
    case CheckId::cauchy: return "cauchy";
    case CheckId::sun_intro: return "sun_intro";
    case CheckId::identities: return "identities";
  }
  return "?";
}

inline std::optional<CheckId> parse_check_id(std::string_view s) {
  for (CheckId id : kAllChecks)
    if (to_string(id) == s) return id;
  return std::nullopt;
}

enum class Status { pass, discrepancy, skip, error };

inline std::string_view to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::discrepancy: return "discrepancy";
    case Status::skip: return "skip";
    case Status::error: return "error";
  }
  return "?";
}

struct CheckInstance {
  CheckId check;
  std::uint64_t p;
  std::optional<std::uint64_t> c;
  std::optional<std::uint64_t> d;
  /// Extra named inputs: A, B, b for lemma24; a for lerch; n, x0.., y0.. for cauchy.
  std::map<std::string, std::int64_t> aux;

  friend bool operator==(const CheckInstance&, const CheckInstance&) = default;
};

/// Canonical ordering: check id (as text), p, c, d, then aux. Absent c/d sort first.
inline bool canonical_less(const CheckInstance& x, const CheckInstance& y) {
  return std::forward_as_tuple(to_string(x.check), x.p, x.c, x.d, x.aux) <
         std::forward_as_tuple(to_string(y.check), y.p, y.c, y.d, y.aux);
}

using Scalars = std::map<std::string, std::string>;

struct CheckOutcome {
  CheckInstance instance;
  Status status = Status::error;
  Scalars observed;
  Scalars expected;
  std::optional<std::uint64_t> witness;
  std::string note;
};

namespace detail {

inline std::string str(const FpElem& x) { return std::to_string(x.value()); }
inline std::string str(std::int64_t x) { return std::to_string(x); }

/// Sub-identities of the identities bundle whose failure counts as a safe-suite failure.
inline constexpr std::array<std::string_view, 7> kSafeIdentities = {
    "lemma22", "lemma25", "deriv_pm1_pm2", "pm1_rec", "pm1_k1", "profile_sums", "circulant_eq"};
inline constexpr std::array<std::string_view, 3> kUnderTestIdentities = {"pm2_anchors", "pm1_closed",
                                                                         "half_powers"};

inline CheckOutcome make_outcome(CheckInstance inst) {
  CheckOutcome out;
  out.instance = std::move(inst);
  return out;
}

/// Square witness: w with w^2 * unit = value, for nonzero unit and value.
inline std::optional<FpElem> square_witness(const FpElem& value, const FpElem& unit) {
  if (unit.is_zero() || value.is_zero()) return std::nullopt;
  const auto w = sqrt(value / unit);
  if (w && !(*w * *w * unit == value)) throw std::logic_error("square witness failed re-verification");
  return w;
}

}  // namespace detail

// ---------------------------------------------------------------------------

/// Residue class of det D_p(c), D_p(c) = D_p(c,1):
///   c = +-2:            det = 0
///   chi(c^2-4) = +1:    det = (-1)^((p-1)/2) chi(c+2) x^2
///   chi(c^2-4) = -1:    det = (-1)^((p-1)/2) chi(c+2) 2c x^2
/// x = 0 is allowed, so a zero determinant satisfies the last two cases vacuously.
inline CheckOutcome check_thm11(std::uint64_t p, std::uint64_t c_val) {
  auto out = detail::make_outcome({CheckId::thm11, p, c_val, std::nullopt, {}});
  const FieldCtx ctx(p);
  const FpElem c = ctx.elem(static_cast<std::int64_t>(c_val));
  const FpElem disc = c * c - ctx.elem(4);
  const int chi_disc = legendre(disc);
  out.observed["chi_disc"] = detail::str(chi_disc);

  const FpElem dt = det(build_dp(ctx, c, ctx.one()));
  out.observed["det"] = detail::str(dt);
  // At p = 3 even the c = +-2 branch fails (det D_3(1) = 2), so the whole prime is out of scope.
  if (p == 3) {
    out.status = Status::skip;
    out.note = "p3_excluded";
    return out;
  }

  if (chi_disc == 0) {
    out.expected["det"] = "0";
    out.status = dt.is_zero() ? Status::pass : Status::discrepancy;
    out.note = "case1";
    return out;
  }
  const int sign = ((p - 1) / 2) % 2 == 0 ? 1 : -1;
  FpElem unit = embed_sign(ctx, sign * legendre(c + ctx.elem(2)));
  if (chi_disc == -1) unit *= c.times(2);
  out.expected["unit"] = detail::str(unit);
  out.note = chi_disc == 1 ? "case2" : "case3";

  if (dt.is_zero()) {
    out.status = Status::pass;
    out.note += ";det_zero";
    return out;
  }
  if (unit.is_zero()) {
    // The claim reduces to det = 0.
    out.expected["det"] = "0";
    out.status = Status::discrepancy;
    return out;
  }
  const FpElem ratio = dt / unit;
  out.observed["ratio"] = detail::str(ratio);
  if (const auto w = detail::square_witness(dt, unit)) {
    out.witness = w->value();
    out.status = Status::pass;
  } else {
    out.status = Status::discrepancy;
    out.note += ";ratio_nonresidue";
  }
  return out;
}

/// Reduction to d = 1: det D_p(c,d) = 0 unless chi(d) = 1, and otherwise
/// det D_p(c,d) = chi(r) det D_p(c/r) for both square roots r of d.
/// d = 0 is covered by the statement but not by its proof; violations there
/// carry the note "d_zero_outside_proof".
inline CheckOutcome check_thm12(std::uint64_t p, std::uint64_t c_val, std::uint64_t d_val) {
  auto out = detail::make_outcome({CheckId::thm12, p, c_val, d_val, {}});
  const FieldCtx ctx(p);
  const FpElem c = ctx.elem(static_cast<std::int64_t>(c_val));
  const FpElem d = ctx.elem(static_cast<std::int64_t>(d_val));
  const FpElem dt = det(build_dp(ctx, c, d));
  const int chi_d = legendre(d);
  out.observed["det"] = detail::str(dt);
  out.observed["chi_d"] = detail::str(chi_d);

  if (chi_d != 1) {
    out.expected["det"] = "0";
    out.note = chi_d == 0 ? "case1_d_zero" : "case1";
    if (dt.is_zero()) {
      out.status = Status::pass;
    } else {
      out.status = Status::discrepancy;
      if (chi_d == 0) out.note = "case1_d_zero;d_zero_outside_proof";
    }
    return out;
  }
  const FpElem r1 = *sqrt(d);
  const FpElem r2 = -r1;
  const FpElem rhs1 = embed_sign(ctx, legendre(r1)) * det(build_dp(ctx, c / r1, ctx.one()));
  const FpElem rhs2 = embed_sign(ctx, legendre(r2)) * det(build_dp(ctx, c / r2, ctx.one()));
  out.observed["root1"] = detail::str(r1);
  out.observed["root2"] = detail::str(r2);
  out.expected["det_via_root1"] = detail::str(rhs1);
  out.expected["det_via_root2"] = detail::str(rhs2);
  out.note = "case2";
  out.status = (dt == rhs1 && dt == rhs2) ? Status::pass : Status::discrepancy;
  return out;
}

/// det T_p = det D_p(-1, 1) = (-1)^((p+1)/2) 2^((p-2)/3) for p = 2 mod 3, and
/// consequently 2 det T_p is a square.
inline CheckOutcome check_wsn(std::uint64_t p) {
  auto out = detail::make_outcome({CheckId::wsn, p, std::nullopt, std::nullopt, {}});
  const FieldCtx ctx(p);
  if (p % 2 == 0 || p % 3 != 2) {
    out.status = Status::skip;
    out.note = "p_not_2_mod_3";
    return out;
  }
  const FpElem dt = det(build_dp(ctx, ctx.elem(-1), ctx.one()));
  const int sign = ((p + 1) / 2) % 2 == 0 ? 1 : -1;
  const FpElem closed = embed_sign(ctx, sign) * pow(ctx.elem(2), (p - 2) / 3);
  const int chi_2det = legendre(dt.times(2));
  out.observed["det"] = detail::str(dt);
  out.observed["chi_2det"] = detail::str(chi_2det);
  out.expected["det"] = detail::str(closed);
  out.expected["chi_2det"] = "1";
  const bool closed_ok = dt == closed;
  const bool conj_ok = chi_2det >= 0;
  out.status = closed_ok && conj_ok ? Status::pass : Status::discrepancy;
  if (!closed_ok) out.note = "closed_form_mismatch";
  if (!conj_ok) out.note += out.note.empty() ? "conjecture_fails" : ";conjecture_fails";
  return out;
}

/// Printed closed form for binom(p-2, (p-1)/2)_c against the row recurrence.
inline CheckOutcome check_lemma26(std::uint64_t p, std::uint64_t c_val) {
  auto out = detail::make_outcome({CheckId::lemma26, p, c_val, std::nullopt, {}});
  const FieldCtx ctx(p);
  if (p < 5) {
    out.status = Status::skip;
    out.note = "p3_excluded";
    return out;
  }
  const FpElem c = ctx.elem(static_cast<std::int64_t>(c_val));
  const int chi_disc = legendre(c * c - ctx.elem(4));
  if (chi_disc == 0) {
    out.status = Status::skip;
    out.note = "c_pm2";
    return out;
  }
  const FpElem observed = trinom_coeff(p - 2, static_cast<std::int64_t>((p - 1) / 2), c);
  const FpElem expected = pm2_half_claimed(ctx, c);
  out.observed["value"] = detail::str(observed);
  out.expected["value"] = detail::str(expected);
  out.observed["chi_disc"] = detail::str(chi_disc);
  out.note = chi_disc == 1 ? "chi_plus" : "chi_minus";
  out.status = observed == expected ? Status::pass : Status::discrepancy;
  return out;
}

/// Palindromic circulant determinant: with S1 = sum a_i and, for even m,
/// S2 = sum (-1)^i a_i, det C(a) is S1*S2 (even m) or S1 (odd m) times a square.
/// Assertable form: if that product is 0 then det = 0, otherwise
/// det / product is 0 or a nonzero square.
inline CheckOutcome check_circulant(const CirculantProfile& profile, CheckInstance inst) {
  auto out = detail::make_outcome(std::move(inst));
  if (!profile.is_palindromic()) {
    out.status = Status::error;
    out.note = "profile_not_palindromic";
    return out;
  }
  const std::size_t m = profile.size();
  const FpElem dt = det(build_circulant(profile));
  const FpElem s1 = profile.sum();
  FpElem unit = s1;
  out.observed["det"] = detail::str(dt);
  out.observed["S1"] = detail::str(s1);
  out.observed["m"] = std::to_string(m);
  if (m % 2 == 0) {
    const FpElem s2 = profile.alternating_sum();
    out.observed["S2"] = detail::str(s2);
    unit *= s2;
  }
  out.expected["unit"] = detail::str(unit);
  if (unit.is_zero()) {
    out.expected["det"] = "0";
    out.status = dt.is_zero() ? Status::pass : Status::discrepancy;
    out.note = "unit_zero";
    return out;
  }
  if (dt.is_zero()) {
    out.status = Status::pass;
    out.note = "det_zero";
    return out;
  }
  out.observed["ratio"] = detail::str(dt / unit);
  if (const auto w = detail::square_witness(dt, unit)) {
    out.witness = w->value();
    out.status = Status::pass;
  } else {
    out.status = Status::discrepancy;
    out.note = "ratio_nonresidue";
  }
  return out;
}

inline CheckOutcome check_circulant(const CirculantProfile& profile) {
  const std::uint64_t p = profile.a.at(0).modulus();
  return check_circulant(profile, {CheckId::lemma31, p, std::nullopt, std::nullopt, {}});
}

/// The circulant criterion applied to the D_p profile a_i = g^i/(g^{2i}+cg^i+1),
/// g the least primitive root.
inline CheckOutcome check_lemma31(std::uint64_t p, std::uint64_t c_val) {
  const FieldCtx ctx(p);
  const FpElem g = primitive_root(ctx);
  auto out = check_circulant(circulant_profile(ctx, ctx.elem(static_cast<std::int64_t>(c_val)), g),
                             {CheckId::lemma31, p, c_val, std::nullopt, {}});
  out.observed["g"] = detail::str(g);
  return out;
}

/// Half-index Lucas values in closed form against the iterative sequence.
inline CheckOutcome check_lucas(std::uint64_t p, std::int64_t A, std::int64_t B, std::int64_t b) {
  auto out = detail::make_outcome({CheckId::lemma24, p, std::nullopt, std::nullopt, {{"A", A}, {"B", B}, {"b", b}}});
  const FieldCtx ctx(p);
  const LucasParams params{ctx.elem(A), ctx.elem(B)};
  out.observed["A"] = detail::str(A);
  out.observed["B"] = detail::str(B);
  out.observed["b"] = detail::str(b);
  try {
    const LucasHalf predicted = lucas_half_closed(params, ctx.elem(b));
    const FpElem u_minus = lucas_u((p - 1) / 2, params);
    const FpElem u_plus = lucas_u((p + 1) / 2, params);
    out.observed["u_half_minus"] = detail::str(u_minus);
    out.observed["u_half_plus"] = detail::str(u_plus);
    out.expected["u_half_minus"] = detail::str(predicted.u_half_minus);
    out.expected["u_half_plus"] = detail::str(predicted.u_half_plus);
    out.status = (u_minus == predicted.u_half_minus && u_plus == predicted.u_half_plus) ? Status::pass
                                                                                       : Status::discrepancy;
  } catch (const DomainError& e) {
    out.status = Status::error;
    out.note = e.what();
  }
  return out;
}

/// Lerch: sign of x -> ax equals chi(a).
inline CheckOutcome check_lerch(std::uint64_t p, std::uint64_t a_val) {
  auto out = detail::make_outcome(
      {CheckId::lerch, p, std::nullopt, std::nullopt, {{"a", static_cast<std::int64_t>(a_val)}}});
  const FieldCtx ctx(p);
  const FpElem a = ctx.elem(static_cast<std::int64_t>(a_val));
  const int sign = perm_sign_mul(ctx, a);
  const int chi = legendre(a);
  out.observed["a"] = detail::str(a);
  out.observed["sign"] = detail::str(sign);
  out.expected["sign"] = detail::str(chi);
  out.status = sign == chi ? Status::pass : Status::discrepancy;
  return out;
}

/// Cauchy closed form against elimination on the explicit matrix.
inline CheckOutcome check_cauchy(std::uint64_t p, const std::vector<std::int64_t>& xs_in,
                                 const std::vector<std::int64_t>& ys_in) {
  CheckInstance inst{CheckId::cauchy, p, std::nullopt, std::nullopt, {}};
  inst.aux["n"] = static_cast<std::int64_t>(xs_in.size());
  for (std::size_t i = 0; i < xs_in.size(); ++i) inst.aux["x" + std::to_string(i)] = xs_in[i];
  for (std::size_t i = 0; i < ys_in.size(); ++i) inst.aux["y" + std::to_string(i)] = ys_in[i];
  auto out = detail::make_outcome(std::move(inst));
  const FieldCtx ctx(p);
  std::vector<FpElem> xs;
  std::vector<FpElem> ys;
  std::string xs_txt;
  std::string ys_txt;
  for (auto v : xs_in) {
    xs.push_back(ctx.elem(v));
    xs_txt += (xs_txt.empty() ? "" : " ") + detail::str(xs.back());
  }
  for (auto v : ys_in) {
    ys.push_back(ctx.elem(v));
    ys_txt += (ys_txt.empty() ? "" : " ") + detail::str(ys.back());
  }
  out.observed["xs"] = xs_txt;
  out.observed["ys"] = ys_txt;
  try {
    const FpElem closed = cauchy_det(xs, ys);
    const FpElem direct = det(build_cauchy(xs, ys));
    out.observed["det"] = detail::str(direct);
    out.expected["det"] = detail::str(closed);
    out.status = closed == direct ? Status::pass : Status::discrepancy;
  } catch (const DomainError& e) {
    out.status = Status::error;
    out.note = e.what();
  }
  return out;
}

/// det [1/(i^2+j^2)]_{1<=i,j<=(p-1)/2} = chi(2) for p = 3 mod 4, cross-checked
/// through the Cauchy closed form with x_i = y_i = i^2.
inline CheckOutcome check_sun_intro(std::uint64_t p) {
  auto out = detail::make_outcome({CheckId::sun_intro, p, std::nullopt, std::nullopt, {}});
  if (p % 4 != 3) {
    out.status = Status::skip;
    out.note = "p_not_3_mod_4";
    return out;
  }
  const FieldCtx ctx(p);
  const FpElem dt = sun_half_det(ctx);
  const FpElem chi2 = embed_sign(ctx, legendre(ctx.elem(2)));
  std::vector<FpElem> squares;
  for (std::uint64_t i = 1; i <= (p - 1) / 2; ++i) squares.push_back(ctx.elem(static_cast<std::int64_t>(i * i)));
  const FpElem via_cauchy = cauchy_det(squares, squares);
  out.observed["det"] = detail::str(dt);
  out.observed["det_cauchy"] = detail::str(via_cauchy);
  out.expected["det"] = detail::str(chi2);
  out.status = (dt == chi2 && via_cauchy == chi2) ? Status::pass : Status::discrepancy;
  return out;
}

/// Bundle of row p, p-1, p-2 identities plus the circulant reduction, each
/// compared with trinom_row. Per-identity verdicts are recorded as
/// observed["sub.<name>"].
inline CheckOutcome check_identities(std::uint64_t p, std::uint64_t c_val) {
  auto out = detail::make_outcome({CheckId::identities, p, c_val, std::nullopt, {}});
  if (p < 5) {
    out.status = Status::skip;
    out.note = "p3_excluded";
    return out;
  }
  const FieldCtx ctx(p);
  const auto ip = static_cast<std::int64_t>(p);
  const FpElem c = ctx.elem(static_cast<std::int64_t>(c_val));
  const FpElem disc = c * c - ctx.elem(4);
  const int chi_disc = legendre(disc);
  const TrinomRow row_p = trinom_row(p, c);
  const TrinomRow row_pm1 = trinom_row(p - 1, c);
  const TrinomRow row_pm2 = trinom_row(p - 2, c);

  std::map<std::string, Status> sub;
  auto verdict = [](bool ok) { return ok ? Status::pass : Status::discrepancy; };

  {
    bool ok = true;
    for (std::int64_t k = -ip - 1; k <= ip + 1; ++k) ok = ok && row_p.at(k) == row_p_closed(ctx, c, k);
    sub["lemma22"] = verdict(ok);
  }
  sub["lemma25"] = verdict(row_pm1.at(0) == central_pm1(ctx, c));
  {
    bool ok = true;
    for (std::int64_t k = 0; k <= ip - 2; ++k)
      ok = ok && row_pm1.at(k).times(k) == row_pm2.at(k + 1) - row_pm2.at(k - 1);
    sub["deriv_pm1_pm2"] = verdict(ok);
  }
  {
    bool ok = row_pm1.at(-1) + c * row_pm1.at(0) + row_pm1.at(1) == c;
    for (std::int64_t k = 1; k <= ip - 2; ++k)
      ok = ok && row_pm1.at(k + 1) == -c * row_pm1.at(k) - row_pm1.at(k - 1);
    sub["pm1_rec"] = verdict(ok);
  }
  {
    // binom(p-1,1)_c = (1 - chi(c^2-4))/2 * c
    const FpElem expected = (ctx.one() - embed_sign(ctx, chi_disc)) / ctx.elem(2) * c;
    sub["pm1_k1"] = verdict(row_pm1.at(1) == expected);
  }
  {
    const FpElem g = primitive_root(ctx);
    const CirculantProfile prof = circulant_profile(ctx, c, g);
    const FpElem s1 = prof.sum();
    const FpElem s2 = prof.alternating_sum();
    const FpElem s1_expected = -row_pm2.at(0);
    const FpElem s2_expected = -row_pm2.at((ip - 1) / 2).times(2);
    out.observed["S1"] = detail::str(s1);
    out.observed["S2"] = detail::str(s2);
    out.expected["S1"] = detail::str(s1_expected);
    out.expected["S2"] = detail::str(s2_expected);
    sub["profile_sums"] = verdict(s1 == s1_expected && s2 == s2_expected);

    const FpElem det_dp = det(build_dp(ctx, c, ctx.one()));
    const FpElem det_circ = det(build_circulant(prof));
    out.observed["det_circulant"] = detail::str(det_circ);
    out.expected["det_circulant"] = detail::str(det_dp);
    sub["circulant_eq"] = verdict(det_dp == det_circ);
  }

  if (chi_disc == 0) {
    for (auto name : detail::kUnderTestIdentities) sub[std::string(name)] = Status::skip;
  } else {
    const Pm2Anchors anchors = pm2_anchors(ctx, c);
    sub["pm2_anchors"] = verdict(anchors.k0 == row_pm2.at(0) && anchors.k1 == row_pm2.at(1));
    out.observed["pm2_k0"] = detail::str(row_pm2.at(0));
    out.expected["pm2_k0"] = detail::str(anchors.k0);

    bool ok = true;
    for (std::int64_t k = 0; k <= ip - 1; ++k) ok = ok && pm1_row_closed(ctx, c, k) == row_pm1.at(k);
    sub["pm1_closed"] = verdict(ok);

    // alpha^e = beta^e = s with (e, s) = ((p-1)/2, chi(-c-2)) or ((p+1)/2, -chi(-c-2)).
    const QuadRoots roots = quad_roots(c);
    const int chi_shift = legendre(-c - ctx.elem(2));
    const std::uint64_t e = chi_disc == 1 ? (p - 1) / 2 : (p + 1) / 2;
    const FpElem s = embed_sign(ctx, chi_disc == 1 ? chi_shift : -chi_shift);
    const Fp2Elem want = Fp2Elem::embed(roots.alpha.ctx(), s);
    sub["half_powers"] = verdict(pow(roots.alpha, e) == want && pow(roots.beta, e) == want);
  }

  bool any_fail = false;
  for (const auto& [name, st] : sub) {
    out.observed["sub." + name] = std::string(to_string(st));
    if (st == Status::discrepancy) {
      any_fail = true;
      out.note += (out.note.empty() ? "" : ";") + name;
    }
  }
  out.status = any_fail ? Status::discrepancy : Status::pass;
  return out;
}

/// Runs any instance; exceptions become status error.
inline CheckOutcome run_check(const CheckInstance& inst) {
  try {
    const auto aux = [&](const char* k) { return inst.aux.at(k); };
    switch (inst.check) {
      case CheckId::thm11: return check_thm11(inst.p, inst.c.value());
      case CheckId::thm12: return check_thm12(inst.p, inst.c.value(), inst.d.value());
      case CheckId::wsn: return check_wsn(inst.p);
      case CheckId::lemma26: return check_lemma26(inst.p, inst.c.value());
      case CheckId::lemma24: return check_lucas(inst.p, aux("A"), aux("B"), aux("b"));
      case CheckId::lemma31: return check_lemma31(inst.p, inst.c.value());
      case CheckId::lerch: return check_lerch(inst.p, static_cast<std::uint64_t>(aux("a")));
      case CheckId::cauchy: {
        const auto n = static_cast<std::size_t>(aux("n"));
        std::vector<std::int64_t> xs;
        std::vector<std::int64_t> ys;
        for (std::size_t i = 0; i < n; ++i) {
          xs.push_back(inst.aux.at("x" + std::to_string(i)));
          ys.push_back(inst.aux.at("y" + std::to_string(i)));
        }
        return check_cauchy(inst.p, xs, ys);
      }
      case CheckId::sun_intro: return check_sun_intro(inst.p);
      case CheckId::identities: return check_identities(inst.p, inst.c.value());
    }
    throw std::logic_error("unknown check id");
  } catch (const std::exception& e) {
    CheckOutcome out;
    out.instance = inst;
    out.status = Status::error;
    out.note = e.what();
    return out;
  }
}

/// True when the outcome is a failure of a claim with an independent proof.
/// Thm 1.2 at d = 0 lies outside its proof and is treated as a claim under test.
inline bool is_safe_failure(const CheckOutcome& out) {
  if (out.status == Status::pass || out.status == Status::skip) return false;
  switch (out.instance.check) {
    case CheckId::thm11:
    case CheckId::wsn:
    case CheckId::lemma26:
      return out.status == Status::error;
    case CheckId::thm12:
      return out.status == Status::error || out.instance.d.value_or(1) != 0;
    case CheckId::identities: {
      if (out.status == Status::error) return true;
      for (auto name : detail::kSafeIdentities) {
        const auto it = out.observed.find("sub." + std::string(name));
        if (it != out.observed.end() && it->second == "discrepancy") return true;
      }
      return false;
    }
    default:
      return true;
  }
}

}  // namespace trifield

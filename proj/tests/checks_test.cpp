#include <gtest/gtest.h>

#include "trifield/checks.hpp"
#include "trifield/sweep.hpp"

namespace {

using namespace trifield;

FpElem witness_elem(const CheckOutcome& o) { return FpElem(FieldCtx(o.instance.p), static_cast<std::int64_t>(*o.witness)); }

TEST(CheckIds, RoundTrip) {
  for (CheckId id : kAllChecks) EXPECT_EQ(parse_check_id(to_string(id)), id);
  EXPECT_FALSE(parse_check_id("lemma99").has_value());
  EXPECT_EQ(to_string(CheckId::sun_intro), "sun_intro");
}

TEST(Thm11, HandAnchors) {
  const auto a = check_thm11(5, 1);
  EXPECT_EQ(a.status, Status::pass);
  EXPECT_EQ(a.observed.at("det"), "3");
  EXPECT_EQ(a.expected.at("unit"), "3");
  ASSERT_TRUE(a.witness.has_value());
  EXPECT_EQ(*a.witness, 1u);

  const auto b = check_thm11(5, 2);
  EXPECT_EQ(b.status, Status::pass);
  EXPECT_EQ(b.observed.at("det"), "0");
  EXPECT_EQ(b.note, "case1");

  const auto c = check_thm11(7, 3);
  EXPECT_EQ(c.status, Status::pass);
  EXPECT_EQ(c.observed.at("det"), "0");
  EXPECT_FALSE(c.witness.has_value());

  EXPECT_EQ(check_thm11(3, 0).status, Status::skip);
  const auto d = check_thm11(3, 1);
  EXPECT_EQ(d.status, Status::skip);
  EXPECT_EQ(d.observed.at("det"), "2");
}

TEST(Thm11, WitnessSoundnessAcrossPrimes) {
  for (auto p : enumerate_primes(5, 23)) {
    for (std::uint64_t c = 0; c < p; ++c) {
      const auto o = check_thm11(p, c);
      ASSERT_NE(o.status, Status::error) << o.note;
      if (!o.witness) continue;
      const FieldCtx f(p);
      const FpElem unit(f, std::stoll(o.expected.at("unit")));
      const FpElem dt(f, std::stoll(o.observed.at("det")));
      ASSERT_EQ(witness_elem(o) * witness_elem(o) * unit, dt);
    }
  }
}

TEST(Thm12, Examples) {
  const auto a = check_thm12(5, 3, 2);
  EXPECT_EQ(a.status, Status::pass);
  EXPECT_EQ(a.observed.at("det"), "0");

  const auto b = check_thm12(5, 2, 4);
  EXPECT_EQ(b.status, Status::pass);
  EXPECT_EQ(b.observed.at("det"), "2");
  EXPECT_EQ(b.expected.at("det_via_root1"), "2");
  EXPECT_EQ(b.expected.at("det_via_root2"), "2");

  for (std::uint64_t c = 0; c < 7; ++c) EXPECT_EQ(check_thm12(7, c, 1).status, Status::pass);
}

TEST(Thm12, ZeroDIsOutsideTheProof) {
  const auto o = check_thm12(5, 1, 0);
  EXPECT_EQ(o.status, Status::discrepancy);
  EXPECT_NE(o.note.find("d_zero_outside_proof"), std::string::npos);
  EXPECT_FALSE(is_safe_failure(o));
  EXPECT_EQ(check_thm12(5, 0, 0).status, Status::pass);
}

TEST(Wsn, Examples) {
  const auto a = check_wsn(5);
  EXPECT_EQ(a.status, Status::pass);
  EXPECT_EQ(a.observed.at("det"), "3");
  const auto b = check_wsn(11);
  EXPECT_EQ(b.expected.at("det"), "8");
  EXPECT_EQ(b.status, Status::pass);
  EXPECT_EQ(check_wsn(7).status, Status::skip);
  EXPECT_EQ(check_wsn(3).status, Status::skip);
}

TEST(HalfRowCheck, KnownOutcomes) {
  const auto a = check_lemma26(5, 1);
  EXPECT_EQ(a.status, Status::pass);
  EXPECT_EQ(a.observed.at("value"), "3");

  const auto b = check_lemma26(7, 0);
  EXPECT_EQ(b.status, Status::discrepancy);
  EXPECT_EQ(b.observed.at("value"), "5");
  EXPECT_EQ(b.expected.at("value"), "0");

  const auto c = check_lemma26(7, 3);
  EXPECT_EQ(c.status, Status::discrepancy);
  EXPECT_EQ(c.observed.at("value"), "4");
  EXPECT_EQ(c.expected.at("value"), "5");

  EXPECT_EQ(check_lemma26(7, 1).status, Status::pass);
  EXPECT_EQ(check_lemma26(7, 2).status, Status::skip);
  EXPECT_EQ(check_lemma26(3, 0).status, Status::skip);
  EXPECT_FALSE(is_safe_failure(b));
}

TEST(HalfRowCheck, PlusBranchAgreesWithRow) {
  for (auto p : enumerate_primes(5, 31))
    for (std::uint64_t c = 0; c < p; ++c) {
      const auto o = check_lemma26(p, c);
      if (o.note == "chi_plus") {
        ASSERT_EQ(o.status, Status::pass) << p << " " << c;
      }
    }
}

TEST(Circulant, Examples) {
  const FieldCtx f(5);
  const auto a = check_circulant(CirculantProfile{{f.elem(1), f.zero(), f.elem(2), f.zero()}});
  EXPECT_EQ(a.status, Status::pass);
  EXPECT_EQ(a.observed.at("det"), "4");
  EXPECT_EQ(a.expected.at("unit"), "4");
  EXPECT_EQ(a.observed.at("ratio"), "1");

  const auto b = check_circulant(CirculantProfile{{f.elem(2), f.elem(1), f.elem(1)}});
  EXPECT_EQ(b.status, Status::pass);
  EXPECT_EQ(b.observed.at("det"), "4");
  EXPECT_EQ(b.observed.at("S1"), "4");

  // S1 = 0 forces det = 0
  const auto c = check_circulant(CirculantProfile{{f.elem(3), f.elem(1), f.elem(0), f.elem(1)}});
  EXPECT_EQ(c.status, Status::pass);
  EXPECT_EQ(c.observed.at("det"), "0");

  const auto bad = check_circulant(CirculantProfile{{f.elem(1), f.elem(2), f.elem(3), f.elem(4)}});
  EXPECT_EQ(bad.status, Status::error);
}

TEST(Circulant, CriterionOnDpProfiles) {
  for (auto p : enumerate_primes(3, 31))
    for (std::uint64_t c = 0; c < p; ++c) ASSERT_EQ(check_lemma31(p, c).status, Status::pass) << p << " " << c;
}

TEST(Lucas, Examples) {
  const auto a = check_lucas(7, 3, 1, 1);
  EXPECT_EQ(a.status, Status::pass);
  EXPECT_EQ(a.observed.at("u_half_minus"), "1");
  EXPECT_EQ(a.observed.at("u_half_plus"), "0");
  const auto b = check_lucas(11, 3, 1, 1);
  EXPECT_EQ(b.status, Status::pass);
  EXPECT_EQ(b.observed.at("u_half_minus"), "0");
  EXPECT_EQ(b.observed.at("u_half_plus"), "1");
  EXPECT_EQ(check_lucas(7, 3, 1, 6).status, Status::pass);
  EXPECT_EQ(check_lucas(7, 3, 3, 1).status, Status::error);
}

TEST(Lerch, AllUnits) {
  for (std::uint64_t a = 1; a < 13; ++a) EXPECT_EQ(check_lerch(13, a).status, Status::pass);
  EXPECT_EQ(check_lerch(5, 2).observed.at("sign"), "-1");
}

TEST(Cauchy, ExampleAndInapplicable) {
  const auto a = check_cauchy(7, {1, 2}, {1, 2});
  EXPECT_EQ(a.status, Status::pass);
  EXPECT_EQ(a.observed.at("det"), "4");
  const auto b = check_cauchy(7, {6, 2}, {1, 2});
  EXPECT_EQ(b.status, Status::error);
}

TEST(SunIntro, Examples) {
  const auto a = check_sun_intro(7);
  EXPECT_EQ(a.status, Status::pass);
  EXPECT_EQ(a.observed.at("det"), "1");
  const auto b = check_sun_intro(11);
  EXPECT_EQ(b.status, Status::pass);
  EXPECT_EQ(b.expected.at("det"), "10");
  EXPECT_EQ(check_sun_intro(13).status, Status::skip);
}

TEST(Identities, Examples) {
  const auto a = check_identities(5, 1);
  EXPECT_EQ(a.status, Status::pass) << a.note;
  EXPECT_EQ(a.observed.at("S1"), "3");
  EXPECT_EQ(a.observed.at("S2"), "4");
  EXPECT_EQ(a.expected.at("S1"), "3");  // -2 mod 5
  EXPECT_EQ(a.expected.at("S2"), "4");  // -6 mod 5

  const auto b = check_identities(7, 0);
  EXPECT_EQ(b.observed.at("sub.lemma25"), "pass");

  const auto c = check_identities(5, 2);
  EXPECT_EQ(c.status, Status::pass);
  EXPECT_EQ(c.observed.at("sub.lemma22"), "pass");
  EXPECT_EQ(c.observed.at("sub.pm1_closed"), "skip");
  EXPECT_EQ(c.observed.at("sub.half_powers"), "skip");
  EXPECT_EQ(c.observed.at("sub.pm2_anchors"), "skip");
}

TEST(Identities, AllPassExhaustive) {
  for (auto p : enumerate_primes(5, 31))
    for (std::uint64_t c = 0; c < p; ++c) {
      const auto o = check_identities(p, c);
      ASSERT_EQ(o.status, Status::pass) << p << " " << c << " " << o.note;
    }
}

TEST(RunCheck, DispatchMatchesDirectCall) {
  CheckInstance inst{CheckId::lemma24, 7, std::nullopt, std::nullopt, {{"A", 3}, {"B", 1}, {"b", 6}}};
  const auto o = run_check(inst);
  EXPECT_EQ(o.status, Status::pass);
  EXPECT_EQ(o.instance, inst);

  CheckInstance missing{CheckId::thm11, 7, std::nullopt, std::nullopt, {}};
  EXPECT_EQ(run_check(missing).status, Status::error);
}

TEST(RunCheck, Deterministic) {
  const CheckInstance inst{CheckId::identities, 13, 5, std::nullopt, {}};
  const auto a = run_check(inst);
  const auto b = run_check(inst);
  EXPECT_EQ(a.observed, b.observed);
  EXPECT_EQ(a.expected, b.expected);
  EXPECT_EQ(a.status, b.status);
}

TEST(CanonicalOrder, ByIdThenPrimeThenParams) {
  const CheckInstance a{CheckId::thm11, 7, 1, std::nullopt, {}};
  const CheckInstance b{CheckId::thm11, 7, 2, std::nullopt, {}};
  const CheckInstance c{CheckId::thm11, 11, 0, std::nullopt, {}};
  const CheckInstance d{CheckId::cauchy, 97, std::nullopt, std::nullopt, {}};
  EXPECT_TRUE(canonical_less(a, b));
  EXPECT_TRUE(canonical_less(b, c));
  EXPECT_TRUE(canonical_less(d, a));  // "cauchy" < "thm11"
}

}  // namespace

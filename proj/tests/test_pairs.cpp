#include "phscalc/corpus.hpp"
#include "phscalc/errors.hpp"
#include "phscalc/pairs.hpp"
#include "support/gen.hpp"

#include <doctest.h>

using namespace phscalc;

namespace {
PrimeDivisor pt(long long re, long long im = 0) {
  return PrimeDivisor::point(GaussianRational(Rational(re), Rational(im)));
}
} // namespace

TEST_CASE("phs_validate accepts the worked pairs") {
  CHECK_NOTHROW(gutwirth_pair());
  CHECK_NOTHROW(moebius_pair());
  CHECK_NOTHROW(lens_pair(1));
  PhsPair hopf = lens_pair(1);
  CHECK(hopf.properness == Properness::AssertedProper);
}

TEST_CASE("phs_validate rejects bad h") {
  BasePtr base = standard_line_base();
  SegmentalDivisor d(base);
  d.set(pt(0), Segment(Rational(0), Rational(1)));
  // conj(z - i) = z + i != z - i
  RationalFunction zmi(Poly::var() - Poly(GaussianRational::i()));
  try {
    phs_validate(base, d, BaseFunction(zmi));
    CHECK(false);
  } catch (const CalcError& e) {
    CHECK(e.kind() == Err::NotTauInvariant);
  }
  // tau-invariant h with the wrong divisor
  try {
    phs_validate(base, d, BaseFunction(RationalFunction(Poly::var() - Poly(1))));
    CHECK(false);
  } catch (const CalcError& e) {
    CHECK(e.kind() == Err::FlipIdentityFails);
    CHECK(!e.witness().empty());
  }
}

TEST_CASE("dpd_validate examples") {
  Poly w = Poly::var();
  CHECK_NOTHROW(conic_bundle_pair(w * w + Poly(1)));

  BasePtr base = standard_line_base();
  WeilQDivisor half;
  half.set(pt(0), Rational(BigInt(1), BigInt(2)));
  CHECK_NOTHROW(dpd_validate(base, half, BaseFunction(RationalFunction::var())));

  WeilQDivisor one;
  one.set(pt(0), Rational(1));
  try {
    dpd_validate(base, one, BaseFunction(RationalFunction(GaussianRational(1))));
    CHECK(false);
  } catch (const CalcError& e) {
    CHECK(e.kind() == Err::InequalityFails);
    CHECK(!e.witness().empty());
  }
}

TEST_CASE("dpd_to_seg on the conic bundle family") {
  Poly w = Poly::var();
  DpdPair dpd = conic_bundle_pair(w * w + Poly(1));
  PhsPair phs = dpd_to_seg(dpd);
  SegmentalDivisor expect(dpd.base);
  expect.set(pt(0, 1), Segment(Rational(0), Rational(1)));
  expect.set(pt(0, -1), Segment(Rational(0), Rational(1)));
  CHECK(phs.divisor == expect);
  CHECK(seg_to_dpd(phs).divisor == dpd.divisor);

  // trivial pair
  DpdPair triv = dpd_validate(standard_line_base(), WeilQDivisor{},
                              BaseFunction(RationalFunction(GaussianRational(1))));
  CHECK(dpd_to_seg(triv).divisor.is_empty());
}

TEST_CASE("moebius round trip") {
  PhsPair m = moebius_pair();
  DpdPair d = seg_to_dpd(m);
  CHECK(d.divisor.coeff(pt(0)) == Rational(BigInt(1), BigInt(2)));
  CHECK(dpd_to_seg(d).divisor == m.divisor);
}

TEST_CASE("pair_pullback_twist") {
  PhsPair gut = gutwirth_pair();
  RationalFunction one(GaussianRational(1));

  SUBCASE("identity") {
    PhsPair same = pair_pullback_twist(RealAut{}, BaseFunction(one), gut);
    CHECK(same.divisor == gut.divisor);
    CHECK(same.h == gut.h);
  }

  SUBCASE("gutwirth shift: phi z -> c(z - beta)") {
    Rational c(2), beta(3);
    RealAut phi{c, -c * beta};
    PhsPair moved = pair_pullback_twist(phi, BaseFunction(one), gut);
    SegmentalDivisor expect(gut.base);
    expect.set(pt(3), Segment(Rational(0), Rational(1)));
    CHECK(moved.divisor == expect);
    // h = c (z - beta)
    RationalFunction hExpect(Poly(GaussianRational(2)) * (Poly::var() - Poly(3)));
    CHECK(std::get<RationalFunction>(moved.h) == hExpect);
  }

  SUBCASE("twist by f = z") {
    // direct computation: divisor loses {1}(x){0}, h gains 1/(z tau^*z) = 1/z^2
    SegmentalDivisor d(gut.base);
    d.set(pt(0), Segment::singleton(Rational(1)));
    PhsPair pair = phs_validate(gut.base, d,
                                BaseFunction(RationalFunction(Poly::var() * Poly::var())));
    PhsPair twisted =
        pair_pullback_twist(RealAut{}, BaseFunction(RationalFunction::var()), pair);
    CHECK(twisted.divisor.is_empty());
    CHECK(std::get<RationalFunction>(twisted.h) == one);
  }
}

TEST_CASE("twist composition law on random pairs") {
  testgen::Rng rng(41);
  BasePtr base = standard_line_base();
  for (int t = 0; t < 100; ++t) {
    DpdPair pair = testgen::random_valid_dpd(rng, base);
    RealAut psi1 = testgen::random_real_aut(rng), psi2 = testgen::random_real_aut(rng);
    RationalFunction f1 = testgen::random_twist_function(rng);
    RationalFunction f2 = testgen::random_twist_function(rng);
    DpdPair lhs = pair_pullback_twist(psi1, BaseFunction(f1),
                                      pair_pullback_twist(psi2, BaseFunction(f2), pair));
    // composite twist: psi2 o psi1 with f = psi1^*(f2) . f1
    RealAut composed = psi2.compose(psi1);
    RationalFunction f = f2.compose(psi1.as_poly()) * f1;
    DpdPair rhs = pair_pullback_twist(composed, BaseFunction(f), pair);
    CHECK(lhs.divisor == rhs.divisor);
    CHECK(std::get<RationalFunction>(lhs.h) == std::get<RationalFunction>(rhs.h));
  }
}

TEST_CASE("validated pairs satisfy the evaluation identity") {
  // tau^*(D)(m) = D(-m) + m div(h)
  testgen::Rng rng(43);
  BasePtr base = standard_line_base();
  for (int t = 0; t < 100; ++t) {
    DpdPair dpd = testgen::random_valid_dpd(rng, base);
    PhsPair pair = dpd_to_seg(dpd);
    WeilQDivisor divh = div_of_function(*base, pair.h);
    for (long long m = -4; m <= 4; ++m) {
      WeilQDivisor lhs = tau_pullback(*base, segdiv_eval(pair.divisor, m));
      WeilQDivisor rhs = segdiv_eval(pair.divisor, -m) + divh * Rational(m);
      CHECK(lhs == rhs);
    }
  }
}

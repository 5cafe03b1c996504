#include "phscalc/corpus.hpp"
#include "phscalc/errors.hpp"
#include "phscalc/segdiv.hpp"
#include "support/gen.hpp"

#include <doctest.h>

using namespace phscalc;

namespace {
PrimeDivisor pt(long long re, long long im = 0) {
  return PrimeDivisor::point(GaussianRational(Rational(re), Rational(im)));
}
Segment seg(long long a, long long b) { return Segment(Rational(a), Rational(b)); }
} // namespace

TEST_CASE("segment semigroup") {
  CHECK(seg_add(seg(0, 1), seg(2, 3)) == seg(2, 4));
  Segment s(Rational(BigInt(-1), BigInt(2)), Rational(3));
  CHECK(seg_add(s, Segment()) == s);
  CHECK_THROWS_AS(Segment(Rational(1), Rational(0)), CalcError);

  testgen::Rng rng(3);
  for (int t = 0; t < 300; ++t) {
    Segment a = rng.segment(), b = rng.segment(), c = rng.segment();
    CHECK(seg_add(a, b) == seg_add(b, a));
    CHECK(seg_add(seg_add(a, b), c) == seg_add(a, seg_add(b, c)));
  }
}

TEST_CASE("evaluation homomorphism") {
  Segment s(Rational(BigInt(1), BigInt(2)), Rational(3));
  CHECK(ev(2, s) == Rational(1));
  CHECK(ev(-1, s) == Rational(-3));
  CHECK(ev(0, s) == Rational(0));

  testgen::Rng rng(17);
  for (int t = 0; t < 500; ++t) {
    Segment a = rng.segment(), b = rng.segment();
    long long m = rng.uniform(-10, 10);
    CHECK(ev(m, seg_add(a, b)) == ev(m, a) + ev(m, b));
    // flip identity, by the min/max formula
    CHECK(ev(m, seg_flip(a)) == ev(-m, a));
  }
}

TEST_CASE("segment flip") {
  CHECK(seg_flip(seg(0, 1)) == seg(-1, 0));
  CHECK(seg_flip(Segment::singleton(Rational(BigInt(2), BigInt(3)))) ==
        Segment::singleton(Rational(BigInt(-2), BigInt(3))));
  CHECK(seg_flip(seg_flip(seg(-2, 5))) == seg(-2, 5));
}

TEST_CASE("segdiv evaluation examples") {
  BasePtr base = standard_line_base();
  SegmentalDivisor gut(base);
  gut.set(pt(0), seg(0, 1));
  WeilQDivisor e = segdiv_eval(gut, -2);
  CHECK(e.coeff(pt(0)) == Rational(-2));
  CHECK(segdiv_eval(gut, 0).is_zero());

  // X(P) with P = w^2+1: D = [0,1]{i} + [0,1]{-i}
  SegmentalDivisor xp(base);
  xp.set(pt(0, 1), seg(0, 1));
  xp.set(pt(0, -1), seg(0, 1));
  CHECK(segdiv_eval(xp, 1).is_zero());
  WeilQDivisor neg = segdiv_eval(xp, -1);
  CHECK(neg.coeff(pt(0, 1)) == Rational(-1));
  CHECK(neg.coeff(pt(0, -1)) == Rational(-1));
}

TEST_CASE("segdiv flip, pullbacks and properness") {
  BasePtr base = standard_line_base();
  SegmentalDivisor d(base);
  d.set(pt(0), Segment(Rational(2), Rational(3)));
  SegmentalDivisor f = segdiv_flip(d);
  CHECK(f.segment_at(pt(0)) == Segment(Rational(-3), Rational(-2)));
  CHECK(segdiv_flip(f) == d);

  RealAut shift{Rational(1), Rational(1)}; // z -> z + 1
  SegmentalDivisor moved = segdiv_pullback(shift, [&] {
    SegmentalDivisor s(base);
    s.set(pt(0), Segment::singleton(Rational(1)));
    return s;
  }());
  CHECK(moved.segment_at(pt(-1)) == Segment::singleton(Rational(1)));
  CHECK_THROWS_AS(segdiv_pullback(RealAut{Rational(0), Rational(0)}, d), CalcError);

  CHECK(properness_check(d) == Properness::Proper);
  CHECK(properness_check(SegmentalDivisor(base)) == Properness::Proper);
  SegmentalDivisor onHopf(hopf_base());
  onHopf.set(PrimeDivisor::named("Du"), Segment::singleton(Rational(1)));
  CHECK(properness_check(onHopf) == Properness::AssertedProper);
  SegmentalDivisor pulled = segdiv_pullback_real(onHopf);
  CHECK(pulled.segment_at(PrimeDivisor::named("Dv")) == Segment::singleton(Rational(1)));
}

TEST_CASE("superadditivity of evaluations") {
  testgen::Rng rng(29);
  BasePtr base = standard_line_base();
  for (int t = 0; t < 300; ++t) {
    SegmentalDivisor d = testgen::random_segdiv(rng, base);
    long long m = rng.uniform(-8, 8), n = rng.uniform(-8, 8);
    CHECK(div_leq(segdiv_eval(d, m) + segdiv_eval(d, n), segdiv_eval(d, m + n)));
    CHECK(div_leq(segdiv_eval(d, m) + segdiv_eval(d, -m), WeilQDivisor{}));
    CHECK(segdiv_flip(segdiv_flip(d)) == d);
    CHECK(segdiv_pullback(RealAut{}, d) == d);
  }
}

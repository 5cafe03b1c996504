#include "phscalc/corpus.hpp"
#include "phscalc/divisor.hpp"
#include "phscalc/errors.hpp"
#include "support/gen.hpp"

#include <doctest.h>

using namespace phscalc;

namespace {
PrimeDivisor pt(long long re, long long im = 0) {
  return PrimeDivisor::point(GaussianRational(Rational(re), Rational(im)));
}
} // namespace

TEST_CASE("curve base involution equations are enforced") {
  CHECK_NOTHROW(CurveBase(GaussianRational(1), GaussianRational(0)));
  // tau(z) = i conj(z) is an involution
  CHECK_NOTHROW(CurveBase(GaussianRational::i(), GaussianRational(0)));
  // tau(z) = conj(z) + i satisfies a conj(b) + b = -i + i = 0
  CHECK_NOTHROW(CurveBase(GaussianRational(1), GaussianRational::i()));
  // a conj(a) != 1
  CHECK_THROWS_AS(CurveBase(GaussianRational(2), GaussianRational(0)), CalcError);
  // a conj(b) + b != 0
  CHECK_THROWS_AS(CurveBase(GaussianRational(1), GaussianRational(1)), CalcError);
}

TEST_CASE("div_of_function on the line") {
  BasePtr base = standard_line_base("w");
  RationalFunction f(Poly::var() * Poly::var() + Poly(1));
  WeilQDivisor d = div_of_function(*base, BaseFunction(f));
  WeilQDivisor expect;
  expect.set(pt(0, 1), Rational(1));
  expect.set(pt(0, -1), Rational(1));
  CHECK(d == expect);
  CHECK(div_of_function(*base, BaseFunction(RationalFunction(GaussianRational(1)))).is_zero());
  // quotients subtract
  RationalFunction q = f / RationalFunction(Poly::var());
  WeilQDivisor dq = div_of_function(*base, BaseFunction(q));
  CHECK(dq.coeff(pt(0)) == Rational(-1));
}

TEST_CASE("div_of_function needs declared primes for opaque factors") {
  BasePtr plain = standard_line_base();
  Poly irr = Poly::var() * Poly::var() - Poly(2);
  CHECK_THROWS_AS(div_of_function(*plain, BaseFunction(RationalFunction(irr))), CalcError);

  CurveBase withPrime;
  withPrime.declare_prime("q", irr);
  BasePtr base = make_base(Base(withPrime));
  WeilQDivisor d = div_of_function(*base, BaseFunction(RationalFunction(irr * irr)));
  CHECK(d.coeff(PrimeDivisor::opaque(irr, "q")) == Rational(2));
  // declared primes must be irreducible over Q(i)
  CurveBase bad;
  CHECK_THROWS_AS(bad.declare_prime("p", Poly::var() * Poly::var() + Poly(1)), CalcError);
}

TEST_CASE("div_of_function is additive in products") {
  testgen::Rng rng(7);
  BasePtr base = standard_line_base();
  for (int t = 0; t < 200; ++t) {
    RationalFunction f(rng.nonzero_gauss()), g(rng.nonzero_gauss());
    for (int k = 0; k < 2; ++k) {
      f *= (RationalFunction::var() - RationalFunction(rng.gauss(2))).pow(rng.uniform(-2, 2));
      g *= (RationalFunction::var() - RationalFunction(rng.gauss(2))).pow(rng.uniform(-2, 2));
    }
    CHECK(div_of_function(*base, BaseFunction(f * g)) ==
          div_of_function(*base, BaseFunction(f)) + div_of_function(*base, BaseFunction(g)));
  }
}

TEST_CASE("hopf word divisor") {
  BasePtr base = hopf_base();
  WeilQDivisor d = div_of_function(*base, BaseFunction(FunctionWord("oneMinusZ")));
  WeilQDivisor expect;
  expect.set(PrimeDivisor::named("Du"), Rational(1));
  expect.set(PrimeDivisor::named("Dv"), Rational(1));
  CHECK(d == expect);
}

TEST_CASE("pullback along the real structure") {
  BasePtr base = standard_line_base();
  WeilQDivisor d;
  d.set(pt(0, 1), Rational(BigInt(3), BigInt(2)));
  WeilQDivisor pulled = tau_pullback(*base, d);
  CHECK(pulled.coeff(pt(0, -1)) == Rational(BigInt(3), BigInt(2)));

  BasePtr hopf = hopf_base();
  WeilQDivisor du;
  du.set(PrimeDivisor::named("Du"), Rational(1));
  CHECK(tau_pullback(*hopf, du).coeff(PrimeDivisor::named("Dv")) == Rational(1));

  testgen::Rng rng(13);
  for (int t = 0; t < 200; ++t) {
    WeilQDivisor r;
    for (int k = 0; k < 3; ++k) r.set(PrimeDivisor::point(rng.gauss(3)), rng.rational());
    CHECK(tau_pullback(*base, tau_pullback(*base, r)) == r);
    CHECK(round_down(tau_pullback(*base, r)) == tau_pullback(*base, round_down(r)));
  }
}

TEST_CASE("pullback on a nonstandard real structure") {
  // tau(z) = i conj(z): tau({p}) = {i conj(p)}
  BasePtr base = make_base(Base(CurveBase(GaussianRational::i(), GaussianRational(0))));
  WeilQDivisor d;
  d.set(pt(2, 0), Rational(1));
  WeilQDivisor pulled = tau_pullback(*base, d);
  CHECK(pulled.coeff(pt(0, 2)) == Rational(1));
  CHECK(tau_pullback(*base, pulled) == d);
  // div(tau^* f) = tau^* div(f)
  const CurveBase& cb = as_curve(*base);
  RationalFunction f(Poly::var() - Poly(GaussianRational(2)));
  CHECK(div_of_function(*base, BaseFunction(cb.tau_pullback(f))) == pulled);
}

TEST_CASE("round_down and div_leq") {
  WeilQDivisor d;
  d.set(pt(0), Rational(BigInt(1), BigInt(2)));
  CHECK(round_down(d).is_zero());
  d.set(pt(1), Rational(BigInt(-1), BigInt(2)));
  WeilQDivisor fl = round_down(d);
  CHECK(fl.coeff(pt(1)) == Rational(-1));
  CHECK(fl.coeff(pt(0)) == Rational(0));

  WeilQDivisor neg;
  neg.set(pt(0), Rational(-1));
  CHECK(div_leq(neg, WeilQDivisor{}));
  CHECK(!div_leq(WeilQDivisor{}, neg));
  // integer multiples stay exact
  WeilQDivisor e;
  e.set(pt(2), Rational(7));
  CHECK(round_down(e) == e);
}

TEST_CASE("function_with_divisor") {
  BasePtr base = standard_line_base();
  WeilQDivisor d;
  d.set(pt(0), Rational(2));
  d.set(pt(1), Rational(-1));
  RationalFunction g = function_with_divisor(*base, d);
  CHECK(div_of_function(*base, BaseFunction(g)) == d);
}

TEST_CASE("presented base consistency checks") {
  PresentedBase bad;
  bad.add_prime("Du", "Dv"); // Dv not declared
  CHECK_THROWS_AS(bad.validate(), CalcError);

  PresentedBase mismatch;
  mismatch.add_prime("Du", "Dv");
  mismatch.add_prime("Dv", "Du");
  // tau(g) = g but div(g) = Du only is not tau-stable
  mismatch.add_function("g", {{"Du", BigInt(1)}}, FunctionWord("g"));
  CHECK_THROWS_AS(mismatch.validate(), CalcError);
}

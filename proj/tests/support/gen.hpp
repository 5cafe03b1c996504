#ifndef PHSCALC_TESTS_GEN_HPP
#define PHSCALC_TESTS_GEN_HPP

#include "phscalc/corpus.hpp"
#include "phscalc/pairs.hpp"

#include <random>
#include <vector>

namespace phscalc::testgen {

struct Rng {
  std::mt19937_64 eng;
  explicit Rng(unsigned seed) : eng(seed) {}

  long long uniform(long long lo, long long hi) {
    return std::uniform_int_distribution<long long>(lo, hi)(eng);
  }
  Rational rational(long long numRange = 9, long long denRange = 4) {
    return Rational(BigInt(uniform(-numRange, numRange)), BigInt(uniform(1, denRange)));
  }
  Rational nonzero_rational(long long numRange = 9, long long denRange = 4) {
    Rational r = rational(numRange, denRange);
    return r.is_zero() ? Rational(1) : r;
  }
  GaussianRational gauss(long long range = 5) {
    return GaussianRational(Rational(uniform(-range, range)), Rational(uniform(-range, range)));
  }
  GaussianRational nonzero_gauss(long long range = 5) {
    GaussianRational g = gauss(range);
    return g.is_zero() ? GaussianRational(1) : g;
  }
  Segment segment(long long range = 6) {
    Rational a = rational(range), b = rational(range);
    return a <= b ? Segment(a, b) : Segment(b, a);
  }
};

inline SegmentalDivisor random_segdiv(Rng& rng, const BasePtr& base, int maxTerms = 3) {
  SegmentalDivisor d(base);
  int terms = static_cast<int>(rng.uniform(0, maxTerms));
  for (int t = 0; t < terms; ++t)
    d.set(PrimeDivisor::point(rng.gauss(4)), rng.segment());
  return d;
}

/// Random validated DPD pair on the standard line: h is a tau-invariant
/// rational function with support on small real points and conjugate
/// pairs, and D is chosen under div(h).
inline DpdPair random_valid_dpd(Rng& rng, const BasePtr& base) {
  RationalFunction h(GaussianRational(rng.nonzero_rational(5, 3)));
  WeilQDivisor d;
  RationalFunction zf = RationalFunction::var();

  int nReal = static_cast<int>(rng.uniform(0, 2));
  long long usedReal[2] = {100, 100};
  for (int t = 0; t < nReal; ++t) {
    long long p = rng.uniform(-3, 3);
    if (p == usedReal[0]) ++p;
    usedReal[t] = p;
    long long mult = rng.uniform(-2, 3);
    GaussianRational gp{Rational(p)};
    h *= (zf - RationalFunction(gp)).pow(mult);
    // coefficient with 2 d <= mult
    Rational dCoef = Rational(mult, 2) - Rational(rng.uniform(0, 3), rng.uniform(1, 3));
    d.set(PrimeDivisor::point(gp), dCoef);
  }
  if (rng.uniform(0, 1)) {
    GaussianRational b{Rational(rng.uniform(-2, 2)), Rational(rng.uniform(1, 2))};
    long long mult = rng.uniform(-2, 2);
    h *= ((zf - RationalFunction(b)) * (zf - RationalFunction(b.conj()))).pow(mult);
    Rational db = rng.rational(3, 3);
    d.set(PrimeDivisor::point(b), db);
    d.set(PrimeDivisor::point(b.conj()),
          Rational(mult) - db - Rational(rng.uniform(0, 2)));
  }
  return dpd_validate(base, std::move(d), BaseFunction(std::move(h)));
}

inline RealAut random_real_aut(Rng& rng) {
  Rational alpha = rng.nonzero_rational(3, 3);
  return RealAut{alpha, rng.rational(3, 2)};
}

inline RationalFunction random_twist_function(Rng& rng) {
  RationalFunction f(rng.nonzero_gauss(3));
  int terms = static_cast<int>(rng.uniform(0, 2));
  for (int t = 0; t < terms; ++t) {
    long long e = rng.uniform(-2, 2);
    f *= (RationalFunction::var() - RationalFunction(rng.gauss(2))).pow(e);
  }
  return f;
}

} // namespace phscalc::testgen

#endif

#include "phscalc/classifier.hpp"
#include "phscalc/corpus.hpp"
#include "phscalc/errors.hpp"
#include "support/gen.hpp"

#include <doctest.h>

using namespace phscalc;

namespace {
PrimeDivisor pt(long long re, long long im = 0) {
  return PrimeDivisor::point(GaussianRational(Rational(re), Rational(im)));
}
DpdPair conic(long long scale, bool negate = false) {
  Poly p = Poly::var() * Poly::var() + Poly(1);
  Poly h = Poly(GaussianRational(Rational(negate ? -scale : scale))) * p;
  return dpd_validate(standard_line_base("w"), WeilQDivisor{},
                      BaseFunction(RationalFunction(h)));
}
} // namespace

TEST_CASE("h2 sign class") {
  CHECK(h2_class(GaussianRational(3)) == 1);
  CHECK(h2_class(GaussianRational(Rational(BigInt(-1), BigInt(7)))) == -1);
  testgen::Rng rng(53);
  for (int t = 0; t < 200; ++t) {
    GaussianRational lam = rng.nonzero_gauss();
    CHECK(h2_class(lam * lam.conj()) == 1);
  }
  CHECK_THROWS_AS(h2_class(GaussianRational::i()), CalcError);
  CHECK_THROWS_AS(h2_class(GaussianRational(0)), CalcError);
}

TEST_CASE("point classification") {
  CHECK(classify_point_pair(Rational(1)) == PointCurveClass::Circle);
  CHECK(classify_point_pair(Rational(-1)) == PointCurveClass::ImaginaryCircle);
  CHECK(classify_point_pair(Rational(BigInt(5), BigInt(2))) == PointCurveClass::Circle);
  CHECK_THROWS_AS(classify_point_pair(Rational(0)), CalcError);
  testgen::Rng rng(59);
  for (int t = 0; t < 100; ++t) {
    Rational h = rng.nonzero_rational();
    Rational c(BigInt(rng.uniform(1, 20)), BigInt(rng.uniform(1, 20)));
    CHECK(classify_point_pair(h) == classify_point_pair(c * h));
  }
}

TEST_CASE("pair_equiv on the conic bundle family") {
  SUBCASE("scaling by 4 = 2 tau(2)") {
    auto res = pair_equiv_full(conic(1), conic(4));
    REQUIRE(res.witness.has_value());
    CHECK(res.witness->residual == Rational(1));
    CHECK(res.witness->f == RationalFunction(GaussianRational(2)));
    CHECK(witness_replays(*res.witness, conic(1), conic(4)));
  }
  SUBCASE("sign flip is an obstruction") {
    auto res = pair_equiv_full(conic(1), conic(1, true));
    CHECK(!res.witness.has_value());
    CHECK(res.obstruction.find("residual sign -1") != std::string::npos);
  }
  SUBCASE("reflexive and symmetric") {
    auto res = pair_equiv(conic(1), conic(1));
    REQUIRE(res.has_value());
    CHECK(res->psi.is_identity());
    CHECK(res->residual == Rational(1));
    CHECK(pair_equiv(conic(4), conic(1)).has_value());
  }
}

TEST_CASE("pair_equiv gutwirth family (one-point case)") {
  DpdPair d1 = seg_to_dpd(gutwirth_pair());
  struct Tw { Rational c; Rational beta; };
  for (Tw tw : {Tw{Rational(1), Rational(0)}, Tw{Rational(2), Rational(3)},
                Tw{Rational(-1), Rational(1)}}) {
    RealAut phi{tw.c, -tw.c * tw.beta};
    DpdPair d2 = seg_to_dpd(pair_pullback_twist(
        phi, BaseFunction(RationalFunction(GaussianRational(1))), gutwirth_pair()));
    auto res = pair_equiv_full(d1, d2);
    REQUIRE(res.witness.has_value());
    CHECK(res.witness->residual == Rational(1));
    CHECK(witness_replays(*res.witness, d1, d2));
  }
}

TEST_CASE("pair_equiv zero-point case") {
  BasePtr base = standard_line_base();
  auto constPair = [&](long long c) {
    return dpd_validate(base, WeilQDivisor{},
                        BaseFunction(RationalFunction(GaussianRational(Rational(c)))));
  };
  CHECK(pair_equiv(constPair(3), constPair(5)).has_value());
  CHECK(!pair_equiv(constPair(3), constPair(-5)).has_value());
}

TEST_CASE("pair_equiv distinguishes fractional data") {
  BasePtr base = standard_line_base();
  auto halfPair = [&](Rational coef) {
    WeilQDivisor d;
    d.set(pt(0), coef);
    return dpd_validate(base, d, BaseFunction(RationalFunction::var()));
  };
  CHECK(pair_equiv(halfPair(Rational(BigInt(1), BigInt(2))),
                   halfPair(Rational(BigInt(1), BigInt(2))))
            .has_value());
  CHECK(!pair_equiv(halfPair(Rational(BigInt(1), BigInt(2))),
                    halfPair(Rational(BigInt(1), BigInt(3))))
             .has_value());
}

TEST_CASE("pair_equiv requires resolvable support") {
  CurveBase cb;
  cb.declare_prime("q", Poly::var() * Poly::var() - Poly(2));
  BasePtr base = make_base(Base(cb));
  WeilQDivisor d;
  d.set(PrimeDivisor::opaque(Poly::var() * Poly::var() - Poly(2), "q"),
        Rational(BigInt(1), BigInt(2)));
  RationalFunction h(Poly::var() * Poly::var() - Poly(2));
  DpdPair p = dpd_validate(base, d, BaseFunction(h));
  CHECK_THROWS_AS(pair_equiv(p, p), CalcError);
}

TEST_CASE("nonstandard real structures normalize to the standard model") {
  // tau(z) = i conj(z)
  CurveBase curve(GaussianRational::i(), GaussianRational(0));
  BasePtr base = make_base(Base(curve));
  StandardModel model = standard_model(curve);
  // chi o tau = conj o chi on points
  testgen::Rng rng(61);
  for (int t = 0; t < 50; ++t) {
    GaussianRational p = rng.gauss();
    GaussianRational lhs = model.u * curve.tau_point(p) + model.v;
    GaussianRational rhs = (model.u * p + model.v).conj();
    CHECK(lhs == rhs);
  }
  // a tau-invariant pair transports to a valid standard pair
  // h = i z^2 is tau-invariant: tau^*(h) = -i (conj(i) z)^2 = i z^2
  RationalFunction h = RationalFunction(Poly(GaussianRational::i())) *
                       RationalFunction::var().pow(2);
  WeilQDivisor d;
  d.set(pt(0), Rational(1));
  DpdPair pair = dpd_validate(base, d, BaseFunction(h));
  DpdPair std_pair = transport_to_standard(model, pair);
  CHECK(as_curve(*std_pair.base).is_standard_conjugation());
  CHECK(pair_equiv(std_pair, std_pair).has_value());
}

TEST_CASE("opposite real form detection") {
  // the conic bundle pair has two real forms (h and -h)
  CHECK(opposite_form_distinct(conic(1)));
  // on the trivial pair (0, z - z + 1): h = 1 vs -1 also distinct
  BasePtr base = standard_line_base();
  DpdPair triv = dpd_validate(base, WeilQDivisor{},
                              BaseFunction(RationalFunction(GaussianRational(1))));
  CHECK(opposite_form_distinct(triv));
  // gutwirth pair: h = z vs -z are equivalent via z -> -z (odd order)
  CHECK(!opposite_form_distinct(seg_to_dpd(gutwirth_pair())));
}

TEST_CASE("mj_equiv") {
  Poly z = Poly::var();
  SUBCASE("identical") {
    MjResult r = mj_equiv(Poly(1) + z, Poly(1) + z, 2);
    CHECK(r.kind == MjResult::Kind::Equivalent);
    CHECK(r.c == Rational(1));
  }
  SUBCASE("constants") {
    MjResult r = mj_equiv(Poly(1), Poly(2), 1);
    CHECK(r.kind == MjResult::Kind::Equivalent);
    CHECK(r.c == Rational(2));
  }
  SUBCASE("coefficient mismatch") {
    MjResult r = mj_equiv(Poly(1) + z, Poly(1) - z, 2);
    CHECK(r.kind == MjResult::Kind::NotEquivalent);
  }
  SUBCASE("zero against nonzero") {
    CHECK(mj_equiv(Poly(), Poly(1), 1).kind == MjResult::Kind::NotEquivalent);
    CHECK(mj_equiv(Poly(), z, 1).kind == MjResult::Kind::Equivalent); // both 0 mod z
  }
  SUBCASE("undecided over Q") {
    MjResult r = mj_equiv(z, z * Poly(2), 2); // c^3 = 2
    CHECK(r.kind == MjResult::Kind::Undecided);
  }
  SUBCASE("inconsistent cross powers") {
    // b0/a0 = 1 forces c = 1 but b1/a1 = -1 breaks it
    MjResult r = mj_equiv(Poly(1) + z, Poly(1) - z, 2);
    CHECK(r.kind == MjResult::Kind::NotEquivalent);
  }
  SUBCASE("requires real input") {
    CHECK_THROWS_AS(mj_equiv(Poly(GaussianRational::i()), Poly(1), 1), CalcError);
  }
}

TEST_CASE("mj_equiv on constructed twists") {
  testgen::Rng rng(67);
  for (Rational c : {Rational(2), Rational(-1), Rational(BigInt(1), BigInt(3))}) {
    for (int t = 0; t < 30; ++t) {
      std::vector<GaussianRational> coeffs;
      int deg = static_cast<int>(rng.uniform(0, 3));
      for (int k = 0; k <= deg; ++k) coeffs.push_back(GaussianRational(rng.rational(5, 3)));
      Poly p1(coeffs);
      if (p1.is_zero()) p1 = Poly(1);
      Poly p2;
      for (int k = 0; k <= p1.degree(); ++k)
        p2 += Poly::monomial(p1.coeff(k) * GaussianRational(c.pow(2 * k + 1)), k);
      int r = static_cast<int>(rng.uniform(1, 4));
      MjResult res = mj_equiv(p1, p2, r);
      CHECK(res.kind == MjResult::Kind::Equivalent);
      // c is pinned only when some coefficient below z^r is nonzero
      bool pinned = false;
      for (int k = 0; k < r && k <= p1.degree(); ++k)
        if (!p1.coeff(k).is_zero()) pinned = true;
      if (pinned) CHECK(res.c == c);
    }
  }
}

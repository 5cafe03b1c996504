#include "phscalc/errors.hpp"
#include "phscalc/numeric.hpp"
#include "support/gen.hpp"

#include <doctest.h>

using namespace phscalc;

TEST_CASE("rational arithmetic and normalization") {
  Rational a(BigInt(6), BigInt(-4));
  CHECK(a.num() == -3);
  CHECK(a.den() == 2);
  CHECK(a.str() == "-3/2");
  CHECK(Rational(BigInt(0), BigInt(7)) == Rational(0));
  CHECK((Rational(1) / Rational(3)).str() == "1/3");
  CHECK(Rational(BigInt(7), BigInt(2)).floor() == 3);
  CHECK(Rational(BigInt(-7), BigInt(2)).floor() == -4);
  CHECK(Rational(BigInt(1), BigInt(2)).pow(-2) == Rational(4));
  CHECK_THROWS_AS(Rational(BigInt(1), BigInt(0)), CalcError);
}

TEST_CASE("field axioms on random triples") {
  testgen::Rng rng(11);
  for (int t = 0; t < 500; ++t) {
    Rational a = rng.rational(), b = rng.rational(), c = rng.rational();
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    if (!a.is_zero()) CHECK(a * a.inv() == Rational(1));

    GaussianRational x = rng.gauss(), y = rng.gauss(), z = rng.gauss();
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
    if (!x.is_zero()) CHECK(x * x.inv() == GaussianRational(1));
  }
}

TEST_CASE("complex conjugation") {
  GaussianRational v(Rational(BigInt(3), BigInt(2)), Rational(BigInt(1), BigInt(5)));
  CHECK(conj(v) == GaussianRational(Rational(BigInt(3), BigInt(2)), Rational(BigInt(-1), BigInt(5))));
  CHECK(conj(GaussianRational(7)) == GaussianRational(7));
  GaussianRational mi = -GaussianRational::i();
  CHECK(conj(conj(mi)) == mi);
}

TEST_CASE("gaussian printing round trips through the grammar forms") {
  CHECK(GaussianRational(Rational(3), Rational(-1)).str() == "3-i");
  CHECK(GaussianRational(Rational(0), Rational(2)).str() == "2i");
  CHECK(GaussianRational(Rational(BigInt(3), BigInt(2)), Rational(BigInt(-1), BigInt(5))).str() ==
        "3/2-1/5*i");
}

TEST_CASE("integer helpers") {
  CHECK(isqrt_floor(BigInt(17)) == 4);
  CHECK(nth_root_exact(BigInt(27), 3).value() == 3);
  CHECK(nth_root_exact(BigInt(-32), 5).value() == -2);
  CHECK(!nth_root_exact(BigInt(28), 3).has_value());
  CHECK(!nth_root_exact(BigInt(-4), 2).has_value());
  CHECK(positive_divisors(BigInt(12)).size() == 6);
  auto f = factorize(BigInt(360));
  CHECK(f.size() == 3);
  CHECK(f[0].second == 3); // 2^3
}

TEST_CASE("norm_split absorbs Gaussian norms") {
  testgen::Rng rng(5);
  for (int t = 0; t < 200; ++t) {
    GaussianRational lam = rng.nonzero_gauss(6);
    Rational c = lam.norm() * Rational(BigInt(rng.uniform(1, 50)), BigInt(rng.uniform(1, 50)));
    NormSplit s = norm_split(c);
    CHECK(s.mu.norm() * s.residue == c);
    CHECK(s.residue.sign() > 0);
    CHECK(s.residue.is_integer());
  }
  // residues keep exactly the odd powers of primes = 3 mod 4
  CHECK(norm_split(Rational(2)).residue == Rational(1));
  CHECK(norm_split(Rational(5)).residue == Rational(1));
  CHECK(norm_split(Rational(3)).residue == Rational(3));
  CHECK(norm_split(Rational(BigInt(1), BigInt(3))).residue == Rational(3));
  CHECK(norm_split(Rational(9)).residue == Rational(1));
  CHECK(norm_split(Rational(21)).residue == Rational(21));
}

#include "phscalc/errors.hpp"
#include "phscalc/poly.hpp"
#include "support/gen.hpp"

#include <doctest.h>

using namespace phscalc;

namespace {
Poly z() { return Poly::var(); }
GaussianRational I() { return GaussianRational::i(); }
} // namespace

TEST_CASE("poly basics") {
  Poly p = z() * z() + Poly(1);
  CHECK(p.degree() == 2);
  CHECK(p.eval(I()).is_zero());
  CHECK(p.str("z") == "z^2+1");
  CHECK((z() - Poly(I())).str("z") == "z-i");
  auto [q, r] = divmod(p, z() - Poly(I()));
  CHECK(r.is_zero());
  CHECK(q == z() + Poly(I()));
  CHECK(poly_gcd(p, z() + Poly(I())) == z() + Poly(I()));
}

TEST_CASE("poly_conj") {
  CHECK(poly_conj(z() - Poly(I())) == z() + Poly(I()));
  Poly real = z() * z() + Poly(1);
  CHECK(poly_conj(real) == real);
  // multiplicativity, frozen from direct expansion:
  // (z-i)(z+2i) = z^2 + i z + 2, conjugate = z^2 - i z + 2 = (z+i)(z-2i)
  Poly p = z() - Poly(I()), q = z() + Poly(I() * GaussianRational(2));
  Poly expanded = p * q;
  CHECK(expanded == z() * z() + Poly(I()) * z() + Poly(2));
  CHECK(poly_conj(expanded) == poly_conj(p) * poly_conj(q));
}

TEST_CASE("poly_conj is a ring involution on random inputs") {
  testgen::Rng rng(23);
  auto rand_poly = [&](int maxdeg) {
    std::vector<GaussianRational> c;
    for (int k = 0; k <= rng.uniform(0, maxdeg); ++k) c.push_back(rng.gauss(4));
    return Poly(std::move(c));
  };
  for (int t = 0; t < 300; ++t) {
    Poly p = rand_poly(4), q = rand_poly(4);
    CHECK(poly_conj(p * q) == poly_conj(p) * poly_conj(q));
    CHECK(poly_conj(p + q) == poly_conj(p) + poly_conj(q));
    CHECK(poly_conj(poly_conj(p)) == p);
  }
}

TEST_CASE("factor_linear examples") {
  {
    auto f = factor_linear(z() * z() + Poly(1));
    REQUIRE(f.roots.size() == 2);
    CHECK(f.roots[0].first == -I());
    CHECK(f.roots[1].first == I());
    CHECK(f.roots[0].second == 1);
    CHECK(f.remainder == Poly(1));
  }
  {
    Poly c = (z() - Poly(2)) * (z() - Poly(2)) * (z() - Poly(2));
    auto f = factor_linear(c);
    REQUIRE(f.roots.size() == 1);
    CHECK(f.roots[0].first == GaussianRational(2));
    CHECK(f.roots[0].second == 3);
    CHECK(f.remainder == Poly(1));
  }
  {
    auto f = factor_linear(z() * z() - Poly(2));
    CHECK(f.roots.empty());
    CHECK(f.remainder == z() * z() - Poly(2));
  }
  {
    // rational and Gaussian roots with leading coefficient
    Poly p = Poly(GaussianRational(Rational(2))) * (z() - Poly(GaussianRational(Rational(BigInt(1), BigInt(2))))) *
             (z() - Poly(I() * GaussianRational(3)));
    auto f = factor_linear(p);
    CHECK(f.lead == GaussianRational(2));
    REQUIRE(f.roots.size() == 2);
  }
}

TEST_CASE("factor_linear respects products") {
  testgen::Rng rng(31);
  for (int t = 0; t < 150; ++t) {
    // products of linear factors with small Gaussian roots
    Poly p(GaussianRational(1)), q(GaussianRational(1));
    int np = static_cast<int>(rng.uniform(1, 3)), nq = static_cast<int>(rng.uniform(1, 3));
    for (int k = 0; k < np; ++k) p *= z() - Poly(rng.gauss(2));
    for (int k = 0; k < nq; ++k) q *= z() - Poly(rng.gauss(2));
    auto fp = factor_linear(p), fq = factor_linear(q), fpq = factor_linear(p * q);
    CHECK(fp.remainder == Poly(1));
    CHECK(fq.remainder == Poly(1));
    CHECK(fpq.remainder == Poly(1));
    int tot = 0;
    for (auto& [root, mult] : fpq.roots) {
      int expect = 0;
      for (auto& [r2, m2] : fp.roots)
        if (r2 == root) expect += m2;
      for (auto& [r2, m2] : fq.roots)
        if (r2 == root) expect += m2;
      CHECK(mult == expect);
      tot += mult;
    }
    CHECK(tot == np + nq);
  }
}

TEST_CASE("rational functions normalize") {
  RationalFunction f(z() * z() - Poly(1), z() - Poly(1));
  CHECK(f.is_polynomial());
  CHECK(f.num() == z() + Poly(1));
  RationalFunction g(Poly(2) * z(), Poly(4));
  CHECK(g.den() == Poly(1));
  CHECK(g.num() == Poly(GaussianRational(Rational(BigInt(1), BigInt(2)))) * z());
  RationalFunction h = RationalFunction::var().pow(-2);
  CHECK(h.den() == z() * z());
  CHECK(h.inv().is_polynomial());
  CHECK(f.compose(z() + Poly(1)) == RationalFunction(z() + Poly(2)));
}

#include "phscalc/mpoly.hpp"

#include <doctest.h>

using namespace phscalc;

namespace {
MPoly var(int i) { return MPoly::variable(4, i); }
} // namespace

TEST_CASE("mpoly arithmetic") {
  MPoly a = var(0), b = var(1);
  MPoly p = a * b + MPoly(4, Rational(1));
  CHECK(p.terms().size() == 2);
  CHECK((p - p).is_zero());
  CHECK(p.pow(2) == p * p);
  MPoly q = p * Rational(BigInt(1), BigInt(2));
  CHECK(q.coeff({0, 0, 0, 0}) == Rational(BigInt(1), BigInt(2)));
  CHECK(p.str({"a", "b", "x", "y"}) == "a*b+1");
}

TEST_CASE("substitution") {
  MPoly x = var(2), y = var(3);
  MPoly f = x * x + y;
  // x -> y, y -> x*y
  MPoly img = f.substitute({var(0), var(1), y, var(2) * y});
  CHECK(img == y * y + var(2) * y);
}

TEST_CASE("homogeneous weights") {
  std::vector<long long> w{2, -2, 3, -3};
  MPoly m = MPoly::term(4, {1, 0, 1, 0}, Rational(1)); // a x: weight 5
  CHECK(m.homogeneous_weight(w).value() == 5);
  MPoly mixed = m + var(1);
  CHECK(!mixed.homogeneous_weight(w).has_value());
  MPoly inv = var(0) * var(1) + var(2) * var(3);
  CHECK(inv.homogeneous_weight(w).value() == 0);
}

TEST_CASE("graded-lex printing is deterministic") {
  MPoly p = var(0) + var(1) * var(1) + MPoly(4, Rational(-3));
  CHECK(p.str({"a", "b", "x", "y"}) == "b^2+a-3");
}

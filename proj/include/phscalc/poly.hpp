#ifndef PHSCALC_POLY_HPP
#define PHSCALC_POLY_HPP

#include "phscalc/numeric.hpp"

#include <compare>
#include <string>
#include <utility>
#include <vector>

namespace phscalc {

/// Univariate polynomial over Q(i), coefficients in ascending degree,
/// normalized so the top coefficient is nonzero (zero poly is empty).
class Poly {
public:
  Poly() = default;
  Poly(GaussianRational c);
  Poly(long long c) : Poly(GaussianRational(c)) {}
  explicit Poly(std::vector<GaussianRational> coeffs);

  static Poly var();                      // the coordinate z
  static Poly monomial(GaussianRational c, int deg);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero
  bool is_constant() const { return c_.size() <= 1; }
  GaussianRational constant_value() const { return c_.empty() ? GaussianRational() : c_[0]; }
  const GaussianRational& leading() const;
  const std::vector<GaussianRational>& coeffs() const { return c_; }
  GaussianRational coeff(int k) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);

  bool operator==(const Poly& o) const { return c_ == o.c_; }
  // container ordering: by degree, then lexicographic on coefficients
  std::strong_ordering operator<=>(const Poly& o) const;

  Poly pow(unsigned e) const;
  Poly derivative() const;
  Poly monic() const;
  GaussianRational eval(const GaussianRational& x) const;
  Poly compose(const Poly& inner) const;
  Poly conj_coeffs() const;
  bool has_real_coeffs() const;

  std::string str(const std::string& var = "z") const;

private:
  void trim();
  std::vector<GaussianRational> c_;
};

// quotient and remainder, b != 0
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
// monic gcd
Poly poly_gcd(Poly a, Poly b);
// coefficientwise complex conjugation
Poly poly_conj(const Poly& p);

struct LinearFactors {
  GaussianRational lead;                                  // leading coefficient of input
  std::vector<std::pair<GaussianRational, int>> roots;    // sorted, with multiplicities
  Poly remainder;                                         // monic, no Q(i) roots
};

/// Splits off all linear factors over Q(i):
/// p = lead * prod (z - r_k)^{m_k} * remainder.
/// Roots are found by squarefree reduction plus a rational-root search over
/// Z[i] divisors of the trailing/leading coefficients.
LinearFactors factor_linear(const Poly& p);

/// Rational function over Q(i): num/den with gcd 1 and monic denominator.
class RationalFunction {
public:
  RationalFunction() : num_(GaussianRational(0)), den_(GaussianRational(1)) {}
  RationalFunction(Poly num);
  RationalFunction(Poly num, Poly den);
  RationalFunction(GaussianRational c) : RationalFunction(Poly(std::move(c))) {}
  RationalFunction(long long c) : RationalFunction(Poly(c)) {}

  static RationalFunction var() { return RationalFunction(Poly::var()); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  GaussianRational constant_value() const;
  bool is_polynomial() const { return den_ == Poly(GaussianRational(1)); }

  RationalFunction operator-() const;
  RationalFunction& operator+=(const RationalFunction& o);
  RationalFunction& operator-=(const RationalFunction& o);
  RationalFunction& operator*=(const RationalFunction& o);
  RationalFunction& operator/=(const RationalFunction& o);
  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }

  bool operator==(const RationalFunction& o) const { return num_ == o.num_ && den_ == o.den_; }

  RationalFunction pow(long long e) const;
  RationalFunction inv() const;
  RationalFunction conj_coeffs() const;
  // f(inner) for an affine or polynomial inner function
  RationalFunction compose(const Poly& inner) const;

  std::string str(const std::string& var = "z") const;

private:
  void normalize();
  Poly num_, den_;
};

} // namespace phscalc

#endif

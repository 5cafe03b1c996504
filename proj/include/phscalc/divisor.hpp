#ifndef PHSCALC_DIVISOR_HPP
#define PHSCALC_DIVISOR_HPP

#include "phscalc/base.hpp"

#include <compare>
#include <map>
#include <string>

namespace phscalc {

/// A prime Weil divisor on one of the supported bases: a closed point of
/// the affine line, the vanishing locus of an asserted-irreducible monic
/// polynomial, or a named prime of a presented base.
class PrimeDivisor {
public:
  enum class Kind { Point, Opaque, Named };

  static PrimeDivisor point(GaussianRational p);
  static PrimeDivisor opaque(Poly p, std::string name = {});
  static PrimeDivisor named(std::string name);

  Kind kind() const { return kind_; }
  const GaussianRational& as_point() const { return point_; }
  const Poly& as_poly() const { return poly_; }
  const std::string& name() const { return name_; }

  // identity is the point / monic polynomial / name; opaque display names
  // are cosmetic
  bool operator==(const PrimeDivisor& o) const;
  std::strong_ordering operator<=>(const PrimeDivisor& o) const;

  std::string str(const std::string& var = "z") const;

private:
  Kind kind_ = Kind::Point;
  GaussianRational point_;
  Poly poly_;
  std::string name_;
};

/// Sparse Weil Q-divisor; zero coefficients are never stored.
class WeilQDivisor {
public:
  WeilQDivisor() = default;

  const std::map<PrimeDivisor, Rational>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  Rational coeff(const PrimeDivisor& p) const;
  void set(const PrimeDivisor& p, const Rational& c);

  WeilQDivisor operator-() const;
  WeilQDivisor& operator+=(const WeilQDivisor& o);
  WeilQDivisor& operator-=(const WeilQDivisor& o);
  friend WeilQDivisor operator+(WeilQDivisor a, const WeilQDivisor& b) { return a += b; }
  friend WeilQDivisor operator-(WeilQDivisor a, const WeilQDivisor& b) { return a -= b; }
  WeilQDivisor operator*(const Rational& c) const;

  bool operator==(const WeilQDivisor& o) const { return t_ == o.t_; }

  bool is_integral() const;
  // true when every coefficient of *this is <= the matching one of o
  bool leq(const WeilQDivisor& o) const;
  bool is_effective() const { return WeilQDivisor().leq(*this); }

  std::string str(const std::string& var = "z") const;

private:
  std::map<PrimeDivisor, Rational> t_;
};

// coefficientwise floor
WeilQDivisor round_down(const WeilQDivisor& d);
bool div_leq(const WeilQDivisor& a, const WeilQDivisor& b);

// principal divisor of a function on its base
WeilQDivisor div_of_function(const Base& base, const BaseFunction& f);
// monic rational function on a curve base with the prescribed integral divisor
RationalFunction function_with_divisor(const Base& base, const WeilQDivisor& integral);
// transport of primes along the real structure
PrimeDivisor tau_pullback(const Base& base, const PrimeDivisor& p);
WeilQDivisor tau_pullback(const Base& base, const WeilQDivisor& d);
// transport of primes along a real automorphism of a curve base
PrimeDivisor psi_pullback(const RealAut& psi, const PrimeDivisor& p);
WeilQDivisor psi_pullback(const RealAut& psi, const WeilQDivisor& d);

} // namespace phscalc

#endif

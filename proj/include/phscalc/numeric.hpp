#ifndef PHSCALC_NUMERIC_HPP
#define PHSCALC_NUMERIC_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace phscalc {

using BigInt = boost::multiprecision::cpp_int;

BigInt big_gcd(BigInt a, BigInt b);
BigInt big_lcm(const BigInt& a, const BigInt& b);
// floor(a/b) for b > 0
BigInt floor_div(const BigInt& a, const BigInt& b);
BigInt isqrt_floor(const BigInt& n);
// exact n-th root if x is a perfect n-th power (x may be negative for odd n)
std::optional<BigInt> nth_root_exact(const BigInt& x, unsigned n);
// ascending positive divisors, by trial division
std::vector<BigInt> positive_divisors(BigInt n);
// prime factorization of n > 0 as (prime, exponent) pairs
std::vector<std::pair<BigInt, unsigned>> factorize(BigInt n);

/// Exact rational number. Denominator is positive and the fraction is
/// always reduced.
class Rational {
public:
  Rational() : num_(0), den_(1) {}
  Rational(long long n) : num_(n), den_(1) {}
  Rational(BigInt n) : num_(std::move(n)), den_(1) {}
  Rational(BigInt num, BigInt den);

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return num_ == 0 ? 0 : (num_ > 0 ? 1 : -1); }

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
  std::strong_ordering operator<=>(const Rational& o) const;

  Rational inv() const;
  Rational abs() const { return num_ >= 0 ? *this : -*this; }
  // integer power, negative exponents allowed for nonzero values
  Rational pow(long long e) const;
  BigInt floor() const;

  std::string str() const;
  static std::optional<Rational> parse(const std::string& s);

private:
  void normalize();
  BigInt num_, den_;
};

/// Element of Q(i).
class GaussianRational {
public:
  GaussianRational() = default;
  GaussianRational(Rational re) : re_(std::move(re)) {}
  GaussianRational(long long re) : re_(re) {}
  GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static GaussianRational i() { return {Rational(0), Rational(1)}; }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_real() const { return im_.is_zero(); }

  GaussianRational conj() const { return {re_, -im_}; }
  Rational norm() const { return re_ * re_ + im_ * im_; }

  GaussianRational operator-() const { return {-re_, -im_}; }
  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

  bool operator==(const GaussianRational& o) const { return re_ == o.re_ && im_ == o.im_; }
  // lexicographic on (re, im); container ordering, not a field order
  std::strong_ordering operator<=>(const GaussianRational& o) const;

  GaussianRational inv() const;
  GaussianRational pow(long long e) const;

  std::string str() const;

private:
  Rational re_, im_;
};

GaussianRational conj(const GaussianRational& x);

/// Splits a positive rational c as c = norm(mu) * c0 with mu in Q(i) and
/// c0 the positive non-norm remainder (odd-power primes = 3 mod 4).
struct NormSplit {
  GaussianRational mu;
  Rational residue;
};
NormSplit norm_split(const Rational& c);

} // namespace phscalc

#endif

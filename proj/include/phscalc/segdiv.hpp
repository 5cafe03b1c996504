#ifndef PHSCALC_SEGDIV_HPP
#define PHSCALC_SEGDIV_HPP

#include "phscalc/divisor.hpp"

#include <map>
#include <string>

namespace phscalc {

/// Closed rational interval [lo, hi], an element of the interval
/// semigroup under Minkowski sum. Singletons are allowed.
struct Segment {
  Rational lo, hi;

  Segment() = default;
  Segment(Rational a, Rational b);
  static Segment singleton(Rational a) { return Segment(a, a); }

  bool is_singleton() const { return lo == hi; }
  bool is_zero() const { return lo.is_zero() && hi.is_zero(); }

  bool operator==(const Segment& o) const { return lo == o.lo && hi == o.hi; }
  std::string str() const;
};

Segment seg_add(const Segment& s, const Segment& t);
// the evaluation homomorphism: min(m*lo, m*hi)
Rational ev(long long m, const Segment& s);
// [a,b] -> [-b,-a]
Segment seg_flip(const Segment& s);
// n-fold sum for integer n (singleton group part handles n < 0 via flip)
Segment seg_scale_int(const BigInt& n, const Segment& s);

enum class Properness { Proper, AssertedProper, NotProper };
std::string properness_str(Properness p);

/// Finite formal sum of segments tensored with prime divisors on a fixed
/// base. Terms with segment {0} are dropped.
class SegmentalDivisor {
public:
  SegmentalDivisor() = default;
  explicit SegmentalDivisor(BasePtr base) : base_(std::move(base)) {}

  const BasePtr& base() const { return base_; }
  const std::map<PrimeDivisor, Segment>& terms() const { return t_; }
  bool is_empty() const { return t_.empty(); }

  void set(const PrimeDivisor& p, const Segment& s);
  Segment segment_at(const PrimeDivisor& p) const; // {0} when absent

  // termwise Minkowski sum over the union of supports
  SegmentalDivisor operator+(const SegmentalDivisor& o) const;
  bool operator==(const SegmentalDivisor& o) const;

  std::string str() const;

private:
  BasePtr base_;
  std::map<PrimeDivisor, Segment> t_;
};

// D(m) = sum min(m a_i, m b_i) D_i
WeilQDivisor segdiv_eval(const SegmentalDivisor& d, long long m);
// termwise segment flip, primes unchanged
SegmentalDivisor segdiv_flip(const SegmentalDivisor& d);
// transport primes by tau, segments unchanged
SegmentalDivisor segdiv_pullback_real(const SegmentalDivisor& d);
// transport primes by a real automorphism of the curve base
SegmentalDivisor segdiv_pullback(const RealAut& psi, const SegmentalDivisor& d);
// {1} (x) E for an integral Weil divisor E
SegmentalDivisor segdiv_from_integral(const BasePtr& base, const WeilQDivisor& e);

// Proper on point and curve bases, declared on presented bases.
Properness properness_check(const SegmentalDivisor& d);

} // namespace phscalc

#endif

#include "phscalc/numeric.hpp"

#include "phscalc/errors.hpp"

#include <algorithm>
#include <sstream>

namespace phscalc {

const char* err_name(Err e) {
  switch (e) {
    case Err::UnfactoredInput: return "UnfactoredInput";
    case Err::NotAutomorphism: return "NotAutomorphism";
    case Err::NotTauInvariant: return "NotTauInvariant";
    case Err::FlipIdentityFails: return "FlipIdentityFails";
    case Err::InequalityFails: return "InequalityFails";
    case Err::UnsupportedBase: return "UnsupportedBase";
    case Err::BoundExceeded: return "BoundExceeded";
    case Err::ZeroH: return "ZeroH";
    case Err::NotReal: return "NotReal";
    case Err::UnresolvableSupport: return "UnresolvableSupport";
    case Err::OnePointFamily: return "OnePointFamily";
    case Err::NonPrimitiveWeight: return "NonPrimitiveWeight";
    case Err::UnsupportedRank: return "UnsupportedRank";
    case Err::UnboundedFiber: return "UnboundedFiber";
    case Err::InvolutionFails: return "InvolutionFails";
    case Err::SyntaxError: return "SyntaxError";
    case Err::UndeclaredSymbol: return "UndeclaredSymbol";
    case Err::BadInput: return "BadInput";
  }
  return "Unknown";
}

BigInt big_gcd(BigInt a, BigInt b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  return boost::multiprecision::gcd(a, b);
}

BigInt big_lcm(const BigInt& a, const BigInt& b) {
  if (a == 0 || b == 0) return 0;
  return boost::multiprecision::abs(a / big_gcd(a, b) * b);
}

BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b; // truncates toward zero
  if (a % b != 0 && ((a < 0) != (b < 0))) q -= 1;
  return q;
}

BigInt isqrt_floor(const BigInt& n) {
  if (n <= 0) return 0;
  return boost::multiprecision::sqrt(n);
}

std::optional<BigInt> nth_root_exact(const BigInt& x, unsigned n) {
  if (n == 0) return std::nullopt;
  if (n == 1) return x;
  if (x == 0) return BigInt(0);
  bool neg = x < 0;
  if (neg && n % 2 == 0) return std::nullopt;
  BigInt a = neg ? BigInt(-x) : x;
  // binary search for floor root, then check exactness
  BigInt lo = 1, hi = 1;
  while (boost::multiprecision::pow(hi, n) < a) hi <<= 1;
  while (lo < hi) {
    BigInt mid = (lo + hi + 1) / 2;
    if (boost::multiprecision::pow(mid, n) <= a) lo = mid; else hi = mid - 1;
  }
  if (boost::multiprecision::pow(lo, n) != a) return std::nullopt;
  return neg ? BigInt(-lo) : lo;
}

std::vector<BigInt> positive_divisors(BigInt n) {
  if (n < 0) n = -n;
  std::vector<BigInt> out;
  if (n == 0) return out;
  for (BigInt d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      if (d * d != n) out.push_back(n / d);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::pair<BigInt, unsigned>> factorize(BigInt n) {
  std::vector<std::pair<BigInt, unsigned>> out;
  if (n <= 1) return out;
  for (BigInt p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      unsigned e = 0;
      while (n % p == 0) { n /= p; ++e; }
      out.emplace_back(p, e);
    }
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

// ---- Rational ----

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_ == 0) throw CalcError(Err::BadInput, "zero denominator");
  normalize();
}

void Rational::normalize() {
  if (den_ < 0) { num_ = -num_; den_ = -den_; }
  if (num_ == 0) { den_ = 1; return; }
  BigInt g = big_gcd(num_, den_);
  if (g > 1) { num_ /= g; den_ /= g; }
}

Rational Rational::operator-() const {
  Rational r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ *= o.den_;
  normalize();
  return *this;
}

Rational& Rational::operator-=(const Rational& o) { return *this += -o; }

Rational& Rational::operator*=(const Rational& o) {
  num_ *= o.num_;
  den_ *= o.den_;
  normalize();
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.num_ == 0) throw CalcError(Err::BadInput, "division by zero");
  num_ *= o.den_;
  den_ *= o.num_;
  normalize();
  return *this;
}

std::strong_ordering Rational::operator<=>(const Rational& o) const {
  BigInt lhs = num_ * o.den_, rhs = o.num_ * den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Rational Rational::inv() const {
  if (num_ == 0) throw CalcError(Err::BadInput, "inverse of zero");
  return Rational(den_, num_);
}

Rational Rational::pow(long long e) const {
  if (e == 0) return Rational(1);
  if (e < 0) return inv().pow(-e);
  Rational base = *this, acc(1);
  unsigned long long n = static_cast<unsigned long long>(e);
  while (n) {
    if (n & 1) acc *= base;
    base *= base;
    n >>= 1;
  }
  return acc;
}

BigInt Rational::floor() const { return floor_div(num_, den_); }

std::string Rational::str() const {
  if (den_ == 1) return num_.str();
  return num_.str() + "/" + den_.str();
}

std::optional<Rational> Rational::parse(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(s));
    BigInt n(s.substr(0, slash)), d(s.substr(slash + 1));
    if (d == 0) return std::nullopt;
    return Rational(n, d);
  } catch (...) {
    return std::nullopt;
  }
}

// ---- GaussianRational ----

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  Rational r = re_ * o.re_ - im_ * o.im_;
  Rational i = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(r);
  im_ = std::move(i);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  if (o.is_zero()) throw CalcError(Err::BadInput, "division by zero");
  Rational n = o.norm();
  return *this *= GaussianRational(o.re() / n, -o.im() / n);
}

std::strong_ordering GaussianRational::operator<=>(const GaussianRational& o) const {
  auto c = re_ <=> o.re_;
  if (c != std::strong_ordering::equal) return c;
  return im_ <=> o.im_;
}

GaussianRational GaussianRational::inv() const {
  if (is_zero()) throw CalcError(Err::BadInput, "inverse of zero");
  Rational n = norm();
  return {re_ / n, -im_ / n};
}

GaussianRational GaussianRational::pow(long long e) const {
  if (e == 0) return GaussianRational(1);
  if (e < 0) return inv().pow(-e);
  GaussianRational base = *this, acc(1);
  unsigned long long n = static_cast<unsigned long long>(e);
  while (n) {
    if (n & 1) acc *= base;
    base *= base;
    n >>= 1;
  }
  return acc;
}

std::string GaussianRational::str() const {
  if (im_.is_zero()) return re_.str();
  std::string imPart;
  if (im_ == Rational(1)) imPart = "i";
  else if (im_ == Rational(-1)) imPart = "-i";
  else if (im_.is_integer()) imPart = im_.str() + "i";
  else imPart = im_.str() + "*i"; // 1/5*i reads back as (1/5)*i
  if (re_.is_zero()) return imPart;
  if (im_.sign() > 0) return re_.str() + "+" + imPart;
  return re_.str() + imPart; // imPart already carries the minus sign
}

GaussianRational conj(const GaussianRational& x) { return x.conj(); }

NormSplit norm_split(const Rational& c) {
  if (c.sign() <= 0) throw CalcError(Err::BadInput, "norm_split requires a positive rational");
  // Work on numerator and denominator separately; denominators are absorbed
  // through 1/q = N(1/q) * q.
  GaussianRational mu(1);
  Rational residue(1);
  auto absorb = [&](const BigInt& n, bool denominator) {
    for (auto& [p, e] : factorize(n)) {
      unsigned pairs = e / 2, rest = e % 2;
      GaussianRational contrib(Rational(boost::multiprecision::pow(p, pairs)));
      if (rest == 1) {
        if (p == 2) {
          contrib *= GaussianRational(Rational(1), Rational(1)); // N(1+i) = 2
        } else if (p % 4 == 1) {
          // find a^2 + b^2 = p by search (desk-scale inputs)
          BigInt a = 1;
          bool found = false;
          for (; a * a <= p; ++a) {
            BigInt b2 = p - a * a;
            BigInt b = isqrt_floor(b2);
            if (b * b == b2) { contrib *= GaussianRational(Rational(a), Rational(b)); found = true; break; }
          }
          if (!found) throw CalcError(Err::BadInput, "sum-of-squares decomposition failed");
        } else {
          residue *= denominator ? Rational(BigInt(1), p) : Rational(p);
          rest = 0;
        }
      }
      if (denominator) mu /= contrib; else mu *= contrib;
    }
  };
  absorb(c.num(), false);
  absorb(c.den(), true);
  // normalize residue to a positive integer representative: r/d ~ r*d via mu/d
  if (!residue.is_integer()) {
    Rational d{residue.den()};
    mu /= GaussianRational(d);
    residue *= d * d;
  }
  return {mu, residue};
}

} // namespace phscalc

#ifndef PHSCALC_BASE_HPP
#define PHSCALC_BASE_HPP

#include "phscalc/poly.hpp"

#include <map>
#include <memory>
#include <string>
#include <variant>
#include <vector>

namespace phscalc {

/// Signed multiplicative word in declared function symbols of a presented
/// base, stored as a commutative exponent map.
class FunctionWord {
public:
  FunctionWord() = default;
  explicit FunctionWord(const std::string& symbol, long long e = 1);

  const std::map<std::string, long long>& exps() const { return e_; }
  bool is_one() const { return e_.empty(); }

  FunctionWord& operator*=(const FunctionWord& o);
  friend FunctionWord operator*(FunctionWord a, const FunctionWord& b) { return a *= b; }
  FunctionWord inv() const;
  FunctionWord pow(long long e) const;
  bool operator==(const FunctionWord& o) const { return e_ == o.e_; }

  std::string str() const;

private:
  std::map<std::string, long long> e_;
};

/// Spec Z = Spec C with the complex conjugation.
struct PointBase {
  bool operator==(const PointBase&) const { return true; }
};

/// The affine line with real structure tau(z) = a*conj(z) + b.
/// The constructor checks the involution equations a*conj(a) = 1 and
/// a*conj(b) + b = 0 instead of normalizing.
class CurveBase {
public:
  CurveBase(); // standard conjugation, coordinate z
  CurveBase(GaussianRational a, GaussianRational b, std::string var = "z");

  const GaussianRational& tau_a() const { return a_; }
  const GaussianRational& tau_b() const { return b_; }
  const std::string& var() const { return var_; }
  bool is_standard_conjugation() const;

  // tau acting on closed points
  GaussianRational tau_point(const GaussianRational& p) const;
  // comorphism tau^* on rational functions (conjugate coefficients, then
  // substitute z -> conj(a) z + conj(b))
  RationalFunction tau_pullback(const RationalFunction& f) const;
  Poly tau_pullback(const Poly& p) const;

  void declare_prime(const std::string& name, const Poly& p);
  const std::vector<std::pair<std::string, Poly>>& declared_primes() const { return primes_; }

  bool operator==(const CurveBase& o) const { return a_ == o.a_ && b_ == o.b_; }

private:
  GaussianRational a_, b_;
  std::string var_;
  std::vector<std::pair<std::string, Poly>> primes_;
};

/// A base given by a presentation: named prime divisors, named invertible
/// functions with known principal divisors, and the action of the real
/// structure on both. Geometric consistency is the caller's assertion.
class PresentedBase {
public:
  struct FuncInfo {
    std::map<std::string, BigInt> divisor; // prime name -> multiplicity
    FunctionWord tau_image;
  };

  PresentedBase() = default;

  void add_prime(const std::string& name, const std::string& tau_name);
  void add_function(const std::string& name, std::map<std::string, BigInt> divisor,
                    FunctionWord tau_image);
  // checks tau_primes is an involution and that for each g,
  // permuting div(g) by tau equals div(tau_image(g))
  void validate() const;

  const std::vector<std::string>& primes() const { return primes_; }
  const std::string& tau_prime(const std::string& name) const;
  const std::map<std::string, FuncInfo>& functions() const { return functions_; }
  bool has_prime(const std::string& name) const { return tau_primes_.count(name) > 0; }

  FunctionWord tau_pullback(const FunctionWord& w) const;

  bool operator==(const PresentedBase& o) const;

private:
  std::vector<std::string> primes_;
  std::map<std::string, std::string> tau_primes_;
  std::map<std::string, FuncInfo> functions_;
};

using Base = std::variant<PointBase, CurveBase, PresentedBase>;
using BasePtr = std::shared_ptr<const Base>;

BasePtr make_base(Base b);
bool same_base(const BasePtr& a, const BasePtr& b);
const CurveBase& as_curve(const Base& b);       // throws UnsupportedBase
const PresentedBase& as_presented(const Base& b);
bool is_point_base(const Base& b);
bool is_curve_base(const Base& b);
std::string base_var(const Base& b); // coordinate name for printing ("z" default)

/// Rational function on the base: a RationalFunction for point and curve
/// bases, a FunctionWord on a presented base.
using BaseFunction = std::variant<RationalFunction, FunctionWord>;

std::string base_function_str(const BaseFunction& h, const Base& b);
BaseFunction base_function_mul(const BaseFunction& a, const BaseFunction& b);
BaseFunction base_function_div(const BaseFunction& a, const BaseFunction& b);
// tau^* h on the given base
BaseFunction tau_pullback(const Base& b, const BaseFunction& h);
bool is_tau_invariant(const Base& b, const BaseFunction& h);

/// Real automorphism z -> alpha z + beta of a curve base with standard
/// conjugation (alpha, beta rational, alpha != 0). On point and presented
/// bases only the identity is available.
struct RealAut {
  Rational alpha{1}, beta{0};

  bool is_identity() const { return alpha == Rational(1) && beta.is_zero(); }
  GaussianRational apply(const GaussianRational& p) const;
  GaussianRational apply_inverse(const GaussianRational& p) const;
  RealAut inverse() const;
  // this after o: z -> this(o(z))
  RealAut compose(const RealAut& o) const;
  Poly as_poly() const; // alpha z + beta
  std::string str(const std::string& var = "z") const;
};

} // namespace phscalc

#endif

#ifndef PHSCALC_CLASSIFIER_HPP
#define PHSCALC_CLASSIFIER_HPP

#include "phscalc/pairs.hpp"

#include <optional>
#include <string>

namespace phscalc {

// sign class of a real constant in R*/R_+; throws NotReal / ZeroH
int h2_class(const GaussianRational& c);

enum class PointCurveClass { Circle, ImaginaryCircle };
PointCurveClass classify_point_pair(const Rational& h); // throws ZeroH

/// Witness of an equivariant isomorphism between two DPD pairs on the
/// same curve base: replaying pair_pullback_twist(psi, f, pair2) gives
/// (D1, residual * h1), with residual the positive non-norm remainder.
struct IsoWitness {
  RealAut psi;
  RationalFunction f;
  Rational residual{1};

  std::string str(const std::string& var = "z") const;
};

struct EquivResult {
  std::optional<IsoWitness> witness;
  std::string obstruction; // set when no witness exists
};

/// Equivariant-isomorphism decision for validated DPD pairs on the same
/// curve base with standard conjugation. Throws UnresolvableSupport when
/// opaque primes block the support matching.
EquivResult pair_equiv_full(const DpdPair& p1, const DpdPair& p2);
std::optional<IsoWitness> pair_equiv(const DpdPair& p1, const DpdPair& p2);

// replays the witness: pair_pullback_twist(psi, f, p2) == (D1, residual*h1)
bool witness_replays(const IsoWitness& w, const DpdPair& p1, const DpdPair& p2);

// explicit real isomorphism chi(z) = u z + v from (A^1, tau) to the
// standard conjugation model; chi o tau = conj o chi
struct StandardModel {
  BasePtr std_base;
  GaussianRational u, v;
};
StandardModel standard_model(const CurveBase& curve);
DpdPair transport_to_standard(const StandardModel& m, const DpdPair& pair);

// true when (D, -h) is NOT equivalent to (D, h): two distinct real forms
bool opposite_form_distinct(const DpdPair& pair);

struct MjResult {
  enum class Kind { Equivalent, NotEquivalent, Undecided } kind;
  Rational c; // set when Equivalent

  std::string str() const;
};

/// Decides P2(z) = c P1(c^2 z) mod z^r for some real c, searching rational
/// c exactly; Undecided when the defining root is irrational but all
/// cross-power consistency checks over R hold.
MjResult mj_equiv(const Poly& p1, const Poly& p2, int r);

} // namespace phscalc

#endif

#ifndef PHSCALC_PAIRS_HPP
#define PHSCALC_PAIRS_HPP

#include "phscalc/segdiv.hpp"

namespace phscalc {

/// Validated proper hyperbolic segmental pair (D, h):
/// h is tau-invariant and tau^*(D) = flip(D) + {1} (x) div(h).
struct PhsPair {
  BasePtr base;
  SegmentalDivisor divisor;
  BaseFunction h;
  Properness properness = Properness::Proper;

  std::string str() const;
};

/// Validated DPD pair (D, h): h tau-invariant, D + tau^*D <= div(h).
struct DpdPair {
  BasePtr base;
  WeilQDivisor divisor;
  BaseFunction h;

  std::string str() const;
};

// throws NotTauInvariant / FlipIdentityFails / ZeroH
PhsPair phs_validate(BasePtr base, SegmentalDivisor d, BaseFunction h);
// throws NotTauInvariant / InequalityFails / ZeroH
DpdPair dpd_validate(BasePtr base, WeilQDivisor d, BaseFunction h);

// D = {1} (x) D+  +  [0,1] (x) (-D+ - D-)  with  D- = tau^*D+ - div(h)
PhsPair dpd_to_seg(const DpdPair& p);
// D+ = D(1)
DpdPair seg_to_dpd(const PhsPair& p);

// (psi^*D - {1} (x) div(f), psi^*h / (f tau^*f)), revalidated
PhsPair pair_pullback_twist(const RealAut& psi, const BaseFunction& f, const PhsPair& p);
DpdPair pair_pullback_twist(const RealAut& psi, const BaseFunction& f, const DpdPair& p);

// psi^*h (composition on curve bases; identity elsewhere)
BaseFunction psi_pullback(const RealAut& psi, const Base& base, const BaseFunction& h);

} // namespace phscalc

#endif

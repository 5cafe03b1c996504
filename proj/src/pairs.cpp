#include "phscalc/pairs.hpp"

#include "phscalc/errors.hpp"

#include <set>

namespace phscalc {

namespace {

void check_h(const Base& base, const BaseFunction& h) {
  if (auto* f = std::get_if<RationalFunction>(&h)) {
    if (f->is_zero()) throw CalcError(Err::ZeroH, "h must be nonzero");
    if (is_point_base(base)) {
      if (!f->is_constant())
        throw CalcError(Err::BadInput, "h on the point base is a constant");
      if (!f->constant_value().is_real())
        throw CalcError(Err::NotTauInvariant, "h on the point base must be real");
      return;
    }
  }
  if (!is_tau_invariant(base, h))
    throw CalcError(Err::NotTauInvariant, "h is not tau-invariant");
}

} // namespace

std::string PhsPair::str() const {
  return "phs(D = " + divisor.str() + ", h = " + base_function_str(h, *base) + ")";
}

std::string DpdPair::str() const {
  return "dpd(D = " + divisor.str(base_var(*base)) + ", h = " + base_function_str(h, *base) + ")";
}

PhsPair phs_validate(BasePtr base, SegmentalDivisor d, BaseFunction h) {
  check_h(*base, h);
  SegmentalDivisor lhs = segdiv_pullback_real(d);
  SegmentalDivisor rhs = segdiv_flip(d) + segdiv_from_integral(base, div_of_function(*base, h));
  if (!(lhs == rhs)) {
    std::set<PrimeDivisor> support;
    for (auto& [p, s] : lhs.terms()) support.insert(p);
    for (auto& [p, s] : rhs.terms()) support.insert(p);
    for (auto& p : support)
      if (!(lhs.segment_at(p) == rhs.segment_at(p)))
        throw CalcError(Err::FlipIdentityFails, "tau^*D != flip(D) + {1}(x)div(h)",
                        p.str(base_var(*base)));
    throw CalcError(Err::FlipIdentityFails, "tau^*D != flip(D) + {1}(x)div(h)");
  }
  Properness props = properness_check(d);
  return PhsPair{std::move(base), std::move(d), std::move(h), props};
}

DpdPair dpd_validate(BasePtr base, WeilQDivisor d, BaseFunction h) {
  check_h(*base, h);
  WeilQDivisor sum = d + tau_pullback(*base, d);
  WeilQDivisor divh = div_of_function(*base, h);
  std::set<PrimeDivisor> support;
  for (auto& [p, c] : sum.terms()) support.insert(p);
  for (auto& [p, c] : divh.terms()) support.insert(p);
  for (auto& p : support)
    if (sum.coeff(p) > divh.coeff(p))
      throw CalcError(Err::InequalityFails, "D + tau^*D <= div(h) fails",
                      p.str(base_var(*base)));
  return DpdPair{std::move(base), std::move(d), std::move(h)};
}

PhsPair dpd_to_seg(const DpdPair& p) {
  // segment at q: [D+(q), D+(q) + E(q)] with E = div(h) - D+ - tau^*D+
  WeilQDivisor excess =
      div_of_function(*p.base, p.h) - p.divisor - tau_pullback(*p.base, p.divisor);
  SegmentalDivisor d(p.base);
  std::set<PrimeDivisor> support;
  for (auto& [q, c] : p.divisor.terms()) support.insert(q);
  for (auto& [q, c] : excess.terms()) support.insert(q);
  for (auto& q : support) {
    Rational lo = p.divisor.coeff(q);
    d.set(q, Segment(lo, lo + excess.coeff(q)));
  }
  return phs_validate(p.base, std::move(d), p.h);
}

DpdPair seg_to_dpd(const PhsPair& p) {
  return dpd_validate(p.base, segdiv_eval(p.divisor, 1), p.h);
}

BaseFunction psi_pullback(const RealAut& psi, const Base& base, const BaseFunction& h) {
  if (auto* f = std::get_if<RationalFunction>(&h)) {
    if (is_point_base(base) || psi.is_identity()) return *f;
    return f->compose(psi.as_poly());
  }
  if (!psi.is_identity())
    throw CalcError(Err::NotAutomorphism, "only the identity acts on a presented base");
  return h;
}

PhsPair pair_pullback_twist(const RealAut& psi, const BaseFunction& f, const PhsPair& p) {
  if (psi.alpha.is_zero()) throw CalcError(Err::NotAutomorphism, "alpha must be nonzero");
  SegmentalDivisor d = segdiv_pullback(psi, p.divisor) +
                       segdiv_from_integral(p.base, -div_of_function(*p.base, f));
  BaseFunction h = psi_pullback(psi, *p.base, p.h);
  BaseFunction denom = base_function_mul(f, tau_pullback(*p.base, f));
  return phs_validate(p.base, std::move(d), base_function_div(h, denom));
}

DpdPair pair_pullback_twist(const RealAut& psi, const BaseFunction& f, const DpdPair& p) {
  if (psi.alpha.is_zero()) throw CalcError(Err::NotAutomorphism, "alpha must be nonzero");
  WeilQDivisor d = psi_pullback(psi, p.divisor) - div_of_function(*p.base, f);
  BaseFunction h = psi_pullback(psi, *p.base, p.h);
  BaseFunction denom = base_function_mul(f, tau_pullback(*p.base, f));
  return dpd_validate(p.base, std::move(d), base_function_div(h, denom));
}

} // namespace phscalc

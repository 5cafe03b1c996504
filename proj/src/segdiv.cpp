#include "phscalc/segdiv.hpp"

#include "phscalc/errors.hpp"

namespace phscalc {

Segment::Segment(Rational a, Rational b) : lo(std::move(a)), hi(std::move(b)) {
  if (lo > hi) throw CalcError(Err::BadInput, "segment needs lo <= hi");
}

std::string Segment::str() const {
  if (is_singleton()) return "{" + lo.str() + "}";
  return "[" + lo.str() + "," + hi.str() + "]";
}

Segment seg_add(const Segment& s, const Segment& t) {
  return Segment(s.lo + t.lo, s.hi + t.hi);
}

Rational ev(long long m, const Segment& s) {
  Rational mm(m);
  return m >= 0 ? mm * s.lo : mm * s.hi;
}

Segment seg_flip(const Segment& s) { return Segment(-s.hi, -s.lo); }

Segment seg_scale_int(const BigInt& n, const Segment& s) {
  Rational r{n};
  if (n >= 0) return Segment(r * s.lo, r * s.hi);
  return Segment(r * s.hi, r * s.lo);
}

std::string properness_str(Properness p) {
  switch (p) {
    case Properness::Proper: return "proper";
    case Properness::AssertedProper: return "asserted-proper";
    case Properness::NotProper: return "not-proper";
  }
  return "?";
}

void SegmentalDivisor::set(const PrimeDivisor& p, const Segment& s) {
  if (s.is_zero()) t_.erase(p);
  else t_[p] = s;
}

Segment SegmentalDivisor::segment_at(const PrimeDivisor& p) const {
  auto it = t_.find(p);
  return it == t_.end() ? Segment() : it->second;
}

SegmentalDivisor SegmentalDivisor::operator+(const SegmentalDivisor& o) const {
  if (base_ && o.base_ && !same_base(base_, o.base_))
    throw CalcError(Err::BadInput, "segmental divisors on different bases");
  SegmentalDivisor r(base_ ? base_ : o.base_);
  for (auto& [p, s] : t_) r.set(p, seg_add(s, o.segment_at(p)));
  for (auto& [p, s] : o.t_)
    if (!t_.count(p)) r.set(p, s);
  return r;
}

bool SegmentalDivisor::operator==(const SegmentalDivisor& o) const {
  return t_ == o.t_ && (!base_ || !o.base_ || same_base(base_, o.base_));
}

std::string SegmentalDivisor::str() const {
  if (t_.empty()) return "0";
  std::string var = base_ ? base_var(*base_) : "z";
  std::string out;
  for (auto& [p, s] : t_) {
    if (!out.empty()) out += " + ";
    out += s.str() + "(" + p.str(var) + ")";
  }
  return out;
}

WeilQDivisor segdiv_eval(const SegmentalDivisor& d, long long m) {
  WeilQDivisor r;
  for (auto& [p, s] : d.terms()) r.set(p, ev(m, s));
  return r;
}

SegmentalDivisor segdiv_flip(const SegmentalDivisor& d) {
  SegmentalDivisor r(d.base());
  for (auto& [p, s] : d.terms()) r.set(p, seg_flip(s));
  return r;
}

SegmentalDivisor segdiv_pullback_real(const SegmentalDivisor& d) {
  if (!d.base()) throw CalcError(Err::BadInput, "divisor without a base");
  SegmentalDivisor r(d.base());
  for (auto& [p, s] : d.terms()) r.set(tau_pullback(*d.base(), p), s);
  return r;
}

SegmentalDivisor segdiv_pullback(const RealAut& psi, const SegmentalDivisor& d) {
  if (psi.alpha.is_zero()) throw CalcError(Err::NotAutomorphism, "alpha must be nonzero");
  SegmentalDivisor r(d.base());
  for (auto& [p, s] : d.terms()) r.set(psi_pullback(psi, p), s);
  return r;
}

SegmentalDivisor segdiv_from_integral(const BasePtr& base, const WeilQDivisor& e) {
  SegmentalDivisor r(base);
  for (auto& [p, c] : e.terms()) {
    if (!c.is_integer())
      throw CalcError(Err::BadInput, "expected an integral divisor");
    r.set(p, Segment::singleton(c));
  }
  return r;
}

Properness properness_check(const SegmentalDivisor& d) {
  if (!d.base() || !std::holds_alternative<PresentedBase>(*d.base()))
    return Properness::Proper;
  return Properness::AssertedProper;
}

} // namespace phscalc

#include "phscalc/divisor.hpp"

#include "phscalc/errors.hpp"

#include <set>

namespace phscalc {

PrimeDivisor PrimeDivisor::point(GaussianRational p) {
  PrimeDivisor d;
  d.kind_ = Kind::Point;
  d.point_ = std::move(p);
  return d;
}

PrimeDivisor PrimeDivisor::opaque(Poly p, std::string name) {
  PrimeDivisor d;
  d.kind_ = Kind::Opaque;
  d.poly_ = p.monic();
  d.name_ = std::move(name);
  return d;
}

PrimeDivisor PrimeDivisor::named(std::string name) {
  PrimeDivisor d;
  d.kind_ = Kind::Named;
  d.name_ = std::move(name);
  return d;
}

bool PrimeDivisor::operator==(const PrimeDivisor& o) const {
  if (kind_ != o.kind_) return false;
  switch (kind_) {
    case Kind::Point: return point_ == o.point_;
    case Kind::Opaque: return poly_ == o.poly_;
    case Kind::Named: return name_ == o.name_;
  }
  return false;
}

std::strong_ordering PrimeDivisor::operator<=>(const PrimeDivisor& o) const {
  if (kind_ != o.kind_)
    return static_cast<int>(kind_) <=> static_cast<int>(o.kind_);
  switch (kind_) {
    case Kind::Point: return point_ <=> o.point_;
    case Kind::Opaque: return poly_ <=> o.poly_;
    case Kind::Named: return name_ <=> o.name_;
  }
  return std::strong_ordering::equal;
}

std::string PrimeDivisor::str(const std::string& var) const {
  switch (kind_) {
    case Kind::Point: return "{" + point_.str() + "}";
    case Kind::Opaque:
      return name_.empty() ? "V(" + poly_.str(var) + ")" : name_;
    case Kind::Named: return name_;
  }
  return "?";
}

// ---- WeilQDivisor ----

Rational WeilQDivisor::coeff(const PrimeDivisor& p) const {
  auto it = t_.find(p);
  return it == t_.end() ? Rational(0) : it->second;
}

void WeilQDivisor::set(const PrimeDivisor& p, const Rational& c) {
  if (c.is_zero()) t_.erase(p);
  else t_[p] = c;
}

WeilQDivisor WeilQDivisor::operator-() const {
  WeilQDivisor r;
  for (auto& [p, c] : t_) r.t_.emplace(p, -c);
  return r;
}

WeilQDivisor& WeilQDivisor::operator+=(const WeilQDivisor& o) {
  for (auto& [p, c] : o.t_) set(p, coeff(p) + c);
  return *this;
}

WeilQDivisor& WeilQDivisor::operator-=(const WeilQDivisor& o) {
  for (auto& [p, c] : o.t_) set(p, coeff(p) - c);
  return *this;
}

WeilQDivisor WeilQDivisor::operator*(const Rational& c) const {
  WeilQDivisor r;
  if (c.is_zero()) return r;
  for (auto& [p, v] : t_) r.t_.emplace(p, v * c);
  return r;
}

bool WeilQDivisor::is_integral() const {
  for (auto& [p, c] : t_)
    if (!c.is_integer()) return false;
  return true;
}

bool WeilQDivisor::leq(const WeilQDivisor& o) const {
  std::set<PrimeDivisor> support;
  for (auto& [p, c] : t_) support.insert(p);
  for (auto& [p, c] : o.t_) support.insert(p);
  for (auto& p : support)
    if (coeff(p) > o.coeff(p)) return false;
  return true;
}

std::string WeilQDivisor::str(const std::string& var) const {
  if (t_.empty()) return "0";
  std::string out;
  for (auto& [p, c] : t_) {
    std::string term;
    if (c == Rational(1)) term = p.str(var);
    else if (c == Rational(-1)) term = "-" + p.str(var);
    else term = c.str() + "*" + p.str(var);
    if (out.empty()) out = term;
    else if (term[0] == '-') out += " - " + term.substr(1);
    else out += " + " + term;
  }
  return out;
}

WeilQDivisor round_down(const WeilQDivisor& d) {
  WeilQDivisor r;
  for (auto& [p, c] : d.terms()) r.set(p, Rational(c.floor()));
  return r;
}

bool div_leq(const WeilQDivisor& a, const WeilQDivisor& b) { return a.leq(b); }

namespace {

WeilQDivisor div_of_poly(const CurveBase& base, const Poly& p) {
  WeilQDivisor out;
  auto lf = factor_linear(p);
  for (auto& [root, mult] : lf.roots)
    out.set(PrimeDivisor::point(root), Rational(mult));
  Poly rem = lf.remainder;
  for (auto& [name, prime] : base.declared_primes()) {
    int mult = 0;
    while (rem.degree() >= prime.degree()) {
      auto [q, r] = divmod(rem, prime);
      if (!r.is_zero()) break;
      rem = q;
      ++mult;
    }
    if (mult > 0) out.set(PrimeDivisor::opaque(prime, name), Rational(mult));
  }
  if (rem.degree() >= 1)
    throw CalcError(Err::UnfactoredInput, "nonlinear factor without a prime declaration",
                    rem.str(base.var()));
  return out;
}

} // namespace

WeilQDivisor div_of_function(const Base& base, const BaseFunction& f) {
  if (auto* rf = std::get_if<RationalFunction>(&f)) {
    if (rf->is_zero()) throw CalcError(Err::BadInput, "div of the zero function");
    if (is_point_base(base)) {
      if (!rf->is_constant())
        throw CalcError(Err::BadInput, "functions on the point base are constants");
      return {};
    }
    const CurveBase& c = as_curve(base);
    return div_of_poly(c, rf->num()) - div_of_poly(c, rf->den());
  }
  const PresentedBase& pb = as_presented(base);
  WeilQDivisor out;
  for (auto& [sym, e] : std::get<FunctionWord>(f).exps()) {
    auto it = pb.functions().find(sym);
    if (it == pb.functions().end())
      throw CalcError(Err::UndeclaredSymbol, "unknown function", sym);
    for (auto& [p, m] : it->second.divisor)
      out.set(PrimeDivisor::named(p), out.coeff(PrimeDivisor::named(p)) + Rational(m * e));
  }
  return out;
}

RationalFunction function_with_divisor(const Base& base, const WeilQDivisor& integral) {
  as_curve(base);
  RationalFunction g(GaussianRational(1));
  for (auto& [p, c] : integral.terms()) {
    if (!c.is_integer())
      throw CalcError(Err::BadInput, "expected an integral divisor");
    long long mult = c.num().convert_to<long long>();
    switch (p.kind()) {
      case PrimeDivisor::Kind::Point:
        g *= RationalFunction(Poly::var() - Poly(p.as_point())).pow(mult);
        break;
      case PrimeDivisor::Kind::Opaque:
        g *= RationalFunction(p.as_poly()).pow(mult);
        break;
      case PrimeDivisor::Kind::Named:
        throw CalcError(Err::UnresolvableSupport, "named primes are not resolvable", p.name());
    }
  }
  return g;
}

PrimeDivisor tau_pullback(const Base& base, const PrimeDivisor& p) {
  switch (p.kind()) {
    case PrimeDivisor::Kind::Point:
      return PrimeDivisor::point(as_curve(base).tau_point(p.as_point()));
    case PrimeDivisor::Kind::Opaque: {
      const CurveBase& c = as_curve(base);
      Poly img = c.tau_pullback(p.as_poly()).monic();
      std::string name;
      for (auto& [n, q] : c.declared_primes())
        if (q == img) { name = n; break; }
      return PrimeDivisor::opaque(std::move(img), std::move(name));
    }
    case PrimeDivisor::Kind::Named:
      return PrimeDivisor::named(as_presented(base).tau_prime(p.name()));
  }
  throw CalcError(Err::BadInput, "bad prime divisor");
}

WeilQDivisor tau_pullback(const Base& base, const WeilQDivisor& d) {
  WeilQDivisor r;
  for (auto& [p, c] : d.terms()) r.set(tau_pullback(base, p), c);
  return r;
}

PrimeDivisor psi_pullback(const RealAut& psi, const PrimeDivisor& p) {
  if (psi.alpha.is_zero()) throw CalcError(Err::NotAutomorphism, "alpha must be nonzero");
  switch (p.kind()) {
    case PrimeDivisor::Kind::Point:
      return PrimeDivisor::point(psi.apply_inverse(p.as_point()));
    case PrimeDivisor::Kind::Opaque:
      return PrimeDivisor::opaque(p.as_poly().compose(psi.as_poly()).monic(), p.name());
    case PrimeDivisor::Kind::Named:
      if (!psi.is_identity())
        throw CalcError(Err::NotAutomorphism, "only the identity acts on named primes");
      return p;
  }
  throw CalcError(Err::BadInput, "bad prime divisor");
}

WeilQDivisor psi_pullback(const RealAut& psi, const WeilQDivisor& d) {
  WeilQDivisor r;
  for (auto& [p, c] : d.terms()) r.set(psi_pullback(psi, p), c);
  return r;
}

} // namespace phscalc

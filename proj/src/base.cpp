#include "phscalc/base.hpp"

#include "phscalc/errors.hpp"

#include <algorithm>

namespace phscalc {

// ---- FunctionWord ----

FunctionWord::FunctionWord(const std::string& symbol, long long e) {
  if (e != 0) e_[symbol] = e;
}

FunctionWord& FunctionWord::operator*=(const FunctionWord& o) {
  for (auto& [s, e] : o.e_) {
    auto it = e_.find(s);
    if (it == e_.end()) {
      e_.emplace(s, e);
    } else {
      it->second += e;
      if (it->second == 0) e_.erase(it);
    }
  }
  return *this;
}

FunctionWord FunctionWord::inv() const {
  FunctionWord r;
  for (auto& [s, e] : e_) r.e_.emplace(s, -e);
  return r;
}

FunctionWord FunctionWord::pow(long long e) const {
  FunctionWord r;
  if (e == 0) return r;
  for (auto& [s, k] : e_) r.e_.emplace(s, k * e);
  return r;
}

std::string FunctionWord::str() const {
  if (e_.empty()) return "1";
  std::string out;
  for (auto& [s, e] : e_) {
    if (!out.empty()) out += "*";
    out += s;
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

// ---- CurveBase ----

CurveBase::CurveBase() : a_(1), b_(0), var_("z") {}

CurveBase::CurveBase(GaussianRational a, GaussianRational b, std::string var)
    : a_(std::move(a)), b_(std::move(b)), var_(std::move(var)) {
  if (!((a_ * a_.conj()) == GaussianRational(1)))
    throw CalcError(Err::BadInput, "real structure needs a*conj(a) = 1");
  if (!((a_ * b_.conj() + b_).is_zero()))
    throw CalcError(Err::BadInput, "real structure needs a*conj(b) + b = 0");
}

bool CurveBase::is_standard_conjugation() const {
  return a_ == GaussianRational(1) && b_.is_zero();
}

GaussianRational CurveBase::tau_point(const GaussianRational& p) const {
  return a_ * p.conj() + b_;
}

Poly CurveBase::tau_pullback(const Poly& p) const {
  Poly conjP = p.conj_coeffs();
  if (is_standard_conjugation()) return conjP;
  Poly inner = Poly::var() * Poly(a_.conj()) + Poly(b_.conj());
  return conjP.compose(inner);
}

RationalFunction CurveBase::tau_pullback(const RationalFunction& f) const {
  return RationalFunction(tau_pullback(f.num()), tau_pullback(f.den()));
}

void CurveBase::declare_prime(const std::string& name, const Poly& p) {
  if (p.degree() < 2)
    throw CalcError(Err::BadInput, "declared primes must be nonlinear", name);
  Poly m = p.monic();
  auto lf = factor_linear(m);
  if (!lf.roots.empty())
    throw CalcError(Err::BadInput, "declared prime has Q(i) roots", name);
  primes_.emplace_back(name, std::move(m));
}

// ---- PresentedBase ----

void PresentedBase::add_prime(const std::string& name, const std::string& tau_name) {
  if (tau_primes_.count(name))
    throw CalcError(Err::BadInput, "prime already declared", name);
  primes_.push_back(name);
  tau_primes_.emplace(name, tau_name);
}

void PresentedBase::add_function(const std::string& name, std::map<std::string, BigInt> divisor,
                                 FunctionWord tau_image) {
  for (auto& [p, m] : divisor)
    if (!tau_primes_.count(p))
      throw CalcError(Err::UndeclaredSymbol, "unknown prime in divisor", p);
  functions_.emplace(name, FuncInfo{std::move(divisor), std::move(tau_image)});
}

const std::string& PresentedBase::tau_prime(const std::string& name) const {
  auto it = tau_primes_.find(name);
  if (it == tau_primes_.end())
    throw CalcError(Err::UndeclaredSymbol, "unknown prime", name);
  return it->second;
}

void PresentedBase::validate() const {
  for (auto& [p, q] : tau_primes_) {
    auto it = tau_primes_.find(q);
    if (it == tau_primes_.end())
      throw CalcError(Err::UndeclaredSymbol, "tau image not declared", q);
    if (it->second != p)
      throw CalcError(Err::BadInput, "tau on primes is not an involution", p);
  }
  for (auto& [g, info] : functions_) {
    // div(tau_image) must equal the tau-permutation of div(g)
    std::map<std::string, BigInt> lhs;
    for (auto& [p, m] : info.divisor) {
      auto& q = tau_primes_.at(p);
      lhs[q] += m;
      if (lhs[q] == 0) lhs.erase(q);
    }
    std::map<std::string, BigInt> rhs;
    for (auto& [sym, e] : info.tau_image.exps()) {
      auto it = functions_.find(sym);
      if (it == functions_.end())
        throw CalcError(Err::UndeclaredSymbol, "tau image uses unknown function", sym);
      for (auto& [p, m] : it->second.divisor) {
        rhs[p] += m * e;
        if (rhs[p] == 0) rhs.erase(p);
      }
    }
    if (lhs != rhs)
      throw CalcError(Err::BadInput, "tau image divisor mismatch for function", g);
  }
}

FunctionWord PresentedBase::tau_pullback(const FunctionWord& w) const {
  FunctionWord out;
  for (auto& [sym, e] : w.exps()) {
    auto it = functions_.find(sym);
    if (it == functions_.end())
      throw CalcError(Err::UndeclaredSymbol, "unknown function", sym);
    out *= it->second.tau_image.pow(e);
  }
  return out;
}

bool PresentedBase::operator==(const PresentedBase& o) const {
  if (primes_ != o.primes_ || tau_primes_ != o.tau_primes_) return false;
  if (functions_.size() != o.functions_.size()) return false;
  for (auto it1 = functions_.begin(), it2 = o.functions_.begin(); it1 != functions_.end();
       ++it1, ++it2) {
    if (it1->first != it2->first || it1->second.divisor != it2->second.divisor ||
        !(it1->second.tau_image == it2->second.tau_image))
      return false;
  }
  return true;
}

// ---- Base helpers ----

BasePtr make_base(Base b) { return std::make_shared<const Base>(std::move(b)); }

bool same_base(const BasePtr& a, const BasePtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

const CurveBase& as_curve(const Base& b) {
  if (auto* c = std::get_if<CurveBase>(&b)) return *c;
  throw CalcError(Err::UnsupportedBase, "operation requires a curve base");
}

const PresentedBase& as_presented(const Base& b) {
  if (auto* p = std::get_if<PresentedBase>(&b)) return *p;
  throw CalcError(Err::UnsupportedBase, "operation requires a presented base");
}

bool is_point_base(const Base& b) { return std::holds_alternative<PointBase>(b); }
bool is_curve_base(const Base& b) { return std::holds_alternative<CurveBase>(b); }

std::string base_var(const Base& b) {
  if (auto* c = std::get_if<CurveBase>(&b)) return c->var();
  return "z";
}

std::string base_function_str(const BaseFunction& h, const Base& b) {
  if (auto* f = std::get_if<RationalFunction>(&h)) return f->str(base_var(b));
  return std::get<FunctionWord>(h).str();
}

BaseFunction base_function_mul(const BaseFunction& a, const BaseFunction& b) {
  if (a.index() != b.index()) throw CalcError(Err::BadInput, "mixed function kinds");
  if (auto* f = std::get_if<RationalFunction>(&a))
    return *f * std::get<RationalFunction>(b);
  return std::get<FunctionWord>(a) * std::get<FunctionWord>(b);
}

BaseFunction base_function_div(const BaseFunction& a, const BaseFunction& b) {
  if (a.index() != b.index()) throw CalcError(Err::BadInput, "mixed function kinds");
  if (auto* f = std::get_if<RationalFunction>(&a))
    return *f / std::get<RationalFunction>(b);
  return std::get<FunctionWord>(a) * std::get<FunctionWord>(b).inv();
}

BaseFunction tau_pullback(const Base& b, const BaseFunction& h) {
  if (auto* f = std::get_if<RationalFunction>(&h)) {
    if (is_point_base(b)) return f->conj_coeffs();
    return as_curve(b).tau_pullback(*f);
  }
  return as_presented(b).tau_pullback(std::get<FunctionWord>(h));
}

bool is_tau_invariant(const Base& b, const BaseFunction& h) {
  if (auto* f = std::get_if<RationalFunction>(&h)) {
    if (is_point_base(b) && !f->is_constant()) return false;
    return tau_pullback(b, h) == h;
  }
  return tau_pullback(b, h) == h;
}

// ---- RealAut ----

GaussianRational RealAut::apply(const GaussianRational& p) const {
  return GaussianRational(alpha) * p + GaussianRational(beta);
}

GaussianRational RealAut::apply_inverse(const GaussianRational& p) const {
  return (p - GaussianRational(beta)) / GaussianRational(alpha);
}

RealAut RealAut::inverse() const {
  if (alpha.is_zero()) throw CalcError(Err::NotAutomorphism, "alpha must be nonzero");
  return RealAut{alpha.inv(), -beta / alpha};
}

RealAut RealAut::compose(const RealAut& o) const {
  return RealAut{alpha * o.alpha, alpha * o.beta + beta};
}

Poly RealAut::as_poly() const {
  return Poly::var() * Poly(GaussianRational(alpha)) + Poly(GaussianRational(beta));
}

std::string RealAut::str(const std::string& var) const {
  return var + " -> " + as_poly().str(var);
}

} // namespace phscalc

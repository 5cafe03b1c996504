#include "phscalc/classifier.hpp"

#include "phscalc/errors.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace phscalc {

int h2_class(const GaussianRational& c) {
  if (c.is_zero()) throw CalcError(Err::ZeroH, "class of zero");
  if (!c.is_real()) throw CalcError(Err::NotReal, "class of a non-real constant");
  return c.re().sign();
}

PointCurveClass classify_point_pair(const Rational& h) {
  if (h.is_zero()) throw CalcError(Err::ZeroH, "h must be nonzero");
  return h.sign() > 0 ? PointCurveClass::Circle : PointCurveClass::ImaginaryCircle;
}

std::string IsoWitness::str(const std::string& var) const {
  return "psi: " + psi.str(var) + ", f = " + f.str(var) + ", residual = " + residual.str();
}

std::string MjResult::str() const {
  switch (kind) {
    case Kind::Equivalent: return "equivalent, c = " + c.str();
    case Kind::NotEquivalent: return "not equivalent";
    case Kind::Undecided: return "undecided over Q (consistent over R, irrational c)";
  }
  return "?";
}

namespace {

struct Signature {
  Rational frac, excess;
  bool operator==(const Signature&) const = default;
  auto operator<=>(const Signature&) const = default;
};

struct Reduced {
  WeilQDivisor d;       // purely fractional part
  RationalFunction h;
  RationalFunction g;   // reduction twist applied to the original pair
  WeilQDivisor excess;  // div(h) - D - tau^*D, effective
  std::map<GaussianRational, Signature> config;
};

const RationalFunction& curve_h(const DpdPair& p) {
  auto* f = std::get_if<RationalFunction>(&p.h);
  if (!f) throw CalcError(Err::UnsupportedBase, "curve pairs carry rational-function h");
  return *f;
}

Reduced reduce(const DpdPair& p) {
  Reduced r;
  r.g = function_with_divisor(*p.base, round_down(p.divisor));
  DpdPair reduced = pair_pullback_twist(RealAut{}, BaseFunction(r.g), p);
  r.d = reduced.divisor;
  r.h = curve_h(reduced);
  WeilQDivisor divh;
  try {
    divh = div_of_function(*reduced.base, reduced.h);
  } catch (const CalcError& e) {
    if (e.kind() == Err::UnfactoredInput)
      throw CalcError(Err::UnresolvableSupport, "div(h) does not factor", e.witness());
    throw;
  }
  r.excess = divh - r.d - tau_pullback(*reduced.base, r.d);
  auto note = [&](const PrimeDivisor& q, bool fromD) {
    if (q.kind() != PrimeDivisor::Kind::Point)
      throw CalcError(Err::UnresolvableSupport, "opaque prime in the matching support",
                      q.str());
    auto& sig = r.config[q.as_point()];
    if (fromD) sig.frac = r.d.coeff(q);
    else sig.excess = r.excess.coeff(q);
  };
  for (auto& [q, c] : r.d.terms()) note(q, true);
  for (auto& [q, c] : r.excess.terms()) note(q, false);
  return r;
}

std::optional<Rational> rational_kth_root(const Rational& x, long long k) {
  if (k <= 0) return std::nullopt;
  if (k % 2 == 0 && x.sign() < 0) return std::nullopt;
  auto n = nth_root_exact(x.num(), static_cast<unsigned>(k));
  auto d = nth_root_exact(x.den(), static_cast<unsigned>(k));
  if (!n || !d) return std::nullopt;
  return Rational(*n, *d);
}

IsoWitness assemble_witness(const RealAut& psi, const Rational& c, const Reduced& r1,
                            const Reduced& r2) {
  NormSplit split = norm_split(c);
  RationalFunction f = RationalFunction(split.mu) * r2.g.compose(psi.as_poly()) / r1.g;
  return IsoWitness{psi, std::move(f), split.residue};
}

EquivResult try_candidates(const std::vector<RealAut>& candidates, const Reduced& r1,
                           const Reduced& r2) {
  std::string obstruction = "no support matching produced a real automorphism";
  for (const RealAut& psi : candidates) {
    if (!(psi_pullback(psi, r2.d) == r1.d)) continue;
    if (!(psi_pullback(psi, r2.excess) == r1.excess)) continue;
    RationalFunction ratio = r2.h.compose(psi.as_poly()) / r1.h;
    if (!ratio.is_constant()) continue;
    GaussianRational c = ratio.constant_value();
    if (h2_class(c) > 0) {
      EquivResult res;
      res.witness = assemble_witness(psi, c.re(), r1, r2);
      return res;
    }
    obstruction = "residual sign -1 (psi: " + psi.str() + ")";
  }
  return {std::nullopt, obstruction};
}

EquivResult one_point_case(const Reduced& r1, const Reduced& r2) {
  auto [p, sig1] = *r1.config.begin();
  auto [q, sig2] = *r2.config.begin();
  if (!(sig1 == sig2)) return {std::nullopt, "support signatures differ"};
  if (!p.is_real() || !q.is_real())
    throw CalcError(Err::OnePointFamily, "non-real one-point configuration");

  Rational ordQ = sig1.frac * Rational(2) + sig1.excess; // ord of h at the point
  if (!ordQ.is_integer() || ordQ.sign() <= 0)
    throw CalcError(Err::OnePointFamily, "unexpected order at the configuration point");
  long long k = ordQ.num().convert_to<long long>();

  RationalFunction lin1(Poly::var() - Poly(GaussianRational(p.re())));
  RationalFunction lin2(Poly::var() - Poly(GaussianRational(q.re())));
  RationalFunction c1 = r1.h / lin1.pow(k);
  RationalFunction c2 = r2.h / lin2.pow(k);
  if (!c1.is_constant() || !c2.is_constant())
    throw CalcError(Err::OnePointFamily, "h is not supported at the configuration point");
  Rational gamma1 = c1.constant_value().re(), gamma2 = c2.constant_value().re();

  auto finish = [&](const Rational& alpha) {
    RealAut psi{alpha, q.re() - alpha * p.re()};
    Rational c = gamma2 * alpha.pow(k) / gamma1;
    EquivResult res;
    res.witness = assemble_witness(psi, c, r1, r2);
    return res;
  };

  // alpha with c(alpha) = gamma2 alpha^k / gamma1 = 1 when a rational root exists
  if (auto alpha = rational_kth_root(gamma1 / gamma2, k)) return finish(*alpha);
  Rational base_c = gamma2 / gamma1;
  if (base_c.sign() > 0) return finish(Rational(1));
  if (k % 2 == 1) return finish(Rational(-1));
  return {std::nullopt, "residual sign -1 on the one-point family"};
}

} // namespace

EquivResult pair_equiv_full(const DpdPair& p1, const DpdPair& p2) {
  if (!same_base(p1.base, p2.base))
    throw CalcError(Err::BadInput, "pairs live on different bases");
  const CurveBase& cb = as_curve(*p1.base);
  if (!cb.is_standard_conjugation())
    throw CalcError(Err::UnsupportedBase,
                    "normalize to the standard conjugation first (standard_model)");

  Reduced r1 = reduce(p1), r2 = reduce(p2);

  std::multiset<Signature> s1, s2;
  for (auto& [pt, s] : r1.config) s1.insert(s);
  for (auto& [pt, s] : r2.config) s2.insert(s);
  if (s1 != s2) return {std::nullopt, "support signatures differ"};

  if (r1.config.size() == 1) return one_point_case(r1, r2);

  std::vector<RealAut> candidates;
  if (r1.config.empty()) {
    candidates.push_back(RealAut{});
  } else {
    auto it = r1.config.begin();
    const auto [pA, sigA] = *it;
    ++it;
    const auto [pB, sigB] = *it;
    std::set<std::pair<Rational, Rational>> seen;
    for (auto& [qA, sA] : r2.config) {
      if (!(sA == sigA)) continue;
      for (auto& [qB, sB] : r2.config) {
        if (qB == qA || !(sB == sigB)) continue;
        GaussianRational alpha = (qA - qB) / (pA - pB);
        GaussianRational beta = qA - alpha * pA;
        if (!alpha.is_real() || !beta.is_real() || alpha.is_zero()) continue;
        if (seen.emplace(alpha.re(), beta.re()).second)
          candidates.push_back(RealAut{alpha.re(), beta.re()});
      }
    }
  }
  return try_candidates(candidates, r1, r2);
}

std::optional<IsoWitness> pair_equiv(const DpdPair& p1, const DpdPair& p2) {
  return pair_equiv_full(p1, p2).witness;
}

bool witness_replays(const IsoWitness& w, const DpdPair& p1, const DpdPair& p2) {
  DpdPair replay = pair_pullback_twist(w.psi, BaseFunction(w.f), p2);
  if (!(replay.divisor == p1.divisor)) return false;
  return curve_h(replay) == curve_h(p1) * RationalFunction(GaussianRational(w.residual));
}

StandardModel standard_model(const CurveBase& curve) {
  GaussianRational a = curve.tau_a(), b = curve.tau_b();
  GaussianRational u =
      a == GaussianRational(-1) ? GaussianRational::i() : GaussianRational(1) + a.conj();
  GaussianRational v = -(u * b) / GaussianRational(2);
  CurveBase std_curve(GaussianRational(1), GaussianRational(0), curve.var());
  // transport declared primes along chi^{-1}
  Poly inner = (Poly::var() - Poly(v)) * Poly(u.inv());
  for (auto& [name, q] : curve.declared_primes())
    std_curve.declare_prime(name, q.compose(inner).monic());
  return StandardModel{make_base(std_curve), u, v};
}

DpdPair transport_to_standard(const StandardModel& m, const DpdPair& pair) {
  Poly inner = (Poly::var() - Poly(m.v)) * Poly(m.u.inv()); // chi^{-1}
  WeilQDivisor d;
  for (auto& [p, c] : pair.divisor.terms()) {
    switch (p.kind()) {
      case PrimeDivisor::Kind::Point:
        d.set(PrimeDivisor::point(m.u * p.as_point() + m.v), c);
        break;
      case PrimeDivisor::Kind::Opaque:
        d.set(PrimeDivisor::opaque(p.as_poly().compose(inner).monic(), p.name()), c);
        break;
      case PrimeDivisor::Kind::Named:
        throw CalcError(Err::UnsupportedBase, "presented bases have no standard model");
    }
  }
  RationalFunction h = curve_h(pair).compose(inner);
  return dpd_validate(m.std_base, std::move(d), BaseFunction(std::move(h)));
}

bool opposite_form_distinct(const DpdPair& pair) {
  if (is_point_base(*pair.base)) return true; // the sign class always separates
  DpdPair neg = dpd_validate(pair.base, pair.divisor, BaseFunction(-curve_h(pair)));
  return !pair_equiv(pair, neg).has_value();
}

MjResult mj_equiv(const Poly& p1, const Poly& p2, int r) {
  if (r < 1) throw CalcError(Err::BadInput, "r must be >= 1");
  if (!p1.has_real_coeffs() || !p2.has_real_coeffs())
    throw CalcError(Err::NotReal, "mj_equiv needs real polynomials");

  auto coeff = [](const Poly& p, int k) { return p.coeff(k).re(); };

  int k0 = -1;
  for (int k = 0; k < r; ++k)
    if (!coeff(p1, k).is_zero()) { k0 = k; break; }

  if (k0 < 0) {
    for (int k = 0; k < r; ++k)
      if (!coeff(p2, k).is_zero()) return {MjResult::Kind::NotEquivalent, Rational(0)};
    return {MjResult::Kind::Equivalent, Rational(1)}; // any c works
  }

  for (int k = 0; k < k0; ++k)
    if (!coeff(p2, k).is_zero()) return {MjResult::Kind::NotEquivalent, Rational(0)};
  if (coeff(p2, k0).is_zero()) return {MjResult::Kind::NotEquivalent, Rational(0)};

  long long n = 2LL * k0 + 1;
  Rational t = coeff(p2, k0) / coeff(p1, k0); // c^n = t

  // cross-power consistency of the remaining congruence coefficients over R
  for (int k = k0 + 1; k < r; ++k) {
    Rational a = coeff(p1, k), b = coeff(p2, k);
    if (a.is_zero()) {
      if (!b.is_zero()) return {MjResult::Kind::NotEquivalent, Rational(0)};
      continue;
    }
    if (b.is_zero()) return {MjResult::Kind::NotEquivalent, Rational(0)};
    if (!((b / a).pow(n) == t.pow(2LL * k + 1)))
      return {MjResult::Kind::NotEquivalent, Rational(0)};
  }

  if (auto c = rational_kth_root(t, n)) return {MjResult::Kind::Equivalent, *c};
  return {MjResult::Kind::Undecided, Rational(0)};
}

} // namespace phscalc

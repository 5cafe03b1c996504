#include "phscalc/graded.hpp"

#include "phscalc/errors.hpp"

#include <algorithm>

namespace phscalc {

RationalFunction substitute(const Poly& f, const RationalFunction& inner) {
  RationalFunction acc;
  for (size_t i = f.coeffs().size(); i-- > 0;)
    acc = acc * inner + RationalFunction(f.coeffs()[i]);
  return acc;
}

RationalFunction substitute(const RationalFunction& f, const RationalFunction& inner) {
  return substitute(f.num(), inner) / substitute(f.den(), inner);
}

const RationalFunction& GradedSlice::g(int m) const {
  auto it = gens.find(m);
  if (it == gens.end())
    throw CalcError(Err::BadInput, "degree outside slice range");
  return it->second;
}

RationalFunction InvolutionData::apply(int m, const RationalFunction& g) const {
  RationalFunction img = is_point_base(*base) ? g.conj_coeffs() : as_curve(*base).tau_pullback(g);
  return h.pow(m) * img;
}

RationalFunction section_generator(const Base& base, const WeilQDivisor& e) {
  if (is_point_base(base)) {
    if (!e.is_zero()) throw CalcError(Err::BadInput, "nonzero divisor on the point base");
    return RationalFunction(GaussianRational(1));
  }
  const CurveBase& curve = as_curve(base);
  (void)curve;
  RationalFunction g(GaussianRational(1));
  for (auto& [p, c] : round_down(e).terms()) {
    long long mult = -c.num().convert_to<long long>();
    switch (p.kind()) {
      case PrimeDivisor::Kind::Point: {
        RationalFunction lin(Poly::var() - Poly(p.as_point()));
        g *= lin.pow(mult);
        break;
      }
      case PrimeDivisor::Kind::Opaque:
        g *= RationalFunction(p.as_poly()).pow(mult);
        break;
      case PrimeDivisor::Kind::Named:
        throw CalcError(Err::UnsupportedBase, "section generators need a curve base");
    }
  }
  return g;
}

std::pair<GradedSlice, InvolutionData> build_graded(const PhsPair& pair, int m_max) {
  if (!is_point_base(*pair.base) && !is_curve_base(*pair.base))
    throw CalcError(Err::UnsupportedBase, "graded rings are built over point and curve bases");
  auto* hf = std::get_if<RationalFunction>(&pair.h);
  if (!hf) throw CalcError(Err::UnsupportedBase, "graded rings need a rational-function h");

  GradedSlice slice{pair, m_max, {}};
  for (int m = -m_max; m <= m_max; ++m)
    slice.gens.emplace(m, section_generator(*pair.base, segdiv_eval(pair.divisor, m)));

  InvolutionData inv{pair.base, *hf, m_max};

  // sigma^*(A_m) = A_{-m} and involutivity, checked on the generators
  for (int m = -m_max; m <= m_max; ++m) {
    const RationalFunction& gm = slice.g(m);
    RationalFunction img = inv.apply(m, gm);
    RationalFunction ratio = img / slice.g(-m);
    if (!ratio.is_polynomial())
      throw CalcError(Err::InvolutionFails, "sigma^* image leaves the opposite piece",
                      "m=" + std::to_string(m));
    if (!(inv.apply(-m, img) == gm))
      throw CalcError(Err::InvolutionFails, "tau_{-m} tau_m != id", "m=" + std::to_string(m));
  }
  return {std::move(slice), std::move(inv)};
}

bool hyperbolicity_check(const GradedSlice& slice) {
  for (int m = -slice.m_max; m <= slice.m_max; ++m) {
    auto it = slice.gens.find(m);
    if (it == slice.gens.end() || it->second.is_zero()) return false;
  }
  return true;
}

int generation_degree(const PhsPair& pair, int bound) {
  as_curve(*pair.base); // curve bases only
  auto gen = [&](long long m) {
    return section_generator(*pair.base, segdiv_eval(pair.divisor, m));
  };
  for (int d = 1; d <= bound; ++d) {
    RationalFunction gp = gen(d), gn = gen(-d);
    bool ok = true;
    int mtop = std::max(2, bound / d); // always probe at least one composite degree
    for (int m = 2; m <= mtop && ok; ++m) {
      if (!(gen(static_cast<long long>(d) * m) == gp.pow(m))) ok = false;
      if (ok && !(gen(-static_cast<long long>(d) * m) == gn.pow(m))) ok = false;
    }
    if (ok) return d;
  }
  throw CalcError(Err::BoundExceeded,
                  "no generation degree found up to " + std::to_string(bound));
}

std::vector<RationalFunction> ah_center_ideal(const PhsPair& pair, int d) {
  as_curve(*pair.base);
  RationalFunction prod = section_generator(*pair.base, segdiv_eval(pair.divisor, d)) *
                          section_generator(*pair.base, segdiv_eval(pair.divisor, -d));
  if (!prod.is_polynomial())
    throw CalcError(Err::BadInput, "center ideal generator is not regular");
  return {prod};
}

PointCurvePresentation point_invariants(const Rational& h) {
  if (h.is_zero()) throw CalcError(Err::ZeroH, "h must be nonzero");
  PointCurvePresentation out;
  out.circle = h.sign() > 0;
  out.scale_square = h.abs();

  // after the formal rescale t = z / sqrt(|h|), sigma^*(t) = sign(h) / t
  RationalFunction t = RationalFunction::var();
  RationalFunction tInv = t.inv();
  GaussianRational eps(out.circle ? 1 : -1);
  auto sigma = [&](const RationalFunction& f) {
    return substitute(f.conj_coeffs(), RationalFunction(Poly(eps), Poly::var()));
  };

  GaussianRational half(Rational(BigInt(1), BigInt(2)));
  GaussianRational halfOverI = GaussianRational(half) / GaussianRational::i();
  RationalFunction one(GaussianRational(1));

  if (out.circle) {
    out.gen_names[0] = "x";
    out.gen_names[1] = "y";
    out.gens[0] = (t + tInv) * RationalFunction(half);
    out.gens[1] = (t - tInv) * RationalFunction(halfOverI);
    RationalFunction rel = out.gens[0] * out.gens[0] + out.gens[1] * out.gens[1] - one;
    out.relation = "x^2+y^2-1";
    out.relation_verified = rel.is_zero();
  } else {
    out.gen_names[0] = "u";
    out.gen_names[1] = "v";
    out.gens[0] = (t - tInv) * RationalFunction(half);
    out.gens[1] = (t + tInv) * RationalFunction(halfOverI);
    RationalFunction rel = out.gens[0] * out.gens[0] + out.gens[1] * out.gens[1] + one;
    out.relation = "u^2+v^2+1";
    out.relation_verified = rel.is_zero();
  }
  out.invariance_verified = sigma(out.gens[0]) == out.gens[0] && sigma(out.gens[1]) == out.gens[1];
  return out;
}

std::string graded_table(const GradedSlice& slice, const InvolutionData& inv) {
  std::string var = base_var(*slice.pair.base);
  std::string out = "  m    g_m    tau_m(g_m)\n";
  for (int m = -slice.m_max; m <= slice.m_max; ++m) {
    const RationalFunction& gm = slice.g(m);
    out += "  " + std::to_string(m) + "    " + gm.str(var) + "    " +
           inv.apply(m, gm).str(var) + "\n";
  }
  return out;
}

} // namespace phscalc

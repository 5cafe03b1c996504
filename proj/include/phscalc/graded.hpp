#ifndef PHSCALC_GRADED_HPP
#define PHSCALC_GRADED_HPP

#include "phscalc/pairs.hpp"

#include <map>
#include <vector>

namespace phscalc {

// f(inner) with a rational-function argument
RationalFunction substitute(const Poly& f, const RationalFunction& inner);
RationalFunction substitute(const RationalFunction& f, const RationalFunction& inner);

/// Finite slice of the graded ring A = (+)_m Gamma(Y, O(D(m))).
/// On a curve base each piece is g_m * C[z]; on the point base every
/// generator is 1.
struct GradedSlice {
  PhsPair pair;
  int m_max = 0;
  std::map<int, RationalFunction> gens;

  const RationalFunction& g(int m) const;
};

/// The maps tau_m^*: g -> h^m tau^*(g).
struct InvolutionData {
  BasePtr base;
  RationalFunction h;
  int m_max = 0;

  RationalFunction apply(int m, const RationalFunction& g) const;
};

// monic g with div(g) = -floor(E); Gamma(O(E)) = g C[z]
RationalFunction section_generator(const Base& base, const WeilQDivisor& e);

// slices for |m| <= m_max; checks sigma^* sigma^* = id and
// sigma^*(A_m) = A_{-m} on the generators
std::pair<GradedSlice, InvolutionData> build_graded(const PhsPair& pair, int m_max);

// every piece in range is nonzero
bool hyperbolicity_check(const GradedSlice& slice);

// least d <= bound with (+)_m A_{dm} generated by A_{+-d}; throws BoundExceeded
int generation_degree(const PhsPair& pair, int bound);

// generators of <A_d * A_{-d}> in A_0; single monic generator on a curve base
std::vector<RationalFunction> ah_center_ideal(const PhsPair& pair, int d);

/// Presentation of the real curve attached to a point-base pair, in the
/// coordinate t rescaled by sqrt(|h|).
struct PointCurvePresentation {
  bool circle = false;          // sign of h
  Rational scale_square;        // |h|
  std::string gen_names[2];
  RationalFunction gens[2];     // Laurent expressions in t
  std::string relation;
  bool relation_verified = false;
  bool invariance_verified = false;
};

PointCurvePresentation point_invariants(const Rational& h); // throws ZeroH

// per-degree report table: m, g_m, tau_m^*(g_m)
std::string graded_table(const GradedSlice& slice, const InvolutionData& inv);

} // namespace phscalc

#endif

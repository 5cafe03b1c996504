#ifndef PHSCALC_SYMBOLIC_HPP
#define PHSCALC_SYMBOLIC_HPP

#include "phscalc/mpoly.hpp"
#include "phscalc/poly.hpp"

#include <array>
#include <string>
#include <vector>

namespace phscalc {

// Q[a,b,x,y] with the hyperbolic grading by weights (2,-2,n,-n), n = 2r+1.
inline std::vector<long long> mj_weights(int r) {
  long long n = 2LL * r + 1;
  return {2, -2, n, -n};
}
inline const std::vector<std::string>& mj_names() {
  static const std::vector<std::string> names{"a", "b", "x", "y"};
  return names;
}

struct Mat2 {
  MPoly m11, m12, m21, m22;
  Mat2() : m11(4), m12(4), m21(4), m22(4) {}
};

// the SL2(C[a,b]) matrix attached to a real polynomial P and r >= 1
Mat2 build_MP(const Poly& p, int r);
MPoly mat2_det(const Mat2& m);

/// Endomorphism of Q[a,b,x,y] given by variable images; `antilinear`
/// records composition with coefficient conjugation (trivial over Q).
struct Endo4 {
  std::array<MPoly, 4> images{MPoly(4), MPoly(4), MPoly(4), MPoly(4)};
  bool antilinear = false;

  MPoly apply(const MPoly& f) const;
  // comorphism composition: (this o inner)(f) = this(inner(f))
  Endo4 after(const Endo4& inner) const;
};

// the involution (a,b,x,y) -> (b,a,y,x) composed with conjugation
Endo4 swap_conjugation();
// comorphism of the automorphism given by M_P acting on (x, y)
Endo4 phiP_endo(const Poly& p, int r);
// sigma_P = phi_P after the swap-conjugation (variety maps); flipping the
// order gives the negative control that must fail the involution check
Endo4 build_sigmaP(const Poly& p, int r, bool order_flipped = false);
bool is_involution(const Endo4& e);
// images of weight-m semi-invariants land in weight -m
bool sends_weights_to_opposite(const Endo4& e, int r);

struct HpReport {
  bool ok = false;
  MPoly difference{4};
};
// s sigma_P^*(s) with s = b^r x against z^r((1-zP^2)w + P^n v) under
// u = a^n y^2, v = b^n x^2, z = ab, w = xy
HpReport verify_hP(const Poly& p, int r);
// uv - z^(2r+1) w^2 vanishes identically under the quotient map, and the
// four images have weight zero
bool verify_quotient_relation(int r);

// minimal monomial generators of the weight-w piece over the invariant ring
std::vector<MPoly::Exp> weight_piece_generators(int r, long long w);
// least d <= dmax with (+)_m A_{dm} generated by A_{+-d}; throws BoundExceeded
int fourfold_generation_degree(int r, int dmax, int mcheck = 3);
// monomial generators of A_{2n} * A_{-2n}
std::vector<MPoly::Exp> fourfold_center_ideal(int r);

std::string exp_str(const MPoly::Exp& e);

} // namespace phscalc

#endif

#ifndef PHSCALC_TORIC_HPP
#define PHSCALC_TORIC_HPP

#include "phscalc/segdiv.hpp"

#include <string>
#include <vector>

namespace phscalc {

using IVec = std::vector<BigInt>;
using IMat = std::vector<IVec>; // rows

std::string ivec_str(const IVec& v);
IVec primitivize(IVec v); // divide by content, first nonzero entry > 0 when sign-ambiguous input
IVec mat_apply(const IMat& m, const IVec& v);
IMat mat_mul(const IMat& a, const IMat& b);
int mat_rank(const IMat& m);
// basis of { x : m x = 0 }, primitive integer vectors
std::vector<IVec> kernel_basis(const IMat& m, int ncols);

// surjective G with G w = 0 and free cokernel, via unimodular reduction
IMat cokernel_map(const IVec& w); // throws NonPrimitiveWeight
// gamma with gamma . w = 1, deterministic
IVec section_of(const IVec& w);
// integer right inverse R with G R = I
IMat right_inverse_of_cokernel(const IVec& w, const IMat& g);

struct RayData {
  IVec gen;               // primitive generator
  std::vector<int> axes;  // orthant axes whose image is this ray (may be empty)
  std::string label;
  Segment segment;        // filled by downgrade_segdiv
};

// rays of the coarsest fan generated by the images of the orthant faces:
// the primitivized G(e_i) plus the rays of pairwise intersections of the
// image cones' facets; deterministic order
std::vector<RayData> downgrade_fan(const IVec& w); // throws UnsupportedRank

// [min gamma(x), max gamma(x)] over the vertices of {x >= 0, G x = f}
Segment ray_segment(const IVec& w, const IMat& g, const IVec& gamma, const IVec& f);

struct DowngradeResult {
  IVec w;
  IMat g;
  IVec gamma;
  std::vector<RayData> rays; // with segments; rays with segment {0} keep it recorded

  // the induced segmental divisor over the named rays ({0} terms dropped)
  SegmentalDivisor segdiv() const;
  std::string str() const;
};

// labels: first n entries name the axis rays e_1..e_n, the rest name the
// extra rays in order; missing labels fall back to R1, R2, ...
DowngradeResult downgrade_segdiv(const IVec& w, const std::vector<std::string>& labels = {});

/// Change of basis onto a reference cokernel: target = M * mine (M
/// unimodular) and the section discrepancy xi with
/// segment_target(M r) = segment_mine(r) - xi . r.
struct DowngradeMatch {
  IMat m;
  IVec xi;
};
DowngradeMatch match_downgrade(const DowngradeResult& mine, const IMat& g_target,
                               const IVec& gamma_target);

// Smith normal form (test oracle and report helper): returns the diagonal
// invariant factors of an integer matrix
std::vector<BigInt> smith_invariants(IMat m);

} // namespace phscalc

#endif

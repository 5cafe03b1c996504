#include "phscalc/toric.hpp"

#include "phscalc/errors.hpp"

#include <algorithm>
#include <set>

namespace phscalc {

std::string ivec_str(const IVec& v) {
  std::string out = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += v[i].str();
  }
  return out + ")";
}

IVec primitivize(IVec v) {
  BigInt g = 0;
  for (auto& x : v) g = big_gcd(g, x);
  if (g > 1)
    for (auto& x : v) x /= g;
  return v;
}

IVec mat_apply(const IMat& m, const IVec& v) {
  IVec out(m.size(), 0);
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < v.size(); ++j) out[i] += m[i][j] * v[j];
  return out;
}

IMat mat_mul(const IMat& a, const IMat& b) {
  size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  IMat out(n, IVec(m, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t t = 0; t < k; ++t)
      if (a[i][t] != 0)
        for (size_t j = 0; j < m; ++j) out[i][j] += a[i][t] * b[t][j];
  return out;
}

namespace {

using QVec = std::vector<Rational>;
using QMat = std::vector<QVec>;

QMat to_q(const IMat& m) {
  QMat out;
  for (auto& row : m) {
    QVec r;
    for (auto& x : row) r.emplace_back(x);
    out.push_back(std::move(r));
  }
  return out;
}

// row echelon; returns rank, m modified in place
int echelon(QMat& m) {
  if (m.empty()) return 0;
  size_t rows = m.size(), cols = m[0].size(), lead = 0;
  int rank = 0;
  for (size_t r = 0; r < rows && lead < cols; ++lead) {
    size_t piv = r;
    while (piv < rows && m[piv][lead].is_zero()) ++piv;
    if (piv == rows) continue;
    std::swap(m[r], m[piv]);
    Rational inv = m[r][lead].inv();
    for (size_t j = lead; j < cols; ++j) m[r][j] *= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][lead].is_zero()) continue;
      Rational f = m[i][lead];
      for (size_t j = lead; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
    ++rank;
  }
  return rank;
}

IVec q_to_primitive(const QVec& v) {
  BigInt l = 1;
  for (auto& x : v) l = big_lcm(l, x.den());
  IVec out;
  for (auto& x : v) out.push_back(x.num() * (l / x.den()));
  out = primitivize(std::move(out));
  for (auto& x : out) {
    if (x != 0) {
      if (x < 0)
        for (auto& y : out) y = -y;
      break;
    }
  }
  return out;
}

} // namespace

int mat_rank(const IMat& m) {
  QMat q = to_q(m);
  return echelon(q);
}

std::vector<IVec> kernel_basis(const IMat& m, int ncols) {
  QMat q = to_q(m);
  if (q.empty()) q.push_back(QVec(ncols, Rational(0)));
  echelon(q);
  size_t cols = ncols;
  std::vector<int> pivot_col;
  std::vector<bool> is_pivot(cols, false);
  for (auto& row : q) {
    for (size_t j = 0; j < cols; ++j)
      if (!row[j].is_zero()) {
        pivot_col.push_back(static_cast<int>(j));
        is_pivot[j] = true;
        break;
      }
  }
  std::vector<IVec> out;
  for (size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    QVec v(cols, Rational(0));
    v[free] = Rational(1);
    for (size_t r = 0; r < pivot_col.size(); ++r)
      v[pivot_col[r]] = -q[r][free];
    out.push_back(q_to_primitive(v));
  }
  return out;
}

IMat cokernel_map(const IVec& w) {
  size_t n = w.size();
  if (n < 2) throw CalcError(Err::BadInput, "weight vector needs length >= 2");
  BigInt g = 0;
  for (auto& x : w) g = big_gcd(g, x);
  if (g != 1) throw CalcError(Err::NonPrimitiveWeight, "gcd of weights must be 1");

  // unimodular U with U w = e_1; G = rows 2..n of U
  IMat u(n, IVec(n, 0));
  for (size_t i = 0; i < n; ++i) u[i][i] = 1;
  IVec v = w;
  auto count_nonzero = [&] {
    int c = 0;
    for (auto& x : v)
      if (x != 0) ++c;
    return c;
  };
  while (count_nonzero() > 1) {
    // pivot: nonzero entry of least absolute value
    int piv = -1;
    for (size_t i = 0; i < n; ++i) {
      if (v[i] == 0) continue;
      if (piv < 0 || boost::multiprecision::abs(v[i]) < boost::multiprecision::abs(v[piv]))
        piv = static_cast<int>(i);
    }
    for (size_t i = 0; i < n; ++i) {
      if (static_cast<int>(i) == piv || v[i] == 0) continue;
      BigInt q = v[i] / v[piv];
      v[i] -= q * v[piv];
      for (size_t j = 0; j < n; ++j) u[i][j] -= q * u[piv][j];
    }
  }
  int piv = 0;
  while (v[piv] == 0) ++piv;
  std::swap(u[0], u[piv]);
  std::swap(v[0], v[piv]);
  if (v[0] < 0)
    for (auto& x : u[0]) x = -x;
  IMat g_map(u.begin() + 1, u.end());
  return g_map;
}

IVec section_of(const IVec& w) {
  size_t n = w.size();
  IMat u(n, IVec(n, 0));
  for (size_t i = 0; i < n; ++i) u[i][i] = 1;
  IVec v = w;
  // same reduction as cokernel_map; the first row of U is the section
  auto count_nonzero = [&] {
    int c = 0;
    for (auto& x : v)
      if (x != 0) ++c;
    return c;
  };
  BigInt g = 0;
  for (auto& x : w) g = big_gcd(g, x);
  if (g != 1) throw CalcError(Err::NonPrimitiveWeight, "gcd of weights must be 1");
  while (count_nonzero() > 1) {
    int piv = -1;
    for (size_t i = 0; i < n; ++i) {
      if (v[i] == 0) continue;
      if (piv < 0 || boost::multiprecision::abs(v[i]) < boost::multiprecision::abs(v[piv]))
        piv = static_cast<int>(i);
    }
    for (size_t i = 0; i < n; ++i) {
      if (static_cast<int>(i) == piv || v[i] == 0) continue;
      BigInt q = v[i] / v[piv];
      v[i] -= q * v[piv];
      for (size_t j = 0; j < n; ++j) u[i][j] -= q * u[piv][j];
    }
  }
  int piv = 0;
  while (v[piv] == 0) ++piv;
  IVec gamma = u[piv];
  if (v[piv] < 0)
    for (auto& x : gamma) x = -x;
  return gamma;
}

IMat right_inverse_of_cokernel(const IVec& w, const IMat& g) {
  // solve G R = I over Q; the solution with columns orthogonal to nothing
  // in particular: R = columns of U^{-1} minus the first; recompute by
  // rational solve with the kernel direction w quotiented out via gamma
  size_t n = w.size(), m = g.size();
  IVec gamma = section_of(w);
  // R_j = unique x with G x = e_j and gamma . x = 0
  IMat r(n, IVec(m, 0));
  QMat a; // (m+1) x n system
  for (auto& row : g) {
    QVec qr;
    for (auto& x : row) qr.emplace_back(x);
    a.push_back(std::move(qr));
  }
  QVec qg;
  for (auto& x : gamma) qg.emplace_back(x);
  a.push_back(std::move(qg));
  for (size_t j = 0; j < m; ++j) {
    QMat sys = a;
    for (size_t i = 0; i <= m; ++i) sys[i].push_back(i == j ? Rational(1) : Rational(0));
    echelon(sys);
    QVec x(n, Rational(0));
    for (size_t i = 0; i <= m && i < sys.size(); ++i) {
      int lead = -1;
      for (size_t k = 0; k < n; ++k)
        if (!sys[i][k].is_zero()) { lead = static_cast<int>(k); break; }
      if (lead >= 0) x[lead] = sys[i][n];
    }
    for (size_t i = 0; i < n; ++i) {
      if (!x[i].is_integer())
        throw CalcError(Err::BadInput, "right inverse is not integral");
      r[i][j] = x[i].num();
    }
  }
  return r;
}

namespace {

struct ConeRep {
  IMat gens;   // rows
  IMat eqs;    // span equations
  IMat ineqs;  // facet inequalities (within the span)
  int dim;     // ambient dimension
};

ConeRep make_cone(IMat gens, int dim) {
  ConeRep c;
  c.dim = dim;
  for (auto& g : gens) {
    bool zero = std::all_of(g.begin(), g.end(), [](const BigInt& x) { return x == 0; });
    if (!zero) c.gens.push_back(primitivize(g));
  }
  std::sort(c.gens.begin(), c.gens.end());
  c.gens.erase(std::unique(c.gens.begin(), c.gens.end()), c.gens.end());
  // span equations: kernel of gens^T, i.e. vectors orthogonal to all gens
  c.eqs = [&] {
    IMat m = c.gens;
    std::vector<IVec> k = kernel_basis(m, dim);
    return IMat(k.begin(), k.end());
  }();
  int rank = dim - static_cast<int>(c.eqs.size());
  // facet normals: subsets of size rank-1 extended by the span equations
  size_t g = c.gens.size();
  if (rank >= 1 && g >= 1) {
    std::vector<int> idx(g);
    for (size_t i = 0; i < g; ++i) idx[i] = static_cast<int>(i);
    std::vector<int> subset;
    std::set<IVec> seen;
    auto consider = [&](const std::vector<int>& sub) {
      IMat m = c.eqs;
      for (int i : sub) m.push_back(c.gens[i]);
      auto k = kernel_basis(m, dim);
      if (k.size() != 1) return;
      IVec mu = k[0];
      int pos = 0, neg = 0;
      for (auto& gen : c.gens) {
        BigInt dot = 0;
        for (int j = 0; j < dim; ++j) dot += mu[j] * gen[j];
        if (dot > 0) ++pos;
        if (dot < 0) ++neg;
      }
      if (pos && neg) return; // not a face
      if (neg)
        for (auto& x : mu) x = -x;
      if (pos || neg) {
        if (seen.insert(mu).second) c.ineqs.push_back(mu);
      }
    };
    // enumerate subsets of size rank-1
    std::vector<int> comb(rank - 1 > 0 ? rank - 1 : 0);
    if (comb.empty()) {
      // 1-dimensional cone: ineqs = +- generator direction constraints are
      // handled by the single inequality mu = gen itself
      if (!c.gens.empty()) c.ineqs.push_back(c.gens[0]);
    } else {
      std::vector<int> stack;
      auto rec = [&](auto&& self, size_t start) -> void {
        if (stack.size() == comb.size()) {
          consider(stack);
          return;
        }
        for (size_t i = start; i < g; ++i) {
          stack.push_back(static_cast<int>(i));
          self(self, i + 1);
          stack.pop_back();
        }
      };
      rec(rec, 0);
    }
  }
  return c;
}

bool in_cone(const ConeRep& c, const IVec& v) {
  for (auto& e : c.eqs) {
    BigInt dot = 0;
    for (int j = 0; j < c.dim; ++j) dot += e[j] * v[j];
    if (dot != 0) return false;
  }
  for (auto& m : c.ineqs) {
    BigInt dot = 0;
    for (int j = 0; j < c.dim; ++j) dot += m[j] * v[j];
    if (dot < 0) return false;
  }
  return true;
}

// extreme rays of the intersection of two cones, by exhaustive selection of
// active constraints
std::vector<IVec> intersection_rays(const ConeRep& a, const ConeRep& b) {
  int dim = a.dim;
  IMat eqs = a.eqs;
  eqs.insert(eqs.end(), b.eqs.begin(), b.eqs.end());
  IMat ineqs = a.ineqs;
  ineqs.insert(ineqs.end(), b.ineqs.begin(), b.ineqs.end());
  int r = mat_rank(eqs);
  int need = dim - r - 1; // additional tight inequalities for a ray
  std::vector<IVec> out;
  std::set<IVec> seen;
  auto consider = [&](const std::vector<int>& sub) {
    IMat m = eqs;
    for (int i : sub) m.push_back(ineqs[i]);
    auto k = kernel_basis(m, dim);
    if (k.size() != 1) return;
    for (int sgn = 0; sgn < 2; ++sgn) {
      IVec v = k[0];
      if (sgn)
        for (auto& x : v) x = -x;
      if (in_cone(a, v) && in_cone(b, v) && seen.insert(v).second) out.push_back(v);
    }
  };
  if (need <= 0) {
    consider({});
    return out;
  }
  std::vector<int> stack;
  size_t g = ineqs.size();
  auto rec = [&](auto&& self, size_t start) -> void {
    if (static_cast<int>(stack.size()) == need) {
      consider(stack);
      return;
    }
    for (size_t i = start; i < g; ++i) {
      stack.push_back(static_cast<int>(i));
      self(self, i + 1);
      stack.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

} // namespace

std::vector<RayData> downgrade_fan(const IVec& w) {
  size_t n = w.size();
  if (n < 2 || n > 5)
    throw CalcError(Err::UnsupportedRank, "downgrade supports 2 <= n <= 5");
  IMat g = cokernel_map(w);
  int dim = static_cast<int>(n) - 1;

  std::vector<RayData> rays;
  auto add_ray = [&](IVec v, int axis) {
    v = primitivize(std::move(v));
    bool zero = std::all_of(v.begin(), v.end(), [](const BigInt& x) { return x == 0; });
    if (zero) return;
    for (auto& r : rays)
      if (r.gen == v) {
        if (axis >= 0) r.axes.push_back(axis);
        return;
      }
    RayData rd;
    rd.gen = std::move(v);
    if (axis >= 0) rd.axes.push_back(axis);
    rays.push_back(std::move(rd));
  };

  std::vector<IVec> images;
  for (size_t i = 0; i < n; ++i) {
    IVec col(dim);
    for (int r = 0; r < dim; ++r) col[r] = g[r][i];
    images.push_back(col);
    add_ray(col, static_cast<int>(i));
  }

  // image cones of the orthant facets, then their facets
  std::vector<std::pair<size_t, ConeRep>> facets; // owner index, facet cone
  for (size_t skip = 0; skip < n; ++skip) {
    IMat gens;
    for (size_t i = 0; i < n; ++i)
      if (i != skip) gens.push_back(images[i]);
    ConeRep big = make_cone(gens, dim);
    int rank = dim - static_cast<int>(big.eqs.size());
    if (rank == dim && static_cast<int>(big.gens.size()) >= dim) {
      // full-dimensional: the facet subcones
      size_t m = big.gens.size();
      std::vector<int> stack;
      auto rec = [&](auto&& self, size_t start) -> void {
        if (static_cast<int>(stack.size()) == dim - 1) {
          IMat sub;
          for (int i : stack) sub.push_back(big.gens[i]);
          ConeRep f = make_cone(sub, dim);
          if (dim - static_cast<int>(f.eqs.size()) == dim - 1)
            facets.emplace_back(skip, std::move(f));
          return;
        }
        for (size_t i = start; i < m; ++i) {
          stack.push_back(static_cast<int>(i));
          self(self, i + 1);
          stack.pop_back();
        }
      };
      rec(rec, 0);
    } else {
      facets.emplace_back(skip, std::move(big));
    }
  }

  for (size_t i = 0; i < facets.size(); ++i)
    for (size_t j = i + 1; j < facets.size(); ++j) {
      if (facets[i].first == facets[j].first) continue;
      for (IVec& v : intersection_rays(facets[i].second, facets[j].second))
        add_ray(std::move(v), -1);
    }

  std::sort(rays.begin(), rays.end(), [](const RayData& a, const RayData& b) {
    if (!a.axes.empty() || !b.axes.empty()) {
      if (a.axes.empty() != b.axes.empty()) return !a.axes.empty();
      if (!a.axes.empty()) return a.axes.front() < b.axes.front();
    }
    return a.gen < b.gen;
  });
  return rays;
}

Segment ray_segment(const IVec& w, const IMat& g, const IVec& gamma, const IVec& f) {
  size_t n = w.size();
  bool allNonneg = true, allNonpos = true;
  for (auto& x : w) {
    if (x < 0) allNonneg = false;
    if (x > 0) allNonpos = false;
  }
  if (allNonneg || allNonpos)
    throw CalcError(Err::UnboundedFiber, "fiber polytope is unbounded");

  std::vector<QVec> vertices;
  for (size_t zero = 0; zero < n; ++zero) {
    // solve G x = f with x[zero] = 0
    QMat sys;
    for (size_t r = 0; r < g.size(); ++r) {
      QVec row;
      for (size_t j = 0; j < n; ++j)
        if (j != zero) row.emplace_back(g[r][j]);
      row.emplace_back(f[r]);
      sys.push_back(std::move(row));
    }
    int rank = echelon(sys);
    if (rank < static_cast<int>(n) - 1) continue; // singular subsystem
    bool inconsistent = false;
    QVec x(n, Rational(0));
    size_t var = 0;
    for (size_t r = 0; r < sys.size(); ++r) {
      int lead = -1;
      for (size_t k = 0; k + 1 < sys[r].size(); ++k)
        if (!sys[r][k].is_zero()) { lead = static_cast<int>(k); break; }
      if (lead < 0) {
        if (!sys[r].back().is_zero()) inconsistent = true;
        continue;
      }
      // lead indexes the reduced variable list (zero column removed)
      size_t orig = static_cast<size_t>(lead) < zero ? static_cast<size_t>(lead)
                                                     : static_cast<size_t>(lead) + 1;
      x[orig] = sys[r].back();
      ++var;
    }
    (void)var;
    if (inconsistent) continue;
    bool feas = true;
    for (auto& xi : x)
      if (xi.sign() < 0) { feas = false; break; }
    if (!feas) continue;
    if (std::find(vertices.begin(), vertices.end(), x) == vertices.end())
      vertices.push_back(std::move(x));
  }
  if (vertices.empty())
    throw CalcError(Err::BadInput, "empty fiber polytope for ray " + ivec_str(f));

  bool first = true;
  Rational lo, hi;
  for (auto& x : vertices) {
    Rational val(0);
    for (size_t j = 0; j < n; ++j) val += Rational(gamma[j]) * x[j];
    if (first) { lo = hi = val; first = false; }
    else {
      if (val < lo) lo = val;
      if (val > hi) hi = val;
    }
  }
  return Segment(lo, hi);
}

SegmentalDivisor DowngradeResult::segdiv() const {
  PresentedBase pb;
  for (auto& r : rays) pb.add_prime(r.label, r.label);
  pb.validate();
  SegmentalDivisor d(make_base(Base(std::move(pb))));
  for (auto& r : rays)
    if (!r.segment.is_zero()) d.set(PrimeDivisor::named(r.label), r.segment);
  return d;
}

std::string DowngradeResult::str() const {
  std::string out = "weights " + ivec_str(w) + "\n";
  out += "G =\n";
  for (auto& row : g) out += "  " + ivec_str(row) + "\n";
  out += "gamma = " + ivec_str(gamma) + "\n";
  out += "rays:\n";
  for (auto& r : rays) {
    out += "  " + r.label + " = " + ivec_str(r.gen);
    if (!r.axes.empty()) {
      out += " (image of axis";
      for (int a : r.axes) out += " " + std::to_string(a + 1);
      out += ")";
    }
    out += " segment " + r.segment.str() + "\n";
  }
  out += "segmental divisor: " + segdiv().str() + "\n";
  return out;
}

DowngradeResult downgrade_segdiv(const IVec& w, const std::vector<std::string>& labels) {
  DowngradeResult res;
  res.w = w;
  res.g = cokernel_map(w);
  res.gamma = section_of(w);
  res.rays = downgrade_fan(w);
  size_t n = w.size(), extra = 0;
  for (auto& r : res.rays) {
    if (!r.axes.empty() && static_cast<size_t>(r.axes.front()) < labels.size())
      r.label = labels[r.axes.front()];
    else if (r.axes.empty() && n + extra < labels.size())
      r.label = labels[n + extra++];
    else
      r.label = "R" + std::to_string(&r - res.rays.data() + 1);
    r.segment = ray_segment(w, res.g, res.gamma, r.gen);
  }
  return res;
}

DowngradeMatch match_downgrade(const DowngradeResult& mine, const IMat& g_target,
                               const IVec& gamma_target) {
  IMat r = right_inverse_of_cokernel(mine.w, mine.g);
  DowngradeMatch match;
  match.m = mat_mul(g_target, r);
  if (!(mat_mul(match.m, mine.g) == g_target))
    throw CalcError(Err::BadInput, "target is not a cokernel of the same weight");
  size_t n = mine.w.size(), d = mine.g.size();
  match.xi.assign(d, 0);
  for (size_t j = 0; j < d; ++j)
    for (size_t i = 0; i < n; ++i)
      match.xi[j] += (mine.gamma[i] - gamma_target[i]) * r[i][j];
  return match;
}

std::vector<BigInt> smith_invariants(IMat m) {
  if (m.empty()) return {};
  size_t rows = m.size(), cols = m[0].size();
  std::vector<BigInt> out;
  size_t top = 0;
  while (top < rows && top < cols) {
    // find smallest nonzero entry in the remaining block
    int pi = -1, pj = -1;
    for (size_t i = top; i < rows; ++i)
      for (size_t j = top; j < cols; ++j)
        if (m[i][j] != 0 &&
            (pi < 0 || boost::multiprecision::abs(m[i][j]) <
                           boost::multiprecision::abs(m[pi][pj]))) {
          pi = static_cast<int>(i);
          pj = static_cast<int>(j);
        }
    if (pi < 0) break;
    std::swap(m[top], m[static_cast<size_t>(pi)]);
    for (size_t i = 0; i < rows; ++i) std::swap(m[i][top], m[i][static_cast<size_t>(pj)]);
    bool clean = true;
    for (size_t i = top + 1; i < rows; ++i)
      if (m[i][top] != 0) {
        BigInt q = m[i][top] / m[top][top];
        for (size_t j = top; j < cols; ++j) m[i][j] -= q * m[top][j];
        if (m[i][top] != 0) clean = false;
      }
    for (size_t j = top + 1; j < cols; ++j)
      if (m[top][j] != 0) {
        BigInt q = m[top][j] / m[top][top];
        for (size_t i = top; i < rows; ++i) m[i][j] -= q * m[i][top];
        if (m[top][j] != 0) clean = false;
      }
    if (!clean) continue;
    out.push_back(boost::multiprecision::abs(m[top][top]));
    ++top;
  }
  // normalize divisibility chain
  for (size_t i = 0; i + 1 < out.size(); ++i)
    for (size_t j = i + 1; j < out.size(); ++j) {
      BigInt g = big_gcd(out[i], out[j]);
      BigInt l = out[i] / g * out[j];
      out[i] = g;
      out[j] = l;
    }
  return out;
}

} // namespace phscalc

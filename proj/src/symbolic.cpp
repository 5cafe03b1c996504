#include "phscalc/symbolic.hpp"

#include "phscalc/errors.hpp"

#include <algorithm>

namespace phscalc {

namespace {

// P(ab) as an element of Q[a,b,x,y]
MPoly p_of_ab(const Poly& p) {
  MPoly out(4);
  for (int k = 0; k <= p.degree(); ++k) {
    GaussianRational c = p.coeff(k);
    if (c.is_zero()) continue;
    if (!c.is_real()) throw CalcError(Err::NotReal, "P must have real coefficients");
    out += MPoly::term(4, MPoly::Exp{k, k, 0, 0}, c.re());
  }
  return out;
}

MPoly mono(int i, int j, int k, int l, Rational c = Rational(1)) {
  return MPoly::term(4, MPoly::Exp{i, j, k, l}, std::move(c));
}

} // namespace

Mat2 build_MP(const Poly& p, int r) {
  if (r < 1) throw CalcError(Err::BadInput, "r must be >= 1");
  int n = 2 * r + 1;
  MPoly pab = p_of_ab(p);
  MPoly q = mono(1, 1, 0, 0);          // ab
  MPoly qp2 = q * pab * pab;           // ab P(ab)^2
  MPoly one(4, Rational(1));

  Mat2 m;
  m.m11 = one - qp2;
  m.m12 = mono(n, 0, 0, 0) * pab.pow(n);
  m.m21 = -(mono(0, n, 0, 0) * pab.pow(n));
  MPoly sum(4);
  MPoly powj = one;
  for (int j = 0; j <= 2 * r; ++j) {
    sum += powj;
    if (j < 2 * r) powj *= qp2;
  }
  m.m22 = sum;
  return m;
}

MPoly mat2_det(const Mat2& m) { return m.m11 * m.m22 - m.m12 * m.m21; }

MPoly Endo4::apply(const MPoly& f) const {
  // coefficients are rational, so the antilinear flag does not touch them
  return f.substitute({images[0], images[1], images[2], images[3]});
}

Endo4 Endo4::after(const Endo4& inner) const {
  Endo4 out;
  for (int i = 0; i < 4; ++i) out.images[i] = apply(inner.images[i]);
  out.antilinear = antilinear != inner.antilinear;
  return out;
}

Endo4 swap_conjugation() {
  Endo4 e;
  e.images[0] = MPoly::variable(4, 1);
  e.images[1] = MPoly::variable(4, 0);
  e.images[2] = MPoly::variable(4, 3);
  e.images[3] = MPoly::variable(4, 2);
  e.antilinear = true;
  return e;
}

Endo4 phiP_endo(const Poly& p, int r) {
  Mat2 m = build_MP(p, r);
  Endo4 e;
  e.images[0] = MPoly::variable(4, 0);
  e.images[1] = MPoly::variable(4, 1);
  e.images[2] = m.m11 * MPoly::variable(4, 2) + m.m12 * MPoly::variable(4, 3);
  e.images[3] = m.m21 * MPoly::variable(4, 2) + m.m22 * MPoly::variable(4, 3);
  return e;
}

Endo4 build_sigmaP(const Poly& p, int r, bool order_flipped) {
  Endo4 sigma = swap_conjugation();
  Endo4 phi = phiP_endo(p, r);
  // sigma_P = phi_P o sigma as variety maps, so the comorphism applies
  // phi_P^* first and the swap-conjugation second
  return order_flipped ? phi.after(sigma) : sigma.after(phi);
}

bool is_involution(const Endo4& e) {
  Endo4 sq = e.after(e);
  if (sq.antilinear) return false;
  for (int i = 0; i < 4; ++i)
    if (!(sq.images[i] == MPoly::variable(4, i))) return false;
  return true;
}

bool sends_weights_to_opposite(const Endo4& e, int r) {
  auto w = mj_weights(r);
  for (int i = 0; i < 4; ++i) {
    auto img = e.images[i].homogeneous_weight(w);
    if (!img || *img != -w[static_cast<size_t>(i)]) return false;
  }
  return true;
}

HpReport verify_hP(const Poly& p, int r) {
  int n = 2 * r + 1;
  Endo4 sigmaP = build_sigmaP(p, r);
  MPoly s = mono(0, r, 1, 0); // b^r x
  MPoly lhs = s * sigmaP.apply(s);

  MPoly pab = p_of_ab(p);
  MPoly z = mono(1, 1, 0, 0), w = mono(0, 0, 1, 1), v = mono(0, n, 2, 0);
  MPoly one(4, Rational(1));
  MPoly rhs = z.pow(r) * ((one - z * pab * pab) * w + pab.pow(n) * v);

  HpReport rep;
  rep.difference = lhs - rhs;
  rep.ok = rep.difference.is_zero();
  return rep;
}

bool verify_quotient_relation(int r) {
  int n = 2 * r + 1;
  MPoly u = mono(n, 0, 0, 2), v = mono(0, n, 2, 0), z = mono(1, 1, 0, 0), w = mono(0, 0, 1, 1);
  if (!(u * v - z.pow(n) * w * w).is_zero()) return false;
  auto wt = mj_weights(r);
  for (const MPoly* f : {&u, &v, &z, &w}) {
    auto h = f->homogeneous_weight(wt);
    if (!h || *h != 0) return false;
  }
  return true;
}

std::vector<MPoly::Exp> weight_piece_generators(int r, long long w) {
  long long n = 2LL * r + 1;
  std::vector<MPoly::Exp> cands;
  auto push = [&](long long i, long long j, long long k, long long l) {
    if (i < 0 || j < 0 || k < 0 || l < 0) return;
    if (2 * (i - j) + n * (k - l) != w) return;
    cands.push_back(MPoly::Exp{static_cast<int>(i), static_cast<int>(j),
                               static_cast<int>(k), static_cast<int>(l)});
  };
  // minimal generators have min(i,j) = 0, min(k,l) = 0, and are not
  // divisible by a^n y^2 or b^n x^2
  long long kcap = std::max<long long>(0, (std::llabs(w) + 2 * n) / n + 2);
  for (long long k = 0; k <= kcap; ++k) {
    long long rest = w - n * k;
    if (rest % 2 == 0) push(rest / 2, 0, k, 0);           // (i,0,k,0)
    rest = n * k - w;
    if (rest % 2 == 0) push(0, rest / 2, k, 0);           // (0,j,k,0)
  }
  for (long long l = 0; l <= kcap; ++l) {
    long long rest = w + n * l;
    if (rest % 2 == 0) push(rest / 2, 0, 0, l);           // (i,0,0,l)
    rest = -w - n * l;
    if (rest % 2 == 0) push(0, rest / 2, 0, l);           // (0,j,0,l)
  }
  // drop candidates reducible by u = a^n y^2 or v = b^n x^2, dedupe,
  // then keep the componentwise-minimal ones
  std::vector<MPoly::Exp> out;
  std::sort(cands.begin(), cands.end());
  cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
  auto leq = [](const MPoly::Exp& a, const MPoly::Exp& b) {
    for (int t = 0; t < 4; ++t)
      if (a[t] > b[t]) return false;
    return true;
  };
  for (auto& c : cands) {
    if (c[0] >= n && c[3] >= 2) continue;
    if (c[1] >= n && c[2] >= 2) continue;
    out.push_back(c);
  }
  std::vector<MPoly::Exp> minimal;
  for (auto& c : out) {
    bool red = false;
    for (auto& o : out)
      if (!(o == c) && leq(o, c)) { red = true; break; }
    if (!red) minimal.push_back(c);
  }
  return minimal;
}

namespace {

std::vector<MPoly::Exp> products_of(const std::vector<MPoly::Exp>& plus,
                                    const std::vector<MPoly::Exp>& minus, int alpha,
                                    int beta) {
  // exponent sums of alpha factors from plus and beta from minus
  std::vector<MPoly::Exp> acc{MPoly::Exp{0, 0, 0, 0}};
  auto extend = [](std::vector<MPoly::Exp> base, const std::vector<MPoly::Exp>& gens,
                   int count) {
    for (int c = 0; c < count; ++c) {
      std::vector<MPoly::Exp> next;
      for (auto& b : base)
        for (auto& g : gens) {
          MPoly::Exp e = b;
          for (int t = 0; t < 4; ++t) e[t] += g[t];
          next.push_back(std::move(e));
        }
      std::sort(next.begin(), next.end());
      next.erase(std::unique(next.begin(), next.end()), next.end());
      base = std::move(next);
    }
    return base;
  };
  acc = extend(std::move(acc), plus, alpha);
  acc = extend(std::move(acc), minus, beta);
  return acc;
}

} // namespace

int fourfold_generation_degree(int r, int dmax, int mcheck) {
  auto leq = [](const MPoly::Exp& a, const MPoly::Exp& b) {
    for (int t = 0; t < 4; ++t)
      if (a[t] > b[t]) return false;
    return true;
  };
  for (int d = 1; d <= dmax; ++d) {
    std::vector<MPoly::Exp> plus = weight_piece_generators(r, d);
    std::vector<MPoly::Exp> minus = weight_piece_generators(r, -d);
    bool ok = true;
    for (int m = 2; m <= mcheck && ok; ++m) {
      for (int sign = 0; sign < 2 && ok; ++sign) {
        long long target = static_cast<long long>(d) * m * (sign ? -1 : 1);
        auto need = weight_piece_generators(r, target);
        const auto& first = sign ? minus : plus;
        const auto& second = sign ? plus : minus;
        for (auto& g : need) {
          bool covered = false;
          for (int beta = 0; beta <= 4 && !covered; ++beta) {
            auto prods = products_of(first, second, m + beta, beta);
            for (auto& pi : prods)
              if (leq(pi, g)) { covered = true; break; }
          }
          if (!covered) { ok = false; break; }
        }
      }
    }
    if (ok) return d;
  }
  throw CalcError(Err::BoundExceeded, "no generation degree up to " + std::to_string(dmax));
}

std::vector<MPoly::Exp> fourfold_center_ideal(int r) {
  long long n = 2LL * r + 1;
  auto plus = weight_piece_generators(r, 2 * n);
  auto minus = weight_piece_generators(r, -2 * n);
  std::vector<MPoly::Exp> prods;
  for (auto& p : plus)
    for (auto& q : minus) {
      MPoly::Exp e = p;
      for (int t = 0; t < 4; ++t) e[t] += q[t];
      prods.push_back(std::move(e));
    }
  std::sort(prods.begin(), prods.end());
  prods.erase(std::unique(prods.begin(), prods.end()), prods.end());
  auto leq = [](const MPoly::Exp& a, const MPoly::Exp& b) {
    for (int t = 0; t < 4; ++t)
      if (a[t] > b[t]) return false;
    return true;
  };
  std::vector<MPoly::Exp> minimal;
  for (auto& c : prods) {
    bool red = false;
    for (auto& o : prods)
      if (!(o == c) && leq(o, c)) { red = true; break; }
    if (!red) minimal.push_back(c);
  }
  return minimal;
}

std::string exp_str(const MPoly::Exp& e) {
  const auto& names = mj_names();
  std::string out;
  for (int t = 0; t < 4; ++t) {
    if (e[t] == 0) continue;
    if (!out.empty()) out += "*";
    out += names[t];
    if (e[t] > 1) out += "^" + std::to_string(e[t]);
  }
  return out.empty() ? "1" : out;
}

} // namespace phscalc

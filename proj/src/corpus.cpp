#include "phscalc/corpus.hpp"

#include "phscalc/errors.hpp"
#include "phscalc/symbolic.hpp"
#include "phscalc/toric.hpp"

#include <functional>
#include <random>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace phscalc {

BasePtr standard_line_base(const std::string& var) {
  return make_base(Base(CurveBase(GaussianRational(1), GaussianRational(0), var)));
}

BasePtr point_base() { return make_base(Base(PointBase{})); }

BasePtr hopf_base(bool sign_flip) {
  PresentedBase s;
  s.add_prime("Du", "Dv");
  s.add_prime("Dv", "Du");
  std::map<std::string, BigInt> div;
  div["Du"] = sign_flip ? -1 : 1;
  div["Dv"] = sign_flip ? -1 : 1;
  s.add_function("oneMinusZ", std::move(div), FunctionWord("oneMinusZ"));
  s.validate();
  return make_base(Base(std::move(s)));
}

DpdPair conic_bundle_pair(const Poly& p) {
  BasePtr base = standard_line_base("w");
  return dpd_validate(base, WeilQDivisor{}, BaseFunction(RationalFunction(p)));
}

PhsPair gutwirth_pair() {
  BasePtr base = standard_line_base("z");
  SegmentalDivisor d(base);
  d.set(PrimeDivisor::point(GaussianRational(0)), Segment(Rational(0), Rational(1)));
  return phs_validate(base, std::move(d), BaseFunction(RationalFunction::var()));
}

PhsPair moebius_pair() {
  BasePtr base = standard_line_base("z");
  SegmentalDivisor d(base);
  d.set(PrimeDivisor::point(GaussianRational(0)),
        Segment::singleton(Rational(BigInt(1), BigInt(2))));
  return phs_validate(base, std::move(d), BaseFunction(RationalFunction::var()));
}

PhsPair lens_pair(int p, bool sign_flip) {
  BasePtr base = hopf_base(sign_flip);
  SegmentalDivisor d(base);
  d.set(PrimeDivisor::named("Du"), Segment::singleton(Rational(p)));
  return phs_validate(base, std::move(d), BaseFunction(FunctionWord("oneMinusZ", p)));
}

namespace {

struct Check {
  bool ok = true;
  std::ostringstream log;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      log << "FAILED: " << what << "\n";
    }
  }
  void note(const std::string& s) { log << s << "\n"; }
};

// ---- curves ----

CaseResult case_curves() {
  Check c;
  struct Row { Rational h; bool circle; };
  std::vector<Row> rows = {{Rational(1), true},
                           {Rational(-1), false},
                           {Rational(2), true},
                           {Rational(-2), false},
                           {Rational(BigInt(1), BigInt(3)), true},
                           {Rational(BigInt(-1), BigInt(3)), false},
                           {Rational(7), true},
                           {Rational(-7), false}};
  for (auto& row : rows) {
    PhsPair pair = phs_validate(point_base(), SegmentalDivisor(point_base()),
                                BaseFunction(RationalFunction(GaussianRational(row.h))));
    (void)pair;
    bool circle = classify_point_pair(row.h) == PointCurveClass::Circle;
    c.require(circle == row.circle, "class of h = " + row.h.str());
    PointCurvePresentation pres = point_invariants(row.h);
    c.require(pres.circle == row.circle, "presentation branch for h = " + row.h.str());
    c.require(pres.relation_verified, "relation check for h = " + row.h.str());
    c.require(pres.invariance_verified, "invariance check for h = " + row.h.str());
    c.require(pres.relation == (row.circle ? "x^2+y^2-1" : "u^2+v^2+1"),
              "relation name for h = " + row.h.str());
  }
  c.note("8 values of h classified; relations x^2+y^2-1 and u^2+v^2+1 verified symbolically");
  return {"curves", c.ok, c.log.str()};
}

// ---- conic bundles X(P) ----

SegmentalDivisor expected_conic_segdiv(const BasePtr& base,
                                       const std::vector<std::pair<GaussianRational, int>>& roots) {
  SegmentalDivisor d(base);
  for (auto& [root, mult] : roots)
    d.set(PrimeDivisor::point(root), Segment(Rational(0), Rational(mult)));
  return d;
}

CaseResult case_conic_bundles() {
  Check c;
  Poly w = Poly::var();
  GaussianRational i = GaussianRational::i();
  struct Entry {
    std::string name;
    Poly p;
    std::vector<std::pair<GaussianRational, int>> roots;
  };
  Poly w2p1 = w * w + Poly(1);
  std::vector<Entry> entries;
  entries.push_back({"P=w", w, {{GaussianRational(0), 1}}});
  entries.push_back({"P=w^2+1", w2p1, {{i, 1}, {-i, 1}}});
  entries.push_back({"P=w(w^2+1)", w * w2p1, {{GaussianRational(0), 1}, {i, 1}, {-i, 1}}});
  Poly shifted = (w - Poly(2)) * (w - Poly(2)) * (w * w + Poly(4));
  entries.push_back({"P=(w-2)^2(w^2+4)",
                     shifted,
                     {{GaussianRational(2), 2},
                      {GaussianRational(Rational(0), Rational(2)), 1},
                      {GaussianRational(Rational(0), Rational(-2)), 1}}});

  for (auto& e : entries) {
    DpdPair dpd = conic_bundle_pair(e.p);
    PhsPair phs = dpd_to_seg(dpd);
    c.require(phs.divisor == expected_conic_segdiv(dpd.base, e.roots),
              e.name + ": segmental divisor");
    c.require(seg_to_dpd(phs).divisor == dpd.divisor, e.name + ": round trip");

    auto [slice, inv] = build_graded(phs, 8);
    bool gens_ok = true;
    for (int m = -8; m <= 8; ++m) {
      RationalFunction expect =
          m >= 0 ? RationalFunction(GaussianRational(1)) : RationalFunction(e.p).pow(-m);
      if (!(slice.g(m) == expect)) gens_ok = false;
    }
    c.require(gens_ok, e.name + ": A_m = C[w] P^max(0,-m)");
    c.require(hyperbolicity_check(slice), e.name + ": hyperbolic");
    c.require(generation_degree(phs, 8) == 1, e.name + ": generation degree 1");
    auto ideal = ah_center_ideal(phs, 1);
    c.require(ideal.size() == 1 && ideal[0] == RationalFunction(e.p.monic()),
              e.name + ": center ideal (P)");
    c.require(slice.g(-1) * slice.g(1) == RationalFunction(e.p.monic()),
              e.name + ": relation uv = P(w)");
  }
  c.note("4 polynomials checked through validation, conversion and graded slices");
  return {"conic-bundles", c.ok, c.log.str()};
}

// ---- Gutwirth ----

CaseResult case_gutwirth() {
  Check c;
  PhsPair pair = gutwirth_pair();
  auto [slice, inv] = build_graded(pair, 8);
  bool gens_ok = true;
  for (int m = -8; m <= 8; ++m) {
    RationalFunction expect = m >= 0 ? RationalFunction(GaussianRational(1))
                                     : RationalFunction::var().pow(-m);
    if (!(slice.g(m) == expect)) gens_ok = false;
  }
  c.require(gens_ok, "g_m = z^max(0,-m)");
  c.require(generation_degree(pair, 8) == 1, "generation degree 1");
  auto ideal = ah_center_ideal(pair, 1);
  c.require(ideal.size() == 1 && ideal[0] == RationalFunction::var(), "center ideal (z)");

  DpdPair d1 = seg_to_dpd(pair);
  struct Tw { long long cNum, cDen, beta; };
  for (Tw tw : {Tw{1, 1, 0}, Tw{2, 1, 3}, Tw{-1, 1, 1}}) {
    Rational cc(BigInt(tw.cNum), BigInt(tw.cDen));
    RealAut phi{cc, -cc * Rational(tw.beta)}; // z -> c(z - beta)
    PhsPair twisted = pair_pullback_twist(phi, BaseFunction(RationalFunction(GaussianRational(1))),
                                          pair);
    DpdPair d2 = seg_to_dpd(twisted);
    auto res = pair_equiv_full(d1, d2);
    std::string label = "c=" + cc.str() + ", beta=" + std::to_string(tw.beta);
    c.require(res.witness.has_value(), "equivalence found for " + label);
    if (res.witness) {
      c.require(witness_replays(*res.witness, d1, d2), "witness replays for " + label);
      c.require(res.witness->residual == Rational(1), "residual 1 for " + label);
      c.note("witness (" + label + "): " + res.witness->str());
    }
  }
  return {"gutwirth", c.ok, c.log.str()};
}

// ---- Moebius ----

CaseResult case_moebius() {
  Check c;
  PhsPair pair = moebius_pair();
  DpdPair dpd = seg_to_dpd(pair);
  WeilQDivisor expect;
  expect.set(PrimeDivisor::point(GaussianRational(0)), Rational(BigInt(1), BigInt(2)));
  c.require(dpd.divisor == expect, "D(1) = (1/2){0}");
  PhsPair back = dpd_to_seg(dpd);
  c.require(back.divisor == pair.divisor, "round trip divisor");
  c.require(back.h == pair.h, "round trip h");
  c.note("pair ((1/2)(x){0}, z) validates; dpd <-> seg round trip exact");
  return {"moebius", c.ok, c.log.str()};
}

// ---- Hopf / Lens ----

CaseResult case_hopf(bool sign_flip) {
  Check c;
  BasePtr base = hopf_base(sign_flip);
  WeilQDivisor divisor = div_of_function(*base, BaseFunction(FunctionWord("oneMinusZ")));
  WeilQDivisor expect;
  expect.set(PrimeDivisor::named("Du"), Rational(sign_flip ? -1 : 1));
  expect.set(PrimeDivisor::named("Dv"), Rational(sign_flip ? -1 : 1));
  c.require(divisor == expect, "div(1-z) from the relation table");

  SegmentalDivisor d(base);
  d.set(PrimeDivisor::named("Du"), Segment::singleton(Rational(1)));
  SegmentalDivisor pulled = segdiv_pullback_real(d);
  SegmentalDivisor expectPull(base);
  expectPull.set(PrimeDivisor::named("Dv"), Segment::singleton(Rational(1)));
  c.require(pulled == expectPull, "tau^*({1}(x)Du) = {1}(x)Dv");

  try {
    PhsPair pair = phs_validate(base, d, BaseFunction(FunctionWord("oneMinusZ")));
    c.require(!sign_flip, "validation must fail on the flipped table");
    if (!sign_flip) {
      c.require(pair.properness == Properness::AssertedProper, "properness is asserted");
      c.note("phs pair ({1}(x)Du, 1-z) valid; properness asserted on the presented base");
    }
  } catch (const CalcError& e) {
    c.require(sign_flip && e.kind() == Err::FlipIdentityFails,
              std::string("unexpected validation error: ") + e.what());
    if (sign_flip) {
      c.require(!e.witness().empty(), "failure carries a witness prime");
      c.note("flipped table rejected with witness " + e.witness());
    }
  }
  return {"hopf", c.ok, c.log.str()};
}

CaseResult case_lens(int p) {
  Check c;
  try {
    PhsPair pair = lens_pair(p);
    c.require(pair.properness == Properness::AssertedProper, "properness asserted");
    c.note("phs pair ({" + std::to_string(p) + "}(x)Du, (1-z)^" + std::to_string(p) +
           ") valid");
  } catch (const CalcError& e) {
    c.require(false, std::string("validation failed: ") + e.what());
  }
  return {"lens p=" + std::to_string(p), c.ok, c.log.str()};
}

// ---- toric downgrade ----

CaseResult case_downgrade(int r) {
  Check c;
  long long n = 2LL * r + 1;
  IVec w{2, -2, n, -n};
  DowngradeResult res = downgrade_segdiv(w, {"Dzu", "Dzv", "Dwv", "Dwu", "E"});
  c.require(res.rays.size() == 5, "fan has 5 rays");

  const RayData* byAxis[4] = {nullptr, nullptr, nullptr, nullptr};
  const RayData* extra = nullptr;
  for (auto& ray : res.rays) {
    if (ray.axes.empty()) extra = &ray;
    else
      for (int a : ray.axes) byAxis[a] = &ray;
  }
  c.require(extra != nullptr, "one non-axis ray");
  bool axesOk = byAxis[0] && byAxis[1] && byAxis[2] && byAxis[3];
  c.require(axesOk, "four axis rays");
  if (axesOk && extra) {
    auto comb = [&](const RayData* f, const RayData* g, long long cf, long long cg) {
      IVec out(extra->gen.size(), 0);
      for (size_t t = 0; t < out.size(); ++t)
        out[t] = cf * f->gen[t] + cg * g->gen[t];
      return out;
    };
    // E = 2 f1 + n f3 = 2 f2 + n f4 with f_i the images of the axes
    c.require(comb(byAxis[0], byAxis[2], 2, n) == extra->gen, "f5 = 2f1 + n f3");
    c.require(comb(byAxis[1], byAxis[3], 2, n) == extra->gen, "f5 = 2f2 + n f4");
  }

  IMat gPaper = {{1, 1, 0, 0}, {0, 0, 1, 1}, {n, 0, 0, 2}};
  IVec gammaPaper{0, r, 1, 0};
  // the reference section: gamma . w = -2r + n = 1
  DowngradeMatch match = match_downgrade(res, gPaper, gammaPaper);
  std::map<std::string, Segment> matched;
  for (auto& ray : res.rays) {
    Rational shift(0);
    for (size_t t = 0; t < match.xi.size(); ++t) shift += Rational(match.xi[t] * ray.gen[t]);
    matched[ray.label] = Segment(ray.segment.lo - shift, ray.segment.hi - shift);
  }
  c.require(matched["Dzu"].is_zero(), "Dzu segment {0}");
  c.require(matched["Dwu"].is_zero(), "Dwu segment {0}");
  c.require(matched["Dzv"] == Segment::singleton(Rational(r)), "Dzv segment {r}");
  c.require(matched["Dwv"] == Segment::singleton(Rational(1)), "Dwv segment {1}");
  c.require(matched["E"] == Segment(Rational(2 * r), Rational(2 * r + 1)),
            "E segment [2r, 2r+1]");
  {
    std::ostringstream m;
    m << "matching M rows:";
    for (auto& row : match.m) m << " " << ivec_str(row);
    m << "; xi = " << ivec_str(match.xi);
    c.note(m.str());
  }
  c.note("matched divisor: " + std::to_string(r) + "(x)Dzv + {1}(x)Dwv + [" +
         std::to_string(2 * r) + "," + std::to_string(2 * r + 1) + "](x)E");
  return {"downgrade r=" + std::to_string(r), c.ok, c.log.str()};
}

// ---- Moser-Jauslin ----

Poly random_real_poly(std::mt19937_64& rng, int maxdeg) {
  std::uniform_int_distribution<int> numd(-9, 9), dend(1, 9), degd(0, maxdeg);
  int deg = degd(rng);
  std::vector<GaussianRational> coeffs;
  for (int k = 0; k <= deg; ++k)
    coeffs.emplace_back(Rational(BigInt(numd(rng)), BigInt(dend(rng))));
  return Poly(std::move(coeffs));
}

CaseResult case_mj(int r) {
  Check c;
  long long n = 2LL * r + 1;
  std::vector<Poly> polys = {Poly(), Poly(1), Poly(1) + Poly::var()};
  std::mt19937_64 rng(20240517u + static_cast<unsigned>(r));
  for (int k = 0; k < 20; ++k) polys.push_back(random_real_poly(rng, 3));

  MPoly one(4, Rational(1));
  for (size_t idx = 0; idx < polys.size(); ++idx) {
    const Poly& p = polys[idx];
    std::string tag = "P#" + std::to_string(idx);
    Mat2 m = build_MP(p, r);
    c.require(mat2_det(m) == one, tag + ": det M_P = 1");
    Endo4 sigmaP = build_sigmaP(p, r);
    c.require(is_involution(sigmaP), tag + ": sigma_P^2 = id");
    c.require(sends_weights_to_opposite(sigmaP, r), tag + ": weights to opposite");
    c.require(verify_hP(p, r).ok, tag + ": h_P identity");
  }
  c.require(verify_quotient_relation(r), "uv = z^n w^2 under the quotient map");
  c.require(fourfold_generation_degree(r, 2 * static_cast<int>(n)) == 2 * n,
            "generation degree 2n");

  auto ideal = fourfold_center_ideal(r);
  int ni = static_cast<int>(n);
  std::vector<MPoly::Exp> expect = {{ni, 0, 0, 2}, {0, ni, 2, 0}, {ni, ni, 0, 0}, {0, 0, 2, 2}};
  std::sort(expect.begin(), expect.end());
  std::sort(ideal.begin(), ideal.end());
  c.require(ideal == expect, "center ideal (u, v, z^n, w^2)");

  // order adjudication: the flipped composition changes s sigma^*(s)
  Poly probe = Poly(1);
  Endo4 flipped = build_sigmaP(probe, r, true);
  MPoly s = MPoly::term(4, MPoly::Exp{0, r, 1, 0}, Rational(1));
  MPoly viaFlipped = s * flipped.apply(s);
  MPoly viaStated = s * build_sigmaP(probe, r).apply(s);
  c.require(!(viaFlipped == viaStated), "composition order is detectable through h_P");

  c.note(std::to_string(polys.size()) + " polynomials checked (3 fixed + 20 seeded random)");
  return {"mj r=" + std::to_string(r), c.ok, c.log.str()};
}

CaseResult case_mj_equiv() {
  Check c;
  Poly z = Poly::var();
  Poly p1 = Poly(1) + z; // 1 + z

  {
    MjResult res = mj_equiv(p1, p1, 2);
    c.require(res.kind == MjResult::Kind::Equivalent && res.c == Rational(1),
              "identical inputs give c = 1");
  }
  for (Rational cc : {Rational(2), Rational(-1), Rational(BigInt(1), BigInt(3))}) {
    // P2(z) = c P1(c^2 z)
    Poly p2;
    for (int k = 0; k <= p1.degree(); ++k)
      p2 += Poly::monomial(p1.coeff(k) * GaussianRational(cc.pow(2 * k + 1)), k);
    MjResult res = mj_equiv(p1, p2, 2);
    c.require(res.kind == MjResult::Kind::Equivalent && res.c == cc,
              "constructed pair recovers c = " + cc.str());
  }
  {
    MjResult res = mj_equiv(Poly(1) + z, Poly(1) - z, 2);
    c.require(res.kind == MjResult::Kind::NotEquivalent, "1+z vs 1-z inequivalent");
  }
  {
    MjResult res = mj_equiv(Poly(1), Poly(2), 1);
    c.require(res.kind == MjResult::Kind::Equivalent && res.c == Rational(2),
              "constants mod z: c = 2");
  }
  {
    // c^3 = 2 has no rational root; congruence is consistent over R
    MjResult res = mj_equiv(z, z * Poly(2), 2);
    c.require(res.kind == MjResult::Kind::Undecided, "irrational c reported as undecided");
  }
  {
    MjResult res = mj_equiv(z, z * z, 2);
    c.require(res.kind == MjResult::Kind::NotEquivalent, "z vs z^2 inequivalent mod z^2");
  }
  c.note("coefficientwise decision checked on constructed and perturbed pairs");
  return {"mj-equiv", c.ok, c.log.str()};
}

} // namespace

std::vector<CaseResult> run_corpus(const CorpusOptions& opts) {
  std::vector<std::pair<std::string, std::function<CaseResult()>>> cases;
  cases.emplace_back("curves", case_curves);
  cases.emplace_back("conic-bundles", case_conic_bundles);
  cases.emplace_back("gutwirth", case_gutwirth);
  cases.emplace_back("moebius", case_moebius);
  bool flip = opts.hopf_sign_flip;
  cases.emplace_back("hopf", [flip] { return case_hopf(flip); });
  for (int p = 1; p <= 4; ++p)
    cases.emplace_back("lens p=" + std::to_string(p), [p] { return case_lens(p); });
  for (int r = 1; r <= 3; ++r)
    cases.emplace_back("downgrade r=" + std::to_string(r), [r] { return case_downgrade(r); });
  for (int r = 1; r <= 3; ++r)
    cases.emplace_back("mj r=" + std::to_string(r), [r] { return case_mj(r); });
  cases.emplace_back("mj-equiv", case_mj_equiv);

  std::vector<size_t> selected;
  for (size_t i = 0; i < cases.size(); ++i)
    if (opts.filter.empty() || cases[i].first.find(opts.filter) != std::string::npos)
      selected.push_back(i);

  std::vector<CaseResult> results(selected.size());
  auto run_one = [&](size_t k) {
    try {
      results[k] = cases[selected[k]].second();
    } catch (const std::exception& e) {
      results[k] = {cases[selected[k]].first, false, std::string("exception: ") + e.what()};
    }
  };
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
  for (long long k = 0; k < static_cast<long long>(selected.size()); ++k)
    run_one(static_cast<size_t>(k));
#else
  for (size_t k = 0; k < selected.size(); ++k) run_one(k);
#endif
  return results;
}

std::string corpus_report(const std::vector<CaseResult>& results) {
  std::ostringstream out;
  size_t passed = 0;
  for (auto& r : results) {
    out << (r.pass ? "PASS" : "FAIL") << "  " << r.name << "\n";
    if (!r.pass && !r.details.empty()) {
      std::istringstream lines(r.details);
      std::string line;
      while (std::getline(lines, line)) out << "      " << line << "\n";
    }
    if (r.pass) ++passed;
  }
  out << passed << "/" << results.size() << " corpus cases passed\n";
  return out.str();
}

bool corpus_all_pass(const std::vector<CaseResult>& results) {
  for (auto& r : results)
    if (!r.pass) return false;
  return !results.empty();
}

} // namespace phscalc

#include "phscalc/classifier.hpp"
#include "phscalc/corpus.hpp"
#include "phscalc/errors.hpp"
#include "phscalc/graded.hpp"
#include "phscalc/parser.hpp"
#include "phscalc/symbolic.hpp"
#include "phscalc/toric.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace phscalc;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitInput = 2;

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw CalcError(Err::BadInput, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int default_mmax() {
  if (const char* env = std::getenv("PHSCALC_MMAX")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 12;
}

int task_validate(const Document& doc) {
  int rc = kExitOk;
  for (auto& decl : doc.pairs) {
    std::cout << "== validate " << decl.name << "\n";
    std::string status = "ok", message;
    try {
      if (decl.is_dpd) {
        DpdPair p = decl.validate_dpd(doc.base);
        std::cout << "  " << p.str() << "\n  result: VALID\n";
      } else {
        PhsPair p = decl.validate_phs(doc.base);
        std::cout << "  " << p.str() << "\n  result: VALID ("
                  << properness_str(p.properness) << ")\n";
      }
    } catch (const CalcError& e) {
      status = "invalid";
      message = e.what();
      std::cout << "  result: INVALID - " << message << "\n";
      rc = kExitValidation;
    }
    std::cout << "[report]\ntask=validate\npair=" << decl.name << "\nstatus=" << status
              << "\n";
    if (!message.empty()) std::cout << "error=" << message << "\n";
  }
  return rc;
}

int task_convert(const Document& doc) {
  int rc = kExitOk;
  for (auto& decl : doc.pairs) {
    std::cout << "== convert " << decl.name << "\n";
    try {
      if (decl.is_dpd) {
        PhsPair p = decl.validate_phs(doc.base);
        std::cout << "  " << p.str() << "\n";
      } else {
        DpdPair p = decl.validate_dpd(doc.base);
        std::cout << "  " << p.str() << "\n";
      }
      std::cout << "[report]\ntask=convert\npair=" << decl.name << "\nstatus=ok\n";
    } catch (const CalcError& e) {
      std::cout << "  conversion failed: " << e.what() << "\n";
      std::cout << "[report]\ntask=convert\npair=" << decl.name << "\nstatus=invalid\n";
      rc = kExitValidation;
    }
  }
  return rc;
}

int task_graded(const Document& doc, int mmax) {
  int rc = kExitOk;
  if (mmax <= 0) mmax = default_mmax();
  for (auto& decl : doc.pairs) {
    std::cout << "== graded " << decl.name << " (mmax " << mmax << ")\n";
    try {
      PhsPair p = decl.validate_phs(doc.base);
      auto [slice, inv] = build_graded(p, mmax);
      std::cout << graded_table(slice, inv);
      std::cout << "  hyperbolic: " << (hyperbolicity_check(slice) ? "yes" : "no") << "\n";
      std::cout << "[report]\ntask=graded\npair=" << decl.name << "\nstatus=ok\n";
    } catch (const CalcError& e) {
      std::cout << "  failed: " << e.what() << "\n";
      std::cout << "[report]\ntask=graded\npair=" << decl.name << "\nstatus=invalid\n";
      rc = kExitValidation;
    }
  }
  return rc;
}

int task_classify(const Document& doc) {
  int rc = kExitOk;
  for (auto& decl : doc.pairs) {
    std::cout << "== classify " << decl.name << "\n";
    try {
      if (is_point_base(*doc.base)) {
        PhsPair p = decl.validate_phs(doc.base);
        GaussianRational h = std::get<RationalFunction>(p.h).constant_value();
        PointCurveClass cls = classify_point_pair(h.re());
        PointCurvePresentation pres = point_invariants(h.re());
        std::cout << "  class: "
                  << (cls == PointCurveClass::Circle ? "Circle" : "ImaginaryCircle") << "\n";
        std::cout << "  relation: " << pres.relation << " = 0 (verified "
                  << (pres.relation_verified ? "yes" : "no") << ")\n";
        std::cout << "[report]\ntask=classify\npair=" << decl.name << "\nclass="
                  << (cls == PointCurveClass::Circle ? "circle" : "imaginary-circle") << "\n";
      } else {
        DpdPair p = decl.validate_dpd(doc.base);
        bool distinct = opposite_form_distinct(p);
        std::cout << "  twisted form (D, -h) "
                  << (distinct ? "is NOT equivalent: two real forms"
                               : "is equivalent: one real form")
                  << "\n";
        std::cout << "[report]\ntask=classify\npair=" << decl.name
                  << "\nreal_forms=" << (distinct ? 2 : 1) << "\n";
      }
    } catch (const CalcError& e) {
      std::cout << "  failed: " << e.what() << "\n";
      std::cout << "[report]\ntask=classify\npair=" << decl.name << "\nstatus=invalid\n";
      rc = kExitValidation;
    }
  }
  return rc;
}

int task_equiv(const Document& doc, const Task& t) {
  if (doc.pairs.size() < 2) {
    std::cout << "equiv needs two pair declarations\n";
    return kExitInput;
  }
  const PairDecl& d1 = t.arg1.empty() ? doc.pairs[0] : doc.pair_by_name(t.arg1);
  const PairDecl& d2 = t.arg2.empty() ? doc.pairs[1] : doc.pair_by_name(t.arg2);
  std::cout << "== equiv " << d1.name << " " << d2.name << "\n";
  try {
    if (is_point_base(*doc.base)) {
      PhsPair p1 = d1.validate_phs(doc.base), p2 = d2.validate_phs(doc.base);
      int s1 = h2_class(std::get<RationalFunction>(p1.h).constant_value());
      int s2 = h2_class(std::get<RationalFunction>(p2.h).constant_value());
      bool eq = s1 == s2;
      std::cout << "  " << (eq ? "EQUIVALENT (same sign class)" : "NOT equivalent (sign classes differ)")
                << "\n[report]\ntask=equiv\nequivalent=" << (eq ? "yes" : "no") << "\n";
      return kExitOk;
    }
    DpdPair p1 = d1.validate_dpd(doc.base), p2 = d2.validate_dpd(doc.base);
    const CurveBase& cb = as_curve(*doc.base);
    if (!cb.is_standard_conjugation()) {
      StandardModel model = standard_model(cb);
      std::cout << "  normalizing tau via chi(z) = (" << model.u.str() << ")*z + ("
                << model.v.str() << ")\n";
      p1 = transport_to_standard(model, p1);
      p2 = transport_to_standard(model, p2);
    }
    EquivResult res = pair_equiv_full(p1, p2);
    if (res.witness) {
      std::cout << "  EQUIVALENT\n  witness " << res.witness->str(base_var(*doc.base))
                << "\n";
      std::cout << "  replay check: "
                << (witness_replays(*res.witness, p1, p2) ? "ok" : "FAILED") << "\n";
      std::cout << "[report]\ntask=equiv\nequivalent=yes\nresidual="
                << res.witness->residual.str() << "\n";
    } else {
      std::cout << "  NOT equivalent: " << res.obstruction
                << "\n[report]\ntask=equiv\nequivalent=no\nobstruction=" << res.obstruction
                << "\n";
    }
    return kExitOk;
  } catch (const CalcError& e) {
    std::cout << "  failed: " << e.what() << "\n[report]\ntask=equiv\nstatus=error\n";
    return kExitValidation;
  }
}

int task_corpus(const std::string& filter) {
  CorpusOptions opts;
  opts.filter = filter;
  auto results = run_corpus(opts);
  std::cout << corpus_report(results);
  return corpus_all_pass(results) ? kExitOk : kExitValidation;
}

int run_tasks(const Document& doc) {
  int rc = kExitOk;
  for (auto& t : doc.tasks) {
    int r = kExitOk;
    switch (t.kind) {
      case Task::Kind::Validate: r = task_validate(doc); break;
      case Task::Kind::Convert: r = task_convert(doc); break;
      case Task::Kind::Graded: r = task_graded(doc, t.mmax); break;
      case Task::Kind::Classify: r = task_classify(doc); break;
      case Task::Kind::Equiv: r = task_equiv(doc, t); break;
      case Task::Kind::Corpus: r = task_corpus(t.arg1); break;
    }
    rc = std::max(rc, r);
  }
  return rc;
}

int with_document(const std::string& path, Task task) {
  Document doc = parse(read_input(path));
  bool has = false;
  for (auto& t : doc.tasks) has = has || t.kind == task.kind;
  int rc = run_tasks(doc);
  if (!has) {
    Document once = std::move(doc);
    once.tasks = {task};
    rc = std::max(rc, run_tasks(once));
  }
  return rc;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact calculator for segmental divisors, real structures and circle actions"};
  app.require_subcommand(1);

  std::string file = "-";
  int mmax = 0;
  std::string pairA, pairB, filter, weights, labels, pText, p2Text;
  int rParam = 1;

  auto* validate = app.add_subcommand("validate", "validate declared pairs");
  validate->add_option("file", file, "input document (default stdin)");

  auto* convert = app.add_subcommand("convert", "convert pairs between phs and dpd form");
  convert->add_option("file", file);

  auto* graded = app.add_subcommand("graded", "print graded slices");
  graded->add_option("file", file);
  graded->add_option("--mmax", mmax, "slice range (default 12 or PHSCALC_MMAX)");

  auto* classify = app.add_subcommand("classify", "classify pairs / real forms");
  classify->add_option("file", file);

  auto* equiv = app.add_subcommand("equiv", "decide equivariant isomorphism of two pairs");
  equiv->add_option("file", file);
  equiv->add_option("--first", pairA, "first pair name");
  equiv->add_option("--second", pairB, "second pair name");

  auto* runDoc = app.add_subcommand("run", "run the tasks listed in a document");
  runDoc->add_option("file", file);

  auto* downgrade = app.add_subcommand("downgrade", "toric downgrade of a weight vector");
  downgrade->add_option("--weights", weights, "comma separated integers")->required();
  downgrade->add_option("--labels", labels, "comma separated ray labels");

  auto* mj = app.add_subcommand("mj", "Moser-Jauslin family computations");
  auto* mjVerify = mj->add_subcommand("verify", "verify det, involution and h_P");
  mjVerify->add_option("--P", pText, "real polynomial")->required();
  mjVerify->add_option("--r", rParam, "parameter r >= 1")->required();
  auto* mjEquiv = mj->add_subcommand("equiv", "decide P2(z) = c P1(c^2 z) mod z^r");
  mjEquiv->add_option("--P1", pText)->required();
  mjEquiv->add_option("--P2", p2Text)->required();
  mjEquiv->add_option("--r", rParam)->required();

  auto* corpus = app.add_subcommand("corpus", "run the built-in example corpus");
  corpus->add_option("--filter", filter, "substring filter on case names");

  CLI11_PARSE(app, argc, argv);

  try {
    if (validate->parsed()) return with_document(file, {Task::Kind::Validate});
    if (convert->parsed()) return with_document(file, {Task::Kind::Convert});
    if (graded->parsed()) {
      Task t{Task::Kind::Graded};
      t.mmax = mmax;
      return with_document(file, t);
    }
    if (classify->parsed()) return with_document(file, {Task::Kind::Classify});
    if (equiv->parsed()) {
      Task t{Task::Kind::Equiv};
      t.arg1 = pairA;
      t.arg2 = pairB;
      return with_document(file, t);
    }
    if (runDoc->parsed()) return run_tasks(parse(read_input(file)));
    if (downgrade->parsed()) {
      IVec w;
      std::stringstream ss(weights);
      std::string tok;
      while (std::getline(ss, tok, ',')) w.emplace_back(tok);
      std::vector<std::string> labs;
      if (!labels.empty()) {
        std::stringstream ls(labels);
        while (std::getline(ls, tok, ',')) labs.push_back(tok);
      }
      DowngradeResult res = downgrade_segdiv(w, labs);
      std::cout << res.str();
      return kExitOk;
    }
    if (mjVerify->parsed()) {
      Poly p = parse_poly(pText, "w");
      Mat2 m = build_MP(p, rParam);
      bool det = mat2_det(m) == MPoly(4, Rational(1));
      bool inv = is_involution(build_sigmaP(p, rParam));
      HpReport hp = verify_hP(p, rParam);
      std::cout << "det M_P = 1: " << (det ? "PASS" : "FAIL") << "\n";
      std::cout << "sigma_P^2 = id: " << (inv ? "PASS" : "FAIL") << "\n";
      std::cout << "h_P identity: " << (hp.ok ? "PASS" : "FAIL") << "\n";
      if (!hp.ok)
        std::cout << "difference: " << hp.difference.str(mj_names()) << "\n";
      return det && inv && hp.ok ? kExitOk : kExitValidation;
    }
    if (mjEquiv->parsed()) {
      MjResult res = mj_equiv(parse_poly(pText, "z"), parse_poly(p2Text, "z"), rParam);
      std::cout << res.str() << "\n";
      return kExitOk;
    }
    if (corpus->parsed()) return task_corpus(filter);
  } catch (const CalcError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitOk;
}

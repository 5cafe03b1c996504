#ifndef PHSCALC_CORPUS_HPP
#define PHSCALC_CORPUS_HPP

#include "phscalc/classifier.hpp"
#include "phscalc/graded.hpp"
#include "phscalc/pairs.hpp"

#include <string>
#include <vector>

namespace phscalc {

struct CorpusOptions {
  std::string filter;        // substring on case names
  bool hopf_sign_flip = false; // negative control used by tests
};

struct CaseResult {
  std::string name;
  bool pass = false;
  std::string details;
};

std::vector<CaseResult> run_corpus(const CorpusOptions& opts = {});
std::string corpus_report(const std::vector<CaseResult>& results);
bool corpus_all_pass(const std::vector<CaseResult>& results);

// shared builders
BasePtr standard_line_base(const std::string& var = "z");
BasePtr point_base();
BasePtr hopf_base(bool sign_flip = false);
// the DPD pair (0, P) on (A^1, conj) in coordinate w
DpdPair conic_bundle_pair(const Poly& p);
// ([0,1] (x) {0}, z)
PhsPair gutwirth_pair();
// ({1/2} (x) {0}, z)
PhsPair moebius_pair();
// ({p} (x) Du, oneMinusZ^p)
PhsPair lens_pair(int p, bool sign_flip = false);

} // namespace phscalc

#endif

#ifndef PHSCALC_PARSER_HPP
#define PHSCALC_PARSER_HPP

#include "phscalc/pairs.hpp"

#include <optional>
#include <string>
#include <vector>

namespace phscalc {

/// A pair declaration as written, before validation.
struct PairDecl {
  std::string name;
  bool is_dpd = false;
  std::optional<SegmentalDivisor> segdiv; // phs form
  std::optional<WeilQDivisor> qdiv;       // dpd form
  BaseFunction h;

  PhsPair validate_phs(const BasePtr& base) const;
  DpdPair validate_dpd(const BasePtr& base) const;
};

struct Task {
  enum class Kind { Validate, Convert, Graded, Classify, Equiv, Corpus };
  Kind kind;
  int mmax = 0;           // graded
  std::string arg1, arg2; // equiv pair names / corpus filter
};

struct Document {
  BasePtr base;
  std::vector<PairDecl> pairs;
  std::vector<std::pair<std::string, SegmentalDivisor>> segdivs;
  std::vector<std::pair<std::string, WeilQDivisor>> divisors;
  std::vector<Task> tasks;

  const PairDecl& pair_by_name(const std::string& name) const;
};

// position-annotated SyntaxError / UndeclaredSymbol on bad input
Document parse(const std::string& text);
// canonical form; parse(print(d)) reproduces d
std::string print(const Document& d);
bool documents_equal(const Document& a, const Document& b);

// expression helpers reused by the CLI
RationalFunction parse_function(const std::string& text, const std::string& var);
Poly parse_poly(const std::string& text, const std::string& var);

} // namespace phscalc

#endif

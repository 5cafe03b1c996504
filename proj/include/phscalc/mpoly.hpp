#ifndef PHSCALC_MPOLY_HPP
#define PHSCALC_MPOLY_HPP

#include "phscalc/numeric.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace phscalc {

/// Sparse multivariate polynomial over Q with a fixed number of variables.
/// Terms are kept in graded-lex order so printing is deterministic.
class MPoly {
public:
  using Exp = std::vector<int>;

  struct GradedLex {
    bool operator()(const Exp& a, const Exp& b) const;
  };
  using TermMap = std::map<Exp, Rational, GradedLex>;

  explicit MPoly(int nvars) : nvars_(nvars) {}
  MPoly(int nvars, const Rational& c);

  static MPoly variable(int nvars, int index);
  static MPoly term(int nvars, Exp e, Rational c);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }
  Rational coeff(const Exp& e) const;

  MPoly operator-() const;
  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  MPoly& operator*=(const MPoly& o) { return *this = *this * o; }
  MPoly operator*(const Rational& c) const;

  bool operator==(const MPoly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

  MPoly pow(unsigned e) const;
  // simultaneous substitution; images[k] replaces variable k
  MPoly substitute(const std::vector<MPoly>& images) const;
  // weight of the exponent vector under integer weights; nullopt if mixed
  std::optional<long long> homogeneous_weight(const std::vector<long long>& weights) const;

  std::string str(const std::vector<std::string>& names) const;

private:
  void insert_term(const Exp& e, const Rational& c);
  int nvars_;
  TermMap terms_;
};

} // namespace phscalc

#endif

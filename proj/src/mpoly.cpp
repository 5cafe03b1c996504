#include "phscalc/mpoly.hpp"

#include "phscalc/errors.hpp"

#include <numeric>

namespace phscalc {

bool MPoly::GradedLex::operator()(const Exp& a, const Exp& b) const {
  int da = std::accumulate(a.begin(), a.end(), 0);
  int db = std::accumulate(b.begin(), b.end(), 0);
  if (da != db) return da < db;
  return a < b;
}

MPoly::MPoly(int nvars, const Rational& c) : nvars_(nvars) {
  if (!c.is_zero()) terms_.emplace(Exp(nvars, 0), c);
}

MPoly MPoly::variable(int nvars, int index) {
  Exp e(nvars, 0);
  e[index] = 1;
  return term(nvars, std::move(e), Rational(1));
}

MPoly MPoly::term(int nvars, Exp e, Rational c) {
  MPoly p(nvars);
  if (!c.is_zero()) p.terms_.emplace(std::move(e), std::move(c));
  return p;
}

Rational MPoly::coeff(const Exp& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void MPoly::insert_term(const Exp& e, const Rational& c) {
  auto [it, fresh] = terms_.emplace(e, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

MPoly MPoly::operator-() const {
  MPoly r(nvars_);
  for (auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

MPoly& MPoly::operator+=(const MPoly& o) {
  for (auto& [e, c] : o.terms_) insert_term(e, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  for (auto& [e, c] : o.terms_) insert_term(e, -c);
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  MPoly r(a.nvars_);
  MPoly::Exp e(a.nvars_);
  for (auto& [ea, ca] : a.terms_)
    for (auto& [eb, cb] : b.terms_) {
      for (int k = 0; k < a.nvars_; ++k) e[k] = ea[k] + eb[k];
      r.insert_term(e, ca * cb);
    }
  return r;
}

MPoly MPoly::operator*(const Rational& c) const {
  MPoly r(nvars_);
  if (c.is_zero()) return r;
  for (auto& [e, v] : terms_) r.terms_.emplace(e, v * c);
  return r;
}

MPoly MPoly::pow(unsigned e) const {
  MPoly acc(nvars_, Rational(1)), base = *this;
  while (e) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

MPoly MPoly::substitute(const std::vector<MPoly>& images) const {
  if (static_cast<int>(images.size()) != nvars_)
    throw CalcError(Err::BadInput, "substitution arity mismatch");
  int target = images.empty() ? nvars_ : images[0].nvars();
  MPoly r(target);
  for (auto& [e, c] : terms_) {
    MPoly t(target, c);
    for (int k = 0; k < nvars_; ++k)
      if (e[k] > 0) t *= images[k].pow(static_cast<unsigned>(e[k]));
    r += t;
  }
  return r;
}

std::optional<long long> MPoly::homogeneous_weight(const std::vector<long long>& weights) const {
  std::optional<long long> w;
  for (auto& [e, c] : terms_) {
    long long tw = 0;
    for (int k = 0; k < nvars_; ++k) tw += weights[k] * e[k];
    if (!w) w = tw;
    else if (*w != tw) return std::nullopt;
  }
  return w ? w : std::optional<long long>(0);
}

std::string MPoly::str(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    std::string mono;
    for (int k = 0; k < nvars_; ++k) {
      if (e[k] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += names[k];
      if (e[k] > 1) mono += "^" + std::to_string(e[k]);
    }
    std::string term;
    if (mono.empty()) term = c.str();
    else if (c == Rational(1)) term = mono;
    else if (c == Rational(-1)) term = "-" + mono;
    else term = c.str() + "*" + mono;
    if (out.empty()) out = term;
    else if (term[0] == '-') out += "-" + term.substr(1);
    else out += "+" + term;
  }
  return out;
}

} // namespace phscalc

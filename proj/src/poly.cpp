#include "phscalc/poly.hpp"

#include "phscalc/errors.hpp"

#include <algorithm>
#include <set>

namespace phscalc {

Poly::Poly(GaussianRational c) {
  if (!c.is_zero()) c_.push_back(std::move(c));
}

Poly::Poly(std::vector<GaussianRational> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::var() { return Poly(std::vector<GaussianRational>{GaussianRational(0), GaussianRational(1)}); }

Poly Poly::monomial(GaussianRational c, int deg) {
  if (c.is_zero()) return Poly();
  std::vector<GaussianRational> v(deg + 1);
  v[deg] = std::move(c);
  return Poly(std::move(v));
}

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

const GaussianRational& Poly::leading() const {
  if (c_.empty()) throw CalcError(Err::BadInput, "leading coefficient of zero polynomial");
  return c_.back();
}

GaussianRational Poly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return GaussianRational();
  return c_[k];
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) { return *this += -o; }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<GaussianRational> r(a.c_.size() + b.c_.size() - 1);
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j)
      r[i + j] += a.c_[i] * b.c_[j];
  return Poly(std::move(r));
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

std::strong_ordering Poly::operator<=>(const Poly& o) const {
  if (c_.size() != o.c_.size())
    return c_.size() < o.c_.size() ? std::strong_ordering::less : std::strong_ordering::greater;
  for (size_t i = c_.size(); i-- > 0;) {
    auto c = c_[i] <=> o.c_[i];
    if (c != std::strong_ordering::equal) return c;
  }
  return std::strong_ordering::equal;
}

Poly Poly::pow(unsigned e) const {
  Poly acc(GaussianRational(1)), base = *this;
  while (e) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly();
  std::vector<GaussianRational> r(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * GaussianRational(static_cast<long long>(i));
  return Poly(std::move(r));
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  Poly r = *this;
  GaussianRational lc = leading();
  for (auto& c : r.c_) c /= lc;
  return r;
}

GaussianRational Poly::eval(const GaussianRational& x) const {
  GaussianRational acc;
  for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

Poly Poly::compose(const Poly& inner) const {
  Poly acc;
  for (size_t i = c_.size(); i-- > 0;) acc = acc * inner + Poly(c_[i]);
  return acc;
}

Poly Poly::conj_coeffs() const {
  Poly r = *this;
  for (auto& c : r.c_) c = c.conj();
  return r;
}

bool Poly::has_real_coeffs() const {
  for (auto& c : c_)
    if (!c.is_real()) return false;
  return true;
}

std::string Poly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (size_t i = c_.size(); i-- > 0;) {
    const GaussianRational& c = c_[i];
    if (c.is_zero()) continue;
    std::string term;
    bool needsParens = !c.is_real() && !c.re().is_zero();
    std::string cs = c.str();
    if (i == 0) {
      term = needsParens ? "(" + cs + ")" : cs;
    } else {
      std::string v = var + (i > 1 ? "^" + std::to_string(i) : "");
      if (c == GaussianRational(1)) term = v;
      else if (c == GaussianRational(-1)) term = "-" + v;
      else term = (needsParens ? "(" + cs + ")" : cs) + "*" + v;
    }
    if (out.empty()) {
      out = term;
    } else if (!term.empty() && term[0] == '-') {
      out += "-" + term.substr(1);
    } else {
      out += "+" + term;
    }
  }
  return out;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw CalcError(Err::BadInput, "polynomial division by zero");
  Poly rem = a, quot;
  int db = b.degree();
  GaussianRational lb = b.leading();
  while (!rem.is_zero() && rem.degree() >= db) {
    GaussianRational q = rem.leading() / lb;
    int shift = rem.degree() - db;
    Poly t = Poly::monomial(q, shift);
    quot += t;
    rem -= t * b;
  }
  return {quot, rem};
}

Poly poly_gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.is_zero() ? a : a.monic();
}

Poly poly_conj(const Poly& p) { return p.conj_coeffs(); }

namespace {

struct GaussInt {
  BigInt re, im;
  BigInt norm() const { return re * re + im * im; }
  bool is_zero() const { return re == 0 && im == 0; }
};

GaussInt gi_mul(const GaussInt& a, const GaussInt& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

// true if d divides g in Z[i]
bool gi_divides(const GaussInt& d, const GaussInt& g) {
  BigInt n = d.norm();
  if (n == 0) return false;
  GaussInt prod = gi_mul(g, {d.re, -d.im});
  return prod.re % n == 0 && prod.im % n == 0;
}

// all Gaussian-integer divisors of g, including unit multiples
std::vector<GaussInt> gi_divisors(const GaussInt& g) {
  std::vector<GaussInt> out;
  BigInt N = g.norm();
  for (const BigInt& n : positive_divisors(N)) {
    for (BigInt x = 0; x * x <= n; ++x) {
      BigInt y2 = n - x * x;
      BigInt y = isqrt_floor(y2);
      if (y * y != y2) continue;
      // all sign/swap variants of (x, y)
      BigInt xs[2] = {x, y};
      for (int swap = 0; swap < 2; ++swap) {
        BigInt a = xs[swap], b = xs[1 - swap];
        for (int sa = 0; sa < 2; ++sa)
          for (int sb = 0; sb < 2; ++sb) {
            GaussInt d{sa ? -a : a, sb ? -b : b};
            if (d.is_zero()) continue;
            if (gi_divides(d, g)) out.push_back(d);
          }
      }
    }
  }
  return out;
}

// clear denominators and Gaussian-integer content
std::vector<GaussInt> integralize(const Poly& p) {
  BigInt l = 1;
  for (auto& c : p.coeffs()) l = big_lcm(big_lcm(l, c.re().den()), c.im().den());
  std::vector<GaussInt> v;
  BigInt g = 0;
  for (auto& c : p.coeffs()) {
    GaussInt gi{c.re().num() * (l / c.re().den()), c.im().num() * (l / c.im().den())};
    g = big_gcd(g, big_gcd(gi.re, gi.im));
    v.push_back(std::move(gi));
  }
  if (g > 1)
    for (auto& gi : v) { gi.re /= g; gi.im /= g; }
  return v;
}

} // namespace

LinearFactors factor_linear(const Poly& p) {
  if (p.is_zero()) throw CalcError(Err::BadInput, "factor_linear of zero polynomial");
  LinearFactors out;
  out.lead = p.leading();
  Poly work = p.monic();

  // split off z^k
  int zmult = 0;
  while (!work.is_zero() && work.coeff(0).is_zero()) {
    work = divmod(work, Poly::var()).first;
    ++zmult;
  }
  if (zmult > 0) out.roots.emplace_back(GaussianRational(0), zmult);

  if (work.degree() >= 1) {
    // squarefree part keeps the candidate search small
    Poly sf = work;
    Poly g = poly_gcd(work, work.derivative());
    if (g.degree() >= 1) sf = divmod(work, g).first;

    std::set<GaussianRational> candidates;
    auto v = integralize(sf);
    GaussInt a0 = v.front(), an = v.back();
    for (const GaussInt& r : gi_divisors(a0))
      for (const GaussInt& s : gi_divisors(an)) {
        GaussianRational num(Rational(r.re), Rational(r.im));
        GaussianRational den(Rational(s.re), Rational(s.im));
        candidates.insert(num / den);
      }

    for (const GaussianRational& cand : candidates) {
      if (!sf.eval(cand).is_zero()) continue;
      Poly lin = Poly::var() - Poly(cand);
      int mult = 0;
      while (true) {
        auto [q, r] = divmod(work, lin);
        if (!r.is_zero()) break;
        work = q;
        ++mult;
      }
      if (mult > 0) out.roots.emplace_back(cand, mult);
    }
  }

  std::sort(out.roots.begin(), out.roots.end(),
            [](auto& a, auto& b) { return a.first < b.first; });
  out.remainder = work.monic();
  return out;
}

// ---- RationalFunction ----

RationalFunction::RationalFunction(Poly num) : num_(std::move(num)), den_(GaussianRational(1)) {}

RationalFunction::RationalFunction(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw CalcError(Err::BadInput, "zero denominator");
  normalize();
}

void RationalFunction::normalize() {
  if (num_.is_zero()) {
    den_ = Poly(GaussianRational(1));
    return;
  }
  Poly g = poly_gcd(num_, den_);
  if (g.degree() >= 1) {
    num_ = divmod(num_, g).first;
    den_ = divmod(den_, g).first;
  }
  GaussianRational lc = den_.leading();
  if (!(lc == GaussianRational(1))) {
    den_ = den_.monic();
    Poly scale{GaussianRational(1) / lc};
    num_ = num_ * scale;
  }
}

GaussianRational RationalFunction::constant_value() const {
  if (!is_constant()) throw CalcError(Err::BadInput, "not a constant");
  return num_.constant_value() / den_.constant_value();
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
  Poly n = num_ * o.den_ + o.num_ * den_;
  Poly d = den_ * o.den_;
  *this = RationalFunction(std::move(n), std::move(d));
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) { return *this += -o; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
  *this = RationalFunction(num_ * o.num_, den_ * o.den_);
  return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) {
  if (o.is_zero()) throw CalcError(Err::BadInput, "division by zero");
  *this = RationalFunction(num_ * o.den_, den_ * o.num_);
  return *this;
}

RationalFunction RationalFunction::pow(long long e) const {
  if (e == 0) return RationalFunction(GaussianRational(1));
  if (e < 0) return inv().pow(-e);
  return RationalFunction(num_.pow(static_cast<unsigned>(e)), den_.pow(static_cast<unsigned>(e)));
}

RationalFunction RationalFunction::inv() const {
  if (is_zero()) throw CalcError(Err::BadInput, "inverse of zero");
  return RationalFunction(den_, num_);
}

RationalFunction RationalFunction::conj_coeffs() const {
  return RationalFunction(num_.conj_coeffs(), den_.conj_coeffs());
}

RationalFunction RationalFunction::compose(const Poly& inner) const {
  return RationalFunction(num_.compose(inner), den_.compose(inner));
}

std::string RationalFunction::str(const std::string& var) const {
  if (is_polynomial()) return num_.str(var);
  std::string n = num_.str(var), d = den_.str(var);
  auto wrap = [](const std::string& s) {
    return s.find_first_of("+-", 1) == std::string::npos && s.find('*') == std::string::npos
               ? s
               : "(" + s + ")";
  };
  return wrap(n) + "/" + wrap(d);
}

} // namespace phscalc

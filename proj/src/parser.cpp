#include "phscalc/parser.hpp"

#include "phscalc/errors.hpp"

#include <cctype>
#include <sstream>

namespace phscalc {

namespace {

struct Token {
  enum class Kind { Ident, Number, Imag, Punct, End };
  Kind kind = Kind::End;
  std::string text;  // Ident
  BigInt value;      // Number / Imag
  char punct = 0;
  int line = 1, col = 1;
};

std::vector<Token> lex(const std::string& text) {
  std::vector<Token> out;
  int line = 1, col = 1;
  size_t i = 0, n = text.size();
  auto advance = [&](size_t k) {
    for (size_t t = 0; t < k; ++t) {
      if (text[i + t] == '\n') { ++line; col = 1; }
      else ++col;
    }
    i += k;
  };
  while (i < n) {
    char c = text[i];
    if (c == '#') {
      size_t j = i;
      while (j < n && text[j] != '\n') ++j;
      advance(j - i);
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) { advance(1); continue; }
    Token t;
    t.line = line;
    t.col = col;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t j = i;
      while (j < n && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      t.value = BigInt(text.substr(i, j - i));
      // a number glued to `i` is an imaginary literal: 3i
      if (j < n && text[j] == 'i' &&
          (j + 1 >= n || !std::isalnum(static_cast<unsigned char>(text[j + 1])))) {
        t.kind = Token::Kind::Imag;
        ++j;
      } else {
        t.kind = Token::Kind::Number;
      }
      advance(j - i);
      out.push_back(std::move(t));
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t j = i;
      while (j < n && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) ++j;
      t.kind = Token::Kind::Ident;
      t.text = text.substr(i, j - i);
      advance(j - i);
      out.push_back(std::move(t));
      continue;
    }
    if (std::string("[](){};,=+-*/^").find(c) != std::string::npos) {
      t.kind = Token::Kind::Punct;
      t.punct = c;
      advance(1);
      out.push_back(std::move(t));
      continue;
    }
    throw CalcError(Err::SyntaxError, "unexpected character '" + std::string(1, c) + "' at " +
                                          std::to_string(line) + ":" + std::to_string(col));
  }
  Token end;
  end.line = line;
  end.col = col;
  out.push_back(std::move(end));
  return out;
}

enum class BaseKind { None, Point, Curve, Presented };

class Parser {
public:
  explicit Parser(const std::string& text) : toks_(lex(text)) {}

  Document run() {
    while (!at_end()) {
      statement();
      accept_punct(';');
    }
    finalize();
    return std::move(doc_);
  }

  RationalFunction standalone_function(const std::string& var) {
    base_kind_ = BaseKind::Curve;
    coord_ = var;
    RationalFunction f = expr();
    if (!at_end()) fail("trailing input after expression");
    return f;
  }

private:
  std::vector<Token> toks_;
  size_t pos_ = 0;
  Document doc_;

  BaseKind base_kind_ = BaseKind::None;
  GaussianRational tau_a_{1}, tau_b_{0};
  std::optional<std::string> coord_;
  std::vector<std::pair<std::string, Poly>> curve_primes_;
  PresentedBase presented_;
  int auto_pair_ = 0;

  [[noreturn]] void fail(const std::string& msg) const {
    const Token& t = toks_[pos_ < toks_.size() ? pos_ : toks_.size() - 1];
    throw CalcError(Err::SyntaxError,
                    msg + " at " + std::to_string(t.line) + ":" + std::to_string(t.col));
  }

  const Token& peek(size_t off = 0) const {
    size_t i = pos_ + off;
    return i < toks_.size() ? toks_[i] : toks_.back();
  }
  bool at_end() const { return peek().kind == Token::Kind::End; }
  const Token& get() {
    const Token& t = peek();
    if (!at_end()) ++pos_;
    return t;
  }
  bool is_punct(char c, size_t off = 0) const {
    return peek(off).kind == Token::Kind::Punct && peek(off).punct == c;
  }
  bool is_ident(const std::string& s, size_t off = 0) const {
    return peek(off).kind == Token::Kind::Ident && peek(off).text == s;
  }
  bool accept_punct(char c) {
    if (is_punct(c)) { ++pos_; return true; }
    return false;
  }
  void expect_punct(char c) {
    if (!accept_punct(c)) fail(std::string("expected '") + c + "'");
  }
  bool accept_ident(const std::string& s) {
    if (is_ident(s)) { ++pos_; return true; }
    return false;
  }
  void expect_ident(const std::string& s) {
    if (!accept_ident(s)) fail("expected '" + s + "'");
  }
  std::string expect_name() {
    if (peek().kind != Token::Kind::Ident) fail("expected an identifier");
    return get().text;
  }
  BigInt expect_number() {
    if (peek().kind != Token::Kind::Number) fail("expected a number");
    return get().value;
  }

  // ---- statements ----

  void statement() {
    if (accept_ident("base")) return base_stmt();
    if (accept_ident("prime")) return prime_stmt();
    if (accept_ident("func")) return func_stmt();
    if (accept_ident("pair")) return pair_stmt();
    if (accept_ident("segdiv")) return segdiv_stmt();
    if (accept_ident("divisor")) return divisor_stmt();
    if (accept_ident("validate")) { doc_.tasks.push_back({Task::Kind::Validate}); return; }
    if (accept_ident("convert")) { doc_.tasks.push_back({Task::Kind::Convert}); return; }
    if (accept_ident("graded")) {
      Task t{Task::Kind::Graded};
      if (peek().kind == Token::Kind::Number)
        t.mmax = static_cast<int>(expect_number().convert_to<long long>());
      doc_.tasks.push_back(std::move(t));
      return;
    }
    if (accept_ident("classify")) { doc_.tasks.push_back({Task::Kind::Classify}); return; }
    if (accept_ident("equiv")) {
      Task t{Task::Kind::Equiv};
      if (peek().kind == Token::Kind::Ident) {
        t.arg1 = expect_name();
        t.arg2 = expect_name();
      }
      doc_.tasks.push_back(std::move(t));
      return;
    }
    if (accept_ident("corpus")) {
      Task t{Task::Kind::Corpus};
      if (peek().kind == Token::Kind::Ident) t.arg1 = expect_name();
      doc_.tasks.push_back(std::move(t));
      return;
    }
    fail("unknown statement");
  }

  void base_stmt() {
    if (base_kind_ != BaseKind::None) fail("base already declared");
    if (accept_ident("point")) {
      base_kind_ = BaseKind::Point;
      return;
    }
    if (accept_ident("curve")) {
      base_kind_ = BaseKind::Curve;
      if (accept_ident("conj")) {
        // standard conjugation
      } else {
        expect_ident("tau");
        expect_ident("a");
        expect_punct('=');
        tau_a_ = const_expr();
        expect_punct(',');
        expect_ident("b");
        expect_punct('=');
        tau_b_ = const_expr();
      }
      if (accept_ident("var")) {
        std::string v = expect_name();
        if (v == "i") fail("the coordinate cannot be named i");
        coord_ = v;
      }
      return;
    }
    if (accept_ident("presented")) {
      base_kind_ = BaseKind::Presented;
      return;
    }
    fail("expected point, curve or presented");
  }

  void prime_stmt() {
    std::string name = expect_name();
    if (base_kind_ == BaseKind::Presented) {
      expect_ident("tau");
      presented_.add_prime(name, expect_name());
      return;
    }
    if (base_kind_ != BaseKind::Curve) fail("prime declarations need a curve or presented base");
    expect_punct('=');
    RationalFunction f = expr();
    if (!f.is_polynomial()) fail("declared primes must be polynomials");
    curve_primes_.emplace_back(name, f.num().monic());
  }

  void func_stmt() {
    if (base_kind_ != BaseKind::Presented) fail("func declarations need a presented base");
    std::string name = expect_name();
    expect_ident("div");
    std::map<std::string, BigInt> divisor = int_divisor();
    expect_ident("tau");
    FunctionWord tau = word();
    presented_.add_function(name, std::move(divisor), std::move(tau));
  }

  void pair_stmt() {
    PairDecl decl;
    if (peek().kind == Token::Kind::Ident && !is_ident("phs") && !is_ident("dpd"))
      decl.name = expect_name();
    else
      decl.name = "p" + std::to_string(++auto_pair_);
    if (accept_ident("phs")) decl.is_dpd = false;
    else if (accept_ident("dpd")) decl.is_dpd = true;
    else fail("expected phs or dpd");
    expect_ident("D");
    expect_punct('=');
    if (decl.is_dpd) decl.qdiv = qdiv_expr();
    else decl.segdiv = segdiv_expr();
    expect_punct(',');
    expect_ident("h");
    expect_punct('=');
    decl.h = h_expr();
    doc_.pairs.push_back(std::move(decl));
  }

  void segdiv_stmt() {
    std::string name;
    if (peek().kind == Token::Kind::Ident && is_punct('=', 1)) {
      name = expect_name();
      expect_punct('=');
    }
    doc_.segdivs.emplace_back(name, segdiv_expr());
  }

  void divisor_stmt() {
    std::string name;
    if (peek().kind == Token::Kind::Ident && is_punct('=', 1)) {
      name = expect_name();
      expect_punct('=');
    }
    doc_.divisors.emplace_back(name, qdiv_expr());
  }

  // ---- expressions over the base coordinate ----

  RationalFunction expr() {
    RationalFunction acc = term();
    while (is_punct('+') || is_punct('-')) {
      char op = get().punct;
      RationalFunction rhs = term();
      if (op == '+') acc += rhs;
      else acc -= rhs;
    }
    return acc;
  }

  RationalFunction term() {
    RationalFunction acc = factor();
    while (is_punct('*') || is_punct('/')) {
      char op = get().punct;
      RationalFunction rhs = factor();
      if (op == '*') acc *= rhs;
      else acc /= rhs;
    }
    return acc;
  }

  RationalFunction factor() {
    if (accept_punct('-')) return -factor();
    RationalFunction base = primary();
    if (accept_punct('^')) {
      bool neg = accept_punct('-');
      long long e = expect_number().convert_to<long long>();
      base = base.pow(neg ? -e : e);
    }
    return base;
  }

  RationalFunction primary() {
    if (peek().kind == Token::Kind::Number)
      return RationalFunction(GaussianRational(Rational(get().value)));
    if (peek().kind == Token::Kind::Imag)
      return RationalFunction(GaussianRational(Rational(0), Rational(get().value)));
    if (peek().kind == Token::Kind::Ident) {
      std::string name = get().text;
      if (name == "i") return RationalFunction(GaussianRational::i());
      if (base_kind_ == BaseKind::Point)
        throw CalcError(Err::UndeclaredSymbol, "no coordinate on the point base: " + name);
      if (!coord_) coord_ = name;
      if (*coord_ != name)
        throw CalcError(Err::UndeclaredSymbol, "unknown symbol " + name);
      return RationalFunction::var();
    }
    if (accept_punct('(')) {
      RationalFunction f = expr();
      expect_punct(')');
      return f;
    }
    fail("expected a value");
  }

  GaussianRational const_expr() {
    RationalFunction f = expr();
    if (!f.is_constant()) fail("expected a constant");
    return f.constant_value();
  }

  // ---- divisors ----

  PrimeDivisor primeref() {
    if (accept_punct('{')) {
      GaussianRational p = const_expr();
      expect_punct('}');
      if (base_kind_ == BaseKind::Presented) fail("point primes need a curve base");
      return PrimeDivisor::point(std::move(p));
    }
    if (peek().kind == Token::Kind::Ident) {
      std::string name = peek().text;
      if (name == "V" && is_punct('(', 1)) {
        get();
        expect_punct('(');
        RationalFunction f = expr();
        expect_punct(')');
        if (!f.is_polynomial() || f.num().degree() < 2)
          fail("V(...) takes a nonlinear polynomial");
        return PrimeDivisor::opaque(f.num().monic());
      }
      get();
      if (base_kind_ == BaseKind::Presented) {
        if (!presented_.has_prime(name))
          throw CalcError(Err::UndeclaredSymbol, "unknown prime " + name);
        return PrimeDivisor::named(name);
      }
      for (auto& [n, p] : curve_primes_)
        if (n == name) return PrimeDivisor::opaque(p, n);
      throw CalcError(Err::UndeclaredSymbol, "unknown prime " + name);
    }
    fail("expected a prime divisor");
  }

  Rational rational_literal() {
    bool neg = accept_punct('-');
    bool parens = false;
    if (is_punct('(')) { parens = true; ++pos_; if (accept_punct('-')) neg = !neg; }
    BigInt num = expect_number();
    BigInt den = 1;
    if (accept_punct('/')) den = expect_number();
    if (parens) expect_punct(')');
    Rational r(num, den);
    return neg ? -r : r;
  }

  Segment segment() {
    if (accept_punct('[')) {
      Rational lo = signed_const();
      expect_punct(',');
      Rational hi = signed_const();
      expect_punct(']');
      if (lo > hi) fail("segment needs lo <= hi");
      return Segment(lo, hi);
    }
    if (accept_punct('{')) {
      Rational a = signed_const();
      expect_punct('}');
      return Segment::singleton(a);
    }
    return Segment::singleton(rational_literal());
  }

  Rational signed_const() {
    GaussianRational g = const_expr();
    if (!g.is_real()) fail("expected a rational constant");
    return g.re();
  }

  SegmentalDivisor segdiv_expr() {
    SegmentalDivisor d;
    if (peek().kind == Token::Kind::Number && peek().value == 0 && !is_punct('*', 1) &&
        !is_punct('/', 1) && !is_punct('(', 1)) {
      get();
      return d;
    }
    while (true) {
      Segment s = segment();
      PrimeDivisor p = [&] {
        if (accept_punct('*')) return primeref();
        expect_punct('(');
        PrimeDivisor q = primeref();
        expect_punct(')');
        return q;
      }();
      d.set(p, seg_add(d.segment_at(p), s));
      if (!accept_punct('+')) break;
    }
    return d;
  }

  WeilQDivisor qdiv_expr() {
    WeilQDivisor d;
    if (peek().kind == Token::Kind::Number && peek().value == 0 && !is_punct('*', 1)) {
      get();
      return d;
    }
    bool neg = accept_punct('-');
    while (true) {
      Rational coef(1);
      bool hasCoef = peek().kind == Token::Kind::Number ||
                     (is_punct('(') && (peek(1).kind == Token::Kind::Number || is_punct('-', 1)));
      if (hasCoef) {
        coef = rational_literal();
        expect_punct('*');
      }
      if (neg) coef = -coef;
      PrimeDivisor p = primeref();
      d.set(p, d.coeff(p) + coef);
      if (accept_punct('+')) neg = false;
      else if (accept_punct('-')) neg = true;
      else break;
    }
    return d;
  }

  std::map<std::string, BigInt> int_divisor() {
    std::map<std::string, BigInt> out;
    if (peek().kind == Token::Kind::Number && peek().value == 0 && !is_punct('*', 1)) {
      get();
      return out;
    }
    bool neg = accept_punct('-');
    while (true) {
      BigInt coef = 1;
      if (peek().kind == Token::Kind::Number) {
        coef = expect_number();
        expect_punct('*');
      }
      if (neg) coef = -coef;
      std::string name = expect_name();
      if (!presented_.has_prime(name))
        throw CalcError(Err::UndeclaredSymbol, "unknown prime " + name);
      out[name] += coef;
      if (out[name] == 0) out.erase(name);
      if (accept_punct('+')) neg = false;
      else if (accept_punct('-')) neg = true;
      else break;
    }
    return out;
  }

  FunctionWord word() {
    FunctionWord w;
    bool first = true, invert = false;
    while (true) {
      if (first && peek().kind == Token::Kind::Number && peek().value == 1) {
        get(); // the trivial word
      } else {
        std::string name = expect_name();
        if (presented_.functions().find(name) == presented_.functions().end())
          throw CalcError(Err::UndeclaredSymbol, "unknown function " + name);
        long long e = 1;
        if (accept_punct('^')) {
          bool neg = accept_punct('-');
          e = expect_number().convert_to<long long>();
          if (neg) e = -e;
        }
        w *= FunctionWord(name, invert ? -e : e);
      }
      first = false;
      if (accept_punct('*')) { invert = false; continue; }
      if (accept_punct('/')) { invert = true; continue; }
      break;
    }
    return w;
  }

  BaseFunction h_expr() {
    if (base_kind_ == BaseKind::Presented) return word();
    return expr();
  }

  void finalize() {
    switch (base_kind_) {
      case BaseKind::None:
        if (!doc_.pairs.empty() || !doc_.segdivs.empty() || !doc_.divisors.empty())
          fail("no base declared");
        doc_.base = make_base(Base(CurveBase()));
        break;
      case BaseKind::Point:
        doc_.base = make_base(Base(PointBase{}));
        break;
      case BaseKind::Curve: {
        CurveBase c(tau_a_, tau_b_, coord_.value_or("z"));
        for (auto& [n, p] : curve_primes_) c.declare_prime(n, p);
        doc_.base = make_base(Base(std::move(c)));
        break;
      }
      case BaseKind::Presented:
        presented_.validate();
        doc_.base = make_base(Base(presented_));
        break;
    }
  }
};

std::string task_str(const Task& t) {
  switch (t.kind) {
    case Task::Kind::Validate: return "validate";
    case Task::Kind::Convert: return "convert";
    case Task::Kind::Graded:
      return t.mmax > 0 ? "graded " + std::to_string(t.mmax) : "graded";
    case Task::Kind::Classify: return "classify";
    case Task::Kind::Equiv:
      return t.arg1.empty() ? "equiv" : "equiv " + t.arg1 + " " + t.arg2;
    case Task::Kind::Corpus: return t.arg1.empty() ? "corpus" : "corpus " + t.arg1;
  }
  return "?";
}

} // namespace

PhsPair PairDecl::validate_phs(const BasePtr& base) const {
  if (is_dpd) return dpd_to_seg(validate_dpd(base));
  SegmentalDivisor d(base);
  for (auto& [p, s] : segdiv->terms()) d.set(p, s);
  return phs_validate(base, std::move(d), h);
}

DpdPair PairDecl::validate_dpd(const BasePtr& base) const {
  if (!is_dpd) return seg_to_dpd(validate_phs(base));
  return dpd_validate(base, *qdiv, h);
}

const PairDecl& Document::pair_by_name(const std::string& name) const {
  for (auto& p : pairs)
    if (p.name == name) return p;
  throw CalcError(Err::UndeclaredSymbol, "unknown pair " + name);
}

Document parse(const std::string& text) { return Parser(text).run(); }

std::string print(const Document& d) {
  std::ostringstream out;
  std::string var = base_var(*d.base);
  if (is_point_base(*d.base)) {
    out << "base point;\n";
  } else if (auto* c = std::get_if<CurveBase>(d.base.get())) {
    if (c->is_standard_conjugation())
      out << "base curve conj var " << c->var() << ";\n";
    else
      out << "base curve tau a = " << c->tau_a().str() << ", b = " << c->tau_b().str()
          << " var " << c->var() << ";\n";
    for (auto& [n, p] : c->declared_primes())
      out << "prime " << n << " = " << p.str(var) << ";\n";
  } else {
    const PresentedBase& pb = as_presented(*d.base);
    out << "base presented;\n";
    for (auto& p : pb.primes()) out << "prime " << p << " tau " << pb.tau_prime(p) << ";\n";
    for (auto& [name, info] : pb.functions()) {
      out << "func " << name << " div ";
      if (info.divisor.empty()) out << "0";
      bool first = true;
      for (auto& [prime, mult] : info.divisor) {
        if (!first) out << " + ";
        first = false;
        if (mult != 1) out << mult.str() << "*";
        out << prime;
      }
      out << " tau " << info.tau_image.str() << ";\n";
    }
  }
  for (auto& [name, sd] : d.segdivs) {
    out << "segdiv ";
    if (!name.empty()) out << name << " = ";
    out << sd.str() << ";\n";
  }
  for (auto& [name, dv] : d.divisors) {
    out << "divisor ";
    if (!name.empty()) out << name << " = ";
    out << dv.str(var) << ";\n";
  }
  for (auto& p : d.pairs) {
    out << "pair " << p.name << " " << (p.is_dpd ? "dpd" : "phs") << " D = ";
    if (p.is_dpd) out << p.qdiv->str(var);
    else out << p.segdiv->str();
    out << ", h = " << base_function_str(p.h, *d.base) << ";\n";
  }
  for (auto& t : d.tasks) out << task_str(t) << ";\n";
  return out.str();
}

bool documents_equal(const Document& a, const Document& b) { return print(a) == print(b); }

RationalFunction parse_function(const std::string& text, const std::string& var) {
  return Parser(text).standalone_function(var);
}

Poly parse_poly(const std::string& text, const std::string& var) {
  RationalFunction f = parse_function(text, var);
  if (!f.is_polynomial()) throw CalcError(Err::BadInput, "expected a polynomial");
  return f.num();
}

} // namespace phscalc

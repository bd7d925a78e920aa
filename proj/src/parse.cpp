#include "dmod/parse.hpp"

#include <cctype>

namespace dmod {

namespace {

constexpr std::string_view kPartial = "\xe2\x88\x82";  // "∂"

constexpr int kMaxShape = 256;     // generators and variables
constexpr int kMaxExponent = 1 << 20;

class Scanner {
 public:
  explicit Scanner(std::string_view text) : text_(text) {}

  int line() const { return line_; }
  int col() const { return col_; }

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line_, col_); }
  [[noreturn]] void fail_at(const std::string& msg, int line, int col) const {
    throw ParseError(msg, line, col);
  }

  bool at_end() const { return pos_ >= text_.size(); }

  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  void advance() {
    if (at_end()) return;
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  // Spaces and tabs only; newlines are significant.
  void skip_blanks() {
    while (!at_end() && (peek() == ' ' || peek() == '\t' || peek() == '\r')) advance();
  }

  void skip_blank_lines() {
    skip_blanks();
    while (peek() == '\n') {
      advance();
      skip_blanks();
    }
  }

  bool eat(char c) {
    if (peek() != c) return false;
    advance();
    return true;
  }

  void expect(char c, const std::string& what) {
    if (!eat(c)) fail("expected " + what);
  }

  bool eat_word(std::string_view w) {
    if (text_.substr(pos_, w.size()) != w) return false;
    for (std::size_t i = 0; i < w.size(); ++i) advance();
    return true;
  }

  // A "d" for the derivation generator, in either spelling.
  bool eat_partial() {
    if (eat('d')) return true;
    return eat_word(kPartial);
  }

  bool at_digit() const { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }

  long parse_uint(const std::string& what) {
    if (!at_digit()) fail("expected " + what);
    long v = 0;
    while (at_digit()) {
      v = v * 10 + (peek() - '0');
      if (v > 1000000000L) fail(what + " out of range");
      advance();
    }
    return v;
  }

  ZZ parse_integer_literal() {
    if (!at_digit()) fail("expected integer");
    std::string digits;
    while (at_digit()) {
      digits.push_back(peek());
      advance();
    }
    return ZZ(digits);
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

long parse_index(Scanner& s, long bound, const std::string& what) {
  const int line = s.line(), col = s.col();
  const long i = s.parse_uint(what + " index");
  if (i < 1 || i > bound)
    s.fail_at(what + " index " + std::to_string(i) + " out of range (1.." +
                  std::to_string(bound) + ")",
              line, col);
  return i;
}

// term := [rational] factor* gen, multiplied left to right in the ring.
ModuleElement parse_term(Scanner& s, int n, int m) {
  s.skip_blanks();
  QQ coeff(1);
  if (s.eat('-')) {
    // A sign with no digits is unary minus on the whole term.
    coeff = -1;
    s.skip_blanks();
  }
  if (s.at_digit()) {
    const ZZ num = s.parse_integer_literal();
    ZZ den(1);
    s.skip_blanks();
    if (s.eat('/')) {
      s.skip_blanks();
      const int line = s.line(), col = s.col();
      den = s.parse_integer_literal();
      if (den == 0) s.fail_at("zero denominator", line, col);
    }
    coeff *= make_rational(num, den);
  }

  WeylElement op = WeylElement::constant(n, coeff);
  for (;;) {
    s.skip_blanks();
    bool is_x = false;
    if (s.eat('x'))
      is_x = true;
    else if (!s.eat_partial())
      break;
    const long i = parse_index(s, n, "variable");
    long k = 1;
    s.skip_blanks();
    if (s.eat('^')) {
      s.skip_blanks();
      const int line = s.line(), col = s.col();
      k = s.parse_uint("exponent");
      if (k > kMaxExponent) s.fail_at("exponent out of range", line, col);
    }
    const WeylElement f = is_x ? WeylElement::x(n, i - 1, static_cast<int>(k))
                               : WeylElement::d(n, i - 1, static_cast<int>(k));
    op = op * f;
  }

  s.skip_blanks();
  if (!s.eat('e')) s.fail("expected factor or generator");
  const long g = parse_index(s, m, "generator");
  return act(op, ModuleElement::generator(n, m, static_cast<int>(g)));
}

ModuleElement parse_expr(Scanner& s, int n, int m) {
  s.skip_blanks();
  bool negate = false;
  if (s.peek() == '+') s.advance();  // tolerated leading sign
  ModuleElement acc = parse_term(s, n, m);
  for (;;) {
    s.skip_blanks();
    if (s.eat('+'))
      negate = false;
    else if (s.eat('-'))
      negate = true;
    else
      break;
    const ModuleElement t = parse_term(s, n, m);
    acc = negate ? acc - t : acc + t;
  }
  return acc;
}

}  // namespace

ModulePresentation parse_presentation(std::string_view text) {
  Scanner s(text);
  s.skip_blank_lines();
  if (!s.eat_word("weyl")) s.fail("expected \"weyl\" header");
  s.skip_blanks();
  if (!s.eat('n')) s.fail("expected \"n=\"");
  s.skip_blanks();
  s.expect('=', "\"=\" after n");
  s.skip_blanks();
  const int nline = s.line(), ncol = s.col();
  const long n = s.parse_uint("variable count");
  if (n < 1 || n > kMaxShape) s.fail_at("variable count out of range", nline, ncol);
  s.skip_blanks();
  if (!s.eat('m')) s.fail("expected \"m=\"");
  s.skip_blanks();
  s.expect('=', "\"=\" after m");
  s.skip_blanks();
  const int mline = s.line(), mcol = s.col();
  const long m = s.parse_uint("generator count");
  if (m < 1 || m > kMaxShape) s.fail_at("generator count out of range", mline, mcol);
  s.skip_blanks();
  if (!s.at_end() && !s.eat('\n')) s.fail("expected end of header line");

  ModulePresentation p;
  p.n = static_cast<int>(n);
  p.m = static_cast<int>(m);

  for (;;) {
    s.skip_blank_lines();
    if (s.at_end()) break;
    const int rline = s.line(), rcol = s.col();
    if (!s.eat_word("rel")) s.fail("expected \"rel:\"");
    s.skip_blanks();
    s.expect(':', "\":\" after rel");
    ModuleElement rel = parse_expr(s, p.n, p.m);
    s.skip_blanks();
    if (!s.at_end() && !s.eat('\n')) s.fail("expected end of relation line");
    if (rel.is_zero()) s.fail_at("relation is zero", rline, rcol);
    p.relations.push_back(std::move(rel));
  }
  return p;
}

std::string print_presentation(const ModulePresentation& p) {
  std::string out = "weyl n=" + std::to_string(p.n) + " m=" + std::to_string(p.m) + "\n";
  for (const ModuleElement& rel : p.relations) out += "rel: " + to_string(rel) + "\n";
  return out;
}

PointSet parse_point_set(std::string_view text, int dim) {
  if (dim < 1) throw std::invalid_argument("point set dimension must be positive");
  Scanner s(text);
  std::vector<std::vector<int>> pts;
  s.skip_blank_lines();
  while (!s.at_end()) {
    s.expect('(', "\"(\"");
    std::vector<int> pt;
    for (int j = 0; j < dim; ++j) {
      s.skip_blanks();
      if (j > 0) s.expect(',', "\",\"");
      s.skip_blanks();
      const int line = s.line(), col = s.col();
      const long v = s.parse_uint("coordinate");
      if (v > kMaxExponent) s.fail_at("coordinate out of range", line, col);
      pt.push_back(static_cast<int>(v));
    }
    s.skip_blanks();
    s.expect(')', "\")\" (point has exactly the declared dimension)");
    pts.push_back(std::move(pt));
    s.skip_blank_lines();
    if (s.at_end()) break;
    s.expect(';', "\";\" between points");
    s.skip_blank_lines();
  }
  return PointSet(dim, std::move(pts));
}

}  // namespace dmod

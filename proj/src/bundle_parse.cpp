#include "ebc/bundle_parse.hpp"

#include <cctype>
#include <numeric>

#include "ebc/errors.hpp"

namespace ebc {

namespace {

class Scanner {
public:
  explicit Scanner(const std::string& s) : s_(s) {}

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace((unsigned char)s_[pos_])) ++pos_;
  }
  bool done() {
    skip_ws();
    return pos_ >= s_.size();
  }
  std::size_t pos() const { return pos_; }
  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  bool accept(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c))
      throw ParseError(std::string("expected '") + c + "'", pos_);
  }
  bool accept_word(const std::string& w) {
    skip_ws();
    if (s_.compare(pos_, w.size(), w) == 0) {
      pos_ += w.size();
      return true;
    }
    return false;
  }
  long long integer() {
    skip_ws();
    std::size_t start = pos_;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
    std::size_t digits = pos_;
    while (pos_ < s_.size() && std::isdigit((unsigned char)s_[pos_])) ++pos_;
    if (pos_ == digits) throw ParseError("expected integer", start);
    return std::stoll(s_.substr(start, pos_ - start));
  }
  Rat rational() {
    long long num = integer();
    if (accept('/')) {
      std::size_t dpos = pos_;
      long long den = integer();
      if (den == 0) throw ParseError("zero denominator", dpos);
      return Rat(num, den);
    }
    return Rat(num);
  }
  TorsionPoint point() {
    Rat u = rational();
    expect(',');
    Rat v = rational();
    return TorsionPoint(u, v);
  }

private:
  const std::string& s_;
  std::size_t pos_ = 0;
};

BundleAtom parse_base_atom(Scanner& sc) {
  std::size_t start = sc.pos();
  if (sc.accept_word("eta")) {
    char c = sc.peek();
    if (c < '1' || c > '3')
      throw ParseError("eta index must be 1, 2 or 3", sc.pos());
    sc.accept(c);
    return {1, 1, 0, two_torsion_set()[c - '1']};
  }
  if (sc.accept_word("O")) {
    if (sc.accept('(')) {
      long long a = sc.integer();
      if (!sc.accept_word("p0")) throw ParseError("expected 'p0'", sc.pos());
      sc.expect(')');
      return {1, 1, a, TorsionPoint()};
    }
    return {1, 1, 0, TorsionPoint()};
  }
  if (sc.accept_word("L")) {
    sc.expect('(');
    TorsionPoint t = sc.point();
    sc.expect(')');
    return {1, 1, 0, t};
  }
  if (sc.accept_word("W")) {
    long long n = sc.integer();
    if (n < 1) throw ParseError("rank of W must be positive", start);
    sc.expect('(');
    long long a = sc.integer();
    sc.expect(';');
    TorsionPoint t = sc.point();
    sc.expect(')');
    if (n > 1 && std::gcd(n, a < 0 ? -a : a) != 1)
      throw ParseError("W" + std::to_string(n) + "(" + std::to_string(a) +
                           ";...) violates gcd(n,a) = 1",
                       start);
    return {1, n, a, t};
  }
  throw ParseError("expected atom (O, O(ap0), L(u,v), Wn(a;u,v) or eta k)",
                   start);
}

BundleAtom parse_term(Scanner& sc) {
  std::size_t start = sc.pos();
  // "I" INT "(" atom ")" vs a bare atom; a lone "I" is not an atom
  if (sc.peek() == 'I') {
    sc.accept('I');
    long long d = sc.integer();
    if (d < 1) throw ParseError("Jordan multiplicity must be positive", start);
    sc.expect('(');
    BundleAtom inner = parse_base_atom(sc);
    sc.expect(')');
    inner.d = d;
    return inner;
  }
  return parse_base_atom(sc);
}

} // namespace

BundleExpr parse_bundle(const std::string& text) {
  Scanner sc(text);
  std::vector<BundleAtom> atoms;
  atoms.push_back(parse_term(sc));
  while (sc.accept('+')) atoms.push_back(parse_term(sc));
  if (!sc.done()) throw ParseError("trailing input", sc.pos());
  return BundleExpr::of(std::move(atoms));
}

std::string print_atom(const BundleAtom& a) {
  std::string base;
  if (a.n == 1 && a.a == 0) {
    if (a.t.is_origin()) {
      base = "O";
    } else {
      auto etas = two_torsion_set();
      int which = -1;
      for (int k = 0; k < 3; ++k)
        if (etas[k] == a.t) which = k;
      base = which >= 0 ? "eta" + std::to_string(which + 1)
                        : "L(" + a.t.str() + ")";
    }
  } else if (a.n == 1 && a.t.is_origin()) {
    base = "O(" + std::to_string(a.a) + "p0)";
  } else {
    base = "W" + std::to_string(a.n) + "(" + std::to_string(a.a) + ";" +
           a.t.str() + ")";
  }
  if (a.d == 1) return base;
  return "I" + std::to_string(a.d) + "(" + base + ")";
}

std::string print_bundle(const BundleExpr& v) {
  std::string out;
  for (const BundleAtom& a : v.atoms) {
    if (!out.empty()) out += " + ";
    out += print_atom(a);
  }
  return out.empty() ? "0" : out;
}

TorsionPoint parse_point(const std::string& text) {
  Scanner sc(text);
  TorsionPoint p = sc.point();
  if (!sc.done()) throw ParseError("trailing input", sc.pos());
  return p;
}

RatVector parse_rat_vector(const std::string& text) {
  Scanner sc(text);
  RatVector v;
  v.push_back(sc.rational());
  while (sc.accept(',')) v.push_back(sc.rational());
  if (!sc.done()) throw ParseError("trailing input", sc.pos());
  return v;
}

} // namespace ebc

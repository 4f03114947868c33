#include "clifcomp/mv_expr.hpp"

#include <cctype>
#include <map>
#include <sstream>
#include <vector>

namespace clifcomp {

namespace {

enum class Tok { Number, S3, Blade, Plus, Minus, Star, LParen, RParen, End };

struct Token {
  Tok kind;
  int pos;            // 1-based
  mpq_class number;   // Number
  int blade = -1;     // Blade, paper index
};

const std::map<std::string, int>& blade_symbols() {
  static const std::map<std::string, int> syms = {{"e1", 4},  {"e2", 5},  {"e3", 6}, {"e12", 1},
                                                  {"e23", 2}, {"e13", 3}, {"e123", 7}};
  return syms;
}

std::vector<Token> lex(const std::string& text) {
  std::vector<Token> out;
  size_t i = 0;
  const auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  while (true) {
    skip_ws();
    if (i >= text.size()) break;
    const int pos = static_cast<int>(i) + 1;
    const char c = text[i];
    if (c == '+') { out.push_back({Tok::Plus, pos}); ++i; continue; }
    if (c == '-') { out.push_back({Tok::Minus, pos}); ++i; continue; }
    if (c == '*') { out.push_back({Tok::Star, pos}); ++i; continue; }
    if (c == '(') { out.push_back({Tok::LParen, pos}); ++i; continue; }
    if (c == ')') { out.push_back({Tok::RParen, pos}); ++i; continue; }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      std::string num = text.substr(i, j - i);
      size_t k = j;
      while (k < text.size() && std::isspace(static_cast<unsigned char>(text[k]))) ++k;
      if (k < text.size() && text[k] == '/') {
        ++k;
        while (k < text.size() && std::isspace(static_cast<unsigned char>(text[k]))) ++k;
        size_t d = k;
        while (d < text.size() && std::isdigit(static_cast<unsigned char>(text[d]))) ++d;
        if (d == k) throw ParseError("missing denominator", static_cast<int>(k) + 1);
        num += "/" + text.substr(k, d - k);
        j = d;
      }
      Token t{Tok::Number, pos};
      t.number = mpq_class(num);
      t.number.canonicalize();
      if (t.number.get_den() == 0) throw ParseError("zero denominator", pos);
      out.push_back(std::move(t));
      i = j;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      size_t j = i;
      while (j < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[j])))) ++j;
      const std::string word = text.substr(i, j - i);
      if (word == "s3") {
        out.push_back({Tok::S3, pos});
      } else if (auto it = blade_symbols().find(word); it != blade_symbols().end()) {
        Token t{Tok::Blade, pos};
        t.blade = it->second;
        out.push_back(std::move(t));
      } else if (word[0] == 'e') {
        throw ParseError("unknown blade '" + word + "'", pos);
      } else {
        throw ParseError("unknown symbol '" + word + "'", pos);
      }
      i = j;
      continue;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", pos);
  }
  out.push_back({Tok::End, static_cast<int>(text.size()) + 1});
  return out;
}

class Parser {
public:
  Parser(std::vector<Token> toks, const AlgebraHandle& session)
      : toks_(std::move(toks)), session_(session) {}

  Multivector run() {
    Multivector v = expr();
    expect(Tok::End, "trailing input");
    return v;
  }

private:
  const Token& peek() const { return toks_[at_]; }
  Token next() { return toks_[at_++]; }
  void expect(Tok k, const std::string& what) {
    if (peek().kind != k) throw ParseError("expected " + what, peek().pos);
    ++at_;
  }

  Multivector expr() {
    Multivector acc = term();
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      const bool plus = next().kind == Tok::Plus;
      const Multivector rhs = term();
      if (plus)
        acc += rhs;
      else
        acc -= rhs;
    }
    return acc;
  }

  Multivector term() {
    Multivector acc = factor();
    while (peek().kind == Tok::Star) {
      ++at_;
      acc = apply_product(session_, acc, factor());
    }
    return acc;
  }

  Multivector factor() {
    bool neg = false;
    while (peek().kind == Tok::Minus) {
      neg = !neg;
      ++at_;
    }
    Multivector v = atom();
    return neg ? -v : v;
  }

  Multivector atom() {
    const Token t = peek();
    if (t.kind == Tok::Number || t.kind == Tok::S3) {
      QSqrt3 s = scalar_literal();
      if (peek().kind == Tok::Blade) {
        const int blade = next().blade;
        return Multivector::blade(session_.sig, blade, s);
      }
      return Multivector::scalar(session_.sig, s);
    }
    if (t.kind == Tok::Blade) {
      ++at_;
      return Multivector::blade(session_.sig, t.blade);
    }
    if (t.kind == Tok::LParen) {
      ++at_;
      Multivector inner = expr();
      expect(Tok::RParen, "')'");
      if (peek().kind == Tok::Blade) {
        const Token b = next();
        if (!inner.is_scalar())
          throw ParseError("juxtaposed coefficient must be scalar", b.pos);
        return Multivector::blade(session_.sig, b.blade, inner[kScalarIdx]);
      }
      return inner;
    }
    throw ParseError("expected a value", t.pos);
  }

  QSqrt3 scalar_literal() {
    const Token t = next();
    if (t.kind == Tok::S3) return QSqrt3::sqrt3();
    QSqrt3 s(t.number, mpq_class(0));
    if (peek().kind == Tok::S3) {
      ++at_;
      s = QSqrt3(mpq_class(0), t.number);
    }
    return s;
  }

  std::vector<Token> toks_;
  size_t at_ = 0;
  const AlgebraHandle& session_;
};

}  // namespace

Multivector parse_expression(const std::string& text, const AlgebraHandle& session) {
  return Parser(lex(text), session).run();
}

Multivector parse_expression(const std::string& text, Signature sig) {
  return parse_expression(text, AlgebraHandle::make(sig, ProductId::Clifford));
}

QSqrt3 parse_scalar(const std::string& text) {
  const Multivector v = parse_expression(text, Signature::of(3, 0));
  if (!v.is_scalar()) throw ParseError("expected a scalar expression", 1);
  return v[kScalarIdx];
}

namespace {

std::string rat_str(const mpq_class& q) {
  std::ostringstream os;
  os << q;
  return os.str();
}

}  // namespace

std::string print_canonical(const Multivector& x) {
  struct Term {
    int sign;          // +1/-1; mixed coefficients always +1
    std::string body;
  };
  std::vector<Term> terms;
  for (int i = 0; i < kDim; ++i) {
    const QSqrt3& q = x[i];
    if (q.is_zero()) continue;
    const mpq_class& a = q.rat_part();
    const mpq_class& b = q.s3_part();
    if (i == kScalarIdx) {
      // The scalar coordinate prints as up to two top-level terms.
      if (sgn(a) != 0) terms.push_back({sgn(a) < 0 ? -1 : 1, rat_str(abs(a))});
      if (sgn(b) != 0) {
        const mpq_class mag = abs(b);
        terms.push_back({sgn(b) < 0 ? -1 : 1, mag == 1 ? "s3" : rat_str(mag) + " s3"});
      }
      continue;
    }
    const std::string& name = kBladeName[i];
    if (sgn(b) == 0) {
      const mpq_class mag = abs(a);
      terms.push_back({sgn(a) < 0 ? -1 : 1, mag == 1 ? name : rat_str(mag) + " " + name});
    } else if (sgn(a) == 0) {
      const mpq_class mag = abs(b);
      terms.push_back(
          {sgn(b) < 0 ? -1 : 1, (mag == 1 ? "s3 " : rat_str(mag) + " s3 ") + name});
    } else {
      terms.push_back({1, "(" + q.str() + ") " + name});
    }
  }
  if (terms.empty()) return "0";
  std::string out;
  for (size_t k = 0; k < terms.size(); ++k) {
    if (k == 0) {
      if (terms[k].sign < 0) out += "-";
    } else {
      out += terms[k].sign < 0 ? " - " : " + ";
    }
    out += terms[k].body;
  }
  return out;
}

}  // namespace clifcomp

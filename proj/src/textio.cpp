#include "textio.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <vector>

namespace qso {

namespace {

// ---- integer scaling for display ----

mpz_class coeff_den_lcm(const UPoly& p) {
  mpz_class l = 1;
  for (const auto& c : p.coeffs()) {
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.re.get_den().get_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.im.get_den().get_mpz_t());
  }
  return l;
}

mpz_class int_content(const UPoly& p, const mpz_class& scale) {
  mpz_class g = 0;
  for (const auto& c : p.coeffs()) {
    mpz_class re = c.re.get_num() * (scale / c.re.get_den());
    mpz_class im = c.im.get_num() * (scale / c.im.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), re.get_mpz_t());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), im.get_mpz_t());
  }
  return g == 0 ? mpz_class(1) : g;
}

struct ZCoeff {
  mpz_class re, im;
  bool is_zero() const { return re == 0 && im == 0; }
};

std::vector<ZCoeff> scaled_coeffs(const UPoly& p, const mpq_class& factor) {
  std::vector<ZCoeff> out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) {
    mpq_class re = c.re * factor, im = c.im * factor;
    re.canonicalize();
    im.canonicalize();
    out.push_back({re.get_num(), im.get_num()});
  }
  return out;
}

std::string z_str(const mpz_class& z) { return z.get_str(); }

// One Gaussian-integer coefficient times u^k. `lead` controls whether a
// leading "-" may be emitted (joined terms handle signs separately).
std::string term_str(const ZCoeff& c, int k, const char* var) {
  std::string mono;
  if (k == 1) mono = var;
  else if (k != 0) mono = std::string(var) + "^" + std::to_string(k);

  std::string cs;
  bool need_star = true;
  if (c.im == 0) {
    if (c.re == 1 && k != 0) { cs = ""; need_star = false; }
    else if (c.re == -1 && k != 0) { cs = "-"; need_star = false; }
    else cs = z_str(c.re);
  } else if (c.re == 0) {
    if (c.im == 1) cs = "i";
    else if (c.im == -1) cs = "-i";
    else cs = z_str(c.im) + "*i";
  } else {
    std::string im = c.im == 1 ? "i" : (c.im == -1 ? "-i" : z_str(c.im) + "*i");
    if (c.im > 0) cs = "(" + z_str(c.re) + "+" + im + ")";
    else cs = "(" + z_str(c.re) + im + ")";
  }
  if (mono.empty()) return cs.empty() ? "1" : (cs == "-" ? "-1" : cs);
  if (cs.empty() || cs == "-") return cs + mono;
  return cs + (need_star ? "*" : "") + mono;
}

// Join polynomial terms, descending powers.
std::string join_terms(const std::vector<std::pair<ZCoeff, int>>& terms, const char* var) {
  if (terms.empty()) return "0";
  std::string out;
  for (size_t t = 0; t < terms.size(); ++t) {
    std::string s = term_str(terms[t].first, terms[t].second, var);
    if (t == 0) {
      out = s;
    } else if (!s.empty() && s[0] == '-') {
      out += " - " + s.substr(1);
    } else {
      out += " + " + s;
    }
  }
  return out;
}

std::string upoly_str(const UPoly& p, const mpq_class& factor) {
  std::vector<std::pair<ZCoeff, int>> terms;
  auto cs = scaled_coeffs(p, factor);
  for (int k = static_cast<int>(cs.size()) - 1; k >= 0; --k)
    if (!cs[static_cast<size_t>(k)].is_zero()) terms.emplace_back(cs[static_cast<size_t>(k)], k);
  return join_terms(terms, "u");
}

bool single_token(const std::string& s) {
  // safe as a denominator without parentheses: number, u, u^k, i
  if (s.empty()) return false;
  if (s == "i" || s == "u") return true;
  if (std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    return true;
  if (s.rfind("u^", 0) == 0 &&
      std::all_of(s.begin() + 2, s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    return true;
  return false;
}

bool multi_term(const std::string& s) {
  // top-level + or - (beyond a leading sign)?
  int depth = 0;
  for (size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    if (c == '(') ++depth;
    else if (c == ')') --depth;
    else if ((c == '+' || c == '-') && depth == 0 && i > 0 && s[i - 1] == ' ') return true;
  }
  return false;
}

std::string rat_str(const mpq_class& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

// Laurent coefficient (Gaussian rational) times q^(e/2); e counts u powers.
std::string q_term_str(const GaussRat& c, long long e) {
  std::string mono;
  if (e == 2) mono = "q";
  else if (e == -2) mono = "q^-1";
  else if (e != 0) {
    if (e % 2 == 0) mono = "q^" + std::to_string(e / 2);
    else mono = "q^(" + std::to_string(e) + "/2)";
  }

  std::string cs;
  bool one = false;
  if (c.im == 0) {
    if (c.re == 1 && e != 0) one = true;
    else if (c.re == -1 && e != 0) { cs = "-"; one = true; }
    else cs = rat_str(c.re);
  } else if (c.re == 0) {
    if (c.im == 1) cs = "i";
    else if (c.im == -1) cs = "-i";
    else cs = rat_str(c.im) + "*i";
  } else {
    std::string im = c.im == 1 ? "i" : (c.im == -1 ? "-i" : rat_str(c.im) + "*i");
    if (c.im > 0) cs = "(" + rat_str(c.re) + "+" + im + ")";
    else cs = "(" + rat_str(c.re) + im + ")";
  }
  if (mono.empty()) return cs;
  if (one) return cs + mono;
  return cs + "*" + mono;
}

}  // namespace

// Used by scalar.cpp in pole errors.
std::string render_upoly_for_error(const UPoly& p) {
  mpz_class l = coeff_den_lcm(p);
  mpz_class g = int_content(p, l);
  return upoly_str(p, mpq_class(l) / g);
}

std::string to_ustring(const QScalar& s) {
  if (s.is_zero()) return "0";
  mpz_class l = 1;
  mpz_class ln = coeff_den_lcm(s.num()), ld = coeff_den_lcm(s.den());
  mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), ln.get_mpz_t());
  mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), ld.get_mpz_t());
  mpz_class g = 0, gn = int_content(s.num(), l), gd = int_content(s.den(), l);
  mpz_gcd(g.get_mpz_t(), gn.get_mpz_t(), gd.get_mpz_t());
  mpq_class factor = mpq_class(l) / g;

  std::string num = upoly_str(s.num(), factor);
  if (s.den().is_one() && factor == 1) return num;
  std::string den = upoly_str(s.den(), factor);
  if (den == "1") return num;
  if (multi_term(num)) num = "(" + num + ")";
  if (!single_token(den)) den = "(" + den + ")";
  return num + "/" + den;
}

std::string to_qstring(const QScalar& s) {
  if (s.is_zero()) return "0";
  // Laurent form requires a monomial denominator.
  const UPoly& d = s.den();
  int dv = d.valuation();
  if (dv != d.degree()) return to_ustring(s);
  GaussRat lead = d.coeff(dv);
  std::vector<std::pair<GaussRat, long long>> terms;
  for (int k = s.num().degree(); k >= 0; --k) {
    const GaussRat& c = s.num().coeff(k);
    if (!c.is_zero()) terms.emplace_back(c / lead, k - dv);
  }
  std::string out;
  for (size_t t = 0; t < terms.size(); ++t) {
    std::string piece = q_term_str(terms[t].first, terms[t].second);
    if (t == 0) out = piece;
    else if (!piece.empty() && piece[0] == '-') out += " - " + piece.substr(1);
    else out += " + " + piece;
  }
  return out;
}

std::string to_string(const NCPoly& p, CoeffStyle style) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : p.terms()) {
    // run-length encode repeated symbols as powers
    std::string gens;
    for (size_t i = 0; i < w.size();) {
      size_t j = i;
      while (j < w.size() && w[j] == w[i]) ++j;
      if (!gens.empty()) gens += " ";
      gens += (w[i].sign > 0 ? "I+(" : "I-(") + std::to_string(w[i].upper) + "," +
              std::to_string(w[i].lower) + ")";
      if (j - i > 1) gens += "^" + std::to_string(j - i);
      i = j;
    }

    bool neg = false;
    QScalar cc = c;
    std::string cs = style == CoeffStyle::kPrettyQ ? to_qstring(cc) : to_ustring(cc);
    if (!cs.empty() && cs[0] == '-' && !multi_term(cs)) {
      neg = true;
      cc = -cc;
      cs = style == CoeffStyle::kPrettyQ ? to_qstring(cc) : to_ustring(cc);
    }
    if (multi_term(cs)) cs = "(" + cs + ")";

    std::string term;
    if (gens.empty()) term = cs;
    else if (cs == "1") term = gens;
    else term = cs + " " + gens;

    if (first) {
      out = neg ? "-" + term : term;
      first = false;
    } else {
      out += neg ? " - " : " + ";
      out += term;
    }
  }
  return out;
}

// ---------------- parser ----------------

namespace {

struct Token {
  enum Kind { kNum, kU, kQ, kI, kGen, kPlus, kMinus, kStar, kSlash, kCaret, kLParen, kRParen, kEnd };
  Kind kind = kEnd;
  mpz_class num;
  int gsign = 1, gk = 0, gl = 0;
};

class Lexer {
public:
  explicit Lexer(std::string_view text) : text_(text) { advance(); }

  const Token& peek() const { return tok_; }
  Token take() {
    Token t = tok_;
    advance();
    return t;
  }

private:
  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorKind::kParse, "parse error at offset " + std::to_string(pos_) + ": " + why);
  }

  void advance() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ >= text_.size()) {
      tok_ = Token{};
      return;
    }
    char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t s = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      tok_.kind = Token::kNum;
      tok_.num = mpz_class(std::string(text_.substr(s, pos_ - s)), 10);
      return;
    }
    switch (c) {
      case '+': tok_.kind = Token::kPlus; ++pos_; return;
      case '-': tok_.kind = Token::kMinus; ++pos_; return;
      case '*': tok_.kind = Token::kStar; ++pos_; return;
      case '/': tok_.kind = Token::kSlash; ++pos_; return;
      case '^': tok_.kind = Token::kCaret; ++pos_; return;
      case '(': tok_.kind = Token::kLParen; ++pos_; return;
      case ')': tok_.kind = Token::kRParen; ++pos_; return;
      case 'u': tok_.kind = Token::kU; ++pos_; return;
      case 'q': tok_.kind = Token::kQ; ++pos_; return;
      case 'i': tok_.kind = Token::kI; ++pos_; return;
      case 'I': {
        ++pos_;
        int sign = 0;  // 0 = unsigned I(k,l), only valid for basic
        if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) {
          sign = text_[pos_] == '+' ? 1 : -1;
          ++pos_;
        }
        if (pos_ >= text_.size() || text_[pos_] != '(') fail("expected '(' after generator name");
        ++pos_;
        auto read_int = [&]() -> int {
          size_t s = pos_;
          while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
          if (s == pos_) fail("expected generator index");
          return std::stoi(std::string(text_.substr(s, pos_ - s)));
        };
        int k = read_int();
        if (pos_ >= text_.size() || text_[pos_] != ',') fail("expected ',' in generator");
        ++pos_;
        int l = read_int();
        if (pos_ >= text_.size() || text_[pos_] != ')') fail("expected ')' in generator");
        ++pos_;
        if (sign == 0 && k != l + 1) fail("unsigned I(k,l) is only valid for basic generators");
        tok_.kind = Token::kGen;
        tok_.gsign = sign == 0 ? 1 : sign;
        tok_.gk = k;
        tok_.gl = l;
        return;
      }
      default: fail(std::string("unexpected character '") + c + "'");
    }
  }

  std::string_view text_;
  size_t pos_ = 0;
  Token tok_;
};

class Parser {
public:
  explicit Parser(std::string_view text) : lex_(text) {}

  NCPoly parse() {
    NCPoly v = expr();
    if (lex_.peek().kind != Token::kEnd)
      throw Error(ErrorKind::kParse, "trailing input after expression");
    return v;
  }

private:
  static bool starts_factor(Token::Kind k) {
    return k == Token::kNum || k == Token::kU || k == Token::kQ || k == Token::kI ||
           k == Token::kGen || k == Token::kLParen;
  }

  NCPoly expr() {
    NCPoly acc = term();
    while (true) {
      auto k = lex_.peek().kind;
      if (k == Token::kPlus) {
        lex_.take();
        acc += term();
      } else if (k == Token::kMinus) {
        lex_.take();
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  NCPoly term() {
    NCPoly acc = factor();
    while (true) {
      auto k = lex_.peek().kind;
      if (k == Token::kStar) {
        lex_.take();
        acc = acc * factor();
      } else if (k == Token::kSlash) {
        lex_.take();
        NCPoly rhs = factor();
        if (!rhs.is_scalar())
          throw Error(ErrorKind::kParse, "cannot divide by a non-scalar element");
        acc = acc.scaled(rhs.scalar_value().inverse());
      } else if (starts_factor(k)) {
        acc = acc * factor();  // juxtaposition
      } else {
        return acc;
      }
    }
  }

  NCPoly factor() {
    int sign = 1;
    while (lex_.peek().kind == Token::kPlus || lex_.peek().kind == Token::kMinus) {
      if (lex_.take().kind == Token::kMinus) sign = -sign;
    }
    NCPoly v = atom();
    if (lex_.peek().kind == Token::kCaret) {
      lex_.take();
      auto [en, ed] = exponent();
      v = power(v, en, ed);
    }
    return sign < 0 ? -v : v;
  }

  // exponent: integer, or (a/b) with b in {1,2} for q powers
  std::pair<long long, long long> exponent() {
    long long sign = 1;
    if (lex_.peek().kind == Token::kMinus) {
      lex_.take();
      sign = -1;
    } else if (lex_.peek().kind == Token::kPlus) {
      lex_.take();
    }
    if (lex_.peek().kind == Token::kNum) {
      return {sign * lex_.take().num.get_si(), 1};
    }
    if (lex_.peek().kind == Token::kLParen) {
      lex_.take();
      long long s2 = 1;
      if (lex_.peek().kind == Token::kMinus) {
        lex_.take();
        s2 = -1;
      }
      if (lex_.peek().kind != Token::kNum) throw Error(ErrorKind::kParse, "expected exponent");
      long long a = lex_.take().num.get_si();
      long long b = 1;
      if (lex_.peek().kind == Token::kSlash) {
        lex_.take();
        if (lex_.peek().kind != Token::kNum) throw Error(ErrorKind::kParse, "expected exponent denominator");
        b = lex_.take().num.get_si();
      }
      if (lex_.peek().kind != Token::kRParen) throw Error(ErrorKind::kParse, "expected ')' in exponent");
      lex_.take();
      return {sign * s2 * a, b};
    }
    throw Error(ErrorKind::kParse, "expected exponent");
  }

  static NCPoly power(const NCPoly& v, long long en, long long ed) {
    if (ed != 1) {
      // fractional exponents only for the bare deformation parameter:
      // q^(a/b) has u exponent 2a/b
      if (v.is_scalar() && v.scalar_value() == QScalar::upower(2)) {
        long long twice = 2 * en;
        if (twice % ed != 0) throw Error(ErrorKind::kParse, "q exponent must be a half-integer");
        return NCPoly::scalar(QScalar::upower(twice / ed));
      }
      throw Error(ErrorKind::kParse, "fractional exponents only apply to q");
    }
    if (v.is_scalar()) return NCPoly::scalar(v.scalar_value().pow(en));
    if (en < 0) throw Error(ErrorKind::kParse, "negative power of a non-scalar element");
    NCPoly r = NCPoly::one();
    for (long long t = 0; t < en; ++t) r = r * v;
    return r;
  }

  NCPoly atom() {
    const Token t = lex_.take();
    switch (t.kind) {
      case Token::kNum: return NCPoly::scalar(QScalar(GaussRat(mpq_class(t.num))));
      case Token::kU: return NCPoly::scalar(QScalar::upower(1));
      case Token::kQ: return NCPoly::scalar(QScalar::upower(2));
      case Token::kI: return NCPoly::scalar(QScalar::imaginary());
      case Token::kGen: return NCPoly::generator(GenSymbol(t.gsign, t.gk, t.gl));
      case Token::kLParen: {
        NCPoly v = expr();
        if (lex_.peek().kind != Token::kRParen) throw Error(ErrorKind::kParse, "expected ')'");
        lex_.take();
        return v;
      }
      default: throw Error(ErrorKind::kParse, "expected a value");
    }
  }

  Lexer lex_;
};

}  // namespace

NCPoly parse_element(std::string_view text) { return Parser(text).parse(); }

QScalar parse_scalar(std::string_view text) {
  NCPoly p = parse_element(text);
  if (!p.is_scalar()) throw Error(ErrorKind::kParse, "expected a scalar expression");
  return p.scalar_value();
}

}  // namespace qso

#include "zm/scalar.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

namespace zm {

Rational make_rational(long num, long den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string rational_str(const Rational& x) {
  return x.get_str();
}

std::string GaussianRational::str() const {
  if (im_ == 0) return re_.get_str();
  std::string s;
  if (re_ != 0) s += re_.get_str();
  if (im_ > 0 && re_ != 0) s += "+";
  s += im_.get_str();
  s += "i";
  return s;
}

std::string ScalarOps<Complex>::str(const Complex& x) {
  return complex_str(x);
}

std::string complex_str(const Complex& x) {
  std::ostringstream os;
  os.precision(17);
  if (x.imag() == 0.0) {
    os << x.real();
  } else {
    os << x.real() << (x.imag() >= 0 ? "+" : "") << x.imag() << "i";
  }
  return os.str();
}

namespace {

// One signed real token: integer, p/q, or decimal with optional exponent.
// Returns the token [start, pos) and advances pos.
struct Cursor {
  const std::string& s;
  size_t pos = 0;
  bool done() const { return pos >= s.size(); }
  char peek() const { return s[pos]; }
};

bool is_number_char(char c) {
  return std::isdigit(static_cast<unsigned char>(c)) || c == '.' || c == '/' ||
         c == 'e' || c == 'E';
}

// Reads [sign] digits[./digits][e[sign]digits]; stops before 'i' or a
// following sign that is not an exponent sign.
std::string read_real_token(Cursor& c) {
  std::string tok;
  if (!c.done() && (c.peek() == '+' || c.peek() == '-')) tok += c.s[c.pos++];
  while (!c.done()) {
    char ch = c.peek();
    if (is_number_char(ch)) {
      bool is_exp = (ch == 'e' || ch == 'E');
      tok += ch;
      ++c.pos;
      if (is_exp && !c.done() && (c.peek() == '+' || c.peek() == '-')) {
        tok += c.s[c.pos++];
      }
    } else {
      break;
    }
  }
  return tok;
}

Rational decimal_to_rational(const std::string& text) {
  // [sign]int[.frac][e[sign]exp] -> exact rational
  size_t epos = text.find_first_of("eE");
  std::string mant = text.substr(0, epos);
  long expo = 0;
  if (epos != std::string::npos) expo = std::stol(text.substr(epos + 1));
  bool neg = false;
  size_t i = 0;
  if (i < mant.size() && (mant[i] == '+' || mant[i] == '-')) {
    neg = mant[i] == '-';
    ++i;
  }
  std::string digits;
  long frac_len = 0;
  bool seen_dot = false;
  for (; i < mant.size(); ++i) {
    if (mant[i] == '.') {
      if (seen_dot) throw std::invalid_argument("bad decimal: " + text);
      seen_dot = true;
    } else if (std::isdigit(static_cast<unsigned char>(mant[i]))) {
      digits += mant[i];
      if (seen_dot) ++frac_len;
    } else {
      throw std::invalid_argument("bad decimal: " + text);
    }
  }
  if (digits.empty()) throw std::invalid_argument("bad decimal: " + text);
  mpz_class num(digits, 10);
  if (neg) num = -num;
  long net = expo - frac_len;
  mpz_class scale = 1;
  for (long k = 0; k < std::abs(net); ++k) scale *= 10;
  Rational q = net >= 0 ? Rational(num * scale) : Rational(num, scale);
  q.canonicalize();
  return q;
}

Rational token_to_rational(const std::string& tok) {
  if (tok.empty()) throw std::invalid_argument("empty numeric token");
  size_t slash = tok.find('/');
  if (slash != std::string::npos) {
    Rational num = decimal_to_rational(tok.substr(0, slash));
    Rational den = decimal_to_rational(tok.substr(slash + 1));
    if (den == 0) throw std::domain_error("zero denominator: " + tok);
    Rational q = num / den;
    q.canonicalize();
    return q;
  }
  return decimal_to_rational(tok);
}

double token_to_double(const std::string& tok) {
  size_t slash = tok.find('/');
  if (slash != std::string::npos) {
    return std::stod(tok.substr(0, slash)) / std::stod(tok.substr(slash + 1));
  }
  return std::stod(tok);
}

// Shared complex-literal splitter: returns (re_token, im_token, has_im).
// Accepts "a", "bi", "a+bi", "a-bi", "i", "-i".
struct ComplexTokens {
  std::string re, im;
  bool has_im = false;
};

ComplexTokens split_complex(const std::string& raw) {
  std::string text;
  for (char c : raw)
    if (!std::isspace(static_cast<unsigned char>(c))) text += c;
  if (text.empty()) throw std::invalid_argument("empty scalar literal");

  Cursor c{text};
  ComplexTokens out;
  std::string first = read_real_token(c);
  if (!c.done() && c.peek() == 'i') {
    ++c.pos;
    if (!c.done()) throw std::invalid_argument("trailing text in scalar: " + raw);
    if (first.empty() || first == "+") first = "1";
    if (first == "-") first = "-1";
    out.re = "0";
    out.im = first;
    out.has_im = true;
    return out;
  }
  if (first.empty()) throw std::invalid_argument("bad scalar literal: " + raw);
  out.re = first;
  if (c.done()) return out;
  std::string second = read_real_token(c);
  if (c.done() || c.peek() != 'i')
    throw std::invalid_argument("bad scalar literal: " + raw);
  ++c.pos;
  if (!c.done()) throw std::invalid_argument("trailing text in scalar: " + raw);
  if (second.empty() || second == "+") second = "1";
  if (second == "-") second = "-1";
  out.im = second;
  out.has_im = true;
  return out;
}

}  // namespace

GaussianRational parse_gaussian(const std::string& text) {
  ComplexTokens t = split_complex(text);
  Rational re = token_to_rational(t.re);
  Rational im = t.has_im ? token_to_rational(t.im) : Rational(0);
  return {re, im};
}

Complex parse_complex(const std::string& text) {
  ComplexTokens t = split_complex(text);
  double re = token_to_double(t.re);
  double im = t.has_im ? token_to_double(t.im) : 0.0;
  return {re, im};
}

Rational parse_rational(const std::string& text) {
  GaussianRational g = parse_gaussian(text);
  if (!g.is_real()) throw std::invalid_argument("expected a real value: " + text);
  return g.real();
}

}  // namespace zm

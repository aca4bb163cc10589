#include "parconn/rational.hpp"

#include <cctype>

namespace parconn {

namespace {

std::string strip(const std::string& s) {
  size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

bool valid_rational_text(const std::string& t) {
  if (t.empty()) return false;
  size_t i = 0;
  if (t[i] == '+' || t[i] == '-') ++i;
  bool digits = false, slash = false, den_digits = false;
  for (; i < t.size(); ++i) {
    char c = t[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      (slash ? den_digits : digits) = true;
    } else if (c == '/' && !slash && digits) {
      slash = true;
    } else {
      return false;
    }
  }
  return digits && (!slash || den_digits);
}

}  // namespace

Rational Rational::parse(const std::string& s) {
  std::string t = strip(s);
  if (!t.empty() && t[0] == '+') t = t.substr(1);
  if (!valid_rational_text(t)) throw Error(ErrorCode::ParseError, "bad rational literal: '" + s + "'");
  mpq_class q;
  if (q.set_str(t, 10) != 0) throw Error(ErrorCode::ParseError, "bad rational literal: '" + s + "'");
  if (q.get_den() == 0) throw Error(ErrorCode::ParseError, "zero denominator: '" + s + "'");
  q.canonicalize();
  return Rational(q);
}

std::string GaussianRational::str() const {
  if (im_.is_zero()) return re_.str();
  std::string imag = (im_.sign() < 0 ? (-im_).str() : im_.str()) + " i";
  if (re_.is_zero()) return im_.sign() < 0 ? "-" + imag : imag;
  return re_.str() + (im_.sign() < 0 ? "-" : "+") + imag;
}

// Accepts "a", "a+b i", "a-b i", "b i", "i", "-i" with rational a, b.
GaussianRational GaussianRational::parse(const std::string& s) {
  std::string t;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  if (t.empty()) throw Error(ErrorCode::ParseError, "empty scalar");
  if (t.back() != 'i') return GaussianRational(Rational::parse(t));
  t.pop_back();
  // split at the last sign that is not the leading one
  size_t cut = std::string::npos;
  for (size_t k = t.size(); k-- > 1;) {
    if (t[k] == '+' || t[k] == '-') {
      cut = k;
      break;
    }
  }
  auto imag_of = [&](const std::string& part) {
    if (part.empty() || part == "+") return Rational(1);
    if (part == "-") return Rational(-1);
    return Rational::parse(part);
  };
  if (cut == std::string::npos) return {Rational(0), imag_of(t)};
  return {Rational::parse(t.substr(0, cut)), imag_of(t.substr(cut))};
}

}  // namespace parconn

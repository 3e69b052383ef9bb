#include "diracsym/rational.hpp"

#include <sstream>

#include "diracsym/errors.hpp"

namespace diracsym {

std::string to_string(const Rational& q) { return q.get_str(); }

Rational rational_from_string(const std::string& s) {
  if (s.empty()) throw ParseError("empty rational literal");
  // mpq_class accepts leading '+', hex etc.; restrict to canonical decimals.
  auto digits = [](const std::string& t) {
    if (t.empty()) return false;
    for (char c : t)
      if (c < '0' || c > '9') return false;
    return true;
  };
  std::string body = s[0] == '-' ? s.substr(1) : s;
  auto slash = body.find('/');
  bool ok = slash == std::string::npos
                ? digits(body)
                : digits(body.substr(0, slash)) && digits(body.substr(slash + 1));
  if (!ok) throw ParseError("malformed rational literal: '" + s + "'");
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw ParseError("malformed rational literal: '" + s + "'");
  if (q.get_den() == 0) throw ParseError("zero denominator: '" + s + "'");
  q.canonicalize();
  return q;
}

Rational rational(long num, long den) {
  if (den == 0) throw ParseError("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

Integer to_integer(const Rational& q) {
  if (!is_integer(q)) throw DimensionMismatch("not an integer: " + to_string(q));
  return q.get_num();
}

bool lex_less(const Weight& a, const Weight& b) {
  if (a.size() != b.size())
    throw DimensionMismatch("lex_less: length mismatch");
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    int c = cmp(a[i], b[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

std::string to_string(const Weight& w) {
  std::ostringstream os;
  os << '(';
  for (Eigen::Index i = 0; i < w.size(); ++i) {
    if (i) os << ", ";
    os << w[i].get_str();
  }
  os << ')';
  return os.str();
}

}  // namespace diracsym

#include "subjetlab/rational.hpp"

#include <sstream>

namespace subjetlab {

BigInt rat_num(const Rational& r) { return boost::multiprecision::numerator(r); }
BigInt rat_den(const Rational& r) { return boost::multiprecision::denominator(r); }

static bool is_int_token(const std::string& t) {
  if (t.empty()) return false;
  std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
  if (i == t.size()) return false;
  for (; i < t.size(); ++i)
    if (t[i] < '0' || t[i] > '9') return false;
  return true;
}

Rational parse_rational(const std::string& s) {
  std::string t;
  for (char c : s)
    if (c != ' ' && c != '\t') t.push_back(c);
  auto slash = t.find('/');
  if (slash == std::string::npos) {
    if (!is_int_token(t)) throw SchemaError("bad rational literal: '" + s + "'");
    return Rational(BigInt(t));
  }
  std::string ps = t.substr(0, slash);
  std::string qs = t.substr(slash + 1);
  if (!is_int_token(ps) || !is_int_token(qs))
    throw SchemaError("bad rational literal: '" + s + "'");
  BigInt p(ps), q(qs);
  if (q == 0) throw SchemaError("zero denominator in rational literal: '" + s + "'");
  if (q < 0) {  // canonical form keeps the sign in the numerator
    p = -p;
    q = -q;
  }
  return Rational(p, q);
}

std::string rat_str(const Rational& r) {
  BigInt p = rat_num(r), q = rat_den(r);
  if (q == 1) return p.str();
  return p.str() + "/" + q.str();
}

double rat_double(const Rational& r) { return static_cast<double>(r); }

int rat_sign(const Rational& r) {
  if (r > 0) return 1;
  if (r < 0) return -1;
  return 0;
}

Rational rat_abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

RatVec parse_rat_csv(const std::string& s) {
  RatVec out;
  std::string cur;
  std::stringstream ss(s);
  while (std::getline(ss, cur, ',')) out.push_back(parse_rational(cur));
  if (out.empty()) throw SchemaError("empty rational CSV");
  return out;
}

std::string rat_vec_str(const RatVec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += rat_str(v[i]);
  }
  return s + ")";
}

std::string ext_val_str(const ExtVal& e) { return e.finite ? rat_str(e.v) : "+inf"; }

}  // namespace subjetlab

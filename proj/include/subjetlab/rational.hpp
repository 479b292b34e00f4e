#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace subjetlab {

using BigInt = boost::multiprecision::cpp_int;
// Canonical form (gcd(p,q)=1, q>0) is maintained by the backend on every
// operation; code below may rely on numerator/denominator being reduced.
using Rational = boost::multiprecision::cpp_rational;

using RatVec = std::vector<Rational>;

struct SchemaError : std::runtime_error {
  explicit SchemaError(const std::string& what) : std::runtime_error(what) {}
};

BigInt rat_num(const Rational& r);
BigInt rat_den(const Rational& r);

// Parses "p", "-p", or "p/q". Zero denominators and malformed text are
// schema errors, never UB in the backend.
Rational parse_rational(const std::string& s);

// Canonical text: "p" when q==1, else "p/q".
std::string rat_str(const Rational& r);

double rat_double(const Rational& r);

int rat_sign(const Rational& r);

Rational rat_abs(const Rational& r);

// Parses "r1,r2,...,rk".
RatVec parse_rat_csv(const std::string& s);

std::string rat_vec_str(const RatVec& v);

// Extended value for function evaluation: finite rational or +infinity.
// Proper lsc inputs never take -infinity; validation rejects anything else.
struct ExtVal {
  bool finite = false;
  Rational v;

  static ExtVal fin(Rational x) { return ExtVal{true, std::move(x)}; }
  static ExtVal infinity() { return ExtVal{false, Rational(0)}; }
  bool operator==(const ExtVal& o) const {
    return finite == o.finite && (!finite || v == o.v);
  }
};

std::string ext_val_str(const ExtVal& e);

}  // namespace subjetlab

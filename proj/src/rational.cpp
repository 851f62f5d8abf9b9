#include "tlie/rational.hpp"

#include "tlie/report.hpp"

#include <cctype>

namespace tlie {

namespace {

Integer integer_from_string(const std::string& text) {
  if (text.empty()) throw Error(ErrorKind::parse, "empty integer literal");
  std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (start == text.size()) throw Error(ErrorKind::parse, "sign without digits: '" + text + "'");
  for (std::size_t i = start; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i])))
      throw Error(ErrorKind::parse, "bad integer literal: '" + text + "'");
  }
  return Integer(text);
}

}  // namespace

Rational rational_from_string(const std::string& text) {
  std::size_t slash = text.find('/');
  if (slash == std::string::npos) return Rational(integer_from_string(text));
  Integer num = integer_from_string(text.substr(0, slash));
  Integer den = integer_from_string(text.substr(slash + 1));
  if (den == 0) throw Error(ErrorKind::parse, "zero denominator: '" + text + "'");
  return Rational(num) / Rational(den);
}

std::string to_string(const Rational& value) { return value.str(); }

Vec zero_vec(std::size_t n) { return Vec(n, Rational(0)); }

bool is_zero(const Vec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

Vec add(const Vec& a, const Vec& b) {
  Vec out(a);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += b[i];
  return out;
}

Vec sub(const Vec& a, const Vec& b) {
  Vec out(a);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= b[i];
  return out;
}

Vec negate(const Vec& v) {
  Vec out(v);
  for (auto& x : out) x = -x;
  return out;
}

Vec scale(const Rational& c, const Vec& v) {
  Vec out(v);
  for (auto& x : out) x *= c;
  return out;
}

void axpy(Vec& y, const Rational& c, const Vec& x) {
  if (c == 0) return;
  for (std::size_t i = 0; i < y.size(); ++i) y[i] += c * x[i];
}

std::string to_string(const Vec& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += to_string(v[i]);
  }
  out += "]";
  return out;
}

std::string to_string(Outcome outcome) {
  switch (outcome) {
    case Outcome::pass: return "pass";
    case Outcome::fail: return "fail";
    case Outcome::error: return "error";
  }
  return "error";
}

std::string to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::dimension_mismatch: return "dimension_mismatch";
    case ErrorKind::unverified_input: return "unverified_input";
    case ErrorKind::singular: return "singular";
    case ErrorKind::not_a_cocycle: return "not_a_cocycle";
    case ErrorKind::not_admissible: return "not_admissible";
    case ErrorKind::not_a_derivation: return "not_a_derivation";
    case ErrorKind::not_nijenhuis: return "not_nijenhuis";
    case ErrorKind::not_reynolds: return "not_reynolds";
    case ErrorKind::undefined_denominator: return "undefined_denominator";
    case ErrorKind::resource_cap: return "resource_cap";
    case ErrorKind::parse: return "parse";
  }
  return "error";
}

}  // namespace tlie

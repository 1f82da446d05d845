#include "realpart/exponent.hpp"

#include <cctype>
#include <cstdio>
#include <charconv>
#include <cmath>
#include <limits>
#include <numeric>

#include "realpart/errors.hpp"

namespace realpart {

namespace {

Rational reduce(std::int64_t num, std::int64_t den) {
  if (den == 0) throw DomainError("exponent: zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  return {num / g, den / g};
}

std::int64_t parse_int(std::string_view s) {
  std::int64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw DomainError("exponent: cannot parse integer '" + std::string(s) + "'");
  }
  return v;
}

Rational parse_decimal(std::string_view s) {
  const auto dot = s.find('.');
  if (dot == std::string_view::npos) return {parse_int(s), 1};
  const std::string_view whole = s.substr(0, dot);
  const std::string_view frac = s.substr(dot + 1);
  if (frac.size() > 15) throw DomainError("exponent: too many decimal digits in '" + std::string(s) + "'");
  std::int64_t den = 1;
  for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
  const std::int64_t w = whole.empty() ? 0 : parse_int(whole);
  const std::int64_t f = frac.empty() ? 0 : parse_int(frac);
  if (f < 0 || w < 0) throw DomainError("exponent: negative value '" + std::string(s) + "'");
  return reduce(w * den + f, den);
}

}  // namespace

ExponentP ExponentP::infinity() {
  ExponentP e;
  e.infinite_ = true;
  e.p_ = std::numeric_limits<double>::infinity();
  return e;
}

ExponentP ExponentP::rational(std::int64_t num, std::int64_t den) {
  const Rational r = reduce(num, den);
  if (r.num < r.den) throw DomainError("exponent: p must be >= 1, got " + std::to_string(r.num) + "/" + std::to_string(r.den));
  ExponentP e;
  e.p_ = r.to_double();
  e.exact_ = r;
  return e;
}

ExponentP ExponentP::parse(std::string_view text) {
  std::string t;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  }
  if (t == "inf" || t == "infinity" || t == "oo") return infinity();
  if (t.empty()) throw DomainError("exponent: empty string");
  const auto slash = t.find('/');
  if (slash != std::string::npos) {
    const Rational a = parse_decimal(std::string_view(t).substr(0, slash));
    const Rational b = parse_decimal(std::string_view(t).substr(slash + 1));
    if (b.num == 0) throw DomainError("exponent: zero denominator in '" + t + "'");
    return rational(a.num * b.den, a.den * b.num);
  }
  const Rational r = parse_decimal(t);
  return rational(r.num, r.den);
}

ExponentP ExponentP::from_double(double x) {
  if (std::isinf(x) && x > 0) return infinity();
  if (!(x >= 1.0) || !std::isfinite(x)) throw DomainError("exponent: p must be in [1, inf], got " + std::to_string(x));
  for (std::int64_t den = 1; den <= 1000; ++den) {
    const double num = std::round(x * static_cast<double>(den));
    if (num / static_cast<double>(den) == x && num < 1e15) return rational(static_cast<std::int64_t>(num), den);
  }
  ExponentP e;
  e.p_ = x;
  return e;
}

double ExponentP::p() const { return p_; }

double ExponentP::q() const {
  if (infinite_) return 1.0;
  if (p_ == 1.0) return std::numeric_limits<double>::infinity();
  if (exact_) {
    const Rational& r = *exact_;
    return static_cast<double>(r.num) / static_cast<double>(r.num - r.den);
  }
  return p_ / (p_ - 1.0);
}

double ExponentP::inv_p() const {
  if (infinite_) return 0.0;
  if (exact_) return static_cast<double>(exact_->den) / static_cast<double>(exact_->num);
  return 1.0 / p_;
}

std::optional<Rational> ExponentP::exact_q() const {
  if (infinite_) return Rational{1, 1};
  if (!exact_ || exact_->num == exact_->den) return std::nullopt;
  return reduce(exact_->num, exact_->num - exact_->den);
}

std::string ExponentP::to_string() const {
  if (infinite_) return "inf";
  if (exact_) {
    if (exact_->den == 1) return std::to_string(exact_->num);
    return std::to_string(exact_->num) + "/" + std::to_string(exact_->den);
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", p_);
  return buf;
}

}  // namespace realpart

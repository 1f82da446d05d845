#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace realpart {

/// Exact positive rational num/den in lowest terms.
struct Rational {
  std::int64_t num = 1;
  std::int64_t den = 1;

  friend bool operator==(const Rational&, const Rational&) = default;
  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
};

/// Integrability exponent p in [1, inf] with its Hoelder conjugate q.
/// Finite exponents keep their exact rational value when one is known, so
/// that closed-form families can be matched exactly.
class ExponentP {
 public:
  static ExponentP infinity();
  static ExponentP rational(std::int64_t num, std::int64_t den = 1);
  /// Accepts "inf", integers, decimals ("2.5") and fractions ("3/2"); all
  /// finite forms are converted exactly. Throws DomainError.
  static ExponentP parse(std::string_view text);
  /// Recovers an exact rational when x is one with a small denominator.
  static ExponentP from_double(double x);

  bool is_infinite() const { return infinite_; }
  bool is_one() const { return !infinite_ && p_ == 1.0; }
  double p() const;       ///< +inf when infinite
  double q() const;       ///< conjugate; +inf when p = 1
  double inv_p() const;   ///< 1/p, 0 when infinite
  const std::optional<Rational>& exact() const { return exact_; }
  /// Exact conjugate q = p/(p-1); requires an exact finite p > 1 or p = inf.
  std::optional<Rational> exact_q() const;

  std::string to_string() const;

 private:
  ExponentP() = default;
  bool infinite_ = false;
  double p_ = 1.0;
  std::optional<Rational> exact_;
};

}  // namespace realpart

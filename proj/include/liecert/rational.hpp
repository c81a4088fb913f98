#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>

#include <gmpxx.h>

namespace liecert {

/// Exact rational number in canonical form (gcd(|num|, den) = 1, den > 0).
///
/// Values that fit in 64 bits are stored inline; anything larger is promoted
/// to a GMP rational and demoted again when a result fits. Almost every entry
/// produced by the classical algebras is a small integer, so the inline path
/// carries nearly all of the work.
class Rational {
public:
  Rational() noexcept = default;
  Rational(std::int64_t value) noexcept : num_(value) { // NOLINT(implicit)
    if (value == INT64_MIN) promote_from_small();
  }
  Rational(int value) noexcept : Rational(static_cast<std::int64_t>(value)) {} // NOLINT
  Rational(std::int64_t num, std::int64_t den);
  explicit Rational(const mpq_class& value);

  /// Parses "p", "-p" or "p/q".
  static Rational parse(const std::string& text);

  Rational(const Rational& other);
  Rational& operator=(const Rational& other);
  Rational(Rational&&) noexcept = default;
  Rational& operator=(Rational&&) noexcept = default;
  ~Rational() = default;

  [[nodiscard]] bool is_zero() const noexcept { return !big_ && num_ == 0; }
  [[nodiscard]] bool is_integer() const;
  [[nodiscard]] int sign() const;

  [[nodiscard]] mpq_class to_mpq() const;
  [[nodiscard]] double to_double() const;

  /// "p" for integers, "p/q" otherwise.
  [[nodiscard]] std::string to_string() const;
  /// Always "p/q", including integers ("3/1").
  [[nodiscard]] std::string to_fraction_string() const;
  [[nodiscard]] std::string numerator_string() const;
  [[nodiscard]] std::string denominator_string() const;

  /// Exact conversion; throws std::range_error if not an integer in range.
  [[nodiscard]] std::int64_t to_int64() const;

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b);
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
  void promote_from_small();
  void assign_big(mpq_class value);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::unique_ptr<mpq_class> big_; // non-null iff the value does not fit inline
};

Rational abs(const Rational& r);

} // namespace liecert

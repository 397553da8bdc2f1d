#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace mdus {

/// Fixed-point money with 4 fractional digits. Utility sums are exact, so
/// threshold comparisons do not depend on summation order.
class Money {
 public:
  static constexpr std::int64_t kScale = 10'000;

  constexpr Money() = default;

  static constexpr Money from_raw(std::int64_t raw) { return Money(raw); }
  static constexpr Money from_units(std::int64_t units) {
    return Money(units * kScale);
  }
  /// Parses a non-negative decimal with at most 4 fractional digits.
  static Money parse(std::string_view text);

  constexpr std::int64_t raw() const { return raw_; }
  constexpr bool is_zero() const { return raw_ == 0; }

  /// Minimal decimal rendering: "394", "39.4", "0.0001".
  std::string str() const;

  constexpr Money& operator+=(Money o) {
    raw_ += o.raw_;
    return *this;
  }
  friend constexpr Money operator+(Money a, Money b) {
    return Money(a.raw_ + b.raw_);
  }
  friend constexpr Money operator-(Money a, Money b) {
    return Money(a.raw_ - b.raw_);
  }
  friend constexpr Money operator*(Money a, std::int64_t k) {
    return Money(a.raw_ * k);
  }
  friend constexpr auto operator<=>(Money a, Money b) = default;

 private:
  constexpr explicit Money(std::int64_t raw) : raw_(raw) {}
  std::int64_t raw_ = 0;
};

/// A minimum-utility ratio in (0, 1], kept as an exact decimal fraction so
/// that minutil lands on the money grid deterministically.
class Delta {
 public:
  /// Parses "0.1", "0.0005", "1". At most 9 fractional digits. Rejects
  /// values outside (0, 1].
  static Delta parse(std::string_view text);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  double value() const { return static_cast<double>(num_) / den_; }
  const std::string& text() const { return text_; }

  friend bool operator==(const Delta& a, const Delta& b) {
    return a.num_ * b.den_ == b.num_ * a.den_;
  }

 private:
  Delta(std::int64_t num, std::int64_t den, std::string text)
      : num_(num), den_(den), text_(std::move(text)) {}
  std::int64_t num_ = 1;
  std::int64_t den_ = 1;
  std::string text_;
};

/// db_util * delta, rounded toward zero onto the money grid.
Money min_utility(Money db_util, const Delta& delta);

}  // namespace mdus

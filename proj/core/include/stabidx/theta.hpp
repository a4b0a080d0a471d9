#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace stabidx {

/// Stable index value: a finite non-negative integer or infinity.
/// Finite values order before infinity.
class Theta {
 public:
  static constexpr Theta finite(std::uint64_t k) noexcept { return Theta(k); }
  static constexpr Theta infinite() noexcept { return Theta(); }

  constexpr bool is_finite() const noexcept { return value_.has_value(); }
  constexpr bool is_infinite() const noexcept { return !value_.has_value(); }

  /// Precondition: is_finite().
  std::uint64_t value() const;

  std::string to_string() const;  // decimal or "inf"

  /// Accepts a decimal integer or "inf"; throws ParseError otherwise.
  static Theta parse(std::string_view text);

  friend constexpr bool operator==(const Theta&, const Theta&) = default;
  friend constexpr std::strong_ordering operator<=>(const Theta& a, const Theta& b) noexcept {
    if (a.is_finite() && b.is_finite()) return *a.value_ <=> *b.value_;
    if (a.is_finite()) return std::strong_ordering::less;
    if (b.is_finite()) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  constexpr Theta() noexcept = default;
  constexpr explicit Theta(std::uint64_t k) noexcept : value_(k) {}

  std::optional<std::uint64_t> value_;
};

}  // namespace stabidx

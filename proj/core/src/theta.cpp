#include "stabidx/theta.hpp"

#include <charconv>
#include <stdexcept>

#include "stabidx/errors.hpp"

namespace stabidx {

std::uint64_t Theta::value() const {
  if (!value_) throw std::logic_error("Theta::value() called on an infinite index");
  return *value_;
}

std::string Theta::to_string() const {
  return value_ ? std::to_string(*value_) : std::string("inf");
}

Theta Theta::parse(std::string_view text) {
  if (text == "inf" || text == "infinite" || text == "infinity") return infinite();
  std::uint64_t k = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, k);
  if (text.empty() || ec != std::errc() || ptr != end)
    throw ParseError(0, "expected a non-negative integer or 'inf', got '" + std::string(text) + "'");
  return finite(k);
}

}  // namespace stabidx

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "stabidx/digraph.hpp"

namespace stabidx {

/// Square matrix of walk counts clamped to {0, 1, 2}; 2 stands for "two or
/// more". Stored as two bit planes: `ones` marks entries >= 1 and `twos`
/// marks entries >= 2 (twos is always a subset of ones).
class SaturatingMatrix {
 public:
  explicit SaturatingMatrix(std::size_t dim = 0);

  static SaturatingMatrix identity(std::size_t dim);

  std::size_t dim() const noexcept { return dim_; }

  std::uint8_t at(std::size_t i, std::size_t j) const;
  /// Counts above 2 are clamped.
  void set(std::size_t i, std::size_t j, unsigned count);

  /// Zeroes every entry, keeping the dimension.
  void clear() noexcept;
  /// Re-dimensions to dim x dim zeros, reusing storage when possible.
  void reset(std::size_t dim);

  bool is_zero_one() const noexcept;
  /// First entry (row-major) whose value is 2.
  std::optional<std::pair<Vertex, Vertex>> first_saturated() const noexcept;

  std::size_t words_per_row() const noexcept { return words_; }
  std::span<const std::uint64_t> ones_row(std::size_t i) const noexcept {
    return {ones_.data() + i * words_, words_};
  }
  std::span<const std::uint64_t> twos_row(std::size_t i) const noexcept {
    return {twos_.data() + i * words_, words_};
  }
  /// The whole ">= 1" plane; for a 0-1 matrix this is an exact key.
  const std::vector<std::uint64_t>& ones_plane() const noexcept { return ones_; }

  /// Overwrites row i with a 0-1 bit row of words_per_row() words.
  void assign_row(std::size_t i, std::span<const std::uint64_t> bits) noexcept;

  friend bool operator==(const SaturatingMatrix&, const SaturatingMatrix&) = default;

  friend void sat_multiply_into(const SaturatingMatrix& m, const SaturatingMatrix& a,
                                SaturatingMatrix& out);

 private:
  std::size_t dim_;
  std::size_t words_;
  std::vector<std::uint64_t> ones_;
  std::vector<std::uint64_t> twos_;
};

/// 0-1 adjacency matrix of D: entry (i,j) is 1 iff (i,j) is an arc.
SaturatingMatrix adjacency(const Digraph& d);

/// Entry (i,j) = min(2, sum_k m(i,k) * a(k,j)). Throws DimensionMismatch.
SaturatingMatrix sat_multiply(const SaturatingMatrix& m, const SaturatingMatrix& a);

/// As sat_multiply, writing into `out` (must not alias m or a). `out` is
/// resized as needed; no allocation happens when it already has the right
/// dimension.
void sat_multiply_into(const SaturatingMatrix& m, const SaturatingMatrix& a, SaturatingMatrix& out);

}  // namespace stabidx

#include "stabidx/saturating_matrix.hpp"

#include <algorithm>
#include <bit>

#include "stabidx/errors.hpp"

namespace stabidx {

SaturatingMatrix::SaturatingMatrix(std::size_t dim)
    : dim_(dim), words_((dim + 63) / 64), ones_(dim * words_, 0), twos_(dim * words_, 0) {}

SaturatingMatrix SaturatingMatrix::identity(std::size_t dim) {
  SaturatingMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m.set(i, i, 1);
  return m;
}

std::uint8_t SaturatingMatrix::at(std::size_t i, std::size_t j) const {
  if (i >= dim_ || j >= dim_) throw Error(ErrorKind::IndexOutOfRange, "matrix index outside dimension");
  const std::size_t w = i * words_ + j / 64;
  const std::uint64_t bit = std::uint64_t{1} << (j % 64);
  if (twos_[w] & bit) return 2;
  return (ones_[w] & bit) ? 1 : 0;
}

void SaturatingMatrix::set(std::size_t i, std::size_t j, unsigned count) {
  if (i >= dim_ || j >= dim_) throw Error(ErrorKind::IndexOutOfRange, "matrix index outside dimension");
  const std::size_t w = i * words_ + j / 64;
  const std::uint64_t bit = std::uint64_t{1} << (j % 64);
  ones_[w] = count >= 1 ? (ones_[w] | bit) : (ones_[w] & ~bit);
  twos_[w] = count >= 2 ? (twos_[w] | bit) : (twos_[w] & ~bit);
}

void SaturatingMatrix::clear() noexcept {
  std::fill(ones_.begin(), ones_.end(), 0);
  std::fill(twos_.begin(), twos_.end(), 0);
}

void SaturatingMatrix::reset(std::size_t dim) {
  dim_ = dim;
  words_ = (dim + 63) / 64;
  ones_.assign(dim * words_, 0);
  twos_.assign(dim * words_, 0);
}

void SaturatingMatrix::assign_row(std::size_t i, std::span<const std::uint64_t> bits) noexcept {
  std::copy(bits.begin(), bits.end(), ones_.begin() + static_cast<std::ptrdiff_t>(i * words_));
  std::fill_n(twos_.begin() + static_cast<std::ptrdiff_t>(i * words_), words_, 0);
}

bool SaturatingMatrix::is_zero_one() const noexcept {
  return std::all_of(twos_.begin(), twos_.end(), [](std::uint64_t w) { return w == 0; });
}

std::optional<std::pair<Vertex, Vertex>> SaturatingMatrix::first_saturated() const noexcept {
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t w = 0; w < words_; ++w) {
      const std::uint64_t bits = twos_[i * words_ + w];
      if (bits != 0)
        return std::pair{static_cast<Vertex>(i),
                         static_cast<Vertex>(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)))};
    }
  }
  return std::nullopt;
}

SaturatingMatrix adjacency(const Digraph& d) {
  SaturatingMatrix m(d.order());
  for (Vertex u = 0; u < d.order(); ++u) m.assign_row(u, d.row(u));
  return m;
}

void sat_multiply_into(const SaturatingMatrix& m, const SaturatingMatrix& a, SaturatingMatrix& out) {
  if (m.dim_ != a.dim_) throw Error(ErrorKind::DimensionMismatch, "sat_multiply operands differ in dimension");
  if (out.dim_ != m.dim_) out.reset(m.dim_);
  const std::size_t words = m.words_;
  for (std::size_t i = 0; i < m.dim_; ++i) {
    std::uint64_t* ones = out.ones_.data() + i * words;
    std::uint64_t* twos = out.twos_.data() + i * words;
    std::fill(ones, ones + words, 0);
    std::fill(twos, twos + words, 0);
    const std::uint64_t* m_ones = m.ones_.data() + i * words;
    const std::uint64_t* m_twos = m.twos_.data() + i * words;
    for (std::size_t kw = 0; kw < words; ++kw) {
      for (std::uint64_t bits = m_ones[kw]; bits != 0; bits &= bits - 1) {
        const unsigned b = static_cast<unsigned>(std::countr_zero(bits));
        const std::size_t k = kw * 64 + b;
        const bool m_is_two = (m_twos[kw] >> b) & 1U;
        const std::uint64_t* a_ones = a.ones_.data() + k * words;
        const std::uint64_t* a_twos = a.twos_.data() + k * words;
        // m(i,k) * a(k,j) >= 2 iff both are nonzero and either is 2; the
        // running sum reaches 2 once a second nonzero term lands on j.
        for (std::size_t w = 0; w < words; ++w) {
          const std::uint64_t term_two = m_is_two ? a_ones[w] : a_twos[w];
          twos[w] |= term_two | (ones[w] & a_ones[w]);
          ones[w] |= a_ones[w];
        }
      }
    }
  }
}

SaturatingMatrix sat_multiply(const SaturatingMatrix& m, const SaturatingMatrix& a) {
  SaturatingMatrix out(m.dim());
  sat_multiply_into(m, a, out);
  return out;
}

}  // namespace stabidx

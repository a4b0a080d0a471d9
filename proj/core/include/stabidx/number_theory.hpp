#pragma once

#include <cstdint>

namespace stabidx {

/// Smallest u >= 0 admitting some v >= 0 with p - q = u*q - v*p, by direct
/// search. Requires p > q > 1 (ParameterOutOfRange) and gcd(p,q) = 1
/// (NotCoprime). For such pairs the answer is always p - 1.
std::uint64_t min_coeff(std::uint64_t p, std::uint64_t q);

/// Whether {k*q mod p : 1 <= k <= p-1} is exactly {1, ..., p-1}.
/// Requires p, q > 0 coprime (NotCoprime otherwise, ParameterOutOfRange
/// for zero).
bool residue_permutation_check(std::uint64_t p, std::uint64_t q);

}  // namespace stabidx

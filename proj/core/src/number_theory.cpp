#include "stabidx/number_theory.hpp"

#include <numeric>
#include <string>
#include <vector>

#include "stabidx/errors.hpp"

namespace stabidx {

std::uint64_t min_coeff(std::uint64_t p, std::uint64_t q) {
  if (!(p > q && q > 1)) throw Error(ErrorKind::ParameterOutOfRange, "min_coeff requires p > q > 1");
  if (std::gcd(p, q) != 1) throw Error(ErrorKind::NotCoprime, "min_coeff requires gcd(p,q) = 1");
  const std::uint64_t diff = p - q;
  // v = (u*q - diff) / p must be a non-negative integer.
  for (std::uint64_t u = 0; u <= p; ++u) {
    const std::uint64_t uq = u * q;
    if (uq >= diff && (uq - diff) % p == 0) return u;
  }
  throw Error(ErrorKind::SearchExhausted,
              "no coefficient found for (" + std::to_string(p) + "," + std::to_string(q) + ")");
}

bool residue_permutation_check(std::uint64_t p, std::uint64_t q) {
  if (p == 0 || q == 0) throw Error(ErrorKind::ParameterOutOfRange, "residue check requires p, q > 0");
  if (std::gcd(p, q) != 1) throw Error(ErrorKind::NotCoprime, "residue check requires gcd(p,q) = 1");
  std::vector<char> hit(p, 0);
  for (std::uint64_t k = 1; k < p; ++k) {
    const std::uint64_t x = (k * q) % p;
    if (x == 0 || hit[x]) return false;
    hit[x] = 1;
  }
  return true;
}

}  // namespace stabidx

#include "comer/primes.hpp"

#include <cmath>

namespace comer {

namespace {

// Odd-only bit sieve up to limit (inclusive). bit i <=> 2i+1 is composite.
std::vector<std::uint64_t> odd_composite_bits(std::uint64_t limit) {
  const std::uint64_t half = limit / 2 + 1;
  std::vector<std::uint64_t> bits((half + 63) / 64, 0);
  for (std::uint64_t i = 1; (2 * i + 1) * (2 * i + 1) <= limit; ++i) {
    if (bits[i / 64] >> (i % 64) & 1) continue;
    const std::uint64_t q = 2 * i + 1;
    for (std::uint64_t j = (q * q) / 2; j < half; j += q) bits[j / 64] |= 1ull << (j % 64);
  }
  return bits;
}

}  // namespace

std::vector<std::uint64_t> primes_below(std::uint64_t limit) {
  return primes_in_progression(limit, 1, 0);
}

std::vector<std::uint64_t> primes_in_progression(std::uint64_t limit, std::uint64_t modulus,
                                                 std::uint64_t residue) {
  std::vector<std::uint64_t> out;
  if (limit < 2) return out;
  if (modulus == 0) modulus = 1;
  residue %= modulus;
  const std::vector<std::uint64_t> bits = odd_composite_bits(limit);
  if (2 % modulus == residue) out.push_back(2);
  for (std::uint64_t q = 3; q <= limit; q += 2) {
    const std::uint64_t i = q / 2;
    if (bits[i / 64] >> (i % 64) & 1) continue;
    if (q % modulus == residue) out.push_back(q);
  }
  return out;
}

}  // namespace comer

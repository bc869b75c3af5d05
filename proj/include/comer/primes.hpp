#pragma once

// Segmented prime enumeration for the search workloads.

#include <cstdint>
#include <vector>

namespace comer {

/// All primes <= limit, ascending.
std::vector<std::uint64_t> primes_below(std::uint64_t limit);

/// All primes p <= limit with p == residue (mod modulus), ascending.
/// modulus == 1 yields every prime.
std::vector<std::uint64_t> primes_in_progression(std::uint64_t limit, std::uint64_t modulus,
                                                 std::uint64_t residue);

}  // namespace comer

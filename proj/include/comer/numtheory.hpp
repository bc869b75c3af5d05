#pragma once

// Primality, primitive roots, and coset partitions of prime fields.
//
// For a prime p = n*k + 1 and a primitive root g, the multiplicative group
// F_p^x splits into n cosets of the index-n subgroup:
//
//   X_i = { g^i, g^(n+i), g^(2n+i), ..., g^((k-1)n+i) },   0 <= i < n.
//
// CosetPartition stores the inverse map ind : {1,...,p-1} -> {0,...,n-1}
// with ind(g^t) = t mod n, built in one O(p) pass over the powers of g.

#include <cstdint>
#include <optional>
#include <vector>

#include "comer/errors.hpp"

namespace comer {

/// Deterministic Miller-Rabin, valid for the full 64-bit range.
bool is_prime(std::uint64_t m) noexcept;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) noexcept;
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) noexcept;

/// Distinct prime factors by trial division (intended for m < 2^64 with
/// small factors; p-1 for the moduli handled here is always easy).
std::vector<std::uint64_t> distinct_prime_factors(std::uint64_t m);

/// True iff g generates F_p^x. p must be prime.
bool is_primitive_root(std::uint64_t g, std::uint64_t p);

/// Smallest positive primitive root modulo p. Throws NotPrimeError.
/// find_primitive_root(2) == 1 (the trivial group).
std::uint64_t find_primitive_root(std::uint64_t p);

struct CosetPartition {
  std::uint64_t p = 0;  // prime modulus
  int n = 0;            // number of cosets, n | p-1
  std::uint64_t k = 0;  // coset size (p-1)/n
  std::uint64_t g = 0;  // primitive root realizing the indexing
  int neg_index = 0;    // ind(p-1), i.e. the coset of -1

  // ind[x] for 1 <= x <= p-1; ind[0] is unused.
  std::vector<std::uint16_t> ind;

  /// Coset index of residue x, 1 <= x <= p-1.
  int index_of(std::uint64_t x) const;

  /// The fiber X_i in increasing residue order (size exactly k).
  std::vector<std::uint64_t> coset(int i) const;
};

// ind entries are 16-bit; n beyond this makes no sense at desk scale anyway.
inline constexpr int MAX_COLORS = 65535;

/// Build the partition for p = n*k + 1. When g is omitted the smallest
/// primitive root is used. Throws NotPrimeError, DoesNotDivideError,
/// NotPrimitiveRootError.
CosetPartition build_partition(std::uint64_t p, int n,
                               std::optional<std::uint64_t> g = std::nullopt);

/// Smallest element of X_j whose multiplicative order is p-1. Exists
/// whenever gcd(j, n) = 1; throws NoRootFoundError otherwise (which for
/// coprime j would indicate a bug, so the message is loud).
std::uint64_t primitive_root_in_coset(const CosetPartition& part, int j);

}  // namespace comer

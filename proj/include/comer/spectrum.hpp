#pragma once

// Mandatory/forbidden triple spectra of coset partitions.
//
// A triple (i,j,k) is mandatory when (X_i + X_j) meets X_k. Multiplying
// witnesses through by units shows that only the differences (j-i, k-i)
// matter, so the whole n^3 relation collapses to an n x n table
//
//   M[m][d] = true  iff  some z in X_m has z != p-1 and ind(1+z) = d,
//
// and mandatory(i,j,k) = M[(j-i) mod n][(k-i) mod n]. Building M costs one
// O(p) sweep; the brute-force route enumerating all (p-1)^2 sums is kept
// as an independent oracle.
//
// Sums that land on 0 are recorded nowhere: 0 lies in no coset, so they
// never make a triple mandatory.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "comer/numtheory.hpp"

#include "json.hpp"

namespace comer {

struct SumSpectrum {
  std::uint64_t p = 0;
  int n = 0;
  std::uint64_t k = 0;
  std::uint64_t g = 0;
  int neg_index = 0;

  int words_per_row = 0;
  std::vector<std::uint64_t> bits;  // n rows of words_per_row packed words

  bool mandatory(int m, int d) const {
    return bits[static_cast<std::size_t>(m) * words_per_row + d / 64] >> (d % 64) & 1;
  }
  void set_mandatory(int m, int d) {
    bits[static_cast<std::size_t>(m) * words_per_row + d / 64] |= 1ull << (d % 64);
  }
  /// True iff row m has all n bits set.
  bool row_full(int m) const;

  bool operator==(const SumSpectrum&) const = default;
};

/// The O(p) computation of M described above.
SumSpectrum compute_spectrum(const CosetPartition& part);

inline constexpr std::uint64_t DEFAULT_ORACLE_CAP = 10000;

/// Independent oracle: enumerate all (p-1)^2 sums x+y directly. Bit-for-bit
/// equal to compute_spectrum. Throws OracleCapExceededError when p > cap.
SumSpectrum brute_force_spectrum(const CosetPartition& part,
                                 std::uint64_t cap = DEFAULT_ORACLE_CAP);

/// mandatory(i,j,k) with range checks.
bool triple_mandatory(const SumSpectrum& spectrum, int i, int j, int k);

// A cycle class is the orbit of a triple under rotation, the two-argument
// swap, and the Peirce move (i,j,k) -> (i+neg, k, j). The canonical
// representative is the lexicographically least normalized member (0,a,b).
struct CycleClass {
  std::array<int, 3> rep{};
  int n = 0;
  int neg_index = 0;

  bool operator==(const CycleClass& other) const { return rep == other.rep; }
  bool operator<(const CycleClass& other) const { return rep < other.rep; }
};

std::array<int, 3> canonical_cycle(int n, int neg_index, std::array<int, 3> triple);

/// Normalized pairs (a,b) of every orbit member of the given triple,
/// sorted. mandatory(i,j,k) for a member is M[a][b].
std::vector<std::array<int, 2>> cycle_orbit_pairs(int n, int neg_index, std::array<int, 3> triple);

/// Canonical representatives of all forbidden (non-mandatory) classes,
/// sorted. Verifies during construction that no orbit mixes mandatory and
/// forbidden members; a mix throws InconsistentOrbitError (a bug, not a
/// data condition).
std::vector<CycleClass> forbidden_classes(const SumSpectrum& spectrum);

/// Ramsey test: all classes symmetric (neg_index = 0) and the only
/// forbidden class is [0,0,0]. Checked both through the class list and
/// through the direct row conditions; the two routes must agree.
bool is_ramsey(const SumSpectrum& spectrum);

/// True iff no triple at all is forbidden.
bool is_all_flexible(const SumSpectrum& spectrum);

/// JSON report with fields p, n, g, k, neg_index, forbidden_classes,
/// ramsey, all_flexible (exactly those names, in that order).
nlohmann::ordered_json spectrum_report(const SumSpectrum& spectrum);

std::string render_spectrum_text(const SumSpectrum& spectrum);

}  // namespace comer

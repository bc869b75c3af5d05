#pragma once

// Abstract integral atom structures and their index symmetries.
//
// An AtomStructure records the diversity atoms of a finite integral
// relation algebra: a converse involution and the set of forbidden
// diversity cycles, closed under the six Peircean transforms
//
//   (x,y,z), (x',z,y), (z,y',x), (y,z',x'), (z',x,y'), (y',x',z')
//
// where ' is converse. Identity cycles are never stored; integrality
// determines them.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "comer/spectrum.hpp"

namespace comer {

struct AtomStructure {
  int atom_count = 0;
  std::vector<int> converse;               // involution; converse[i] == i when symmetric
  std::vector<std::uint8_t> cycle_flags;   // atom_count^3 entries

  bool forbidden(int x, int y, int z) const {
    return cycle_flags[(static_cast<std::size_t>(x) * atom_count + y) * atom_count + z] != 0;
  }
  void forbid(int x, int y, int z) {
    cycle_flags[(static_cast<std::size_t>(x) * atom_count + y) * atom_count + z] = 1;
  }
  bool symmetric() const;
  std::size_t forbidden_count() const;
  std::vector<std::array<int, 3>> forbidden_triples() const;  // lex order
};

/// Empty structure with the given converse (identity when omitted).
AtomStructure make_atom_structure(int atom_count, std::vector<int> converse = {});

/// Close the forbidden set under the six Peircean transforms, in place.
void peirce_close(AtomStructure& s);
bool is_peirce_closed(const AtomStructure& s);

/// A_n([i,i+j,i+ell]): n symmetric diversity atoms whose forbidden cycles
/// are the Peirce closure of (i, i+j, i+ell) for every i, indices mod n.
AtomStructure make_An(int n, int j, int ell);

struct IndexPermutation {
  std::vector<int> map;

  bool identity() const;
  int fixed_point_count() const;
  /// Cycle notation in the usual style, e.g. "(0 2 4)"; "()" for the identity.
  std::string cycle_notation() const;

  bool operator==(const IndexPermutation&) const = default;
  bool operator<(const IndexPermutation& other) const { return map < other.map; }
};

inline constexpr int DEFAULT_AUT_CAP = 9;

/// True iff pi commutes with converse and maps the forbidden set onto itself.
bool is_automorphism(const AtomStructure& s, const IndexPermutation& pi);

/// All automorphisms by exhaustive enumeration of the n! permutations,
/// sorted. Throws CapExceededError when atom_count > cap.
std::vector<IndexPermutation> automorphisms(const AtomStructure& s, int cap = DEFAULT_AUT_CAP);

/// The map i -> j*i (mod n) for gcd(j,n) = 1, verified to carry
/// forbidden(A_n([i,i,i+1])) onto forbidden(A_n([i,i,i+j])) exactly.
/// Throws NotCoprimeError.
IndexPermutation rho_isomorphism(int n, int j);

/// For x = gcd(j,n) > 1: the cycle (0 x 2x ...), verified to be a
/// non-identity automorphism of A_n([i,i,i+j]) with at least one fixed
/// point. Throws GcdIsOneError when gcd(j,n) = 1.
IndexPermutation fixed_point_automorphism(int n, int j);

/// Exhaustive test for a converse-compatible permutation carrying
/// forbidden(a) onto forbidden(b). Throws SizeMismatchError and
/// CapExceededError.
bool cycle_structures_isomorphic(const AtomStructure& a, const AtomStructure& b,
                                 int cap = DEFAULT_AUT_CAP);

/// Rebuild a partition using the smallest primitive root found inside X_j
/// (gcd(j,n) = 1 required). Forbidden classes scale by j^{-1} mod n; in
/// particular a lone [0,0,j] class becomes [0,0,1]. The scaling law is
/// re-verified on the result. Throws NotCoprimeError, NoRootFoundError.
CosetPartition reindex_by_root(const CosetPartition& part, int j);

/// The concrete atom structure of a spectrum: one atom per coset,
/// converse i -> i + neg_index, forbidden cycles the non-mandatory triples.
AtomStructure spectrum_atom_structure(const SumSpectrum& spectrum);

}  // namespace comer

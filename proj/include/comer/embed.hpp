#pragma once

// Embedding verification: does an abstract integral atom structure sit
// inside a Comer algebra when each diversity atom is assigned a union of
// cosets?
//
// Because sum sets of cosets are unions of full cosets, the whole check
// happens at the cycle level: a forbidden abstract cycle must map to
// index triples that are all non-mandatory, and a mandatory abstract
// cycle (a,b,c) must have every coset assigned to c reachable from the
// cosets of a and b. A small-p oracle that materializes the actual
// relations lives in the test suite.

#include <optional>
#include <string>
#include <vector>

#include "comer/atoms.hpp"
#include "comer/search.hpp"
#include "comer/spectrum.hpp"

namespace comer {

struct AtomEmbedding {
  SumSpectrum target;
  // atom_cosets[a] = sorted coset indices assigned to diversity atom a.
  std::vector<std::vector<int>> atom_cosets;
};

/// Throws MalformedEmbeddingError naming the violated invariant:
/// per-atom sets nonempty, pairwise disjoint, jointly exhaustive, and
/// converse-compatible (set of a-converse = set of a shifted by neg_index).
void validate_embedding(const AtomStructure& structure, const AtomEmbedding& embedding);

struct CycleCheck {
  std::array<int, 3> cycle{};  // diversity atom indices
  bool forbidden_in_structure = false;
  bool pass = false;
  std::string detail;  // empty when pass
};

struct EmbeddingReport {
  bool pass = false;
  std::vector<CycleCheck> cycles;  // every diversity cycle, lex order
};

EmbeddingReport verify_embedding(const AtomStructure& structure, const AtomEmbedding& embedding);

struct SchemeTemplate {
  ForbiddenScheme scheme;                    // target forbidden classes + parity
  std::vector<std::vector<int>> atom_cosets; // assignment template
};

struct NamedAlgebra {
  std::string name;
  std::vector<std::string> atom_names;  // diversity atoms only
  AtomStructure structure;
  std::string notes;
  bool known_not_representable = false;
  // Catalog extension files may ship a fixed-n embedding template.
  std::optional<SchemeTemplate> file_template;
};

const std::vector<NamedAlgebra>& builtin_catalog();

/// Builtin lookup; throws UnknownAlgebraError.
const NamedAlgebra& catalog_lookup(const std::string& name);

const NamedAlgebra* find_algebra(const std::vector<NamedAlgebra>& entries, const std::string& name);

/// Parse a catalog extension file (grammar documented in the repository
/// README). Structures are Peirce-closed after parsing.
std::vector<NamedAlgebra> load_catalog_file(const std::string& path);

/// Forbidden scheme and assignment template realizing the named algebra
/// over n colors. Throws UnknownAlgebraError, IncompatibleColorCountError.
SchemeTemplate scheme_for(const std::string& name, int n);

/// Bind a template to a concrete spectrum (sizes are validated).
AtomEmbedding embedding_from_template(const SchemeTemplate& tmpl, SumSpectrum target);

}  // namespace comer

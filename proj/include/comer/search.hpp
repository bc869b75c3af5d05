#pragma once

// Prime searches for target forbidden schemes, the reference-table
// reproduction, and growth-curve data.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "comer/spectrum.hpp"

#include "json.hpp"

namespace comer {

enum class KParity { even, odd, any };

// "even" asks for wholly symmetric classes, which means neg_index = 0:
// coset size k even, or the degenerate p = 2. "odd" is the complement.
bool parity_admits(KParity parity, std::uint64_t p, std::uint64_t k);

const char* to_string(KParity parity);
KParity parity_from_string(const std::string& text);  // InvalidSchemeError

struct ForbiddenScheme {
  int n = 0;
  std::vector<std::array<int, 3>> classes;  // canonical reps, sorted, distinct
  KParity parity = KParity::even;

  bool operator==(const ForbiddenScheme&) const = default;
};

/// Canonicalize arbitrary representatives into a scheme. Classes are
/// canonicalized under the neg_index the parity implies (0 for even/any,
/// n/2 for odd). Throws InvalidSchemeError on bad input.
ForbiddenScheme make_scheme(int n, const std::vector<std::array<int, 3>>& representatives,
                            KParity parity);

/// Scheme class reps re-canonicalized under a concrete neg_index and
/// scaled by u (indices multiplied mod n), as a sorted set.
std::vector<std::array<int, 3>> scaled_scheme_classes(const ForbiddenScheme& scheme, int neg_index,
                                                      int u);

/// Smallest u >= 1, gcd(u,n) = 1, with observed == scheme scaled by u;
/// u = 1 means the scheme matched as written.
std::optional<int> matching_scale(const std::vector<std::array<int, 3>>& observed,
                                  const ForbiddenScheme& scheme, int neg_index);

struct SearchOutcome {
  ForbiddenScheme scheme;
  bool found = false;
  std::uint64_t p = 0;
  std::uint64_t g = 0;
  std::uint64_t bound = 0;          // max_p of the run
  std::uint64_t primes_checked = 0; // parity-compatible AP primes <= min(p, bound)
  double elapsed_s = 0.0;
};

struct SearchCheckpoint {
  int version = 1;
  ForbiddenScheme scheme;
  std::uint64_t max_p = 0;
  std::uint64_t last_checked = 0;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> hits;  // (p, g) ascending
};

/// Strict parse of the checkpoint JSON; any structural problem throws
/// CorruptCheckpointError.
SearchCheckpoint load_checkpoint(const std::string& path);

/// Write-new-then-rename, so an interrupted save never clobbers a good file.
void save_checkpoint(const SearchCheckpoint& checkpoint, const std::string& path);

nlohmann::ordered_json checkpoint_json(const SearchCheckpoint& checkpoint);

struct SearchOptions {
  int workers = 1;              // <= 0 means hardware concurrency
  std::string checkpoint_path;  // empty = no checkpointing
};

/// Scan primes p = 1 (mod n), p <= max_p, ascending, under the smallest
/// primitive root per prime; a prime hits when its forbidden-class set
/// equals the scheme up to index scaling, in which case the reported
/// generator is adjusted (a primitive root inside X_u) so that the classes
/// match the scheme exactly as written. Every hit is re-verified from
/// scratch before being reported. Deterministic for any worker count.
SearchOutcome search_scheme(const ForbiddenScheme& scheme, std::uint64_t max_p,
                            const SearchOptions& options = {});

// ---- reference table ------------------------------------------------------

struct TableCell {
  enum class Status { found, none_below_bound, redundant };
  Status status = Status::none_below_bound;
  std::uint64_t p = 0;
  std::uint64_t g = 0;
};

struct TableRow {
  int n = 0;
  // columns: scheme offsets 0, 1, 2  (classes [0,0,0], [0,0,1], [0,0,2])
  std::array<TableCell, 3> cell;
};

/// One row per n = 1..max_n. Offset-j columns with j != 0 and j = 0 (mod n)
/// are degenerate (the offset names no distinct class) and reported as
/// none_below_bound without a scan; the offset-2 column is redundant for
/// odd n > 1 since scaling by 2 is then invertible.
std::vector<TableRow> reproduce_table(int max_n, std::uint64_t max_p, int workers = 1);

std::string render_table_csv(const std::vector<TableRow>& rows, std::uint64_t bound);
nlohmann::ordered_json table_json(const std::vector<TableRow>& rows, std::uint64_t bound);

struct ReferenceCell {
  enum class Kind { value, none, dash };
  Kind kind = Kind::none;
  std::uint64_t p = 0;
  bool advisory = false;  // published value known to be unreliable
};

/// Published smallest-modulus values for n = 1..16, three columns per row.
const std::vector<std::array<ReferenceCell, 3>>& reference_table();

struct TableCheckItem {
  int n = 0;
  int column = 0;  // 0..2
  bool advisory = false;
  std::string message;
};

struct TableCheck {
  std::vector<TableCheckItem> mismatches;  // real disagreements
  std::vector<TableCheckItem> notes;       // advisory-cell observations
};

TableCheck check_table_against_reference(const std::vector<TableRow>& rows, std::uint64_t bound);

// ---- growth data ----------------------------------------------------------

struct GrowthRow {
  int n = 0;
  std::array<int, 3> scheme_rep{};
  bool found = false;
  std::uint64_t p = 0;
  std::uint64_t g = 0;
};

inline constexpr int MAX_GROWTH_N = 512;

std::vector<GrowthRow> emit_growth_data(int min_n, int max_n,
                                        const std::vector<std::array<int, 3>>& scheme_reps,
                                        std::uint64_t max_p, KParity parity = KParity::even,
                                        int workers = 1);

std::string render_growth_tsv(const std::vector<GrowthRow>& rows);
nlohmann::ordered_json growth_json(const std::vector<GrowthRow>& rows);

}  // namespace comer

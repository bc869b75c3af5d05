// Reference-table reproduction and growth-curve emission.

#include <algorithm>
#include <atomic>
#include <functional>
#include <mutex>
#include <optional>
#include <sstream>
#include <thread>

#include "comer/primes.hpp"
#include "comer/search.hpp"

namespace comer {

namespace {

// Run a function over indices [0, count) on a small pool. Each index is
// independent, so results are deterministic for any worker count.
void parallel_for(std::size_t count, int workers, const std::function<void(std::size_t)>& fn) {
  if (workers <= 0) workers = static_cast<int>(std::thread::hardware_concurrency());
  workers = std::max(1, std::min<int>(workers, static_cast<int>(count ? count : 1)));
  if (workers == 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto body = [&]() {
    try {
      while (true) {
        const std::size_t i = next.fetch_add(1);
        if (i >= count) break;
        fn(i);
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(failure_mutex);
      if (!failure) failure = std::current_exception();
    }
  };
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) pool.emplace_back(body);
  for (std::thread& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

std::vector<std::array<int, 3>> reps_of(const SumSpectrum& spectrum) {
  std::vector<std::array<int, 3>> reps;
  for (const CycleClass& c : forbidden_classes(spectrum)) reps.push_back(c.rep);
  return reps;
}

// One row of the table: scan the parity-admissible primes once and settle
// the applicable columns against all three offset schemes.
TableRow table_row(int n, std::uint64_t max_p) {
  TableRow row;
  row.n = n;

  std::array<std::optional<ForbiddenScheme>, 3> schemes;
  for (int off = 0; off < 3; ++off) {
    TableCell& cell = row.cell[off];
    if (off != 0 && off % n == 0) {
      // The written offset names no distinct class in n colors; no
      // C(p,n) is counted as realizing it.
      cell.status = TableCell::Status::none_below_bound;
    } else if (off == 2 && n % 2 == 1 && n > 1) {
      // Scaling by 2 is invertible for odd n, so this column repeats the
      // offset-1 column.
      cell.status = TableCell::Status::redundant;
    } else {
      schemes[off] = make_scheme(n, {{0, 0, off}}, KParity::even);
    }
  }

  int unresolved = 0;
  for (const auto& s : schemes) unresolved += s.has_value();
  if (unresolved == 0) return row;

  for (std::uint64_t p : primes_in_progression(max_p, n, 1 % n)) {
    const std::uint64_t k = (p - 1) / n;
    if (!parity_admits(KParity::even, p, k)) continue;
    const CosetPartition part = build_partition(p, n);
    const SumSpectrum spectrum = compute_spectrum(part);
    const std::vector<std::array<int, 3>> observed = reps_of(spectrum);
    for (int off = 0; off < 3; ++off) {
      if (!schemes[off].has_value()) continue;
      const std::optional<int> u = matching_scale(observed, *schemes[off], spectrum.neg_index);
      if (!u.has_value()) continue;
      const std::uint64_t g = *u == 1 ? part.g : primitive_root_in_coset(part, *u);
      const SumSpectrum verify = compute_spectrum(build_partition(p, n, g));
      if (reps_of(verify) != scaled_scheme_classes(*schemes[off], verify.neg_index, 1))
        throw InconsistentOrbitError("table hit at p = " + std::to_string(p) + " failed re-verification");
      row.cell[off] = TableCell{TableCell::Status::found, p, g};
      schemes[off].reset();
      if (--unresolved == 0) return row;
    }
  }
  return row;
}

}  // namespace

std::vector<TableRow> reproduce_table(int max_n, std::uint64_t max_p, int workers) {
  if (max_n < 1) throw Error("max_n must be at least 1");
  if (max_n > MAX_GROWTH_N) throw Error("max_n exceeds the configured limit " + std::to_string(MAX_GROWTH_N));
  std::vector<TableRow> rows(max_n);
  parallel_for(static_cast<std::size_t>(max_n), workers,
               [&](std::size_t i) { rows[i] = table_row(static_cast<int>(i) + 1, max_p); });
  return rows;
}

namespace {

std::string scheme_field(int off) { return "\"0,0," + std::to_string(off) + "\""; }

std::string cell_p(const TableCell& cell, std::uint64_t bound) {
  switch (cell.status) {
    case TableCell::Status::found:
      return std::to_string(cell.p);
    case TableCell::Status::none_below_bound:
      return "x(" + std::to_string(bound) + ")";
    case TableCell::Status::redundant:
      return "--";
  }
  return "?";
}

const char* cell_status(const TableCell& cell) {
  switch (cell.status) {
    case TableCell::Status::found:
      return "found";
    case TableCell::Status::none_below_bound:
      return "none_below_bound";
    case TableCell::Status::redundant:
      return "redundant";
  }
  return "?";
}

}  // namespace

std::string render_table_csv(const std::vector<TableRow>& rows, std::uint64_t bound) {
  std::ostringstream out;
  out << "n,scheme,p,g,status\n";
  for (const TableRow& row : rows) {
    for (int off = 0; off < 3; ++off) {
      const TableCell& cell = row.cell[off];
      out << row.n << "," << scheme_field(off) << "," << cell_p(cell, bound) << ",";
      if (cell.status == TableCell::Status::found) out << cell.g;
      out << "," << cell_status(cell) << "\n";
    }
  }
  return out.str();
}

nlohmann::ordered_json table_json(const std::vector<TableRow>& rows, std::uint64_t bound) {
  nlohmann::ordered_json j;
  j["max_p"] = bound;
  nlohmann::ordered_json out_rows = nlohmann::ordered_json::array();
  for (const TableRow& row : rows) {
    nlohmann::ordered_json r;
    r["n"] = row.n;
    nlohmann::ordered_json cells = nlohmann::ordered_json::array();
    for (int off = 0; off < 3; ++off) {
      const TableCell& cell = row.cell[off];
      nlohmann::ordered_json c;
      c["scheme"] = std::array<int, 3>{0, 0, off};
      c["status"] = cell_status(cell);
      if (cell.status == TableCell::Status::found) {
        c["p"] = cell.p;
        c["g"] = cell.g;
      }
      cells.push_back(c);
    }
    r["cells"] = cells;
    out_rows.push_back(r);
  }
  j["rows"] = out_rows;
  return j;
}

const std::vector<std::array<ReferenceCell, 3>>& reference_table() {
  using K = ReferenceCell::Kind;
  static const std::vector<std::array<ReferenceCell, 3>> table = {
      {{{K::value, 2}, {K::none}, {K::none}}},
      {{{K::value, 5}, {K::none}, {K::none}}},
      {{{K::value, 13}, {K::none}, {K::none}}},
      {{{K::value, 41}, {K::none}, {K::none}}},
      {{{K::value, 71}, {K::value, 61}, {K::dash}}},
      {{{K::value, 97}, {K::value, 109}, {K::none}}},
      {{{K::value, 491}, {K::value, 127}, {K::dash}}},
      {{{K::none}, {K::value, 257}, {K::none}}},
      {{{K::value, 523}, {K::value, 307}, {K::dash}}},
      {{{K::value, 1181}, {K::value, 641}, {K::value, 421}}},
      {{{K::value, 947}, {K::value, 331}, {K::dash}}},
      {{{K::value, 769}, {K::value, 673}, {K::none}}},
      // The published 667 is composite; the cell is advisory and the
      // computed smallest prime hit is reported alongside it.
      {{{K::none}, {K::value, 667, true}, {K::dash}}},
      {{{K::value, 1709}, {K::value, 953}, {K::none}}},
      {{{K::value, 1291}, {K::none}, {K::none}}},
      {{{K::value, 1217}, {K::value, 2593}, {K::value, 1697}}},
  };
  return table;
}

TableCheck check_table_against_reference(const std::vector<TableRow>& rows, std::uint64_t bound) {
  TableCheck check;
  const auto& reference = reference_table();
  for (const TableRow& row : rows) {
    if (row.n < 1 || static_cast<std::size_t>(row.n) > reference.size()) continue;
    for (int off = 0; off < 3; ++off) {
      const ReferenceCell& ref = reference[row.n - 1][off];
      // A redundant cell resolves to the offset-1 column of the same row.
      const TableCell& cell =
          row.cell[off].status == TableCell::Status::redundant ? row.cell[1] : row.cell[off];

      std::ostringstream msg;
      msg << "n=" << row.n << " scheme [0,0," << off << "]: ";
      if (ref.advisory) {
        msg << "reference lists " << ref.p << " (composite); computed ";
        if (cell.status == TableCell::Status::found)
          msg << "smallest prime hit is " << cell.p << " (g=" << cell.g << ")";
        else
          msg << "no prime hit below " << bound;
        check.notes.push_back({row.n, off, true, msg.str()});
        continue;
      }
      bool ok = false;
      if (ref.kind == ReferenceCell::Kind::value)
        ok = cell.status == TableCell::Status::found && cell.p == ref.p;
      else if (ref.kind == ReferenceCell::Kind::none)
        ok = cell.status == TableCell::Status::none_below_bound;
      else  // dash: the reference itself defers to the offset-1 column
        ok = row.cell[off].status == TableCell::Status::redundant;
      if (!ok) {
        msg << "computed " << cell_p(cell, bound) << ", reference ";
        if (ref.kind == ReferenceCell::Kind::value)
          msg << ref.p;
        else if (ref.kind == ReferenceCell::Kind::none)
          msg << "x";
        else
          msg << "--";
        check.mismatches.push_back({row.n, off, false, msg.str()});
      }
    }
  }
  return check;
}

std::vector<GrowthRow> emit_growth_data(int min_n, int max_n,
                                        const std::vector<std::array<int, 3>>& scheme_reps,
                                        std::uint64_t max_p, KParity parity, int workers) {
  if (min_n < 1 || max_n < min_n) throw Error("growth range is empty or negative");
  if (max_n > MAX_GROWTH_N) throw Error("max_n exceeds the configured limit " + std::to_string(MAX_GROWTH_N));
  if (scheme_reps.empty()) throw InvalidSchemeError("at least one scheme is required");

  std::vector<GrowthRow> rows(static_cast<std::size_t>(max_n - min_n + 1) * scheme_reps.size());
  parallel_for(rows.size(), workers, [&](std::size_t idx) {
    const int n = min_n + static_cast<int>(idx / scheme_reps.size());
    const std::array<int, 3> rep = scheme_reps[idx % scheme_reps.size()];
    const ForbiddenScheme scheme = make_scheme(n, {rep}, parity);
    const SearchOutcome outcome = search_scheme(scheme, max_p);
    GrowthRow& row = rows[idx];
    row.n = n;
    row.scheme_rep = scheme.classes.empty() ? rep : scheme.classes.front();
    row.found = outcome.found;
    row.p = outcome.p;
    row.g = outcome.g;
  });
  return rows;
}

std::string render_growth_tsv(const std::vector<GrowthRow>& rows) {
  std::ostringstream out;
  for (const GrowthRow& row : rows) {
    out << row.n << "\t" << row.scheme_rep[0] << "," << row.scheme_rep[1] << "," << row.scheme_rep[2] << "\t";
    if (row.found) out << row.p;
    out << "\n";
  }
  return out.str();
}

nlohmann::ordered_json growth_json(const std::vector<GrowthRow>& rows) {
  nlohmann::ordered_json j;
  nlohmann::ordered_json out_rows = nlohmann::ordered_json::array();
  for (const GrowthRow& row : rows) {
    nlohmann::ordered_json r;
    r["n"] = row.n;
    r["scheme"] = row.scheme_rep;
    if (row.found) {
      r["p"] = row.p;
      r["g"] = row.g;
    } else {
      r["p"] = nullptr;
    }
    out_rows.push_back(r);
  }
  j["rows"] = out_rows;
  return j;
}

}  // namespace comer

#include "comer/spectrum.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace comer {

namespace {

SumSpectrum empty_spectrum(const CosetPartition& part) {
  SumSpectrum s;
  s.p = part.p;
  s.n = part.n;
  s.k = part.k;
  s.g = part.g;
  s.neg_index = part.neg_index;
  s.words_per_row = (part.n + 63) / 64;
  s.bits.assign(static_cast<std::size_t>(part.n) * s.words_per_row, 0);
  return s;
}

int mod(int v, int n) { return (v % n + n) % n; }

}  // namespace

bool SumSpectrum::row_full(int m) const {
  for (int d = 0; d < n; ++d) {
    if (!mandatory(m, d)) return false;
  }
  return true;
}

SumSpectrum compute_spectrum(const CosetPartition& part) {
  SumSpectrum s = empty_spectrum(part);
  // z runs over X_m \ {p-1}; 1+z then lies in {2,...,p-1}.
  for (std::uint64_t z = 1; z + 1 < part.p; ++z) {
    s.set_mandatory(part.ind[z], part.ind[z + 1]);
  }
  return s;
}

SumSpectrum brute_force_spectrum(const CosetPartition& part, std::uint64_t cap) {
  if (part.p > cap)
    throw OracleCapExceededError("p = " + std::to_string(part.p) + " exceeds the oracle cap " + std::to_string(cap));
  SumSpectrum s = empty_spectrum(part);
  const int n = part.n;
  for (std::uint64_t x = 1; x < part.p; ++x) {
    const int i = part.ind[x];
    for (std::uint64_t y = 1; y < part.p; ++y) {
      std::uint64_t sum = x + y;
      if (sum >= part.p) sum -= part.p;
      if (sum == 0) continue;
      const int j = part.ind[y];
      const int k = part.ind[sum];
      s.set_mandatory(mod(j - i, n), mod(k - i, n));
    }
  }
  return s;
}

bool triple_mandatory(const SumSpectrum& spectrum, int i, int j, int k) {
  const int n = spectrum.n;
  if (i < 0 || i >= n || j < 0 || j >= n || k < 0 || k >= n)
    throw IndexOutOfRangeError("triple indices must lie in {0,...," + std::to_string(n - 1) + "}");
  return spectrum.mandatory(mod(j - i, n), mod(k - i, n));
}

std::vector<std::array<int, 2>> cycle_orbit_pairs(int n, int neg_index, std::array<int, 3> triple) {
  // Work on normalized pairs (a,b) = (j-i, k-i). The swap acts as
  // (a,b) -> (-a, b-a) and the Peirce move as (a,b) -> (b-neg, a-neg);
  // rotation is quotiented out by the normalization itself.
  const int a0 = mod(triple[1] - triple[0], n);
  const int b0 = mod(triple[2] - triple[0], n);
  std::set<std::array<int, 2>> orbit;
  std::vector<std::array<int, 2>> todo{{a0, b0}};
  while (!todo.empty()) {
    const std::array<int, 2> pr = todo.back();
    todo.pop_back();
    if (!orbit.insert(pr).second) continue;
    todo.push_back({mod(-pr[0], n), mod(pr[1] - pr[0], n)});
    todo.push_back({mod(pr[1] - neg_index, n), mod(pr[0] - neg_index, n)});
  }
  return {orbit.begin(), orbit.end()};
}

std::array<int, 3> canonical_cycle(int n, int neg_index, std::array<int, 3> triple) {
  std::array<int, 3> best{n, n, n};
  for (const std::array<int, 2>& pr : cycle_orbit_pairs(n, neg_index, triple)) {
    best = std::min(best, std::array<int, 3>{0, pr[0], pr[1]});
  }
  return best;
}

std::vector<CycleClass> forbidden_classes(const SumSpectrum& spectrum) {
  const int n = spectrum.n;
  const int neg = spectrum.neg_index;
  std::vector<char> seen(static_cast<std::size_t>(n) * n, 0);
  std::vector<CycleClass> classes;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (spectrum.mandatory(a, b) || seen[static_cast<std::size_t>(a) * n + b]) continue;
      const auto orbit = cycle_orbit_pairs(n, neg, {0, a, b});
      std::array<int, 3> rep{n, n, n};
      for (const std::array<int, 2>& pr : orbit) {
        if (spectrum.mandatory(pr[0], pr[1]))
          throw InconsistentOrbitError("orbit of (0," + std::to_string(a) + "," + std::to_string(b) +
                                       ") mixes mandatory and forbidden members");
        seen[static_cast<std::size_t>(pr[0]) * n + pr[1]] = 1;
        rep = std::min(rep, std::array<int, 3>{0, pr[0], pr[1]});
      }
      classes.push_back(CycleClass{rep, n, neg});
    }
  }
  std::sort(classes.begin(), classes.end());
  return classes;
}

bool is_ramsey(const SumSpectrum& spectrum) {
  const int n = spectrum.n;
  // Direct route: classes symmetric, X_i+X_i misses exactly X_i, mixed
  // sums miss nothing.
  bool direct = spectrum.neg_index == 0;
  if (direct) {
    if (spectrum.mandatory(0, 0)) direct = false;
    for (int d = 1; d < n && direct; ++d) {
      if (!spectrum.mandatory(0, d)) direct = false;
    }
    for (int m = 1; m < n && direct; ++m) {
      if (!spectrum.row_full(m)) direct = false;
    }
  }
  // Class route: the only forbidden class is [0,0,0].
  const std::vector<CycleClass> classes = forbidden_classes(spectrum);
  const bool via_classes = spectrum.neg_index == 0 && classes.size() == 1 && classes[0].rep == std::array<int, 3>{0, 0, 0};
  if (direct != via_classes)
    throw InconsistentOrbitError("Ramsey conditions disagree with the forbidden-class route");
  return direct;
}

bool is_all_flexible(const SumSpectrum& spectrum) {
  for (int m = 0; m < spectrum.n; ++m) {
    if (!spectrum.row_full(m)) return false;
  }
  return true;
}

nlohmann::ordered_json spectrum_report(const SumSpectrum& spectrum) {
  nlohmann::ordered_json report;
  report["p"] = spectrum.p;
  report["n"] = spectrum.n;
  report["g"] = spectrum.g;
  report["k"] = spectrum.k;
  report["neg_index"] = spectrum.neg_index;
  nlohmann::ordered_json classes = nlohmann::ordered_json::array();
  for (const CycleClass& c : forbidden_classes(spectrum)) classes.push_back(c.rep);
  report["forbidden_classes"] = classes;
  report["ramsey"] = is_ramsey(spectrum);
  report["all_flexible"] = is_all_flexible(spectrum);
  return report;
}

std::string render_spectrum_text(const SumSpectrum& spectrum) {
  std::ostringstream out;
  out << "C(" << spectrum.p << "," << spectrum.n << ")  g=" << spectrum.g << "  k=" << spectrum.k
      << "  neg_index=" << spectrum.neg_index << "\n";
  const std::vector<CycleClass> classes = forbidden_classes(spectrum);
  out << "forbidden classes:";
  if (classes.empty()) out << " (none)";
  for (const CycleClass& c : classes) out << " [" << c.rep[0] << "," << c.rep[1] << "," << c.rep[2] << "]";
  out << "\n";
  out << "ramsey: " << (is_ramsey(spectrum) ? "yes" : "no") << "\n";
  out << "all_flexible: " << (is_all_flexible(spectrum) ? "yes" : "no") << "\n";
  return out.str();
}

}  // namespace comer

#include <set>

#include "comer/primes.hpp"
#include "comer/spectrum.hpp"

#include "doctest.h"
#include "oracle.hpp"

using namespace comer;

namespace {

std::set<int> row_set(const SumSpectrum& s, int m) {
  std::set<int> out;
  for (int d = 0; d < s.n; ++d)
    if (s.mandatory(m, d)) out.insert(d);
  return out;
}

std::vector<std::array<int, 3>> reps(const SumSpectrum& s) {
  std::vector<std::array<int, 3>> out;
  for (const CycleClass& c : forbidden_classes(s)) out.push_back(c.rep);
  return out;
}

}  // namespace

TEST_SUITE_BEGIN("spectrum");

TEST_CASE("C(5,2,g=2) rows and classes") {
  const SumSpectrum s = compute_spectrum(build_partition(5, 2, 2));
  CHECK(row_set(s, 0) == std::set<int>{1});
  CHECK(row_set(s, 1) == std::set<int>{0, 1});
  CHECK(reps(s) == std::vector<std::array<int, 3>>{{0, 0, 0}});
  CHECK(s == brute_force_spectrum(build_partition(5, 2, 2)));
}

TEST_CASE("C(13,3,g=2) rows, classes, ramsey") {
  const SumSpectrum s = compute_spectrum(build_partition(13, 3, 2));
  CHECK(row_set(s, 0) == std::set<int>{1, 2});
  CHECK(row_set(s, 1) == std::set<int>{0, 1, 2});
  CHECK(row_set(s, 2) == std::set<int>{0, 1, 2});
  CHECK(reps(s) == std::vector<std::array<int, 3>>{{0, 0, 0}});
  CHECK(is_ramsey(s));
  CHECK_FALSE(is_all_flexible(s));
}

TEST_CASE("C(2,1) degenerate spectrum") {
  const SumSpectrum s = compute_spectrum(build_partition(2, 1));
  CHECK(s.n == 1);
  CHECK_FALSE(s.mandatory(0, 0));  // 1+1 = 0 mod 2 lands outside every coset
  CHECK(reps(s) == std::vector<std::array<int, 3>>{{0, 0, 0}});
  CHECK_FALSE(is_all_flexible(s));
  CHECK(s == brute_force_spectrum(build_partition(2, 1)));
}

TEST_CASE("C(61,5) under the smallest root has the single class [0,0,2]") {
  const SumSpectrum s = compute_spectrum(build_partition(61, 5));
  CHECK(s.g == 2);
  CHECK(reps(s) == std::vector<std::array<int, 3>>{{0, 0, 2}});
  CHECK(s == brute_force_spectrum(build_partition(61, 5)));
}

TEST_CASE("C(3697,24,g=5): [0,0,12] alone is forbidden") {
  const SumSpectrum s = compute_spectrum(build_partition(3697, 24, 5));
  CHECK(reps(s) == std::vector<std::array<int, 3>>{{0, 0, 12}});
  CHECK_FALSE(is_ramsey(s));
}

TEST_CASE("triple_mandatory") {
  const SumSpectrum s13 = compute_spectrum(build_partition(13, 3, 2));
  CHECK_FALSE(triple_mandatory(s13, 0, 0, 0));
  CHECK(triple_mandatory(s13, 1, 1, 2));  // rotation of (0,0,1), which is mandatory
  CHECK_THROWS_AS(triple_mandatory(s13, 0, 0, 3), IndexOutOfRangeError);

  const SumSpectrum s = compute_spectrum(build_partition(3697, 24, 5));
  CHECK_FALSE(triple_mandatory(s, 3, 3, 15));
}

TEST_CASE("oracle cap") {
  CHECK_THROWS_AS(brute_force_spectrum(build_partition(3697, 24, 5), 100), OracleCapExceededError);
}

TEST_CASE("forbidden classes empty when everything is mandatory") {
  const SumSpectrum s = compute_spectrum(build_partition(97, 3));
  CHECK(reps(s).empty());
  CHECK(is_all_flexible(s));
}

TEST_CASE("is_ramsey on reference cases") {
  CHECK(is_ramsey(compute_spectrum(build_partition(5, 2, 2))));
  CHECK(is_ramsey(compute_spectrum(build_partition(97, 6))));
  CHECK_FALSE(is_ramsey(compute_spectrum(build_partition(3697, 24, 5))));
  // k odd: classes asymmetric, never Ramsey even with [0,0,0] forbidden
  const SumSpectrum odd = compute_spectrum(build_partition(3221, 20));
  CHECK(odd.neg_index == 10);
  CHECK_FALSE(is_ramsey(odd));
}

TEST_CASE("canonical_cycle") {
  CHECK(canonical_cycle(24, 0, {3, 3, 15}) == std::array<int, 3>{0, 0, 12});
  CHECK(canonical_cycle(3, 0, {2, 2, 0}) == std::array<int, 3>{0, 0, 1});
  // with the odd-k converse shift, [i,i+10,i] folds into the [0,0,0] class
  CHECK(canonical_cycle(20, 10, {0, 10, 0}) == std::array<int, 3>{0, 0, 0});
  CHECK(canonical_cycle(20, 10, {10, 0, 10}) == std::array<int, 3>{0, 0, 0});
  const auto orbit = cycle_orbit_pairs(20, 10, {0, 0, 0});
  CHECK(orbit == std::vector<std::array<int, 2>>{{0, 0}, {10, 0}, {10, 10}});
}

TEST_CASE("spectrum JSON report: exact fields and order") {
  const SumSpectrum s = compute_spectrum(build_partition(13, 3, 2));
  CHECK(spectrum_report(s).dump() ==
        R"({"p":13,"n":3,"g":2,"k":4,"neg_index":0,"forbidden_classes":[[0,0,0]],"ramsey":true,"all_flexible":false})");
}

TEST_CASE("rotation invariance and abelian symmetries against the triple oracle") {
  for (std::uint64_t p : {5ull, 13ull, 29ull, 31ull, 61ull, 113ull}) {
    for (int n = 1; static_cast<std::uint64_t>(n) <= p - 1 && n <= 16; ++n) {
      if ((p - 1) % n != 0) continue;
      const CosetPartition part = build_partition(p, n);
      const oracle::TripleTable t = oracle::brute_force_triples(part);
      const SumSpectrum s = compute_spectrum(part);
      const int neg = part.neg_index;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          for (int k = 0; k < n; ++k) {
            const bool m = t.mandatory(i, j, k);
            REQUIRE(m == triple_mandatory(s, i, j, k));
            for (int shift = 1; shift < n; ++shift)
              REQUIRE(m == t.mandatory((i + shift) % n, (j + shift) % n, (k + shift) % n));
            REQUIRE(m == t.mandatory(j, i, k));                    // commutativity
            REQUIRE(m == t.mandatory((i + neg) % n, k, j));        // Peirce move
            if (neg == 0) {
              REQUIRE(m == t.mandatory(i, k, j));
              REQUIRE(m == t.mandatory(k, j, i));
              REQUIRE(m == t.mandatory(k, i, j));
              REQUIRE(m == t.mandatory(j, k, i));
            }
          }
    }
  }
}

TEST_CASE("oracle equivalence on canonical roots below 100") {
  for (std::uint64_t p : primes_below(100)) {
    for (int n = 1; static_cast<std::uint64_t>(n) <= p - 1; ++n) {
      if ((p - 1) % n != 0) continue;
      const CosetPartition part = build_partition(p, n);
      REQUIRE(compute_spectrum(part) == brute_force_spectrum(part));
    }
  }
}

TEST_SUITE_END();

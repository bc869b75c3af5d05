#include <numeric>
#include <set>

#include "comer/atoms.hpp"

#include "doctest.h"
#include "oracle.hpp"

using namespace comer;

namespace {

bool is_shift(const IndexPermutation& pi) {
  const int n = static_cast<int>(pi.map.size());
  const int offset = pi.map[0];
  for (int i = 0; i < n; ++i) {
    if (pi.map[i] != (i + offset) % n) return false;
  }
  return true;
}

std::set<std::string> notations(const std::vector<IndexPermutation>& perms) {
  std::set<std::string> out;
  for (const IndexPermutation& pi : perms) out.insert(pi.cycle_notation());
  return out;
}

}  // namespace

TEST_SUITE_BEGIN("atoms");

TEST_CASE("make_An seeds and closure") {
  const AtomStructure a3 = make_An(3, 0, 1);
  CHECK(a3.forbidden(0, 0, 1));
  CHECK(a3.forbidden(1, 1, 2));
  CHECK(a3.forbidden(2, 2, 0));
  CHECK(a3.forbidden(1, 0, 0));  // closure
  CHECK(a3.forbidden_count() == 9);
  CHECK(is_peirce_closed(a3));

  const AtomStructure a6 = make_An(6, 0, 2);
  CHECK(a6.forbidden(0, 0, 2));
  CHECK(a6.forbidden(2, 2, 4));
  CHECK(a6.forbidden(4, 4, 0));
  CHECK(is_peirce_closed(a6));

  const AtomStructure a1 = make_An(1, 0, 0);
  CHECK(a1.forbidden_count() == 1);
  CHECK(a1.forbidden(0, 0, 0));
}

TEST_CASE("peirce closure is idempotent, also with nontrivial converse") {
  AtomStructure sym = make_An(6, 0, 2);
  AtomStructure twice = sym;
  peirce_close(twice);
  CHECK(twice.cycle_flags == sym.cycle_flags);

  AtomStructure asym = make_atom_structure(3, {0, 2, 1});
  asym.forbid(1, 1, 1);
  peirce_close(asym);
  CHECK(is_peirce_closed(asym));
  const auto triples = asym.forbidden_triples();
  CHECK(triples == std::vector<std::array<int, 3>>{
                       {1, 1, 1}, {1, 2, 1}, {1, 2, 2}, {2, 1, 1}, {2, 1, 2}, {2, 2, 2}});
  AtomStructure again = asym;
  peirce_close(again);
  CHECK(again.cycle_flags == asym.cycle_flags);
}

TEST_CASE("automorphisms of A_n([i,i,i+1]) are exactly the n shifts") {
  for (int n = 2; n <= 8; ++n) {
    const auto auts = automorphisms(make_An(n, 0, 1));
    REQUIRE(auts.size() == static_cast<std::size_t>(n));
    for (const IndexPermutation& pi : auts) REQUIRE(is_shift(pi));
  }
  const auto trivial = automorphisms(make_An(1, 0, 0));
  CHECK(trivial.size() == 1);
  CHECK(trivial[0].identity());
}

TEST_CASE("automorphism counts frozen from exhaustive enumeration") {
  CHECK(automorphisms(make_An(4, 0, 2)).size() == 8);
  CHECK(automorphisms(make_An(6, 0, 2)).size() == 18);
  CHECK(automorphisms(make_An(6, 0, 3)).size() == 48);
  CHECK(automorphisms(make_An(8, 0, 2)).size() == 32);
  CHECK(automorphisms(make_An(8, 0, 4)).size() == 384);
  CHECK(automorphisms(make_An(9, 0, 3)).size() == 162);
}

TEST_CASE("A_6([i,i,i+2]) automorphisms include (0 2 4)") {
  CHECK(notations(automorphisms(make_An(6, 0, 2))).count("(0 2 4)") == 1);
}

TEST_CASE("enumeration cap") {
  CHECK_THROWS_AS(automorphisms(make_An(10, 0, 1)), CapExceededError);
  CHECK_NOTHROW(automorphisms(make_An(10, 0, 1), 10));
}

TEST_CASE("rho_isomorphism") {
  const IndexPermutation rho = rho_isomorphism(5, 2);
  CHECK(rho.map == std::vector<int>{0, 2, 4, 1, 3});
  CHECK(rho.cycle_notation() == "(1 2 4 3)");

  CHECK(rho_isomorphism(7, 1).identity());
  CHECK(rho_isomorphism(6, 5).map == std::vector<int>{0, 5, 4, 3, 2, 1});

  CHECK_THROWS_AS(rho_isomorphism(6, 2), NotCoprimeError);
  CHECK_THROWS_AS(rho_isomorphism(9, 3), NotCoprimeError);

  // verification contract holds across every coprime offset up to n = 8
  for (int n = 2; n <= 8; ++n)
    for (int j = 1; j < n; ++j)
      if (std::gcd(j, n) == 1) CHECK_NOTHROW(rho_isomorphism(n, j));
}

TEST_CASE("fixed_point_automorphism") {
  const IndexPermutation pi = fixed_point_automorphism(6, 2);
  CHECK(pi.cycle_notation() == "(0 2 4)");
  CHECK(pi.fixed_point_count() == 3);
  CHECK(is_automorphism(make_An(6, 0, 2), pi));

  CHECK(fixed_point_automorphism(4, 2).cycle_notation() == "(0 2)");
  CHECK(fixed_point_automorphism(9, 3).cycle_notation() == "(0 3 6)");
  CHECK(fixed_point_automorphism(9, 3).fixed_point_count() == 6);

  CHECK_THROWS_AS(fixed_point_automorphism(5, 2), GcdIsOneError);
  CHECK_THROWS_AS(fixed_point_automorphism(6, 5), GcdIsOneError);
}

TEST_CASE("cycle_structures_isomorphic") {
  CHECK(cycle_structures_isomorphic(make_An(5, 0, 2), make_An(5, 0, 1)));
  CHECK_FALSE(cycle_structures_isomorphic(make_An(6, 0, 2), make_An(6, 0, 1)));
  CHECK(cycle_structures_isomorphic(make_An(3, 0, 0), make_An(3, 0, 0)));
  CHECK_THROWS_AS(cycle_structures_isomorphic(make_An(3, 0, 1), make_An(4, 0, 1)), SizeMismatchError);
  CHECK_THROWS_AS(cycle_structures_isomorphic(make_An(10, 0, 1), make_An(10, 0, 3)), CapExceededError);
}

TEST_CASE("converse compatibility is required of automorphisms") {
  AtomStructure s = make_atom_structure(3, {0, 2, 1});
  s.forbid(1, 1, 1);
  peirce_close(s);
  CHECK(is_automorphism(s, IndexPermutation{{0, 2, 1}}));        // swap r, r~
  CHECK_FALSE(is_automorphism(s, IndexPermutation{{1, 0, 2}}));  // breaks converse
  CHECK(automorphisms(s).size() == 2);
}

TEST_CASE("reindex_by_root rescales classes to [0,0,1]") {
  const CosetPartition part = build_partition(61, 5);
  const SumSpectrum before = compute_spectrum(part);
  REQUIRE(forbidden_classes(before).front().rep == std::array<int, 3>{0, 0, 2});

  const CosetPartition reindexed = reindex_by_root(part, 2);
  CHECK(part.index_of(reindexed.g) == 2);  // the new generator came from X_2
  const SumSpectrum after = compute_spectrum(reindexed);
  CHECK(forbidden_classes(after).size() == 1);
  CHECK(forbidden_classes(after).front().rep == std::array<int, 3>{0, 0, 1});
}

TEST_CASE("reindex_by_root keeps [0,0,0] fixed for every coprime offset") {
  const CosetPartition part = build_partition(13, 3, 2);
  for (int j : {1, 2}) {
    const CosetPartition reindexed = reindex_by_root(part, j);
    const auto classes = forbidden_classes(compute_spectrum(reindexed));
    REQUIRE(classes.size() == 1);
    REQUIRE(classes.front().rep == std::array<int, 3>{0, 0, 0});
  }
  CHECK_THROWS_AS(reindex_by_root(build_partition(13, 6), 2), NotCoprimeError);
}

TEST_CASE("every rotation is an automorphism of the concrete atom structure") {
  for (std::uint64_t p : {13ull, 29ull, 61ull}) {
    for (int n : {2, 3, 4}) {
      if ((p - 1) % n != 0) continue;
      const AtomStructure s = spectrum_atom_structure(compute_spectrum(build_partition(p, n)));
      for (int t = 0; t < n; ++t) {
        IndexPermutation shift;
        shift.map.resize(n);
        for (int i = 0; i < n; ++i) shift.map[i] = (i + t) % n;
        REQUIRE(is_automorphism(s, shift));
      }
    }
  }
}

TEST_SUITE_END();

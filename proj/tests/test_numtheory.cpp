#include <numeric>
#include <set>

#include "comer/numtheory.hpp"

#include "doctest.h"
#include "oracle.hpp"

using namespace comer;

TEST_SUITE_BEGIN("numtheory");

TEST_CASE("is_prime on known values") {
  CHECK(is_prime(2));
  CHECK(is_prime(3697));
  CHECK_FALSE(is_prime(3696));
  CHECK_FALSE(is_prime(0));
  CHECK_FALSE(is_prime(1));
  CHECK(is_prime(113));
  CHECK_FALSE(is_prime(667));  // 23 * 29
  CHECK(is_prime(677));
  CHECK(is_prime(4294967291ull));  // largest prime below 2^32
}

TEST_CASE("is_prime agrees with trial division below 2000") {
  for (std::uint64_t m = 0; m < 2000; ++m) {
    bool composite = m < 2;
    for (std::uint64_t d = 2; d * d <= m; ++d) {
      if (m % d == 0) {
        composite = true;
        break;
      }
    }
    CHECK(is_prime(m) == !composite);
  }
}

TEST_CASE("find_primitive_root returns the smallest generator") {
  CHECK(find_primitive_root(13) == 2);
  CHECK(find_primitive_root(2) == 1);
  CHECK(find_primitive_root(113) == 3);
  CHECK_THROWS_AS(find_primitive_root(12), NotPrimeError);

  // Oracle: order by repeated multiplication; 2 falls short modulo 113.
  CHECK(oracle::multiplicative_order(2, 113) == 28);
  CHECK(oracle::multiplicative_order(3, 113) == 112);
  for (std::uint64_t p : {5ull, 13ull, 61ull, 113ull}) {
    const std::uint64_t g = find_primitive_root(p);
    CHECK(oracle::multiplicative_order(g, p) == p - 1);
    for (std::uint64_t smaller = 2; smaller < g; ++smaller)
      CHECK(oracle::multiplicative_order(smaller, p) != p - 1);
  }
}

TEST_CASE("build_partition pins the known fibers") {
  const CosetPartition part = build_partition(13, 3, 2);
  CHECK(part.k == 4);
  CHECK(part.coset(0) == std::vector<std::uint64_t>{1, 5, 8, 12});
  CHECK(part.coset(1) == std::vector<std::uint64_t>{2, 3, 10, 11});
  CHECK(part.coset(2) == std::vector<std::uint64_t>{4, 6, 7, 9});
  CHECK(part.neg_index == 0);

  const CosetPartition small = build_partition(5, 2, 2);
  CHECK(small.coset(0) == std::vector<std::uint64_t>{1, 4});
  CHECK(small.coset(1) == std::vector<std::uint64_t>{2, 3});
  CHECK(small.neg_index == 0);
}

TEST_CASE("build_partition on C(3221,20): odd k forces neg_index n/2") {
  const CosetPartition part = build_partition(3221, 20);
  CHECK(part.k == 161);
  CHECK(part.neg_index == 10);
}

TEST_CASE("build_partition error paths") {
  CHECK_THROWS_AS(build_partition(12, 3), NotPrimeError);
  CHECK_THROWS_AS(build_partition(13, 5), DoesNotDivideError);
  CHECK_THROWS_AS(build_partition(13, 3, 3), NotPrimitiveRootError);  // 3^3 = 1 mod 13
  CHECK_THROWS_AS(build_partition(13, 3, 0), NotPrimitiveRootError);
}

TEST_CASE("degenerate inputs are legal") {
  const CosetPartition two = build_partition(2, 1);
  CHECK(two.g == 1);
  CHECK(two.k == 1);
  CHECK(two.neg_index == 0);
  CHECK(two.coset(0) == std::vector<std::uint64_t>{1});

  const CosetPartition one_class = build_partition(7, 1);
  CHECK(one_class.coset(0) == std::vector<std::uint64_t>{1, 2, 3, 4, 5, 6});
}

TEST_CASE("ind(g^t) = t mod n") {
  for (auto [p, n, g] : std::vector<std::array<std::uint64_t, 3>>{{13, 3, 2}, {61, 5, 2}, {113, 8, 3}}) {
    const CosetPartition part = build_partition(p, static_cast<int>(n), g);
    std::uint64_t x = 1;
    for (std::uint64_t t = 0; t < p - 1; ++t) {
      REQUIRE(part.index_of(x) == static_cast<int>(t % n));
      x = mul_mod(x, g, p);
    }
    CHECK(part.index_of(1) == 0);
    CHECK(part.index_of(g) == static_cast<int>(1 % n));
  }
}

TEST_CASE("index_of and coset range checks") {
  const CosetPartition part = build_partition(13, 3, 2);
  CHECK(part.index_of(8) == 0);
  CHECK(part.index_of(2) == 1);
  CHECK_THROWS_AS(part.index_of(0), IndexOutOfRangeError);
  CHECK_THROWS_AS(part.index_of(13), IndexOutOfRangeError);
  CHECK_THROWS_AS(part.coset(3), IndexOutOfRangeError);
  CHECK_THROWS_AS(part.coset(-1), IndexOutOfRangeError);
}

TEST_CASE("partition property: fibers partition {1,...,p-1} with equal sizes") {
  for (std::uint64_t p = 2; p < 200; ++p) {
    if (!is_prime(p)) continue;
    for (int n = 1; static_cast<std::uint64_t>(n) <= p - 1; ++n) {
      if ((p - 1) % n != 0) continue;
      const CosetPartition part = build_partition(p, n);
      std::vector<char> hit(p, 0);
      for (int i = 0; i < n; ++i) {
        const auto fiber = part.coset(i);
        REQUIRE(fiber.size() == part.k);
        for (std::uint64_t x : fiber) {
          REQUIRE(hit[x] == 0);
          hit[x] = 1;
        }
      }
      for (std::uint64_t x = 1; x < p; ++x) REQUIRE(hit[x] == 1);
    }
  }
}

TEST_CASE("generator consistency: fibers relabel, X_0 is generator-independent") {
  const std::uint64_t p = 13;
  const int n = 3;
  const CosetPartition base = build_partition(p, n, 2);
  auto sorted_fibers = [&](const CosetPartition& part) {
    std::set<std::vector<std::uint64_t>> fibers;
    for (int i = 0; i < n; ++i) fibers.insert(part.coset(i));
    return fibers;
  };
  for (std::uint64_t g : oracle::all_primitive_roots(p)) {
    const CosetPartition other = build_partition(p, n, g);
    CHECK(other.coset(0) == base.coset(0));  // the subgroup itself
    CHECK(sorted_fibers(other) == sorted_fibers(base));
  }
}

TEST_CASE("neg_index parity law over all p < 1000") {
  for (std::uint64_t p = 2; p < 1000; ++p) {
    if (!is_prime(p)) continue;
    for (int n = 1; static_cast<std::uint64_t>(n) <= p - 1; ++n) {
      if ((p - 1) % n != 0) continue;
      const CosetPartition part = build_partition(p, n);
      if (part.k % 2 == 0 || p == 2)
        REQUIRE(part.neg_index == 0);
      else
        REQUIRE(part.neg_index == n / 2);
    }
  }
}

TEST_CASE("primitive_root_in_coset finds the smallest full-order element") {
  const CosetPartition part = build_partition(13, 3, 2);
  CHECK(primitive_root_in_coset(part, 1) == 2);  // X_1 = {2,3,10,11}
  CHECK(primitive_root_in_coset(part, 2) == 6);  // X_2 = {4,6,7,9}; ord(4) = 6
  for (int j : {1, 2}) {
    CHECK(oracle::multiplicative_order(primitive_root_in_coset(part, j), 13) == 12);
  }
  // X_0 consists of n-th powers, so it can hold no generator for n > 1.
  CHECK_THROWS_AS(primitive_root_in_coset(part, 0), NoRootFoundError);
  CHECK_THROWS_AS(primitive_root_in_coset(part, 5), IndexOutOfRangeError);
}

TEST_SUITE_END();

#include "comer/numtheory.hpp"

#include <algorithm>
#include <string>

namespace comer {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) noexcept {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) noexcept {
  if (m == 1) return 0;
  std::uint64_t result = 1;
  std::uint64_t acc = base % m;
  while (exp != 0) {
    if (exp & 1) result = mul_mod(result, acc, m);
    acc = mul_mod(acc, acc, m);
    exp >>= 1;
  }
  return result;
}

namespace {

bool miller_rabin_witness(std::uint64_t n, std::uint64_t a, std::uint64_t d, int r) {
  std::uint64_t x = pow_mod(a, d, n);
  if (x == 1 || x == n - 1) return false;
  for (int i = 1; i < r; ++i) {
    x = mul_mod(x, x, n);
    if (x == n - 1) return false;
  }
  return true;  // composite witnessed
}

}  // namespace

bool is_prime(std::uint64_t m) noexcept {
  if (m < 2) return false;
  for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (m == q) return true;
    if (m % q == 0) return false;
  }
  std::uint64_t d = m - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  // This base set is a proven deterministic test for all n < 3.3 * 10^24.
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (miller_rabin_witness(m, a, d, r)) return false;
  }
  return true;
}

std::vector<std::uint64_t> distinct_prime_factors(std::uint64_t m) {
  std::vector<std::uint64_t> factors;
  for (std::uint64_t d = 2; d * d <= m; d += (d == 2 ? 1 : 2)) {
    if (m % d == 0) {
      factors.push_back(d);
      while (m % d == 0) m /= d;
    }
  }
  if (m > 1) factors.push_back(m);
  return factors;
}

bool is_primitive_root(std::uint64_t g, std::uint64_t p) {
  if (!is_prime(p)) throw NotPrimeError(std::to_string(p) + " is not prime");
  g %= p;
  if (g == 0) return false;
  if (p == 2) return true;  // g == 1 generates the trivial group
  for (std::uint64_t q : distinct_prime_factors(p - 1)) {
    if (pow_mod(g, (p - 1) / q, p) == 1) return false;
  }
  return true;
}

std::uint64_t find_primitive_root(std::uint64_t p) {
  if (!is_prime(p)) throw NotPrimeError(std::to_string(p) + " is not prime");
  if (p == 2) return 1;
  const std::vector<std::uint64_t> factors = distinct_prime_factors(p - 1);
  for (std::uint64_t g = 2; g < p; ++g) {
    bool generates = true;
    for (std::uint64_t q : factors) {
      if (pow_mod(g, (p - 1) / q, p) == 1) {
        generates = false;
        break;
      }
    }
    if (generates) return g;
  }
  // Unreachable for prime p: F_p^x is cyclic.
  throw NoRootFoundError("no primitive root found modulo " + std::to_string(p));
}

int CosetPartition::index_of(std::uint64_t x) const {
  if (x == 0 || x >= p)
    throw IndexOutOfRangeError("residue " + std::to_string(x) + " is not in {1,...," + std::to_string(p - 1) + "}");
  return ind[x];
}

std::vector<std::uint64_t> CosetPartition::coset(int i) const {
  if (i < 0 || i >= n)
    throw IndexOutOfRangeError("coset index " + std::to_string(i) + " is not in {0,...," + std::to_string(n - 1) + "}");
  std::vector<std::uint64_t> members;
  members.reserve(k);
  for (std::uint64_t x = 1; x < p; ++x) {
    if (ind[x] == i) members.push_back(x);
  }
  return members;
}

CosetPartition build_partition(std::uint64_t p, int n, std::optional<std::uint64_t> g) {
  if (!is_prime(p)) throw NotPrimeError(std::to_string(p) + " is not prime");
  if (n < 1 || static_cast<std::uint64_t>(n) > p - 1 || (p - 1) % static_cast<std::uint64_t>(n) != 0)
    throw DoesNotDivideError(std::to_string(n) + " does not divide " + std::to_string(p - 1));
  if (n > MAX_COLORS) throw Error("color count " + std::to_string(n) + " exceeds supported maximum");

  std::uint64_t generator = 0;
  if (g.has_value()) {
    generator = *g % p;
    if (!is_primitive_root(generator, p))
      throw NotPrimitiveRootError(std::to_string(*g) + " is not a primitive root modulo " + std::to_string(p));
  } else {
    generator = find_primitive_root(p);
  }

  CosetPartition part;
  part.p = p;
  part.n = n;
  part.k = (p - 1) / static_cast<std::uint64_t>(n);
  part.g = generator;
  part.ind.assign(p, 0);

  // Single pass over the powers: ind(g^t) = t mod n.
  std::uint64_t x = 1;
  for (std::uint64_t t = 0; t < p - 1; ++t) {
    part.ind[x] = static_cast<std::uint16_t>(t % static_cast<std::uint64_t>(n));
    x = mul_mod(x, generator, p);
  }
  part.neg_index = part.ind[p - 1];
  return part;
}

std::uint64_t primitive_root_in_coset(const CosetPartition& part, int j) {
  if (j < 0 || j >= part.n) throw IndexOutOfRangeError("coset index " + std::to_string(j) + " out of range");
  if (part.p == 2) return 1;
  const std::vector<std::uint64_t> factors = distinct_prime_factors(part.p - 1);
  for (std::uint64_t x = 1; x < part.p; ++x) {
    if (part.ind[x] != j) continue;
    bool generates = true;
    for (std::uint64_t q : factors) {
      if (pow_mod(x, (part.p - 1) / q, part.p) == 1) {
        generates = false;
        break;
      }
    }
    if (generates) return x;
  }
  throw NoRootFoundError("X_" + std::to_string(j) + " contains no primitive root modulo " + std::to_string(part.p) +
                         "; expected one whenever gcd(j,n)=1");
}

}  // namespace comer

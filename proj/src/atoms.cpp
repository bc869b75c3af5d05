#include "comer/atoms.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace comer {

namespace {

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

int mod(int v, int n) { return (v % n + n) % n; }

}  // namespace

bool AtomStructure::symmetric() const {
  for (int i = 0; i < atom_count; ++i) {
    if (converse[i] != i) return false;
  }
  return true;
}

std::size_t AtomStructure::forbidden_count() const {
  std::size_t count = 0;
  for (std::uint8_t f : cycle_flags) count += f;
  return count;
}

std::vector<std::array<int, 3>> AtomStructure::forbidden_triples() const {
  std::vector<std::array<int, 3>> triples;
  for (int x = 0; x < atom_count; ++x)
    for (int y = 0; y < atom_count; ++y)
      for (int z = 0; z < atom_count; ++z)
        if (forbidden(x, y, z)) triples.push_back({x, y, z});
  return triples;
}

AtomStructure make_atom_structure(int atom_count, std::vector<int> converse) {
  if (atom_count < 1) throw Error("atom count must be positive");
  AtomStructure s;
  s.atom_count = atom_count;
  if (converse.empty()) {
    converse.resize(atom_count);
    std::iota(converse.begin(), converse.end(), 0);
  }
  if (static_cast<int>(converse.size()) != atom_count) throw SizeMismatchError("converse map has wrong size");
  for (int i = 0; i < atom_count; ++i) {
    if (converse[i] < 0 || converse[i] >= atom_count || converse[converse[i]] != i)
      throw Error("converse must be an involution on the atoms");
  }
  s.converse = std::move(converse);
  s.cycle_flags.assign(static_cast<std::size_t>(atom_count) * atom_count * atom_count, 0);
  return s;
}

namespace {

std::array<std::array<int, 3>, 6> peirce_images(const AtomStructure& s, int x, int y, int z) {
  const auto cv = [&s](int a) { return s.converse[a]; };
  return {{{x, y, z},
           {cv(x), z, y},
           {z, cv(y), x},
           {y, cv(z), cv(x)},
           {cv(z), x, cv(y)},
           {cv(y), cv(x), cv(z)}}};
}

}  // namespace

void peirce_close(AtomStructure& s) {
  // The six transforms are closed under composition, but a fixpoint sweep
  // is cheap at these sizes and needs no such argument.
  bool changed = true;
  while (changed) {
    changed = false;
    for (int x = 0; x < s.atom_count; ++x)
      for (int y = 0; y < s.atom_count; ++y)
        for (int z = 0; z < s.atom_count; ++z) {
          if (!s.forbidden(x, y, z)) continue;
          for (const std::array<int, 3>& t : peirce_images(s, x, y, z)) {
            if (!s.forbidden(t[0], t[1], t[2])) {
              s.forbid(t[0], t[1], t[2]);
              changed = true;
            }
          }
        }
  }
}

bool is_peirce_closed(const AtomStructure& s) {
  for (int x = 0; x < s.atom_count; ++x)
    for (int y = 0; y < s.atom_count; ++y)
      for (int z = 0; z < s.atom_count; ++z) {
        if (!s.forbidden(x, y, z)) continue;
        for (const std::array<int, 3>& t : peirce_images(s, x, y, z)) {
          if (!s.forbidden(t[0], t[1], t[2])) return false;
        }
      }
  return true;
}

AtomStructure make_An(int n, int j, int ell) {
  AtomStructure s = make_atom_structure(n);
  for (int i = 0; i < n; ++i) s.forbid(i, mod(i + j, n), mod(i + ell, n));
  peirce_close(s);
  return s;
}

bool IndexPermutation::identity() const {
  for (std::size_t i = 0; i < map.size(); ++i) {
    if (map[i] != static_cast<int>(i)) return false;
  }
  return true;
}

int IndexPermutation::fixed_point_count() const {
  int count = 0;
  for (std::size_t i = 0; i < map.size(); ++i) count += map[i] == static_cast<int>(i);
  return count;
}

std::string IndexPermutation::cycle_notation() const {
  std::ostringstream out;
  std::vector<char> done(map.size(), 0);
  bool any = false;
  for (std::size_t start = 0; start < map.size(); ++start) {
    if (done[start] || map[start] == static_cast<int>(start)) continue;
    any = true;
    out << "(";
    std::size_t cur = start;
    bool first = true;
    do {
      if (!first) out << " ";
      out << cur;
      done[cur] = 1;
      cur = static_cast<std::size_t>(map[cur]);
      first = false;
    } while (cur != start);
    out << ")";
  }
  if (!any) return "()";
  return out.str();
}

bool is_automorphism(const AtomStructure& s, const IndexPermutation& pi) {
  if (static_cast<int>(pi.map.size()) != s.atom_count) throw SizeMismatchError("permutation size mismatch");
  for (int i = 0; i < s.atom_count; ++i) {
    if (pi.map[s.converse[i]] != s.converse[pi.map[i]]) return false;
  }
  // pi permutes all triples, so image-inside plus equal cardinality means
  // the forbidden set maps onto itself.
  for (int x = 0; x < s.atom_count; ++x)
    for (int y = 0; y < s.atom_count; ++y)
      for (int z = 0; z < s.atom_count; ++z)
        if (s.forbidden(x, y, z) && !s.forbidden(pi.map[x], pi.map[y], pi.map[z])) return false;
  return true;
}

std::vector<IndexPermutation> automorphisms(const AtomStructure& s, int cap) {
  if (s.atom_count > cap)
    throw CapExceededError("atom count " + std::to_string(s.atom_count) + " exceeds the enumeration cap " +
                           std::to_string(cap) + " (" + std::to_string(factorial(s.atom_count)) + " permutations)");
  std::vector<int> perm(s.atom_count);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<IndexPermutation> result;
  do {
    IndexPermutation pi{perm};
    if (is_automorphism(s, pi)) result.push_back(std::move(pi));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return result;
}

IndexPermutation rho_isomorphism(int n, int j) {
  j = mod(j, n);
  if (std::gcd(j, n) != 1)
    throw NotCoprimeError("gcd(" + std::to_string(j) + "," + std::to_string(n) + ") != 1");
  IndexPermutation rho;
  rho.map.resize(n);
  for (int i = 0; i < n; ++i) rho.map[i] = mod(j * i, n);
  // Contract: rho carries the forbidden cycles of A_n([i,i,i+1]) exactly
  // onto those of A_n([i,i,i+j]).
  const AtomStructure from = make_An(n, 0, 1);
  const AtomStructure to = make_An(n, 0, j);
  if (from.forbidden_count() != to.forbidden_count())
    throw InconsistentOrbitError("rho verification failed: cycle counts differ");
  for (const std::array<int, 3>& t : from.forbidden_triples()) {
    if (!to.forbidden(rho.map[t[0]], rho.map[t[1]], rho.map[t[2]]))
      throw InconsistentOrbitError("rho verification failed on a forbidden cycle");
  }
  return rho;
}

IndexPermutation fixed_point_automorphism(int n, int j) {
  j = mod(j, n);
  if (j == 0) throw Error("offset j must be nonzero mod n");
  const int x = std::gcd(j, n);
  if (x == 1) throw GcdIsOneError("gcd(" + std::to_string(j) + "," + std::to_string(n) + ") = 1");
  IndexPermutation pi;
  pi.map.resize(n);
  std::iota(pi.map.begin(), pi.map.end(), 0);
  for (int i = 0; i < n; i += x) pi.map[i] = mod(i + x, n);
  const AtomStructure s = make_An(n, 0, j);
  if (pi.identity() || pi.fixed_point_count() == 0 || !is_automorphism(s, pi))
    throw InconsistentOrbitError("fixed-point permutation failed verification");
  return pi;
}

bool cycle_structures_isomorphic(const AtomStructure& a, const AtomStructure& b, int cap) {
  if (a.atom_count != b.atom_count)
    throw SizeMismatchError("atom counts differ: " + std::to_string(a.atom_count) + " vs " +
                            std::to_string(b.atom_count));
  if (a.atom_count > cap)
    throw CapExceededError("atom count " + std::to_string(a.atom_count) + " exceeds the enumeration cap " +
                           std::to_string(cap));
  if (a.forbidden_count() != b.forbidden_count()) return false;
  const std::vector<std::array<int, 3>> cycles = a.forbidden_triples();
  std::vector<int> perm(a.atom_count);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int i = 0; i < a.atom_count && ok; ++i) ok = perm[a.converse[i]] == b.converse[perm[i]];
    for (std::size_t c = 0; c < cycles.size() && ok; ++c)
      ok = b.forbidden(perm[cycles[c][0]], perm[cycles[c][1]], perm[cycles[c][2]]);
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

CosetPartition reindex_by_root(const CosetPartition& part, int j) {
  const int n = part.n;
  j = mod(j, n);
  if (std::gcd(j == 0 ? n : j, n) != 1)
    throw NotCoprimeError("gcd(" + std::to_string(j) + "," + std::to_string(n) + ") != 1");

  const std::uint64_t root = primitive_root_in_coset(part, j);
  CosetPartition reindexed = build_partition(part.p, n, root);

  // ind_new = j^{-1} * ind_old, so each class rep (0,a,b) must reappear
  // as the class of (0, v*a, v*b) with v = j^{-1} mod n.
  int v = 0;
  for (int u = 1; u < n + 1; ++u) {
    if (mod(u * j, n) == 1 % n) {
      v = u;
      break;
    }
  }
  const std::vector<CycleClass> before = forbidden_classes(compute_spectrum(part));
  const std::vector<CycleClass> after = forbidden_classes(compute_spectrum(reindexed));
  std::set<std::array<int, 3>> expected;
  for (const CycleClass& c : before)
    expected.insert(canonical_cycle(n, reindexed.neg_index, {0, mod(v * c.rep[1], n), mod(v * c.rep[2], n)}));
  std::set<std::array<int, 3>> got;
  for (const CycleClass& c : after) got.insert(c.rep);
  if (expected != got) throw InconsistentOrbitError("reindexing did not scale the forbidden classes as required");
  return reindexed;
}

AtomStructure spectrum_atom_structure(const SumSpectrum& spectrum) {
  const int n = spectrum.n;
  std::vector<int> conv(n);
  for (int i = 0; i < n; ++i) conv[i] = mod(i + spectrum.neg_index, n);
  AtomStructure s = make_atom_structure(n, std::move(conv));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (!spectrum.mandatory(mod(j - i, n), mod(k - i, n))) s.forbid(i, j, k);
  return s;
}

}  // namespace comer

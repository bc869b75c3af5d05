#include "comer/embed.hpp"

#include <algorithm>
#include <sstream>

namespace comer {

namespace {

int mod(int v, int n) { return (v % n + n) % n; }

std::string triple_str(int a, int b, int c) {
  std::ostringstream out;
  out << "(" << a << "," << b << "," << c << ")";
  return out.str();
}

}  // namespace

void validate_embedding(const AtomStructure& structure, const AtomEmbedding& embedding) {
  const int n = embedding.target.n;
  if (static_cast<int>(embedding.atom_cosets.size()) != structure.atom_count)
    throw MalformedEmbeddingError("assignment must name a coset set for each of the " +
                                  std::to_string(structure.atom_count) + " diversity atoms");
  std::vector<int> owner(n, -1);
  for (int a = 0; a < structure.atom_count; ++a) {
    const std::vector<int>& set = embedding.atom_cosets[a];
    if (set.empty()) throw MalformedEmbeddingError("atom " + std::to_string(a) + " has an empty coset set");
    for (int i : set) {
      if (i < 0 || i >= n)
        throw MalformedEmbeddingError("coset index " + std::to_string(i) + " out of range for n = " +
                                      std::to_string(n));
      if (owner[i] == a) throw MalformedEmbeddingError("coset " + std::to_string(i) + " listed twice for one atom");
      if (owner[i] != -1)
        throw MalformedEmbeddingError("coset " + std::to_string(i) + " assigned to two atoms (disjointness)");
      owner[i] = a;
    }
  }
  for (int i = 0; i < n; ++i) {
    if (owner[i] == -1)
      throw MalformedEmbeddingError("coset " + std::to_string(i) + " assigned to no atom (coverage)");
  }
  // Converse compatibility: the set of atom a-converse must be the set of
  // a shifted by neg_index.
  const int neg = embedding.target.neg_index;
  for (int a = 0; a < structure.atom_count; ++a) {
    for (int i : embedding.atom_cosets[a]) {
      if (owner[mod(i + neg, n)] != structure.converse[a])
        throw MalformedEmbeddingError("assignment is not converse-compatible at coset " + std::to_string(i));
    }
  }
}

EmbeddingReport verify_embedding(const AtomStructure& structure, const AtomEmbedding& embedding) {
  validate_embedding(structure, embedding);
  const SumSpectrum& target = embedding.target;
  EmbeddingReport report;
  report.pass = true;
  for (int a = 0; a < structure.atom_count; ++a)
    for (int b = 0; b < structure.atom_count; ++b)
      for (int c = 0; c < structure.atom_count; ++c) {
        CycleCheck check;
        check.cycle = {a, b, c};
        check.forbidden_in_structure = structure.forbidden(a, b, c);
        check.pass = true;
        if (check.forbidden_in_structure) {
          // Every image triple must be non-mandatory.
          for (int i : embedding.atom_cosets[a]) {
            for (int j : embedding.atom_cosets[b]) {
              for (int k : embedding.atom_cosets[c]) {
                if (triple_mandatory(target, i, j, k)) {
                  check.pass = false;
                  check.detail = "forbidden cycle maps to mandatory coset triple " + triple_str(i, j, k);
                  goto done;
                }
              }
            }
          }
        } else {
          // Mandatory cycle: every coset of c must be reachable, so that
          // the image of c sits inside the image composition a;b.
          for (int k : embedding.atom_cosets[c]) {
            bool covered = false;
            for (int i : embedding.atom_cosets[a]) {
              for (int j : embedding.atom_cosets[b]) {
                if (triple_mandatory(target, i, j, k)) {
                  covered = true;
                  break;
                }
              }
              if (covered) break;
            }
            if (!covered) {
              check.pass = false;
              check.detail = "mandatory cycle misses coset " + std::to_string(k) + " of its third atom";
              goto done;
            }
          }
        }
      done:
        report.pass = report.pass && check.pass;
        report.cycles.push_back(std::move(check));
      }
  return report;
}

AtomEmbedding embedding_from_template(const SchemeTemplate& tmpl, SumSpectrum target) {
  if (tmpl.scheme.n != target.n)
    throw SizeMismatchError("template is for n = " + std::to_string(tmpl.scheme.n) + ", spectrum has n = " +
                            std::to_string(target.n));
  AtomEmbedding e;
  e.target = std::move(target);
  e.atom_cosets = tmpl.atom_cosets;
  return e;
}

}  // namespace comer

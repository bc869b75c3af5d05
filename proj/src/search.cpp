#include "comer/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <numeric>
#include <thread>

#include "comer/primes.hpp"

namespace comer {

namespace {

int mod(int v, int n) { return (v % n + n) % n; }

}  // namespace

bool parity_admits(KParity parity, std::uint64_t p, std::uint64_t k) {
  switch (parity) {
    case KParity::even:
      return k % 2 == 0 || p == 2;  // exactly the neg_index = 0 case
    case KParity::odd:
      return k % 2 == 1 && p != 2;
    case KParity::any:
      return true;
  }
  return false;
}

const char* to_string(KParity parity) {
  switch (parity) {
    case KParity::even:
      return "even";
    case KParity::odd:
      return "odd";
    case KParity::any:
      return "any";
  }
  return "?";
}

KParity parity_from_string(const std::string& text) {
  if (text == "even") return KParity::even;
  if (text == "odd") return KParity::odd;
  if (text == "any") return KParity::any;
  throw InvalidSchemeError("parity must be even, odd or any; got '" + text + "'");
}

ForbiddenScheme make_scheme(int n, const std::vector<std::array<int, 3>>& representatives,
                            KParity parity) {
  if (n < 1) throw InvalidSchemeError("color count must be positive");
  if (n > MAX_COLORS) throw InvalidSchemeError("color count " + std::to_string(n) + " is out of range");
  if (parity == KParity::odd && n % 2 != 0 && n != 1)
    throw InvalidSchemeError("odd coset size forces the converse shift n/2, so n must be even");
  const int neg = parity == KParity::odd ? n / 2 : 0;
  ForbiddenScheme scheme;
  scheme.n = n;
  scheme.parity = parity;
  for (const std::array<int, 3>& rep : representatives)
    scheme.classes.push_back(canonical_cycle(n, neg, {mod(rep[0], n), mod(rep[1], n), mod(rep[2], n)}));
  std::sort(scheme.classes.begin(), scheme.classes.end());
  scheme.classes.erase(std::unique(scheme.classes.begin(), scheme.classes.end()), scheme.classes.end());
  return scheme;
}

std::vector<std::array<int, 3>> scaled_scheme_classes(const ForbiddenScheme& scheme, int neg_index,
                                                      int u) {
  const int n = scheme.n;
  std::vector<std::array<int, 3>> scaled;
  scaled.reserve(scheme.classes.size());
  for (const std::array<int, 3>& rep : scheme.classes)
    scaled.push_back(canonical_cycle(n, neg_index, {0, mod(u * rep[1], n), mod(u * rep[2], n)}));
  std::sort(scaled.begin(), scaled.end());
  scaled.erase(std::unique(scaled.begin(), scaled.end()), scaled.end());
  return scaled;
}

std::optional<int> matching_scale(const std::vector<std::array<int, 3>>& observed,
                                  const ForbiddenScheme& scheme, int neg_index) {
  const int n = scheme.n;
  for (int u = 1; u <= std::max(1, n - 1); ++u) {
    if (std::gcd(u, n) != 1) continue;
    if (scaled_scheme_classes(scheme, neg_index, u) == observed) return u;
  }
  return std::nullopt;
}

namespace {

std::vector<std::array<int, 3>> class_reps(const SumSpectrum& spectrum) {
  std::vector<std::array<int, 3>> reps;
  for (const CycleClass& c : forbidden_classes(spectrum)) reps.push_back(c.rep);
  return reps;
}

// Evaluate one candidate prime under its smallest primitive root; if the
// class set matches the scheme up to scaling, resolve a generator under
// which it matches exactly, then re-verify that generator from scratch.
std::optional<std::uint64_t> try_candidate(std::uint64_t p, const ForbiddenScheme& scheme) {
  const CosetPartition part = build_partition(p, scheme.n);
  const SumSpectrum spectrum = compute_spectrum(part);
  const std::optional<int> u = matching_scale(class_reps(spectrum), scheme, spectrum.neg_index);
  if (!u.has_value()) return std::nullopt;

  const std::uint64_t g = *u == 1 ? part.g : primitive_root_in_coset(part, *u);

  const SumSpectrum verify = compute_spectrum(build_partition(p, scheme.n, g));
  if (!parity_admits(scheme.parity, p, verify.k) ||
      class_reps(verify) != scaled_scheme_classes(scheme, verify.neg_index, 1))
    throw InconsistentOrbitError("hit at p = " + std::to_string(p) + " failed re-verification");
  return g;
}

std::vector<std::uint64_t> parity_compatible_candidates(const ForbiddenScheme& scheme,
                                                        std::uint64_t max_p) {
  const std::uint64_t n = static_cast<std::uint64_t>(scheme.n);
  std::vector<std::uint64_t> candidates = primes_in_progression(max_p, n, 1 % n);
  std::erase_if(candidates, [&](std::uint64_t p) {
    return !parity_admits(scheme.parity, p, (p - 1) / n);
  });
  return candidates;
}

}  // namespace

nlohmann::ordered_json checkpoint_json(const SearchCheckpoint& checkpoint) {
  nlohmann::ordered_json j;
  j["version"] = checkpoint.version;
  j["n"] = checkpoint.scheme.n;
  nlohmann::ordered_json classes = nlohmann::ordered_json::array();
  for (const std::array<int, 3>& c : checkpoint.scheme.classes) classes.push_back(c);
  j["classes"] = classes;
  j["parity"] = to_string(checkpoint.scheme.parity);
  j["max_p"] = checkpoint.max_p;
  j["last_checked"] = checkpoint.last_checked;
  nlohmann::ordered_json hits = nlohmann::ordered_json::array();
  for (const auto& [p, g] : checkpoint.hits) {
    nlohmann::ordered_json h;
    h["p"] = p;
    h["g"] = g;
    hits.push_back(h);
  }
  j["hits"] = hits;
  return j;
}

void save_checkpoint(const SearchCheckpoint& checkpoint, const std::string& path) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw Error("cannot write checkpoint file: " + tmp);
    out << checkpoint_json(checkpoint).dump() << "\n";
  }
  std::filesystem::rename(tmp, path);
}

SearchCheckpoint load_checkpoint(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CorruptCheckpointError("cannot read checkpoint file: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw CorruptCheckpointError("checkpoint is not valid JSON: " + std::string(e.what()));
  }
  try {
    SearchCheckpoint ck;
    ck.version = j.at("version").get<int>();
    if (ck.version != 1) throw CorruptCheckpointError("unsupported checkpoint version");
    std::vector<std::array<int, 3>> classes;
    for (const auto& c : j.at("classes")) {
      if (!c.is_array() || c.size() != 3) throw CorruptCheckpointError("malformed class entry");
      classes.push_back({c[0].get<int>(), c[1].get<int>(), c[2].get<int>()});
    }
    ck.scheme = make_scheme(j.at("n").get<int>(), classes, parity_from_string(j.at("parity").get<std::string>()));
    ck.max_p = j.at("max_p").get<std::uint64_t>();
    ck.last_checked = j.at("last_checked").get<std::uint64_t>();
    std::uint64_t prev = 0;
    for (const auto& h : j.at("hits")) {
      const std::uint64_t p = h.at("p").get<std::uint64_t>();
      const std::uint64_t g = h.at("g").get<std::uint64_t>();
      if (p <= prev) throw CorruptCheckpointError("hits are not strictly ascending");
      prev = p;
      ck.hits.emplace_back(p, g);
    }
    return ck;
  } catch (const CorruptCheckpointError&) {
    throw;
  } catch (const std::exception& e) {
    throw CorruptCheckpointError("checkpoint is structurally invalid: " + std::string(e.what()));
  }
}

SearchOutcome search_scheme(const ForbiddenScheme& scheme, std::uint64_t max_p,
                            const SearchOptions& options) {
  if (scheme.n < 1) throw InvalidSchemeError("scheme has no color count");
  if (max_p < 2) throw InvalidSchemeError("max_p must be at least 2");
  const auto t0 = std::chrono::steady_clock::now();

  SearchCheckpoint ck;
  ck.scheme = scheme;
  bool resuming = false;
  if (!options.checkpoint_path.empty() && std::filesystem::exists(options.checkpoint_path)) {
    ck = load_checkpoint(options.checkpoint_path);
    if (!(ck.scheme == scheme))
      throw CorruptCheckpointError("checkpoint was written for a different scheme");
    resuming = true;
  }

  SearchOutcome outcome;
  outcome.scheme = scheme;
  outcome.bound = max_p;

  const std::vector<std::uint64_t> all_candidates = parity_compatible_candidates(scheme, max_p);

  auto checked_below = [&](std::uint64_t limit) {
    return static_cast<std::uint64_t>(
        std::upper_bound(all_candidates.begin(), all_candidates.end(), limit) - all_candidates.begin());
  };

  auto finish = [&](bool found, std::uint64_t p, std::uint64_t g) {
    outcome.found = found;
    if (found) {
      outcome.p = p;
      outcome.g = g;
    }
    outcome.primes_checked = checked_below(found ? p : max_p);
    outcome.elapsed_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!options.checkpoint_path.empty()) {
      ck.max_p = std::max(ck.max_p, max_p);
      ck.last_checked = std::max(ck.last_checked, found ? p : max_p);
      if (found) ck.hits = {{p, g}};
      save_checkpoint(ck, options.checkpoint_path);
    }
    return outcome;
  };

  // A hit recorded in the checkpoint is already the smallest one: scans are
  // ascending and everything at or below last_checked was processed.
  if (resuming && !ck.hits.empty()) {
    const auto [p, g] = ck.hits.front();
    const SumSpectrum verify = compute_spectrum(build_partition(p, scheme.n, g));
    if (!parity_admits(scheme.parity, p, verify.k) ||
        class_reps(verify) != scaled_scheme_classes(scheme, verify.neg_index, 1))
      throw CorruptCheckpointError("checkpointed hit failed re-verification");
    if (p <= max_p) return finish(true, p, g);
    return finish(false, 0, 0);
  }

  std::vector<std::uint64_t> candidates = all_candidates;
  if (resuming)
    candidates.erase(candidates.begin(),
                     std::upper_bound(candidates.begin(), candidates.end(), ck.last_checked));

  int workers = options.workers;
  if (workers <= 0) workers = static_cast<int>(std::thread::hardware_concurrency());
  workers = std::max(1, workers);

  constexpr std::size_t BLOCK = 8;
  const std::size_t block_count = (candidates.size() + BLOCK - 1) / BLOCK;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> block_hit(block_count, {0, 0});

  std::atomic<std::size_t> next_block{0};
  std::atomic<std::uint64_t> best{UINT64_MAX};
  std::mutex progress_mutex;
  std::vector<char> block_done(block_count, 0);
  std::size_t frontier = 0;           // blocks [0, frontier) are done
  std::size_t next_save_frontier = 64;
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto mark_done = [&](std::size_t b) {
    std::lock_guard<std::mutex> lock(progress_mutex);
    block_done[b] = 1;
    while (frontier < block_count && block_done[frontier]) ++frontier;
    if (!options.checkpoint_path.empty() && frontier >= next_save_frontier && frontier < block_count) {
      next_save_frontier = frontier + 64;
      SearchCheckpoint snap = ck;
      snap.max_p = std::max(ck.max_p, max_p);
      snap.last_checked = candidates[std::min(frontier * BLOCK, candidates.size()) - 1];
      for (std::size_t i = 0; i < frontier; ++i) {
        if (block_hit[i].first != 0) {
          snap.hits = {block_hit[i]};
          break;
        }
      }
      save_checkpoint(snap, options.checkpoint_path);
    }
  };

  auto worker = [&]() {
    try {
      while (true) {
        const std::size_t b = next_block.fetch_add(1);
        if (b >= block_count) break;
        const std::size_t lo = b * BLOCK;
        const std::size_t hi = std::min(candidates.size(), lo + BLOCK);
        // Blocks entirely above the best hit so far cannot improve it.
        if (candidates[lo] > best.load(std::memory_order_relaxed)) {
          mark_done(b);
          continue;
        }
        for (std::size_t i = lo; i < hi; ++i) {
          const std::uint64_t p = candidates[i];
          if (p > best.load(std::memory_order_relaxed)) break;
          const std::optional<std::uint64_t> g = try_candidate(p, scheme);
          if (g.has_value()) {
            std::uint64_t cur = best.load();
            while (p < cur && !best.compare_exchange_weak(cur, p)) {
            }
            block_hit[b] = {p, *g};
            break;  // later candidates in this block are larger
          }
        }
        mark_done(b);
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      best.store(0);  // make every remaining block skip
    }
  };

  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
  for (std::thread& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);

  for (std::size_t b = 0; b < block_count; ++b) {
    if (block_hit[b].first != 0) return finish(true, block_hit[b].first, block_hit[b].second);
  }
  return finish(false, 0, 0);
}

}  // namespace comer

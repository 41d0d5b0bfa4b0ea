#include "circtrans/census.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <optional>
#include <random>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "circtrans/bounds_analysis.hpp"
#include "circtrans/constructive_solver.hpp"
#include "circtrans/exact_oracle.hpp"

namespace circtrans {

namespace {

bool within(const TranspositionSequence& seq, int limit) {
  return replay(seq).ok && static_cast<int>(seq.length()) <= limit;
}

std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t cap = std::mt19937_64::max() - std::mt19937_64::max() % bound;
  std::uint64_t v;
  do v = rng();
  while (v >= cap);
  return v % bound;
}

}  // namespace

CensusRecord census_bucket(int n, int ones) {
  const auto g = class_graph(n, ones);
  CensusRecord r;
  r.n = n;
  r.ones = ones;
  r.classes = static_cast<int>(g->nodes.size());
  r.pairs = static_cast<long long>(r.classes) * r.classes;
  const int k = std::min(ones, n - ones);

  std::vector<CircularBinaryString> strings;
  std::vector<std::optional<CircularPartition>> parts;
  for (const auto& w : g->nodes) {
    strings.emplace_back(w);
    if (k >= 1) parts.emplace_back(to_partition(strings.back()));
    else parts.emplace_back();
  }

  for (int u = 0; u < r.classes; ++u) {
    const auto dist = g->distances_from(u);
    for (int v = 0; v < r.classes; ++v) {
      const int d = dist[static_cast<std::size_t>(v)];
      r.diameter = std::max(r.diameter, d);
      if (k < 1) continue;
      const auto& ps = *parts[static_cast<std::size_t>(u)];
      const auto& pt = *parts[static_cast<std::size_t>(v)];
      const auto& s = strings[static_cast<std::size_t>(u)];
      const auto& t = strings[static_cast<std::size_t>(v)];

      if (d < 0 || lower_bound(ps, pt) > d) ++r.lower_bound_violations;
      if (k >= 2) {
        const bool predicted = diameter_predicate(ps, pt);
        if (predicted) ++r.diameter_pairs;
        if (predicted != (d == k - 1)) ++r.diameter_violations;
      }
      try {
        if (d > k - 1 || !within(greedy_upper_bound(s, t), k - 1)) ++r.greedy_violations;
      } catch (const Error&) {
        ++r.greedy_violations;
      }
      if (k >= 2 && dominance_orientation(ps, pt)) {
        try {
          if (d > k - 2 || !within(dominance_solve(s, t), k - 2)) ++r.dominance_violations;
        } catch (const Error&) {
          ++r.dominance_violations;
        }
      }
    }
  }
  return r;
}

std::vector<CensusRecord> run_census(int n_max, bool parallel, unsigned threads) {
  std::vector<std::pair<int, int>> buckets;
  for (int n = 1; n <= n_max; ++n)
    for (int ones = 0; ones <= n; ++ones) buckets.emplace_back(n, ones);
  std::vector<CensusRecord> out(buckets.size());

  if (!parallel) {
    for (std::size_t b = 0; b < buckets.size(); ++b) out[b] = census_bucket(buckets[b].first, buckets[b].second);
    return out;
  }
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < threads; ++w)
    pool.emplace_back([&] {
      for (std::size_t b = next++; b < buckets.size(); b = next++) {
        try {
          out[b] = census_bucket(buckets[b].first, buckets[b].second);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
  return out;
}

std::string census_csv_header() {
  return "n,ones,classes,pairs,diameter,thm4_pairs,thm2_viol,thm4_viol,lemma3_viol,greedy_viol";
}

std::string to_csv(const CensusRecord& r) {
  std::ostringstream line;
  line << r.n << ',' << r.ones << ',' << r.classes << ',' << r.pairs << ',' << r.diameter << ','
       << r.diameter_pairs << ',' << r.lower_bound_violations << ',' << r.diameter_violations << ','
       << r.dominance_violations << ',' << r.greedy_violations;
  return line.str();
}

std::string to_json_line(const CensusRecord& r) {
  nlohmann::ordered_json j;
  j["n"] = r.n;
  j["ones"] = r.ones;
  j["classes"] = r.classes;
  j["pairs"] = r.pairs;
  j["diameter"] = r.diameter;
  j["thm4_pairs"] = r.diameter_pairs;
  j["thm2_viol"] = r.lower_bound_violations;
  j["thm4_viol"] = r.diameter_violations;
  j["lemma3_viol"] = r.dominance_violations;
  j["greedy_viol"] = r.greedy_violations;
  return j.dump();
}

std::vector<std::string> generate_classes(int n, int ones, int count, std::uint64_t seed) {
  if (n < 1 || n > 24) throw InvalidInputError("length must be in 1..24");
  if (ones < 0 || ones > n) throw InvalidInputError("ones must be in 0..n");
  if (count < 0) throw InvalidInputError("count must be non-negative");
  std::vector<std::string> pool = enumerate_classes(n, ones);
  std::mt19937_64 rng(seed);
  for (std::size_t i = pool.size(); i > 1; --i)
    std::swap(pool[i - 1], pool[draw_below(rng, i)]);

  std::vector<std::string> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int c = 0; c < count; ++c) {
    const auto idx = static_cast<std::size_t>(c) < pool.size() ? static_cast<std::size_t>(c)
                                                                 : draw_below(rng, pool.size());
    out.push_back(pool[idx]);
  }
  return out;
}

}  // namespace circtrans

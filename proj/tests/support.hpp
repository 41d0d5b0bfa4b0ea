#pragma once

// Brute-force oracles and random generators used only by the tests. Nothing
// here calls into the library's own algorithms, so agreement is meaningful.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace oracle {

inline std::string rotate(const std::string& w, std::size_t r) {
  r %= w.size();
  return w.substr(r) + w.substr(0, r);
}

// Least rotation by comparing all n rotations.
inline std::string naive_canonical(const std::string& w) {
  std::string best = w;
  for (std::size_t r = 1; r < w.size(); ++r) best = std::min(best, rotate(w, r));
  return best;
}

inline std::string naive_complement(std::string w) {
  for (char& c : w) c = c == '0' ? '1' : '0';
  return w;
}

// Run lengths before each '1', starting after the last '1'.
inline std::vector<int> naive_runs(const std::string& w) {
  const auto last = w.rfind('1');
  const std::string lin = w.substr(last + 1) + w.substr(0, last + 1);
  std::vector<int> runs;
  int run = 0;
  for (char c : lin) {
    if (c == '0') {
      ++run;
    } else {
      runs.push_back(run);
      run = 0;
    }
  }
  return runs;
}

inline bool cyclic_equal(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t r = 0; r < a.size(); ++r) {
    bool same = true;
    for (std::size_t q = 0; q < a.size() && same; ++q) same = a[(q + r) % a.size()] == b[q];
    if (same) return true;
  }
  return a.empty();
}

// Max / min sum over all r-subsets of indices, with the clamping rules.
inline int subset_sum(const std::vector<int>& w, int r, bool largest) {
  const int k = static_cast<int>(w.size());
  if (r <= 0) return 0;
  r = std::min(r, k);
  int best = largest ? -1 : 1 << 30;
  for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
    if (__builtin_popcount(mask) != r) continue;
    int sum = 0;
    for (int q = 0; q < k; ++q)
      if (mask >> q & 1u) sum += w[static_cast<std::size_t>(q)];
    best = largest ? std::max(best, sum) : std::min(best, sum);
  }
  return best;
}

inline long long euler_phi(long long n) {
  long long out = n;
  for (long long p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    out -= out / p;
  }
  if (n > 1) out -= out / n;
  return out;
}

inline long long binomial(long long n, long long r) {
  if (r < 0 || r > n) return 0;
  long long out = 1;
  for (long long q = 1; q <= r; ++q) out = out * (n - r + q) / q;
  return out;
}

// Burnside: number of binary necklaces of length n.
inline long long necklaces(long long n) {
  long long sum = 0;
  for (long long d = 1; d <= n; ++d)
    if (n % d == 0) sum += euler_phi(d) * (1LL << (n / d));
  return sum / n;
}

// Burnside restricted to a fixed number of ones.
inline long long necklaces(long long n, long long ones) {
  long long sum = 0;
  for (long long d = 1; d <= n; ++d)
    if (n % d == 0 && ones % d == 0) sum += euler_phi(d) * binomial(n / d, ones / d);
  return sum / n;
}

// Canonical one-move neighbours from every cut triple with k <= max_k.
inline std::set<std::string> naive_neighbors(const std::string& canonical, std::size_t max_k) {
  std::set<std::string> out;
  const std::size_t n = canonical.size();
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j)
      for (std::size_t k = j + 1; k <= max_k; ++k) {
        const std::string w = canonical.substr(0, i - 1) + canonical.substr(j - 1, k - j) +
                              canonical.substr(i - 1, j - i) + canonical.substr(k - 1);
        out.insert(naive_canonical(w));
      }
  out.erase(canonical);
  return out;
}

// Distances from `source` by BFS over canonical words, edges from all
// cut triples with k <= n + 1.
inline std::map<std::string, int> naive_distances(const std::string& source) {
  const std::string start = naive_canonical(source);
  std::map<std::string, int> dist{{start, 0}};
  std::deque<std::string> queue{start};
  while (!queue.empty()) {
    const std::string u = queue.front();
    queue.pop_front();
    if (u.size() < 3) continue;
    for (const auto& v : naive_neighbors(u, u.size() + 1))
      if (dist.emplace(v, dist[u] + 1).second) queue.push_back(v);
  }
  return dist;
}

// Every canonical word of length n with `ones` ones.
inline std::vector<std::string> naive_classes(int n, int ones) {
  std::set<std::string> out;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) != ones) continue;
    std::string w(static_cast<std::size_t>(n), '0');
    for (int p = 0; p < n; ++p)
      if (mask >> p & 1u) w[static_cast<std::size_t>(p)] = '1';
    out.insert(naive_canonical(w));
  }
  return {out.begin(), out.end()};
}

// Small deterministic generator for property tests.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  int uniform(int lo, int hi) {
    return lo + static_cast<int>(rng_() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  std::string word(int n) {
    std::string w(static_cast<std::size_t>(n), '0');
    for (char& c : w) c = uniform(0, 1) ? '1' : '0';
    return w;
  }

  std::string word(int n, int ones) {
    std::string w(static_cast<std::size_t>(n), '0');
    std::fill(w.begin(), w.begin() + ones, '1');
    for (int i = n - 1; i > 0; --i) std::swap(w[static_cast<std::size_t>(i)], w[static_cast<std::size_t>(uniform(0, i))]);
    return w;
  }

  std::vector<int> weights(int k, int max_weight) {
    std::vector<int> w(static_cast<std::size_t>(k));
    for (int& x : w) x = uniform(0, max_weight);
    return w;
  }

  // Weights of k parts summing to total.
  std::vector<int> composition(int k, int total) {
    std::vector<int> cuts;
    for (int q = 0; q < k - 1; ++q) cuts.push_back(uniform(0, total));
    std::sort(cuts.begin(), cuts.end());
    std::vector<int> w;
    int prev = 0;
    for (int c : cuts) {
      w.push_back(c - prev);
      prev = c;
    }
    w.push_back(total - prev);
    return w;
  }

  std::vector<int> rotated(std::vector<int> w) {
    std::rotate(w.begin(), w.begin() + uniform(0, static_cast<int>(w.size()) - 1), w.end());
    return w;
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace oracle

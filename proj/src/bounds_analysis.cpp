#include "circtrans/bounds_analysis.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

namespace circtrans {

namespace {

// Prefix sums of the ascending weights; answers f1/f2 in O(1).
class SortedSums {
 public:
  explicit SortedSums(std::span<const int> weights) : prefix_(weights.size() + 1, 0) {
    std::vector<int> sorted(weights.begin(), weights.end());
    std::sort(sorted.begin(), sorted.end());
    std::partial_sum(sorted.begin(), sorted.end(), prefix_.begin() + 1);
  }

  int smallest(int r) const { return prefix_[clamp(r)]; }
  int largest(int r) const { return prefix_.back() - prefix_[parts() - clamp(r)]; }

 private:
  std::size_t parts() const { return prefix_.size() - 1; }
  std::size_t clamp(int r) const {
    if (r <= 0) return 0;
    return std::min(static_cast<std::size_t>(r), parts());
  }

  std::vector<int> prefix_;
};

void require_matching(std::span<const int> s, std::span<const int> t) {
  if (s.size() != t.size())
    throw IncompatiblePairError("partitions have different part counts");
  if (std::accumulate(s.begin(), s.end(), 0) != std::accumulate(t.begin(), t.end(), 0))
    throw IncompatiblePairError("partitions have different total weight");
}

bool holds_sorted(const SortedSums& s, const SortedSums& t, int k, int m) {
  for (int r = 1; r <= k; ++r) {
    if (s.smallest(r - m) > t.smallest(r)) return false;
    if (t.largest(r) > s.largest(r + m)) return false;
  }
  return true;
}

int least_slack(const SortedSums& s, const SortedSums& t, int k) {
  int m = 0;
  while (!holds_sorted(s, t, k, m)) ++m;  // m = k always holds
  return m;
}

std::span<const int> view(const CircularPartition& p) { return p.weights(); }

}  // namespace

int f1(std::span<const int> weights, int r) { return SortedSums(weights).largest(r); }

int f2(std::span<const int> weights, int r) { return SortedSums(weights).smallest(r); }

bool three_feasible(std::array<int, 3> s, std::array<int, 3> t) noexcept {
  return s[0] + s[1] + s[2] == t[0] + t[1] + t[2] && t[0] <= s[0] + s[1] &&
         t[1] <= s[2] + s[0] && t[2] <= s[1] + s[2];
}

bool two_feasible(std::array<int, 2> s, std::array<int, 2> t) noexcept {
  return s[0] + s[1] == t[0] + t[1] && t[0] <= s[0];
}

std::optional<MoveWitness> one_move_witness(const CircularBinaryString& s,
                                            const CircularBinaryString& t) {
  require_compatible(s, t);
  const CircularPartition ps = to_partition(s);
  const CircularPartition pt = to_partition(t);
  const auto& sw = ps.weights();
  const auto& tw = pt.weights();
  const int k = ps.parts();
  if (k < 2) throw InvalidInputError("one_move_witness needs at least two parts");
  auto mod = [k](int v) { return ((v % k) + k) % k; };

  if (sw == tw) {
    MoveWitness w;
    w.alpha = w.target_alpha = 1;
    w.beta = w.target_beta = 2;
    w.relative = true;
    return w;
  }

  // 2-part moves: x filler symbols from part a to part b.
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) {
      if (a == b) continue;
      for (int x = 1; x <= sw[a]; ++x) {
        std::vector<int> moved = sw;
        moved[a] -= x;
        moved[b] += x;
        const int lr = static_cast<int>(least_rotation(std::span<const int>(moved)));
        if (!std::equal(moved.begin() + lr, moved.end(), tw.begin()) ||
            !std::equal(tw.begin() + (k - lr), tw.end(), moved.begin(), moved.begin() + lr))
          continue;
        MoveWitness w;
        w.alpha = a + 1;
        w.beta = b + 1;
        w.target_alpha = mod(a - lr) + 1;
        w.target_beta = mod(b - lr) + 1;
        w.x = x;
        w.relative = mod(w.target_beta - w.target_alpha) == mod(b - a);
        return w;
      }
    }

  // 3-part moves: cuts in parts a < b < c. The result reads, cyclically,
  // [s_a - x + y, parts b+1..c-1, s_c - z + x, parts a+1..b-1, s_b - y + z, parts c+1..a-1].
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b)
      for (int c = b + 1; c < k; ++c)
        for (int o = 0; o < k; ++o) {
          const int ta = o, tb = mod(o + (c - b)), tc = mod(o + (c - a));
          bool rest = true;
          for (int p = 1; rest && p < c - b; ++p) rest = sw[b + p] == tw[mod(ta + p)];
          for (int p = 1; rest && p < b - a; ++p) rest = sw[a + p] == tw[mod(tb + p)];
          for (int p = 1; rest && p < k - (c - a); ++p) rest = sw[mod(c + p)] == tw[mod(tc + p)];
          if (!rest) continue;
          if (!three_feasible({sw[a], sw[b], sw[c]}, {tw[ta], tw[tb], tw[tc]})) continue;
          MoveWitness w;
          w.kind = MoveWitness::Kind::three_parts;
          w.alpha = a + 1;
          w.beta = b + 1;
          w.gamma = c + 1;
          w.target_alpha = ta + 1;
          w.target_beta = tb + 1;
          w.target_gamma = tc + 1;
          w.x = std::max({0, sw[a] - tw[ta], tw[tb] - sw[c]});
          w.y = tw[ta] - sw[a] + w.x;
          w.z = sw[c] + w.x - tw[tb];
          w.relative = mod(tb - ta) == c - b && mod(tc - tb) == b - a;
          return w;
        }
  return std::nullopt;
}

bool sum_bound_holds(std::span<const int> s, std::span<const int> t, int m) {
  require_matching(s, t);
  return holds_sorted(SortedSums(s), SortedSums(t), static_cast<int>(s.size()), m);
}

bool sum_bound_holds(const CircularPartition& s, const CircularPartition& t, int m) {
  return sum_bound_holds(view(s), view(t), m);
}

int lower_bound(std::span<const int> s, std::span<const int> t) {
  require_matching(s, t);
  const SortedSums ss(s), ts(t);
  const int k = static_cast<int>(s.size());
  return std::max(least_slack(ss, ts, k), least_slack(ts, ss, k));
}

int lower_bound(const CircularPartition& s, const CircularPartition& t) {
  return lower_bound(view(s), view(t));
}

bool diameter_predicate(std::span<const int> s, std::span<const int> t) {
  require_matching(s, t);
  const int k = static_cast<int>(s.size());
  if (k < 2) throw InvalidInputError("diameter predicate needs at least two parts");
  SortedSums big(s), small(t);
  if (small.largest(1) > big.largest(1)) std::swap(big, small);
  return big.largest(1) > small.largest(1) && small.smallest(1) > big.smallest(k - 1);
}

bool diameter_predicate(const CircularPartition& s, const CircularPartition& t) {
  return diameter_predicate(view(s), view(t));
}

std::string_view to_string(UpperSource source) noexcept {
  switch (source) {
    case UpperSource::lemma3:
      return "lemma3";
    case UpperSource::greedy:
      return "greedy";
    case UpperSource::trivial_equal:
      return "trivial_equal";
  }
  return "unknown";
}

}  // namespace circtrans

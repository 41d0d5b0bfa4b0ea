#pragma once

#include <array>
#include <optional>
#include <span>
#include <string_view>

#include "circtrans/core_model.hpp"

namespace circtrans {

/// Largest sum of r distinct weights. r > k clamps to k; r <= 0 gives 0.
int f1(std::span<const int> weights, int r);
/// Smallest sum of r distinct weights, with the same clamping as f1.
int f2(std::span<const int> weights, int r);
inline int f1(const CircularPartition& p, int r) { return f1(std::span<const int>(p.weights()), r); }
inline int f2(const CircularPartition& p, int r) { return f2(std::span<const int>(p.weights()), r); }

/// A single 3-part move can turn source parts (s_a, s_b, s_c) into target parts
/// (t_a', t_b', t_c'), where t_a' = s_a - x + y, t_b' = s_c - z + x and
/// t_c' = s_b - y + z.
bool three_feasible(std::array<int, 3> s, std::array<int, 3> t) noexcept;
/// A single 2-part move can turn (s_a, s_b) into (s_a - x, s_b + x) = t.
bool two_feasible(std::array<int, 2> s, std::array<int, 2> t) noexcept;

/// Certificate that T is reachable from S in at most one move, or nullopt.
/// Both strings need at least two parts.
std::optional<MoveWitness> one_move_witness(const CircularBinaryString& s,
                                            const CircularBinaryString& t);

/// Whether the partition-sum inequalities allow d(S, T) <= m:
/// for all r in 1..k, f2(S, r - m) <= f2(T, r) and f1(T, r) <= f1(S, r + m).
/// Throws IncompatiblePairError on different part counts or totals.
bool sum_bound_holds(std::span<const int> s, std::span<const int> t, int m);
bool sum_bound_holds(const CircularPartition& s, const CircularPartition& t, int m);

/// Largest certified lower bound on d(S, T), taken over both orientations.
int lower_bound(std::span<const int> s, std::span<const int> t);
int lower_bound(const CircularPartition& s, const CircularPartition& t);

/// True exactly when d(S, T) = k - 1. Requires k >= 2.
bool diameter_predicate(std::span<const int> s, std::span<const int> t);
bool diameter_predicate(const CircularPartition& s, const CircularPartition& t);

enum class UpperSource { lemma3, greedy, trivial_equal };
std::string_view to_string(UpperSource source) noexcept;

struct BoundReport {
  int k = 0;
  int lower = 0;
  int upper = 0;
  UpperSource upper_source = UpperSource::trivial_equal;
  std::optional<int> exact;
  bool is_diameter = false;
};

}  // namespace circtrans

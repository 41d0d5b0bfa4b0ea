#pragma once

#include <optional>
#include <string>
#include <vector>

#include "circtrans/bounds_analysis.hpp"
#include "circtrans/core_model.hpp"

namespace circtrans {

enum class Orientation { as_given, swapped };

/// Record of one bilateral construction. Part indices are 1-based slots of the
/// concrete words the construction ran on (after any swap, mirror or
/// complement). The three cut parts alpha, beta, gamma of the final move land
/// on target slots target_alpha, target_beta, target_gamma, and
/// target_gamma = l holds the dominant target part.
struct SolverTrace {
  Orientation orientation = Orientation::as_given;
  bool mirrored = false;
  char case_label = '-';      // 'a', 'b' or 'c' by where the small source parts sit
  bool from_case_split = false;  // parameters came from the case split, not the scan
  int l = 0;
  int alpha = 0, beta = 0, gamma = 0;
  int target_alpha = 0, target_beta = 0, target_gamma = 0;
  int chip_count = 0;
  std::vector<int> chips;
  std::vector<Transposition> source_moves;
  std::vector<Transposition> target_moves;
  std::optional<MoveWitness> final_move;
};

/// Orientation under which the target side has a part at least as large as
/// every source part, and some source part is at most the total minus that
/// part. nullopt when neither orientation qualifies.
std::optional<Orientation> dominance_orientation(const CircularPartition& s,
                                                 const CircularPartition& t);

/// Sequence of at most k - 2 moves from s to t built by aligning both sides on
/// a common intermediate pair one 3-part move apart. Requires
/// dominance_orientation to succeed; throws ConstructionError if the built
/// sequence does not replay to t.
TranspositionSequence dominance_solve(const CircularBinaryString& s, const CircularBinaryString& t,
                                      SolverTrace* trace = nullptr);

/// At most k - 1 two-part moves through a single reservoir part.
TranspositionSequence greedy_upper_bound(const CircularBinaryString& s,
                                         const CircularBinaryString& t);

struct UpperBound {
  int length = 0;
  UpperSource source = UpperSource::trivial_equal;
  TranspositionSequence sequence;
};

/// Shorter of the greedy and dominance constructions (dominance wins ties).
UpperBound best_upper_bound(const CircularBinaryString& s, const CircularBinaryString& t);

/// Lower and upper bounds with the diameter test; runs the BFS oracle when
/// `with_exact` is set. Equal classes always report exact = 0.
BoundReport analyze_pair(const CircularBinaryString& s, const CircularBinaryString& t,
                         bool with_exact);

}  // namespace circtrans

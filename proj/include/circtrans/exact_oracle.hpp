#pragma once

#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "circtrans/core_model.hpp"

namespace circtrans {

/// All rotation classes of length n with a fixed number of ones, joined by
/// one-move edges.
struct ClassGraph {
  int n = 0;
  int ones = 0;
  std::vector<std::string> nodes;  // canonical words, ascending
  std::unordered_map<std::string, int> index;
  std::vector<std::vector<int>> adjacency;

  int node_of(const CircularBinaryString& s) const;
  /// BFS distances from node `source` to every node.
  std::vector<int> distances_from(int source) const;
};

/// Canonical words of length n with `ones` ones, ascending. Empty when ones is
/// out of range.
std::vector<std::string> enumerate_classes(int n, int ones);

/// Builds a fresh graph. Requires 1 <= n <= 24 and 0 <= ones <= n.
ClassGraph build_class_graph(int n, int ones);

/// Shared, lazily built graph for a bucket. Safe to call from many threads;
/// each bucket is built at most once per process.
std::shared_ptr<const ClassGraph> class_graph(int n, int ones);

int exact_distance(const CircularBinaryString& s, const CircularBinaryString& t);

/// A shortest sequence from s to t, moves given against the evolving concrete
/// word starting from s's canonical form.
TranspositionSequence exact_path(const CircularBinaryString& s, const CircularBinaryString& t);

}  // namespace circtrans

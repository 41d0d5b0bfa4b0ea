#include "circtrans/exact_oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <future>
#include <map>
#include <mutex>

namespace circtrans {

namespace {

std::string word_of(std::uint32_t mask, int n) {
  std::string w(static_cast<std::size_t>(n), '0');
  for (int p = 0; p < n; ++p)
    if (mask >> (n - 1 - p) & 1u) w[static_cast<std::size_t>(p)] = '1';
  return w;
}

std::uint32_t next_combination(std::uint32_t v) {
  const std::uint32_t t = v | (v - 1);
  return (t + 1) | (((~t & -~t) - 1) >> (__builtin_ctz(v) + 1));
}

std::vector<int> bfs(const ClassGraph& g, int source, std::vector<int>* parent) {
  std::vector<int> dist(g.nodes.size(), -1);
  if (parent) parent->assign(g.nodes.size(), -1);
  std::deque<int> queue{source};
  dist[static_cast<std::size_t>(source)] = 0;
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    for (int v : g.adjacency[static_cast<std::size_t>(u)]) {
      if (dist[static_cast<std::size_t>(v)] >= 0) continue;
      dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + 1;
      if (parent) (*parent)[static_cast<std::size_t>(v)] = u;
      queue.push_back(v);
    }
  }
  return dist;
}

}  // namespace

std::vector<std::string> enumerate_classes(int n, int ones) {
  std::vector<std::string> out;
  if (n > 24) throw InvalidInputError("class enumeration supports length <= 24");
  if (n < 1 || ones < 0 || ones > n) return out;
  if (ones == 0) return {std::string(static_cast<std::size_t>(n), '0')};
  const std::uint64_t limit = std::uint64_t{1} << n;
  for (std::uint32_t mask = (1u << ones) - 1; mask < limit; mask = next_combination(mask)) {
    std::string w = word_of(mask, n);
    if (least_rotation(w) == 0) out.push_back(std::move(w));
    if (ones == n) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

int ClassGraph::node_of(const CircularBinaryString& s) const {
  const auto it = index.find(s.bits());
  if (it == index.end())
    throw InvalidInputError("class " + s.bits() + " is not in bucket (" + std::to_string(n) + ", " +
                            std::to_string(ones) + ")");
  return it->second;
}

std::vector<int> ClassGraph::distances_from(int source) const { return bfs(*this, source, nullptr); }

ClassGraph build_class_graph(int n, int ones) {
  if (n < 1 || n > 24) throw InvalidInputError("class graph length must be in 1..24");
  if (ones < 0 || ones > n) throw InvalidInputError("ones count out of range");
  ClassGraph g;
  g.n = n;
  g.ones = ones;
  g.nodes = enumerate_classes(n, ones);
  for (std::size_t u = 0; u < g.nodes.size(); ++u) g.index.emplace(g.nodes[u], static_cast<int>(u));
  g.adjacency.resize(g.nodes.size());
  if (n < 3) return g;
  for (std::size_t u = 0; u < g.nodes.size(); ++u)
    for (const auto& v : neighbors(CircularBinaryString(g.nodes[u])))
      g.adjacency[u].push_back(g.index.at(v.bits()));
  return g;
}

std::shared_ptr<const ClassGraph> class_graph(int n, int ones) {
  using Future = std::shared_future<std::shared_ptr<const ClassGraph>>;
  static std::mutex mutex;
  static std::map<std::pair<int, int>, Future> cache;

  std::promise<std::shared_ptr<const ClassGraph>> promise;
  Future future;
  {
    std::lock_guard lock(mutex);
    const auto it = cache.find({n, ones});
    if (it != cache.end()) return it->second.get();
    future = promise.get_future().share();
    cache.emplace(std::pair{n, ones}, future);
  }
  try {
    promise.set_value(std::make_shared<const ClassGraph>(build_class_graph(n, ones)));
  } catch (...) {
    promise.set_exception(std::current_exception());
    std::lock_guard lock(mutex);
    cache.erase({n, ones});
  }
  return future.get();
}

int exact_distance(const CircularBinaryString& s, const CircularBinaryString& t) {
  require_compatible(s, t);
  if (s == t) return 0;
  const auto g = class_graph(static_cast<int>(s.size()), static_cast<int>(s.ones()));
  return g->distances_from(g->node_of(s))[static_cast<std::size_t>(g->node_of(t))];
}

TranspositionSequence exact_path(const CircularBinaryString& s, const CircularBinaryString& t) {
  require_compatible(s, t);
  TranspositionSequence seq{s, {}, t};
  if (s == t) return seq;
  const auto g = class_graph(static_cast<int>(s.size()), static_cast<int>(s.ones()));
  std::vector<int> parent;
  bfs(*g, g->node_of(s), &parent);

  std::vector<int> route;
  for (int v = g->node_of(t); v >= 0; v = parent[static_cast<std::size_t>(v)]) route.push_back(v);
  std::reverse(route.begin(), route.end());

  const int n = static_cast<int>(s.size());
  std::string word = s.bits();
  for (std::size_t step = 1; step < route.size(); ++step) {
    const std::string& goal = g->nodes[static_cast<std::size_t>(route[step])];
    bool found = false;
    for (int i = 1; i <= n && !found; ++i)
      for (int j = i + 1; j <= n && !found; ++j)
        for (int k = j + 1; k <= n + 1 && !found; ++k) {
          std::string next = apply_to_word(word, {i, j, k});
          if (CircularBinaryString(next).bits() != goal) continue;
          seq.moves.push_back({i, j, k});
          word = std::move(next);
          found = true;
        }
    if (!found) throw ConstructionError("no move realizes a graph edge toward " + goal);
  }
  return seq;
}

}  // namespace circtrans

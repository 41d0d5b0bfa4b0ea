#include "circtrans/constructive_solver.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "circtrans/exact_oracle.hpp"

namespace circtrans {

namespace {

int wrap(int v, int k) { return ((v % k) + k) % k; }

// A concrete word whose '1' separators carry fixed slot labels. Slot q is the
// run of zeros ending at separator q. Every move is checked against the slot
// weights it is supposed to produce.
class Workspace {
 public:
  explicit Workspace(std::string word) : word_(std::move(word)) {
    for (std::size_t p = 0; p < word_.size(); ++p)
      if (word_[p] == '1') sep_.push_back(static_cast<int>(p));
    weights_ = measure();
  }

  int parts() const { return static_cast<int>(sep_.size()); }
  int weight(int q) const { return weights_[static_cast<std::size_t>(wrap(q, parts()))]; }
  const std::vector<int>& weights() const { return weights_; }
  const std::string& word() const { return word_; }
  const std::vector<Transposition>& moves() const { return moves_; }

  // Moves the last x zeros of slot a to the front of slot b.
  void transfer(int a, int b, int x) {
    std::vector<int> expected = weights_;
    expected[static_cast<std::size_t>(wrap(a, parts()))] -= x;
    expected[static_cast<std::size_t>(wrap(b, parts()))] += x;
    cut(pos(a) - x, pos(a), pos(b - 1) + 1);
    check(expected, "transfer");
  }

  // Moves separator g to just after the first h zeros of slot a. Slot g absorbs
  // slot g + 1, the slots up to a - 1 shift down by one, and slot a - 1 becomes h.
  void relocate(int g, int a, int h) {
    const int k = parts();
    const int span = wrap(a - g - 1, k);
    if (span < 1) throw ConstructionError("relocation needs a slot between the parts");
    std::vector<int> expected = weights_;
    expected[static_cast<std::size_t>(wrap(g, k))] = weight(g) + weight(g + 1);
    for (int i = 1; i < span; ++i) expected[static_cast<std::size_t>(wrap(g + i, k))] = weight(g + i + 1);
    expected[static_cast<std::size_t>(wrap(a - 1, k))] = h;
    expected[static_cast<std::size_t>(wrap(a, k))] = weight(a) - h;
    cut(pos(g), pos(g) + 1, pos(a - 1) + 1 + h);
    const int moved = sep_[static_cast<std::size_t>(wrap(g, k))];
    for (int i = 0; i < span; ++i)
      sep_[static_cast<std::size_t>(wrap(g + i, k))] = sep_[static_cast<std::size_t>(wrap(g + i + 1, k))];
    sep_[static_cast<std::size_t>(wrap(a - 1, k))] = moved;
    check(expected, "relocation");
  }

  // Cuts the tails x, y, z off slots a, b, g and exchanges the first two arcs.
  // Slot labels are meaningless afterwards.
  void three_move(int a, int b, int g, int x, int y, int z) {
    cut(pos(a) - x, pos(b) - y, pos(g) - z);
    sep_.clear();
  }

 private:
  int pos(int q) const { return sep_[static_cast<std::size_t>(wrap(q, parts()))]; }

  void cut(int c1, int c2, int c3) {
    const int n = static_cast<int>(word_.size());
    const Transposition t = from_cuts(static_cast<std::size_t>(wrap(c1, n)),
                                      static_cast<std::size_t>(wrap(c2, n)),
                                      static_cast<std::size_t>(wrap(c3, n)), word_.size());
    const int i = t.i - 1, j = t.j - 1, k = t.k - 1;
    for (int& p : sep_) {
      if (i <= p && p < j)
        p += k - j;
      else if (j <= p && p < k)
        p -= j - i;
    }
    word_ = apply_to_word(word_, t);
    moves_.push_back(t);
  }

  std::vector<int> measure() const {
    const int n = static_cast<int>(word_.size());
    const int k = parts();
    std::vector<int> w(static_cast<std::size_t>(k));
    for (int q = 0; q < k; ++q) {
      const int here = sep_[static_cast<std::size_t>(q)];
      const int prev = sep_[static_cast<std::size_t>(wrap(q - 1, k))];
      if (word_[static_cast<std::size_t>(here)] != '1') throw ConstructionError("lost track of a separator");
      w[static_cast<std::size_t>(q)] = k == 1 ? n - 1 : wrap(here - prev - 1, n);
    }
    if (std::accumulate(w.begin(), w.end(), 0) != n - k)
      throw ConstructionError("separators left their cyclic order");
    return w;
  }

  void check(const std::vector<int>& expected, const char* what) {
    weights_ = measure();
    if (weights_ != expected) throw ConstructionError(std::string(what) + " produced unexpected slot weights");
  }

  std::string word_;
  std::vector<int> sep_;
  std::vector<int> weights_;
  std::vector<Transposition> moves_;
};

// Parameters of one bilateral construction on slot-labeled weights (0-based).
// The final move cuts source slots a -> b -> g and lands them on target slots
// pa, pg, pb = l; d2 = b - a = pb - pg and d1 = g - b = pg - pa.
struct Plan {
  int l = 0, a = 0, b = 0, g = 0;
  int pa = 0, pg = 0;
  int m = 0;
  int moves = 0;
  std::vector<int> chips;
};

struct SlotPair {
  int source;
  int target;
};

std::vector<SlotPair> matched_slots(const Plan& p, int k) {
  const int d1 = wrap(p.pg - p.pa, k), d2 = wrap(p.l - p.pg, k);
  const int c = k - 1 - d1 - d2;
  std::vector<SlotPair> out;
  for (int i = 1; i < d2; ++i) out.push_back({p.a + i, p.pg + i});
  for (int i = 1; i < d1; ++i) out.push_back({p.b + i, p.pa + i});
  for (int i = 1; i <= c; ++i) out.push_back({p.g + i, p.l + i});
  return out;
}

std::optional<Plan> evaluate(const std::vector<int>& s, const std::vector<int>& t, int l, int a,
                             int pa, int pg, int m) {
  const int k = static_cast<int>(s.size());
  const int d1 = wrap(pg - pa, k), d2 = wrap(l - pg, k);
  if (d1 == 0 || d2 == 0 || d1 + d2 >= k) return std::nullopt;
  const int c = k - 1 - d1 - d2;
  if (m < 0 || m > c) return std::nullopt;
  auto at = [k](const std::vector<int>& v, int q) { return v[static_cast<std::size_t>(wrap(q, k))]; };

  Plan p{l, a, wrap(a + d2, k), wrap(a + d2 + d1, k), pa, pg, m, m, {}};
  int chipped = 0;
  for (int j = 1; j <= m; ++j) {
    p.chips.push_back(at(t, pa - m - 1 + j));
    chipped += p.chips.back();
  }
  if (chipped > at(s, a)) return std::nullopt;

  // Weights after the chips; every C-zone slot moves down by m.
  std::vector<int> u(s);
  u[static_cast<std::size_t>(p.g)] = at(s, p.g);
  for (int i = 1; i <= m; ++i) u[static_cast<std::size_t>(p.g)] += at(s, p.g + i);
  for (int i = 1; i <= c - m; ++i) u[static_cast<std::size_t>(wrap(p.g + i, k))] = at(s, p.g + m + i);
  for (int j = 1; j <= m; ++j) u[static_cast<std::size_t>(wrap(p.g + c - m + j, k))] = p.chips[static_cast<std::size_t>(j - 1)];
  u[static_cast<std::size_t>(a)] -= chipped;

  int gain = 0, absorb = 0;
  for (const auto& pair : matched_slots(p, k)) {
    const int diff = at(u, pair.source) - at(t, pair.target);
    if (diff > 0) gain += diff;
    if (diff < 0) absorb -= diff;
    if (diff != 0) ++p.moves;
  }
  if (!three_feasible({at(u, a), at(u, p.b), at(u, p.g) + gain}, {at(t, pa), at(t, pg), at(t, l) + absorb}))
    return std::nullopt;
  p.moves += 1;
  return p;
}

std::optional<Plan> first_chip_count(const std::vector<int>& s, const std::vector<int>& t, int l,
                                     int a, int pa, int pg) {
  const int k = static_cast<int>(s.size());
  for (int m = 0; m < k; ++m)
    if (auto p = evaluate(s, t, l, a, pa, pg, m); p && p->moves <= k - 2) return p;
  return std::nullopt;
}

struct CaseChoice {
  char label = '-';
  std::vector<Plan> plans;
};

// Parameters prescribed by where the source parts no larger than the total
// minus the dominant target part sit relative to the target's smallest parts.
// The case fixes part values only, so every index realizing them is offered.
CaseChoice case_plans(const std::vector<int>& s, const std::vector<int>& t) {
  CaseChoice out;
  const int k = static_cast<int>(s.size());
  if (k < 3) return out;
  auto at = [](const std::vector<int>& v, int q) { return v[static_cast<std::size_t>(q)]; };
  const int total = std::accumulate(s.begin(), s.end(), 0);
  const int top = *std::max_element(t.begin(), t.end());
  const int low = *std::min_element(t.begin(), t.end());
  std::vector<int> small;
  for (int i = 0; i < k; ++i)
    if (at(s, i) <= total - top) small.push_back(i);

  int second = -1;
  const bool top_twice = std::count(t.begin(), t.end(), top) > 1;
  for (int j = 0; j < k; ++j)
    if (at(t, j) != top) second = std::max(second, at(t, j));
  if (top_twice) second = top;

  bool all_below = true, some_between = false;
  for (int i : small) {
    all_below = all_below && at(s, i) < low;
    some_between = some_between || (low <= at(s, i) && at(s, i) <= low + second);
  }
  out.label = all_below ? 'a' : some_between ? 'b' : 'c';

  for (int l = 0; l < k; ++l) {
    if (at(t, l) != top) continue;
    if (out.label == 'a') {
      if (small.empty()) return out;
      const int a = small.front();
      for (int b = 0; b < k; ++b) {
        if (std::find(small.begin(), small.end(), b) != small.end()) continue;
        for (int g = 0; g < k; ++g) {
          const int db = wrap(b - a, k), dg = wrap(g - a, k);
          if (g == a || g == b || dg < db) continue;
          const int target_g = wrap(l - db, k);
          if (auto p = evaluate(s, t, l, a, wrap(target_g - (dg - db), k), target_g, 0); p && p->moves <= k - 2)
            out.plans.push_back(*p);
        }
      }
      continue;
    }
    for (int pg = 0; pg < k; ++pg) {
      if (pg == l || at(t, pg) != second) continue;
      for (int pa = 0; pa < k; ++pa) {
        if (pa == l || pa == pg || at(t, pa) != low) continue;
        for (int a : small) {
          const bool between = low <= at(s, a) && at(s, a) <= low + second;
          if ((out.label == 'b') != between) continue;
          if (auto p = first_chip_count(s, t, l, a, pa, pg)) out.plans.push_back(*p);
        }
      }
    }
  }
  return out;
}

std::optional<Plan> scan_plans(const std::vector<int>& s, const std::vector<int>& t) {
  const int k = static_cast<int>(s.size());
  const int top = *std::max_element(t.begin(), t.end());
  for (int l = 0; l < k; ++l) {
    if (t[static_cast<std::size_t>(l)] != top) continue;
    for (int a = 0; a < k; ++a)
      for (int pa = 0; pa < k; ++pa)
        for (int pg = 0; pg < k; ++pg)
          if (auto p = first_chip_count(s, t, l, a, pa, pg)) return p;
  }
  return std::nullopt;
}

struct Built {
  std::vector<Transposition> moves;
  SolverTrace trace;
};

// Runs a plan on concrete source and target words (separator '1').
Built realize(const std::string& source, const std::string& target, const Plan& p) {
  Workspace u(source), v(target);
  const int k = u.parts();
  for (int h : p.chips) u.relocate(p.g, p.a, h);
  for (const auto& pair : matched_slots(p, k)) {
    const int diff = u.weight(pair.source) - v.weight(pair.target);
    if (diff > 0) u.transfer(pair.source, p.g, diff);
    if (diff < 0) v.transfer(pair.target, p.l, -diff);
  }

  const std::array<int, 3> have{u.weight(p.a), u.weight(p.b), u.weight(p.g)};
  const std::array<int, 3> want{v.weight(p.pa), v.weight(p.pg), v.weight(p.l)};
  if (!three_feasible(have, want)) throw ConstructionError("final 3-part move is not feasible");
  MoveWitness w;
  w.kind = MoveWitness::Kind::three_parts;
  w.alpha = p.a + 1;
  w.beta = p.b + 1;
  w.gamma = p.g + 1;
  w.target_alpha = p.pa + 1;
  w.target_beta = p.pg + 1;
  w.target_gamma = p.l + 1;
  w.x = std::max({0, have[0] - want[0], want[1] - have[2]});
  w.y = want[0] - have[0] + w.x;
  w.z = have[2] + w.x - want[1];
  w.relative = true;

  Built out;
  out.trace.source_moves = u.moves();
  out.trace.target_moves = v.moves();
  if (CircularBinaryString(u.word()) != CircularBinaryString(v.word())) {
    u.three_move(p.a, p.b, p.g, w.x, w.y, w.z);
    out.trace.final_move = w;
  }
  out.moves = u.moves();
  const auto back = reversed_moves(target, v.moves());
  const auto tail = retarget_moves(v.word(), back, u.word());
  out.moves.insert(out.moves.end(), tail.begin(), tail.end());

  out.trace.l = p.l + 1;
  out.trace.alpha = w.alpha;
  out.trace.beta = w.beta;
  out.trace.gamma = w.gamma;
  out.trace.target_alpha = w.target_alpha;
  out.trace.target_beta = w.target_beta;
  out.trace.target_gamma = w.target_gamma;
  out.trace.chip_count = p.m;
  out.trace.chips = p.chips;
  return out;
}

std::string reversed(std::string w) {
  std::reverse(w.begin(), w.end());
  return w;
}

// Moves from `source` to the class of `target`, where target holds a dominant part.
Built build_dominant(const std::string& source, const std::string& target) {
  const std::string s = separator_for(source) == '1' ? source : complement_word(source);
  const std::string t = separator_for(source) == '1' ? target : complement_word(target);
  const int k = static_cast<int>(std::count(s.begin(), s.end(), '1'));

  auto finish = [&](const std::string& a, const std::string& b, const Plan& p, bool mirrored,
                    char label, bool split) {
    Built built = realize(a, b, p);
    if (mirrored)
      for (auto& mv : built.moves) mv = mirror_of(mv, a.size());
    built.trace.mirrored = mirrored;
    built.trace.case_label = label;
    built.trace.from_case_split = split;
    return built;
  };

  std::optional<Built> fallback;
  for (bool split : {true, false}) {
    for (bool mirrored : {false, true}) {
      const std::string a = mirrored ? reversed(s) : s;
      const std::string b = mirrored ? reversed(t) : t;
      const auto sw = labeled_weights(a, '1');
      const auto tw = labeled_weights(b, '1');
      const CaseChoice choice = case_plans(sw, tw);
      std::vector<Plan> plans = choice.plans;
      if (!split) {
        plans.clear();
        if (auto p = scan_plans(sw, tw)) plans.push_back(*p);
      }
      for (const auto& p : plans) {
        Built built = finish(a, b, p, mirrored, choice.label, split);
        if (static_cast<int>(built.moves.size()) <= k - 2) return built;
        if (!fallback) fallback = std::move(built);
      }
    }
  }
  if (fallback) return *fallback;
  throw ConstructionError("no construction parameters fit " + source + " -> " + target);
}

void require_replay(const TranspositionSequence& seq, int limit, const char* what) {
  const ReplayReport report = replay(seq);
  if (!report.ok) throw ConstructionError(std::string(what) + " failed replay: " + report.message);
  if (static_cast<int>(seq.length()) > limit) {
    std::ostringstream msg;
    msg << what << " used " << seq.length() << " moves, limit " << limit;
    throw ConstructionError(msg.str());
  }
}

}  // namespace

std::optional<Orientation> dominance_orientation(const CircularPartition& s,
                                                 const CircularPartition& t) {
  if (s.parts() != t.parts() || s.total() != t.total())
    throw IncompatiblePairError("partitions differ in part count or total weight");
  auto holds = [](const CircularPartition& src, const CircularPartition& dst) {
    const auto& sw = src.weights();
    const int top = *std::max_element(dst.weights().begin(), dst.weights().end());
    return top >= *std::max_element(sw.begin(), sw.end()) &&
           *std::min_element(sw.begin(), sw.end()) <= src.total() - top;
  };
  if (holds(s, t)) return Orientation::as_given;
  if (holds(t, s)) return Orientation::swapped;
  return std::nullopt;
}

TranspositionSequence dominance_solve(const CircularBinaryString& s, const CircularBinaryString& t,
                                      SolverTrace* trace) {
  require_compatible(s, t);
  TranspositionSequence seq{s, {}, t};
  if (s == t) {
    if (trace) *trace = SolverTrace{};
    return seq;
  }
  const CircularPartition ps = to_partition(s), pt = to_partition(t);
  const auto orientation = dominance_orientation(ps, pt);
  if (!orientation) throw InvalidInputError("no part of either string dominates the other side");

  Built built;
  if (*orientation == Orientation::as_given) {
    built = build_dominant(s.bits(), t.bits());
    seq.moves = std::move(built.moves);
  } else {
    built = build_dominant(t.bits(), s.bits());
    const std::string end = chain_words(t.bits(), built.moves).back();
    seq.moves = retarget_moves(end, reversed_moves(t.bits(), built.moves), s.bits());
  }
  built.trace.orientation = *orientation;
  require_replay(seq, ps.parts() - 2, "dominance construction");
  if (trace) *trace = std::move(built.trace);
  return seq;
}

TranspositionSequence greedy_upper_bound(const CircularBinaryString& s,
                                         const CircularBinaryString& t) {
  require_compatible(s, t);
  TranspositionSequence seq{s, {}, t};
  if (s == t) return seq;
  const bool flip = separator_for(s.bits()) == '0';
  Workspace u(flip ? complement_word(s.bits()) : s.bits());
  const auto target = labeled_weights(flip ? complement_word(t.bits()) : t.bits(), '1');
  const int k = u.parts();

  int best = 0, fewest = k + 1;
  for (int o = 0; o < k; ++o) {
    int miss = 0;
    for (int p = 0; p < k; ++p) miss += u.weight(p) != target[static_cast<std::size_t>(wrap(p + o, k))];
    if (miss < fewest) fewest = miss, best = o;
  }
  auto want = [&](int p) { return target[static_cast<std::size_t>(wrap(p + best, k))]; };
  int reservoir = 0;
  while (u.weight(reservoir) == want(reservoir)) ++reservoir;

  for (int p = 0; p < k; ++p)
    if (p != reservoir && u.weight(p) > want(p)) u.transfer(p, reservoir, u.weight(p) - want(p));
  for (int p = 0; p < k; ++p) {
    if (p == reservoir || u.weight(p) >= want(p)) continue;
    const int need = want(p) - u.weight(p);
    if (u.weight(reservoir) < need) throw ConstructionError("reservoir underflow");
    u.transfer(reservoir, p, need);
  }
  seq.moves = u.moves();
  require_replay(seq, k - 1, "greedy construction");
  return seq;
}

UpperBound best_upper_bound(const CircularBinaryString& s, const CircularBinaryString& t) {
  require_compatible(s, t);
  if (s == t) return {0, UpperSource::trivial_equal, {s, {}, t}};
  UpperBound out{0, UpperSource::greedy, greedy_upper_bound(s, t)};
  if (dominance_orientation(to_partition(s), to_partition(t))) {
    auto seq = dominance_solve(s, t);
    if (seq.length() <= out.sequence.length()) {
      out.sequence = std::move(seq);
      out.source = UpperSource::lemma3;
    }
  }
  out.length = static_cast<int>(out.sequence.length());
  return out;
}

BoundReport analyze_pair(const CircularBinaryString& s, const CircularBinaryString& t,
                         bool with_exact) {
  require_compatible(s, t);
  BoundReport r;
  const bool degenerate = s.ones() == 0 || s.ones() == s.size();
  if (!degenerate) {
    const CircularPartition ps = to_partition(s), pt = to_partition(t);
    r.k = ps.parts();
    r.lower = lower_bound(ps, pt);
    r.is_diameter = r.k >= 2 && diameter_predicate(ps, pt);
  }
  const UpperBound up = best_upper_bound(s, t);
  r.upper = up.length;
  r.upper_source = up.source;
  if (s == t)
    r.exact = 0;
  else if (with_exact)
    r.exact = exact_distance(s, t);
  return r;
}

}  // namespace circtrans

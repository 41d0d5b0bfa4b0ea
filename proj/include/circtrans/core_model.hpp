#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "circtrans/errors.hpp"

namespace circtrans {

/// Index of the lexicographically least rotation of `seq` (two-pointer
/// minimum-expression scan, linear time). Returns 0 for an empty sequence.
template <class T>
std::size_t least_rotation(std::span<const T> seq) {
  const std::size_t n = seq.size();
  std::size_t i = 0, j = 1, k = 0;
  while (i < n && j < n && k < n) {
    const T& a = seq[(i + k) % n];
    const T& b = seq[(j + k) % n];
    if (a == b) {
      ++k;
      continue;
    }
    if (b < a)
      i += k + 1;
    else
      j += k + 1;
    if (i == j) ++j;
    k = 0;
  }
  return n == 0 ? 0 : std::min(i, j);
}

std::size_t least_rotation(std::string_view word);

/// Left rotation: result[p] = word[(p + r) mod n].
std::string rotate_word(std::string_view word, std::size_t r);

/// Rotation class of a binary word, held as its least rotation.
class CircularBinaryString {
 public:
  /// Validates and canonicalizes; throws InvalidInputError on an empty word or
  /// a character outside {0,1}.
  explicit CircularBinaryString(std::string_view word);

  const std::string& bits() const noexcept { return bits_; }
  std::size_t size() const noexcept { return bits_.size(); }
  std::size_t ones() const noexcept;
  std::size_t zeros() const noexcept { return size() - ones(); }

  friend bool operator==(const CircularBinaryString&, const CircularBinaryString&) = default;
  friend auto operator<=>(const CircularBinaryString&, const CircularBinaryString&) = default;

 private:
  std::string bits_;
};

CircularBinaryString parse_string(std::string_view text);
CircularBinaryString canonicalize(std::string_view bits);
CircularBinaryString complement(const CircularBinaryString& s);
std::string complement_word(std::string_view word);

/// True when both strings have the same length and number of ones.
bool compatible(const CircularBinaryString& a, const CircularBinaryString& b) noexcept;
void require_compatible(const CircularBinaryString& a, const CircularBinaryString& b);

/// Separator symbol used to cut a word into parts: '1' unless ones outnumber
/// zeros, in which case the roles are interchanged.
char separator_for(std::string_view word) noexcept;

/// Weight sequence of a circular binary string: the filler-run lengths s_1..s_k
/// preceding each separator, stored in least cyclic rotation.
class CircularPartition {
 public:
  explicit CircularPartition(std::vector<int> weights, bool complemented = false);

  const std::vector<int>& weights() const noexcept { return weights_; }
  bool complemented() const noexcept { return complemented_; }
  int parts() const noexcept { return static_cast<int>(weights_.size()); }
  int total() const noexcept { return total_; }

  friend bool operator==(const CircularPartition&, const CircularPartition&) = default;

 private:
  std::vector<int> weights_;
  bool complemented_ = false;
  int total_ = 0;
};

CircularPartition to_partition(const CircularBinaryString& s);
CircularBinaryString from_partition(const CircularPartition& p);

/// Parses "p:3,1,2" into the uncomplemented partition (3,1,2).
CircularPartition parse_partition(std::string_view text);
/// Accepts either a bit string or a "p:" partition.
CircularBinaryString parse_input(std::string_view text);
std::string format_partition(const CircularPartition& p);

/// Filler-run lengths before each separator of a concrete word, in order of the
/// separators' appearance (slot q ends at the q-th separator; the first slot
/// wraps around the end of the word).
std::vector<int> labeled_weights(std::string_view word, char separator);

/// Exchange of the adjacent blocks [i, j) and [j, k), 1-based,
/// 1 <= i < j < k <= n + 1.
struct Transposition {
  int i = 0;
  int j = 0;
  int k = 0;

  bool valid_for(std::size_t n) const noexcept;
  void validate(std::size_t n) const;

  friend bool operator==(const Transposition&, const Transposition&) = default;
  friend auto operator<=>(const Transposition&, const Transposition&) = default;
};

/// Applies `t` to a concrete linear word without re-canonicalizing.
std::string apply_to_word(std::string_view word, const Transposition& t);

/// Applies `t` to `representative` (which must be a rotation of `s`), or to the
/// canonical form when no representative is given; returns the canonical result.
CircularBinaryString apply_transposition(const CircularBinaryString& s, const Transposition& t,
                                         std::optional<std::string_view> representative = {});

/// Classes reachable by exactly one transposition, excluding `s` itself,
/// sorted. Requires n >= 3.
std::vector<CircularBinaryString> neighbors(const CircularBinaryString& s);

/// (i, i + (k - j), k): restores the word that `t` was applied to.
Transposition inverse_of(const Transposition& t, std::size_t n);

/// The move that acts on reverse(w) exactly as `t` acts on w, i.e.
/// reverse(apply(w, t)) == apply(reverse(w), mirror_of(t, n)).
Transposition mirror_of(const Transposition& t, std::size_t n);

/// Converts three distinct cyclic cut positions (cut before 0-based index c)
/// into the equivalent linear move on the same word.
Transposition from_cuts(std::size_t c1, std::size_t c2, std::size_t c3, std::size_t n);

/// r such that rotate_word(from, r) == to; nullopt when `to` is not a rotation
/// of `from`.
std::optional<std::size_t> rotation_offset(std::string_view from, std::string_view to);

/// Words visited while replaying `moves` from `start`, including `start`.
std::vector<std::string> chain_words(std::string_view start, std::span<const Transposition> moves);

/// Moves that walk the chain produced by `moves` from `start` backwards,
/// starting at its final word.
std::vector<Transposition> reversed_moves(std::string_view start, std::span<const Transposition> moves);

/// Re-expresses a chain starting at `chain_start` so that it starts at
/// `new_start`, a rotation of `chain_start`. Each new word is a rotation of the
/// corresponding original word. Moves whose cut set degenerates to a rotation
/// are dropped.
std::vector<Transposition> retarget_moves(std::string_view chain_start,
                                          std::span<const Transposition> moves,
                                          std::string_view new_start);

struct TranspositionSequence {
  CircularBinaryString start;
  std::vector<Transposition> moves;
  CircularBinaryString claimed_end;

  std::size_t length() const noexcept { return moves.size(); }
};

struct ReplayReport {
  bool ok = false;
  /// 0-based index of the first move that is not a valid triple.
  std::optional<std::size_t> failed_move;
  std::string final_word;
  std::string message;
};

/// Replays moves from the canonical start word against the evolving concrete
/// representative and checks the end lands in the class of claimed_end.
ReplayReport replay(const TranspositionSequence& seq);

/// A one-move certificate between two partitions: either a 2-part move taking
/// `x` filler symbols from part alpha to part beta, or a 3-part move with cut
/// amounts x, y, z in parts alpha < beta < gamma. Part indices are 1-based in
/// the canonical weight sequences; target indices mark where the changed parts
/// land in the target.
struct MoveWitness {
  enum class Kind { two_parts, three_parts };

  Kind kind = Kind::two_parts;
  int alpha = 0, beta = 0, gamma = 0;
  int target_alpha = 0, target_beta = 0, target_gamma = 0;
  int x = 0, y = 0, z = 0;
  bool relative = false;

  friend bool operator==(const MoveWitness&, const MoveWitness&) = default;
};

}  // namespace circtrans

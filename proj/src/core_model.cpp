#include "circtrans/core_model.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace circtrans {

namespace {

void check_word(std::string_view word) {
  if (word.empty()) throw InvalidInputError("empty string");
  for (std::size_t p = 0; p < word.size(); ++p) {
    if (word[p] != '0' && word[p] != '1') {
      std::ostringstream msg;
      msg << "invalid character '" << word[p] << "' at position " << (p + 1)
          << " (expected '0' or '1')";
      throw InvalidInputError(msg.str());
    }
  }
}

}  // namespace

std::size_t least_rotation(std::string_view word) {
  return least_rotation(std::span<const char>(word.data(), word.size()));
}

std::string rotate_word(std::string_view word, std::size_t r) {
  if (word.empty()) return {};
  r %= word.size();
  std::string out;
  out.reserve(word.size());
  out.append(word.substr(r));
  out.append(word.substr(0, r));
  return out;
}

CircularBinaryString::CircularBinaryString(std::string_view word) {
  check_word(word);
  bits_ = rotate_word(word, least_rotation(word));
}

std::size_t CircularBinaryString::ones() const noexcept {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), '1'));
}

CircularBinaryString parse_string(std::string_view text) { return CircularBinaryString(text); }

CircularBinaryString canonicalize(std::string_view bits) { return CircularBinaryString(bits); }

std::string complement_word(std::string_view word) {
  std::string out(word);
  for (char& c : out) c = (c == '0') ? '1' : '0';
  return out;
}

CircularBinaryString complement(const CircularBinaryString& s) {
  return CircularBinaryString(complement_word(s.bits()));
}

bool compatible(const CircularBinaryString& a, const CircularBinaryString& b) noexcept {
  return a.size() == b.size() && a.ones() == b.ones();
}

void require_compatible(const CircularBinaryString& a, const CircularBinaryString& b) {
  if (!compatible(a, b)) {
    std::ostringstream msg;
    msg << "incompatible pair: " << a.bits() << " has " << a.ones() << " ones in length "
        << a.size() << ", " << b.bits() << " has " << b.ones() << " ones in length " << b.size();
    throw IncompatiblePairError(msg.str());
  }
}

char separator_for(std::string_view word) noexcept {
  const auto ones = std::count(word.begin(), word.end(), '1');
  const auto zeros = static_cast<std::ptrdiff_t>(word.size()) - ones;
  return ones > zeros ? '0' : '1';
}

CircularPartition::CircularPartition(std::vector<int> weights, bool complemented)
    : complemented_(complemented) {
  if (weights.empty()) throw InvalidInputError("partition needs at least one part");
  for (int w : weights) {
    if (w < 0) throw InvalidInputError("partition weights must be non-negative");
    total_ += w;
  }
  std::rotate(weights.begin(),
              weights.begin() +
                  static_cast<std::ptrdiff_t>(least_rotation(std::span<const int>(weights))),
              weights.end());
  weights_ = std::move(weights);
}

std::vector<int> labeled_weights(std::string_view word, char separator) {
  std::vector<std::size_t> seps;
  for (std::size_t p = 0; p < word.size(); ++p)
    if (word[p] == separator) seps.push_back(p);
  std::vector<int> runs;
  if (seps.empty()) return runs;
  runs.reserve(seps.size());
  const std::size_t n = word.size();
  runs.push_back(static_cast<int>(seps.front() + (n - 1 - seps.back())));
  for (std::size_t q = 1; q < seps.size(); ++q)
    runs.push_back(static_cast<int>(seps[q] - seps[q - 1] - 1));
  return runs;
}

CircularPartition to_partition(const CircularBinaryString& s) {
  const bool flip = separator_for(s.bits()) == '0';
  const std::string word = flip ? complement_word(s.bits()) : s.bits();
  auto weights = labeled_weights(word, '1');
  if (weights.empty())
    throw DegeneratePartitionError("string " + s.bits() +
                                   " has a single symbol; no separator to partition by");
  return CircularPartition(std::move(weights), flip);
}

CircularBinaryString from_partition(const CircularPartition& p) {
  std::string word;
  word.reserve(static_cast<std::size_t>(p.total() + p.parts()));
  for (int w : p.weights()) {
    word.append(static_cast<std::size_t>(w), '0');
    word.push_back('1');
  }
  if (p.complemented()) word = complement_word(word);
  return CircularBinaryString(word);
}

CircularPartition parse_partition(std::string_view text) {
  if (text.substr(0, 2) != "p:") throw InvalidInputError("partition text must start with \"p:\"");
  std::string_view body = text.substr(2);
  if (body.empty()) throw InvalidInputError("partition has no weights");
  std::vector<int> weights;
  while (true) {
    const auto comma = body.find(',');
    const std::string_view item = body.substr(0, comma);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size() || value < 0)
      throw InvalidInputError("bad partition weight \"" + std::string(item) + "\"");
    weights.push_back(value);
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
  }
  return CircularPartition(std::move(weights));
}

CircularBinaryString parse_input(std::string_view text) {
  if (text.substr(0, 2) == "p:") return from_partition(parse_partition(text));
  return parse_string(text);
}

std::string format_partition(const CircularPartition& p) {
  std::string out = "p:";
  for (std::size_t q = 0; q < p.weights().size(); ++q) {
    if (q) out.push_back(',');
    out += std::to_string(p.weights()[q]);
  }
  return out;
}

bool Transposition::valid_for(std::size_t n) const noexcept {
  return 1 <= i && i < j && j < k && static_cast<std::size_t>(k) <= n + 1;
}

void Transposition::validate(std::size_t n) const {
  if (!valid_for(n)) {
    std::ostringstream msg;
    msg << "transposition (" << i << "," << j << "," << k << ") out of range for length " << n
        << " (need 1 <= i < j < k <= " << (n + 1) << ")";
    throw InvalidInputError(msg.str());
  }
}

std::string apply_to_word(std::string_view word, const Transposition& t) {
  t.validate(word.size());
  const auto i = static_cast<std::size_t>(t.i - 1);
  const auto j = static_cast<std::size_t>(t.j - 1);
  const auto k = static_cast<std::size_t>(t.k - 1);
  std::string out;
  out.reserve(word.size());
  out.append(word.substr(0, i));
  out.append(word.substr(j, k - j));
  out.append(word.substr(i, j - i));
  out.append(word.substr(k));
  return out;
}

CircularBinaryString apply_transposition(const CircularBinaryString& s, const Transposition& t,
                                         std::optional<std::string_view> representative) {
  std::string_view word = s.bits();
  if (representative) {
    if (CircularBinaryString(*representative) != s)
      throw InvalidInputError("representative " + std::string(*representative) +
                              " is not a rotation of " + s.bits());
    word = *representative;
  }
  return CircularBinaryString(apply_to_word(word, t));
}

std::vector<CircularBinaryString> neighbors(const CircularBinaryString& s) {
  const std::size_t n = s.size();
  if (n < 3) throw InvalidInputError("neighbors needs length >= 3");
  const std::string& word = s.bits();
  std::vector<std::string> found;
  for (int i = 1; i <= static_cast<int>(n); ++i)
    for (int j = i + 1; j <= static_cast<int>(n); ++j)
      for (int k = j + 1; k <= static_cast<int>(n); ++k) {
        CircularBinaryString next(apply_to_word(word, {i, j, k}));
        if (next != s) found.push_back(next.bits());
      }
  std::sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end()), found.end());
  std::vector<CircularBinaryString> out;
  out.reserve(found.size());
  for (const auto& w : found) out.emplace_back(w);
  return out;
}

Transposition inverse_of(const Transposition& t, std::size_t n) {
  t.validate(n);
  return {t.i, t.i + (t.k - t.j), t.k};
}

Transposition mirror_of(const Transposition& t, std::size_t n) {
  t.validate(n);
  const int m = static_cast<int>(n) + 2;
  return {m - t.k, m - t.j, m - t.i};
}

Transposition from_cuts(std::size_t c1, std::size_t c2, std::size_t c3, std::size_t n) {
  std::size_t c[3] = {c1 % n, c2 % n, c3 % n};
  std::sort(c, c + 3);
  if (c[0] == c[1] || c[1] == c[2]) throw InvalidInputError("cut positions must be distinct");
  return {static_cast<int>(c[0] + 1), static_cast<int>(c[1] + 1), static_cast<int>(c[2] + 1)};
}

std::optional<std::size_t> rotation_offset(std::string_view from, std::string_view to) {
  if (from.size() != to.size()) return std::nullopt;
  const std::size_t n = from.size();
  if (n == 0) return 0;
  const std::size_t r = (least_rotation(from) + n - least_rotation(to)) % n;
  if (rotate_word(from, r) != to) return std::nullopt;
  return r;
}

std::vector<std::string> chain_words(std::string_view start, std::span<const Transposition> moves) {
  std::vector<std::string> words{std::string(start)};
  words.reserve(moves.size() + 1);
  for (const auto& t : moves) words.push_back(apply_to_word(words.back(), t));
  return words;
}

std::vector<Transposition> reversed_moves(std::string_view start,
                                          std::span<const Transposition> moves) {
  std::vector<Transposition> out;
  out.reserve(moves.size());
  for (auto it = moves.rbegin(); it != moves.rend(); ++it) out.push_back(inverse_of(*it, start.size()));
  return out;
}

std::vector<Transposition> retarget_moves(std::string_view chain_start,
                                          std::span<const Transposition> moves,
                                          std::string_view new_start) {
  const std::size_t n = chain_start.size();
  std::string x(chain_start), y(new_start);
  std::vector<Transposition> out;
  for (const auto& t : moves) {
    const auto r = rotation_offset(x, y);
    if (!r) throw ConstructionError("retarget: " + y + " is not a rotation of " + x);
    const std::size_t cuts[3] = {static_cast<std::size_t>(t.i - 1), static_cast<std::size_t>(t.j - 1),
                                 static_cast<std::size_t>(t.k - 1) % n};
    x = apply_to_word(x, t);
    if (cuts[0] == cuts[2]) continue;  // whole-word rotation
    const Transposition moved =
        from_cuts((cuts[0] + n - *r) % n, (cuts[1] + n - *r) % n, (cuts[2] + n - *r) % n, n);
    y = apply_to_word(y, moved);
    out.push_back(moved);
  }
  return out;
}

ReplayReport replay(const TranspositionSequence& seq) {
  ReplayReport report;
  std::string word = seq.start.bits();
  for (std::size_t idx = 0; idx < seq.moves.size(); ++idx) {
    const auto& t = seq.moves[idx];
    if (!t.valid_for(word.size())) {
      report.failed_move = idx;
      report.final_word = word;
      std::ostringstream msg;
      msg << "move " << (idx + 1) << " (" << t.i << " " << t.j << " " << t.k
          << ") is not a valid triple for length " << word.size();
      report.message = msg.str();
      return report;
    }
    word = apply_to_word(word, t);
  }
  report.final_word = word;
  const CircularBinaryString reached(word);
  report.ok = reached == seq.claimed_end;
  if (!report.ok)
    report.message = "reached " + reached.bits() + ", expected " + seq.claimed_end.bits();
  return report;
}

}  // namespace circtrans

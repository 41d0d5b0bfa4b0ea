#include <doctest.h>

#include "circtrans/core_model.hpp"
#include "support.hpp"

using namespace circtrans;

TEST_CASE("parse_string canonicalizes and rejects bad input") {
  CHECK(parse_string("010010001").bits() == "000101001");
  CHECK(parse_string("0110").bits() == "0011");
  CHECK(parse_string("1100") == parse_string("0011"));
  CHECK_THROWS_AS(parse_string(""), InvalidInputError);
  try {
    parse_string("01x1");
    FAIL("expected an error");
  } catch (const InvalidInputError& e) {
    CHECK(std::string(e.what()).find("position 3") != std::string::npos);
  }
}

TEST_CASE("canonicalize picks the least rotation") {
  CHECK(canonicalize("1010").bits() == "0101");
  CHECK(canonicalize("0001").bits() == "0001");
  CHECK(canonicalize("111").bits() == "111");
  CHECK(canonicalize(canonicalize("100101").bits()) == canonicalize("100101"));
}

TEST_CASE("to_partition reads runs before each separator") {
  const auto p = to_partition(parse_string("010010001"));
  CHECK(p.weights() == std::vector<int>{1, 2, 3});
  CHECK_FALSE(p.complemented());
  CHECK(to_partition(parse_string("0011")).weights() == std::vector<int>{0, 2});

  const auto flipped = to_partition(parse_string("110111"));
  CHECK(flipped.complemented());
  CHECK(flipped.weights() == std::vector<int>{5});
  CHECK(from_partition(flipped) == parse_string("110111"));

  // equal counts keep '1' as the separator
  CHECK_FALSE(to_partition(parse_string("000111")).complemented());

  CHECK_THROWS_AS(to_partition(parse_string("0000")), DegeneratePartitionError);
  CHECK_THROWS_AS(to_partition(parse_string("11")), DegeneratePartitionError);
}

TEST_CASE("from_partition expands weights") {
  CHECK(from_partition(CircularPartition({1, 2, 3})) == parse_string("010010001"));
  CHECK(from_partition(CircularPartition({0})).bits() == "1");
  CHECK(from_partition(CircularPartition({4, 0, 0})).bits() == "0000111");
  CHECK_THROWS_AS(CircularPartition({}), InvalidInputError);
  CHECK_THROWS_AS(CircularPartition({1, -1}), InvalidInputError);
}

TEST_CASE("partition text format") {
  CHECK(parse_partition("p:3,1,2").weights() == std::vector<int>{1, 2, 3});
  CHECK(parse_input("p:3,1,2") == parse_string("000101001"));
  CHECK(format_partition(parse_partition("p:2,0,5")) == "p:0,5,2");
  for (const char* bad : {"p:", "p:1,,2", "p:1,a", "q:1,2", "p:-1,2", "p:1,2,"})
    CHECK_THROWS_AS(parse_partition(bad), InvalidInputError);
}

TEST_CASE("apply_transposition swaps adjacent blocks") {
  const auto s = parse_string("0011");
  CHECK(apply_transposition(s, {2, 3, 4}).bits() == "0101");
  CHECK(apply_transposition(s, {1, 2, 3}) == s);
  CHECK(apply_transposition(parse_string("000111"), {3, 4, 5}).bits() == "001011");
  CHECK(apply_transposition(s, {1, 2, 5}, std::string_view("1001")).bits() == "0011");
  CHECK_THROWS_AS(apply_transposition(s, {1, 2, 6}), InvalidInputError);
  CHECK_THROWS_AS(apply_transposition(s, {2, 2, 3}), InvalidInputError);
  CHECK_THROWS_AS(apply_transposition(s, {1, 2, 3}, std::string_view("0101")), InvalidInputError);
}

TEST_CASE("neighbors enumerates one-move classes") {
  const auto n1 = neighbors(parse_string("0011"));
  REQUIRE(n1.size() == 1);
  CHECK(n1[0].bits() == "0101");
  CHECK(neighbors(parse_string("0001")).empty());
  CHECK_THROWS_AS(neighbors(parse_string("01")), InvalidInputError);
}

TEST_CASE("inverse_of and mirror_of") {
  CHECK(inverse_of({2, 3, 4}, 4) == Transposition{2, 3, 4});
  CHECK(inverse_of({1, 2, 4}, 4) == Transposition{1, 3, 4});
  CHECK_THROWS_AS(inverse_of({1, 2, 6}, 4), InvalidInputError);

  oracle::Gen gen(11);
  for (int trial = 0; trial < 2000; ++trial) {
    const int n = gen.uniform(2, 12);
    const std::string w = gen.word(n);
    const int i = gen.uniform(1, n - 1);
    const int j = gen.uniform(i + 1, n);
    const int k = gen.uniform(j + 1, n + 1);
    const Transposition t{i, j, k};
    CHECK(apply_to_word(apply_to_word(w, t), inverse_of(t, w.size())) == w);
    std::string rw(w.rbegin(), w.rend());
    std::string lhs = apply_to_word(w, t);
    std::reverse(lhs.begin(), lhs.end());
    CHECK(lhs == apply_to_word(rw, mirror_of(t, w.size())));
  }
}

TEST_CASE("retarget_moves follows a rotated start") {
  oracle::Gen gen(12);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = gen.uniform(3, 12);
    const std::string w = gen.word(n);
    std::vector<Transposition> moves;
    for (int m = gen.uniform(0, 4); m > 0; --m) {
      const int i = gen.uniform(1, n - 1), j = gen.uniform(i + 1, n);
      moves.push_back({i, j, gen.uniform(j + 1, n + 1)});
    }
    const std::string y = oracle::rotate(w, static_cast<std::size_t>(gen.uniform(0, n - 1)));
    const auto moved = retarget_moves(w, moves, y);
    CHECK(CircularBinaryString(chain_words(y, moved).back()) ==
          CircularBinaryString(chain_words(w, moves).back()));
    const auto back = reversed_moves(w, moves);
    CHECK(chain_words(chain_words(w, moves).back(), back).back() == w);
  }
}

TEST_CASE("replay reports the failing move") {
  const auto s = parse_string("0011"), t = parse_string("0101");
  CHECK(replay({s, {{2, 3, 4}}, t}).ok);
  CHECK(replay({s, {}, s}).ok);
  const auto bad = replay({s, {{2, 3, 4}, {3, 2, 4}}, t});
  CHECK_FALSE(bad.ok);
  REQUIRE(bad.failed_move.has_value());
  CHECK(*bad.failed_move == 1);
  const auto wrong_end = replay({s, {}, t});
  CHECK_FALSE(wrong_end.ok);
  CHECK_FALSE(wrong_end.failed_move.has_value());
}

TEST_CASE("property: canonical form is rotation invariant and matches the naive minimum") {
  oracle::Gen gen(1);
  for (int trial = 0; trial < 3000; ++trial) {
    const std::string w = gen.word(gen.uniform(1, 16));
    const auto c = canonicalize(w);
    CHECK(c.bits() == oracle::naive_canonical(w));
    CHECK(canonicalize(oracle::rotate(w, static_cast<std::size_t>(gen.uniform(0, 15)))) == c);
    CHECK(c.ones() == static_cast<std::size_t>(std::count(w.begin(), w.end(), '1')));
  }
}

TEST_CASE("property: partition round trip and run lengths") {
  oracle::Gen gen(2);
  for (int trial = 0; trial < 3000; ++trial) {
    const int n = gen.uniform(2, 16);
    const std::string w = gen.word(n, gen.uniform(1, n - 1));
    const auto s = canonicalize(w);
    const auto p = to_partition(s);
    CHECK(from_partition(p) == s);
    CHECK(p.total() + p.parts() == n);
    const bool flip = 2 * std::count(w.begin(), w.end(), '1') > n;
    CHECK(p.complemented() == flip);
    CHECK(oracle::cyclic_equal(p.weights(), oracle::naive_runs(flip ? oracle::naive_complement(w) : w)));
  }
}

TEST_CASE("property: transpositions preserve length and multiset") {
  oracle::Gen gen(3);
  for (int trial = 0; trial < 3000; ++trial) {
    const int n = gen.uniform(2, 14);
    const std::string w = gen.word(n);
    const int i = gen.uniform(1, n - 1), j = gen.uniform(i + 1, n);
    const std::string out = apply_to_word(w, {i, j, gen.uniform(j + 1, n + 1)});
    CHECK(out.size() == w.size());
    CHECK(std::count(out.begin(), out.end(), '1') == std::count(w.begin(), w.end(), '1'));
  }
}

TEST_CASE("property: complement commutes with neighbors") {
  for (int n = 3; n <= 9; ++n)
    for (int ones = 0; ones <= n; ++ones)
      for (const auto& w : oracle::naive_classes(n, ones)) {
        std::vector<std::string> lhs, rhs;
        for (const auto& v : neighbors(complement(CircularBinaryString(w)))) lhs.push_back(v.bits());
        for (const auto& v : neighbors(CircularBinaryString(w))) rhs.push_back(complement(v).bits());
        std::sort(rhs.begin(), rhs.end());
        CHECK(lhs == rhs);
      }
}

TEST_CASE("property: cut triples within 1..n reach every one-move class") {
  for (int n = 3; n <= 10; ++n)
    for (int ones = 0; ones <= n; ++ones)
      for (const auto& w : oracle::naive_classes(n, ones)) {
        const auto wide = oracle::naive_neighbors(w, static_cast<std::size_t>(n) + 1);
        const auto narrow = oracle::naive_neighbors(w, static_cast<std::size_t>(n));
        CHECK(wide == narrow);
        std::set<std::string> lib;
        for (const auto& v : neighbors(CircularBinaryString(w))) lib.insert(v.bits());
        CHECK(lib == wide);
      }
}

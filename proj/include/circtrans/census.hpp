#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace circtrans {

/// Exhaustive check of every ordered class pair in one (n, ones) bucket.
struct CensusRecord {
  int n = 0;
  int ones = 0;
  int classes = 0;
  long long pairs = 0;  // ordered, including each class with itself
  int diameter = 0;     // largest exact distance seen
  long long diameter_pairs = 0;
  long long lower_bound_violations = 0;
  long long diameter_violations = 0;
  long long dominance_violations = 0;
  long long greedy_violations = 0;

  bool clean() const noexcept {
    return lower_bound_violations == 0 && diameter_violations == 0 && dominance_violations == 0 &&
           greedy_violations == 0;
  }
  friend bool operator==(const CensusRecord&, const CensusRecord&) = default;
};

CensusRecord census_bucket(int n, int ones);

/// Records for n = 1..n_max and ones = 0..n, ordered by (n, ones). With
/// `parallel`, buckets are spread over `threads` workers (0 = hardware count).
std::vector<CensusRecord> run_census(int n_max, bool parallel, unsigned threads = 0);

std::string census_csv_header();
std::string to_csv(const CensusRecord& r);
std::string to_json_line(const CensusRecord& r);

/// `count` canonical classes drawn without replacement from the bucket, then
/// with replacement once the bucket is exhausted. Same seed, same output on
/// every platform.
std::vector<std::string> generate_classes(int n, int ones, int count, std::uint64_t seed);

}  // namespace circtrans

#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "kpvc/corpus_io.hpp"
#include "kpvc/tagset.hpp"

namespace kpvc {

/// Distributional profile of one stem across adposition | stem 하 ending sequences.
struct StemStats {
  std::string stem;
  std::uint64_t total = 0;
  std::uint64_t standalone = 0;  // bare noun occurrences not followed by 하
  std::map<std::string, std::uint64_t> adpositions;
  std::map<std::string, std::uint64_t> suffixes;
  std::map<std::pair<std::string, std::string>, std::uint64_t> triples;  // (adposition, suffix)

  std::size_t distinct_adpositions() const { return adpositions.size(); }
  std::size_t distinct_suffixes() const { return suffixes.size(); }
  std::size_t distinct_triples() const { return triples.size(); }

  /// Commutative, associative accumulation of another partial count for the same stem.
  void merge(const StemStats& other);

  friend bool operator==(const StemStats&, const StemStats&) = default;
};

using StemStatsMap = std::map<std::string, StemStats>;

/// Partial counts over a slice of a corpus. Partials merge in any order to the
/// same result.
class StemCounter {
 public:
  explicit StemCounter(Tagset tagset = {});

  void add(const TaggedSentence& sentence);
  void merge(const StemCounter& other);

  /// Stats for every stem seen at least once in the pattern.
  StemStatsMap finish() const;

 private:
  Tagset tagset_;
  StemStatsMap pattern_;
  std::map<std::string, std::uint64_t> bare_nouns_;
};

/// `jobs` > 1 counts contiguous slices on separate threads and merges them.
StemStatsMap mine(std::span<const TaggedSentence> corpus, const Tagset& tagset = {},
                  unsigned jobs = 1);

/// total / (total + standalone). Throws UndefinedScore when both are zero.
double boundness(const StemStats& stats);

struct CandidateRow {
  StemStats stats;
  double boundness = 0.0;
};

struct CandidateReport {
  std::vector<CandidateRow> rows;  // total descending, then stem code-point order
  std::size_t k = 300;
};

/// Throws std::invalid_argument when k is zero.
CandidateReport rank(const StemStatsMap& stats, std::size_t k = 300);

inline constexpr const char* kReportHeader =
    "stem\ttotal\tdistinct_adps\tdistinct_suffixes\tdistinct_triples\tstandalone\tboundness";

void report_tsv(const CandidateReport& report, std::ostream& out);

}  // namespace kpvc

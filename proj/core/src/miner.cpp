#include "kpvc/miner.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "kpvc/error.hpp"
#include "kpvc/matcher.hpp"

namespace kpvc {

namespace {

template <typename Map>
void add_counts(Map& into, const Map& from) {
  for (const auto& [key, n] : from) into[key] += n;
}

}  // namespace

void StemStats::merge(const StemStats& other) {
  if (stem.empty()) stem = other.stem;
  total += other.total;
  standalone += other.standalone;
  add_counts(adpositions, other.adpositions);
  add_counts(suffixes, other.suffixes);
  add_counts(triples, other.triples);
}

StemCounter::StemCounter(Tagset tagset) : tagset_(std::move(tagset)) {}

void StemCounter::add(const TaggedSentence& sentence) {
  for (const Candidate& c : find_candidates(sentence, tagset_)) {
    const std::string& stem = sentence.tokens[c.stem].surface;
    const std::string& adp = sentence.tokens[c.adposition].surface;
    StemStats& st = pattern_[stem];
    st.stem = stem;
    ++st.total;
    ++st.adpositions[adp];
    ++st.suffixes[c.suffix];
    ++st.triples[{adp, c.suffix}];
  }

  const auto& toks = sentence.tokens;
  for (std::size_t i = 0; i < toks.size(); ++i) {
    if (!tagset_.is_noun(toks[i].tag)) continue;
    const bool verbalized = i + 1 < toks.size() && toks[i + 1].surface == tagset_.verbalizer_surface &&
                            tagset_.is_verbalizer(toks[i + 1].tag);
    if (!verbalized) ++bare_nouns_[toks[i].surface];
  }
}

void StemCounter::merge(const StemCounter& other) {
  for (const auto& [stem, st] : other.pattern_) pattern_[stem].merge(st);
  add_counts(bare_nouns_, other.bare_nouns_);
}

StemStatsMap StemCounter::finish() const {
  StemStatsMap out = pattern_;
  for (auto& [stem, st] : out) {
    const auto it = bare_nouns_.find(stem);
    st.standalone = it == bare_nouns_.end() ? 0 : it->second;
  }
  return out;
}

StemStatsMap mine(std::span<const TaggedSentence> corpus, const Tagset& tagset, unsigned jobs) {
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(corpus.size(), 1))));
  std::vector<StemCounter> partials(jobs, StemCounter(tagset));
  if (jobs == 1) {
    for (const auto& s : corpus) partials[0].add(s);
  } else {
    std::vector<std::jthread> workers;
    const std::size_t chunk = (corpus.size() + jobs - 1) / jobs;
    for (unsigned w = 0; w < jobs; ++w) {
      const std::size_t begin = std::min(corpus.size(), w * chunk);
      const std::size_t end = std::min(corpus.size(), begin + chunk);
      workers.emplace_back([&partials, corpus, w, begin, end] {
        for (std::size_t i = begin; i < end; ++i) partials[w].add(corpus[i]);
      });
    }
  }
  for (unsigned w = 1; w < jobs; ++w) partials[0].merge(partials[w]);
  return partials[0].finish();
}

double boundness(const StemStats& stats) {
  const std::uint64_t denom = stats.total + stats.standalone;
  if (denom == 0) throw UndefinedScore("boundness undefined for stem '" + stats.stem + "' with no occurrences");
  return static_cast<double>(stats.total) / static_cast<double>(denom);
}

CandidateReport rank(const StemStatsMap& stats, std::size_t k) {
  if (k == 0) throw std::invalid_argument("rank: k must be positive");
  std::vector<const StemStats*> order;
  order.reserve(stats.size());
  for (const auto& [stem, st] : stats) order.push_back(&st);
  std::stable_sort(order.begin(), order.end(), [](const StemStats* a, const StemStats* b) {
    if (a->total != b->total) return a->total > b->total;
    return a->stem < b->stem;
  });
  CandidateReport report;
  report.k = k;
  for (std::size_t i = 0; i < order.size() && i < k; ++i) {
    report.rows.push_back({*order[i], boundness(*order[i])});
  }
  return report;
}

void report_tsv(const CandidateReport& report, std::ostream& out) {
  out << kReportHeader << '\n';
  char score[32];
  for (const auto& row : report.rows) {
    std::snprintf(score, sizeof score, "%.4f", row.boundness);
    const StemStats& s = row.stats;
    out << s.stem << '\t' << s.total << '\t' << s.distinct_adpositions() << '\t'
        << s.distinct_suffixes() << '\t' << s.distinct_triples() << '\t' << s.standalone << '\t'
        << score << '\n';
  }
}

}  // namespace kpvc

#include <benchmark/benchmark.h>

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "kpvc/annotator.hpp"
#include "kpvc/classifier.hpp"
#include "kpvc/corpus_io.hpp"
#include "kpvc/hangul.hpp"
#include "kpvc/lexicon.hpp"
#include "kpvc/matcher.hpp"
#include "kpvc/miner.hpp"

namespace {

const std::vector<kpvc::TaggedSentence>& corpus() {
  static const std::vector<kpvc::TaggedSentence> sentences = [] {
    std::ifstream f(std::string(KPVC_BENCH_DATA) + "/synthetic.tsv", std::ios::binary);
    return kpvc::read_tagged(f);
  }();
  return sentences;
}

// The synthetic corpus flattened back to plain text.
const std::vector<kpvc::RawSentence>& raw_corpus() {
  static const std::vector<kpvc::RawSentence> sentences = [] {
    std::ostringstream text;
    for (const auto& s : corpus()) {
      for (std::size_t i = 0; i < s.eojeols.size(); ++i) text << (i ? " " : "") << s.eojeols[i];
      text << '\n';
    }
    std::istringstream in(text.str());
    return kpvc::read_plain(in);
  }();
  return sentences;
}

void BM_Allomorph(benchmark::State& state) {
  const std::vector<std::string> hosts{"게", "하늘", "책", "친구", "서울", "A1"};
  for (auto _ : state) {
    for (const auto& h : hosts) {
      benchmark::DoNotOptimize(kpvc::hangul::allomorph("를", h));
      benchmark::DoNotOptimize(kpvc::hangul::allomorph("로", h));
    }
  }
}
BENCHMARK(BM_Allomorph);

void BM_ReadTagged(benchmark::State& state) {
  std::ifstream f(std::string(KPVC_BENCH_DATA) + "/synthetic.tsv", std::ios::binary);
  std::ostringstream buf;
  buf << f.rdbuf();
  const std::string text = buf.str();
  for (auto _ : state) {
    std::istringstream in(text);
    benchmark::DoNotOptimize(kpvc::read_tagged(in));
  }
  state.SetBytesProcessed(static_cast<int64_t>(state.iterations() * text.size()));
}
BENCHMARK(BM_ReadTagged);

void BM_MatchRaw(benchmark::State& state) {
  const kpvc::FormIndex index(kpvc::builtin());
  for (auto _ : state) {
    for (const auto& s : raw_corpus()) benchmark::DoNotOptimize(kpvc::match_raw(s, index));
  }
  state.SetItemsProcessed(static_cast<int64_t>(state.iterations() * raw_corpus().size()));
}
BENCHMARK(BM_MatchRaw);

void BM_MatchTagged(benchmark::State& state) {
  const kpvc::FormIndex index(kpvc::builtin());
  for (auto _ : state) {
    for (const auto& s : corpus()) benchmark::DoNotOptimize(kpvc::match_tagged(s, index));
  }
  state.SetItemsProcessed(static_cast<int64_t>(state.iterations() * corpus().size()));
}
BENCHMARK(BM_MatchTagged);

void BM_Mine(benchmark::State& state) {
  const auto jobs = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kpvc::mine(corpus(), {}, jobs));
  state.SetItemsProcessed(static_cast<int64_t>(state.iterations() * corpus().size()));
}
BENCHMARK(BM_Mine)->Arg(1)->Arg(4);

void BM_ClassifyAll(benchmark::State& state) {
  const kpvc::FormIndex index(kpvc::builtin());
  const auto jobs = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kpvc::classify_all(corpus(), index, {}, {}, jobs));
  state.SetItemsProcessed(static_cast<int64_t>(state.iterations() * corpus().size()));
}
BENCHMARK(BM_ClassifyAll)->Arg(1)->Arg(4);

void BM_AnnotateWrite(benchmark::State& state) {
  const kpvc::FormIndex index(kpvc::builtin());
  const auto results = kpvc::classify_all(corpus(), index);
  for (auto _ : state) {
    std::vector<kpvc::CuptSentence> cupt;
    cupt.reserve(corpus().size());
    for (std::size_t i = 0; i < corpus().size(); ++i) cupt.push_back(kpvc::annotate(corpus()[i], results[i]));
    std::ostringstream out;
    kpvc::write_cupt(cupt, out);
    benchmark::DoNotOptimize(out.str());
  }
}
BENCHMARK(BM_AnnotateWrite);

}  // namespace
BENCHMARK_MAIN();

#include <algorithm>
#include <random>
#include <sstream>

#include "doctest.h"
#include "kpvc/error.hpp"
#include "kpvc/hangul.hpp"
#include "kpvc/matcher.hpp"
#include "kpvc/miner.hpp"
#include "support/oracles.hpp"

using namespace kpvc;

namespace {

std::vector<TaggedSentence> parse(const std::string& text) {
  std::istringstream in(text);
  return read_tagged(in);
}

StemStats stats(const std::string& stem, std::uint64_t total, std::uint64_t standalone) {
  StemStats s;
  s.stem = stem;
  s.total = total;
  s.standalone = standalone;
  return s;
}

const std::string kEx1 = "게\tNNG\t0\n에\tJKB\t0\n관\tXR\t1\n하\tXSV\t1\nㄴ\tETM\t1\n책\tNNG\t2\n";
const std::string kStroll = "공원\tNNG\t0\n을\tJKO\t0\n산책\tNNG\t1\n하\tXSV\t1\nㄴ\tETM\t1\n사람\tNNG\t2\n\n"
                            "산책\tNNG\t0\n이\tJKS\t0\n좋\tVA\t1\n다\tEF\t1\n";

}  // namespace

TEST_CASE("mine counts one occurrence") {
  const auto corpus = parse(kEx1);
  const auto m = mine(corpus);
  REQUIRE(m.size() == 1);
  const auto& kwan = m.at("관");
  CHECK(kwan.total == 1);
  CHECK(kwan.distinct_adpositions() == 1);
  CHECK(kwan.distinct_suffixes() == 1);
  CHECK(kwan.distinct_triples() == 1);
  CHECK(kwan.standalone == 0);
  CHECK(kwan.triples.at({"에", "한"}) == 1);
  CHECK(boundness(kwan) == 1.0);
}

TEST_CASE("mine on an empty corpus") {
  CHECK(mine({}).empty());
  CHECK(mine({}, Tagset{}, 8).empty());
  CHECK(rank(mine({})).rows.empty());
}

TEST_CASE("standalone counts bare nouns only") {
  const auto m = mine(parse(kStroll));
  // 공원 and 사람 are bare nouns but never enter the pattern, so they get no row
  REQUIRE(m.size() == 1);
  const auto& s = m.at("산책");
  CHECK(s.total == 1);
  CHECK(s.standalone == 1);
  CHECK(boundness(s) == doctest::Approx(0.5));
}

TEST_CASE("boundness") {
  CHECK(boundness(stats("관", 10, 0)) == 1.0);
  CHECK(boundness(stats("산책", 1, 3)) == doctest::Approx(0.25));
  CHECK(boundness(stats("x", 0, 4)) == 0.0);
  CHECK_THROWS_AS(boundness(stats("x", 0, 0)), UndefinedScore);
}

TEST_CASE("rank") {
  StemStatsMap m;
  for (const auto& s : {stats("향", 5, 0), stats("관", 5, 1), stats("대", 9, 0), stats("산책", 2, 2)}) m[s.stem] = s;

  const auto top = rank(m, 1);
  REQUIRE(top.rows.size() == 1);
  CHECK(top.rows[0].stats.stem == "대");
  CHECK(top.k == 1);

  const auto all = rank(m, 100);
  REQUIRE(all.rows.size() == 4);
  // equal totals fall back to code-point order: 관 U+AD00 before 향 U+D5A5
  CHECK(all.rows[1].stats.stem == "관");
  CHECK(all.rows[2].stats.stem == "향");
  CHECK(all.rows[3].stats.stem == "산책");
  CHECK(all.rows[1].boundness == doctest::Approx(5.0 / 6.0));

  CHECK(rank(m).k == 300);
  CHECK_THROWS_AS(rank(m, 0), std::invalid_argument);
}

TEST_CASE("report_tsv") {
  std::ostringstream empty;
  report_tsv(CandidateReport{}, empty);
  CHECK(empty.str() == std::string(kReportHeader) + "\n");

  std::ostringstream one;
  report_tsv(rank(mine(parse(kStroll))), one);
  CHECK(one.str() == std::string(kReportHeader) + "\n산책\t1\t1\t1\t1\t1\t0.5000\n");
}

TEST_CASE("mine agrees with an independent window scan") {
  for (const char* name : {"fixtures.tsv", "synthetic.tsv"}) {
    const auto corpus = oracle::load_tagged(name);
    CAPTURE(name);
    CHECK(mine(corpus) == oracle::window_scan(corpus));
  }
}

TEST_CASE("mine invariants on the synthetic corpus") {
  const auto corpus = oracle::load_tagged("synthetic.tsv");
  const auto m = mine(corpus);
  REQUIRE_FALSE(m.empty());
  for (const auto& [stem, s] : m) {
    CAPTURE(stem);
    CHECK(s.stem == stem);
    CHECK(s.total > 0);
    CHECK(s.distinct_adpositions() <= s.total);
    CHECK(s.distinct_suffixes() <= s.total);
    CHECK(s.distinct_triples() <= s.total);
    CHECK(s.distinct_triples() <= s.distinct_adpositions() * s.distinct_suffixes());
    std::uint64_t sum = 0;
    for (const auto& [key, n] : s.triples) sum += n;
    CHECK(sum == s.total);
    const double b = boundness(s);
    CHECK(b > 0.0);
    CHECK(b <= 1.0);
  }
}

TEST_CASE("mine and match_tagged count lexicon stems alike") {
  const FormIndex index(builtin());
  for (const char* name : {"fixtures.tsv", "synthetic.tsv"}) {
    const auto corpus = oracle::load_tagged(name);
    const auto m = mine(corpus);
    std::map<std::string, std::uint64_t> matched;
    for (const auto& s : corpus) {
      for (const auto& mt : match_tagged(s, index)) ++matched[mt.stem];
    }
    for (const auto& entry : builtin().entries) {
      std::uint64_t licensed = 0;
      if (const auto it = m.find(entry.stem_hangul); it != m.end()) {
        for (const auto& [key, n] : it->second.triples) {
          const auto lemma = hangul::lemma_of(key.first);
          if (lemma && entry.licenses_postposition(*lemma)) licensed += n;
        }
      }
      CAPTURE(name);
      CAPTURE(entry.stem_hangul);
      CHECK(licensed == matched[entry.stem_hangul]);
    }
  }
}

TEST_CASE("mine is independent of thread count and sentence order") {
  auto corpus = oracle::load_tagged("synthetic.tsv");
  const auto serial = mine(corpus);
  for (unsigned jobs : {2u, 3u, 7u, 64u, 5000u}) {
    CAPTURE(jobs);
    CHECK(mine(corpus, Tagset{}, jobs) == serial);
  }
  std::mt19937 rng(11);
  std::shuffle(corpus.begin(), corpus.end(), rng);
  CHECK(mine(corpus, Tagset{}, 4) == serial);
}

TEST_CASE("StemCounter partials merge in any order") {
  const auto corpus = oracle::load_tagged("fixtures.tsv");
  StemCounter a, b, c, whole;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    (i % 3 == 0 ? a : i % 3 == 1 ? b : c).add(corpus[i]);
    whole.add(corpus[i]);
  }
  StemCounter left = a;
  left.merge(b);
  left.merge(c);
  StemCounter right = c;
  right.merge(a);
  right.merge(b);
  CHECK(left.finish() == whole.finish());
  CHECK(right.finish() == whole.finish());
}

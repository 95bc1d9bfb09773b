// Independent reference implementations and fixture loaders shared by the unit
// and acceptance tests. Nothing here calls the code it is used to check, except
// where a helper only assembles inputs (open_match).
#pragma once

#include <array>
#include <cstdint>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "kpvc/classifier.hpp"
#include "kpvc/corpus_io.hpp"
#include "kpvc/hangul.hpp"
#include "kpvc/matcher.hpp"
#include "kpvc/miner.hpp"

#ifndef KPVC_TEST_DATA
#error "KPVC_TEST_DATA must point at tests/data"
#endif

namespace oracle {

inline std::string data_path(const std::string& name) { return std::string(KPVC_TEST_DATA) + "/" + name; }

inline std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("missing test data: " + path);
  std::ostringstream buf;
  buf << f.rdbuf();
  return buf.str();
}

inline std::vector<kpvc::TaggedSentence> load_tagged(const std::string& name) {
  std::istringstream in(slurp(data_path(name)));
  return kpvc::read_tagged(in);
}

inline std::vector<std::vector<std::string>> load_table(const std::string& name) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(slurp(data_path(name)));
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> cols;
    std::size_t start = 0;
    for (std::size_t tab; (tab = line.find('\t', start)) != std::string::npos; start = tab + 1) {
      cols.push_back(line.substr(start, tab - start));
    }
    cols.push_back(line.substr(start));
    rows.push_back(std::move(cols));
  }
  return rows;
}

// ---------------------------------------------------------------------------
// Hangul

/// Final-consonant table spelled out by hand: index, jamo, and the surfaces of
/// 를 and 로 after a syllable ending in it. Index 8 is ㄹ.
struct FinalRow {
  int index;
  const char* jamo;
  const char* lul;
  const char* lo;
};

inline const std::array<FinalRow, 28>& finals_table() {
  static const std::array<FinalRow, 28> rows{{
      {0, "", "를", "로"},       {1, "ㄱ", "을", "으로"},  {2, "ㄲ", "을", "으로"},  {3, "ㄳ", "을", "으로"},
      {4, "ㄴ", "을", "으로"},   {5, "ㄵ", "을", "으로"},  {6, "ㄶ", "을", "으로"},  {7, "ㄷ", "을", "으로"},
      {8, "ㄹ", "을", "로"},     {9, "ㄺ", "을", "으로"},  {10, "ㄻ", "을", "으로"}, {11, "ㄼ", "을", "으로"},
      {12, "ㄽ", "을", "으로"},  {13, "ㄾ", "을", "으로"}, {14, "ㄿ", "을", "으로"}, {15, "ㅀ", "을", "으로"},
      {16, "ㅁ", "을", "으로"},  {17, "ㅂ", "을", "으로"}, {18, "ㅄ", "을", "으로"}, {19, "ㅅ", "을", "으로"},
      {20, "ㅆ", "을", "으로"},  {21, "ㅇ", "을", "으로"}, {22, "ㅈ", "을", "으로"}, {23, "ㅊ", "을", "으로"},
      {24, "ㅋ", "을", "으로"},  {25, "ㅌ", "을", "으로"}, {26, "ㅍ", "을", "으로"}, {27, "ㅎ", "을", "으로"},
  }};
  return rows;
}

inline std::string utf8_of(char32_t cp) {
  std::string out;
  if (cp < 0x80) {
    out += static_cast<char>(cp);
  } else if (cp < 0x800) {
    out += static_cast<char>(0xC0 | (cp >> 6));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else if (cp < 0x10000) {
    out += static_cast<char>(0xE0 | (cp >> 12));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else {
    out += static_cast<char>(0xF0 | (cp >> 18));
    out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  }
  return out;
}

/// 가 (ㄱ + ㅏ) carrying final `index`.
inline std::string ga_with_final(int index) { return utf8_of(0xAC00 + static_cast<char32_t>(index)); }

// ---------------------------------------------------------------------------
// Surface expansion

/// Counts forms by multiplying, per entry, the number of written postpositions by
/// the number of suffix forms. 를 and 로 have two spellings; the 에 family one.
inline std::size_t form_count(const kpvc::Lexicon& lex) {
  std::size_t n = 0;
  for (const auto& e : lex.entries) {
    std::set<std::string> lemmas(e.postpositions.begin(), e.postpositions.end());
    for (const auto& x : e.extra_postpositions) lemmas.insert(x.lemma);
    std::size_t spellings = 0;
    for (const auto& l : lemmas) spellings += (l == "를" || l == "로") ? 2 : 1;
    n += spellings * e.suffix_forms.size();
  }
  return n;
}

// ---------------------------------------------------------------------------
// Miner: naive window scan over eojeols

inline bool has_prefix(const std::string& tag, const char* p) { return tag.rfind(p, 0) == 0; }

inline std::string glue(const std::vector<std::string>& parts) {
  // Folds ㄴ ㄹ ㅁ ㅂ into an open preceding syllable.
  static const std::map<std::string, int> finals{{"ㄴ", 4}, {"ㄹ", 8}, {"ㅁ", 16}, {"ㅂ", 17}};
  std::u32string out;
  for (const auto& p : parts) {
    std::u32string cps;
    for (std::size_t i = 0; i < p.size();) {
      const unsigned char c = static_cast<unsigned char>(p[i]);
      char32_t cp;
      int len;
      if (c < 0x80) { cp = c; len = 1; }
      else if (c < 0xE0) { cp = c & 0x1F; len = 2; }
      else if (c < 0xF0) { cp = c & 0x0F; len = 3; }
      else { cp = c & 0x07; len = 4; }
      for (int k = 1; k < len; ++k) cp = (cp << 6) | (static_cast<unsigned char>(p[i + k]) & 0x3F);
      cps += cp;
      i += static_cast<std::size_t>(len);
    }
    if (!cps.empty() && !out.empty()) {
      const auto f = finals.find(utf8_of(cps[0]));
      const char32_t last = out.back();
      if (f != finals.end() && last >= 0xAC00 && last <= 0xD7A3 && (last - 0xAC00) % 28 == 0) {
        out.back() = last + static_cast<char32_t>(f->second);
        cps.erase(0, 1);
      }
    }
    out += cps;
  }
  std::string s;
  for (char32_t cp : out) s += utf8_of(cp);
  return s;
}

inline kpvc::StemStatsMap window_scan(const std::vector<kpvc::TaggedSentence>& corpus) {
  kpvc::StemStatsMap pattern;
  std::map<std::string, std::uint64_t> bare;
  for (const auto& s : corpus) {
    std::vector<std::vector<const kpvc::MorphToken*>> words;
    for (const auto& t : s.tokens) {
      if (t.eojeol >= words.size()) words.resize(t.eojeol + 1);
      words[t.eojeol].push_back(&t);
    }
    std::size_t blocked = 0;
    for (std::size_t h = 0; h < words.size(); ++h) {
      const auto& host = words[h];
      if (h < blocked || host.size() < 2 || !has_prefix(host.back()->tag, "J")) continue;
      std::size_t v = h + 1;
      while (v < words.size() && !words[v].empty()) {
        bool adverbs = true;
        for (const auto* t : words[v]) adverbs = adverbs && has_prefix(t->tag, "MAG");
        if (!adverbs) break;
        ++v;
      }
      if (v >= words.size()) continue;
      const auto& w = words[v];
      if (w.size() < 3) continue;
      if (!has_prefix(w[0]->tag, "XR") && !has_prefix(w[0]->tag, "N")) continue;
      if (w[1]->surface != "하" || !(has_prefix(w[1]->tag, "XSV") || has_prefix(w[1]->tag, "V"))) continue;
      std::size_t end = 2;
      while (end < w.size() && has_prefix(w[end]->tag, "E")) ++end;
      if (end == 2) continue;

      std::vector<std::string> rest_parts;
      for (std::size_t i = end; i < w.size(); ++i) rest_parts.push_back(w[i]->surface);
      std::string word = s.eojeols[v];
      const std::string rest = glue(rest_parts);
      word = word.substr(0, word.size() - rest.size());
      const std::string& stem = w[0]->surface;
      const std::string suffix = word.substr(stem.size());
      const std::string& adp = host.back()->surface;

      auto& st = pattern[stem];
      st.stem = stem;
      ++st.total;
      ++st.adpositions[adp];
      ++st.suffixes[suffix];
      ++st.triples[{adp, suffix}];
      blocked = v + 1;
    }
    for (std::size_t i = 0; i < s.tokens.size(); ++i) {
      if (!has_prefix(s.tokens[i].tag, "N")) continue;
      const bool verbal = i + 1 < s.tokens.size() && s.tokens[i + 1].surface == "하" &&
                          (has_prefix(s.tokens[i + 1].tag, "XSV") || has_prefix(s.tokens[i + 1].tag, "V"));
      if (!verbal) ++bare[s.tokens[i].surface];
    }
  }
  for (auto& [stem, st] : pattern) st.standalone = bare.count(stem) ? bare[stem] : 0;
  return pattern;
}

// ---------------------------------------------------------------------------
// Classifier fixtures

/// A Match for a pattern occurrence whose stem is outside the lexicon, so the
/// verb+arg column can be classified.
inline kpvc::Match open_match(const kpvc::TaggedSentence& s, const kpvc::Candidate& c) {
  kpvc::Match m;
  m.sentence_id = s.id;
  m.host_eojeol = c.host_eojeol;
  m.verb_eojeol = c.verb_eojeol;
  m.adposition_token = c.adposition;
  m.verb_tokens = kpvc::TokenSpan{c.stem, c.verb_end};
  m.stem = s.tokens[c.stem].surface;
  m.postposition = s.tokens[c.adposition].surface;
  m.postposition_lemma = kpvc::hangul::lemma_of(m.postposition).value_or(m.postposition);
  m.suffix = c.suffix;
  return m;
}

struct Expectation {
  std::string sent_id;
  std::string stem;
  std::string label;  // "none": no lexicon match for the stem
  std::set<std::string> flags;
  std::string confidence;
};

inline std::vector<Expectation> load_expectations() {
  std::vector<Expectation> out;
  for (const auto& cols : load_table("fixture_expectations.tsv")) {
    Expectation e{cols.at(0), cols.at(1), cols.at(2), {}, cols.at(4)};
    if (cols.at(3) != "-") {
      std::istringstream in(cols[3]);
      for (std::string f; std::getline(in, f, ',');) e.flags.insert(f);
    }
    out.push_back(std::move(e));
  }
  return out;
}

struct Outcome {
  std::string label = "none";
  std::set<std::string> flags;
  std::string confidence = "-";
};

/// Classifies the occurrence of `stem` in sentence `id`: lexicon stems through
/// match_tagged, other stems through the raw pattern with corpus statistics.
inline Outcome outcome_for(const std::vector<kpvc::TaggedSentence>& corpus, const std::string& id,
                           const std::string& stem, const kpvc::FormIndex& index,
                           const kpvc::StemStatsMap& stats) {
  Outcome out;
  for (const auto& s : corpus) {
    if (s.id != id) continue;
    std::optional<kpvc::Classification> c;
    if (index.lexicon().find(stem) != nullptr) {
      for (const auto& m : kpvc::match_tagged(s, index)) {
        if (m.stem == stem) c = kpvc::classify(m, s, index.lexicon());
      }
    } else {
      for (const auto& cand : kpvc::find_candidates(s, kpvc::Tagset{})) {
        if (s.tokens[cand.stem].surface != stem) continue;
        const auto it = stats.find(stem);
        c = kpvc::classify(open_match(s, cand), s, index.lexicon(), {},
                           it == stats.end() ? nullptr : &it->second);
      }
    }
    if (c) {
      out.label = std::string(kpvc::to_string(c->label));
      for (auto f : c->flags) out.flags.insert(std::string(kpvc::to_string(f)));
      out.confidence = std::string(kpvc::to_string(c->confidence));
    }
  }
  return out;
}

}  // namespace oracle

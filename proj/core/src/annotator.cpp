#include "kpvc/annotator.hpp"

#include <algorithm>
#include <ostream>

#include "json.hpp"
#include "kpvc/error.hpp"
#include "kpvc/utf8.hpp"

namespace kpvc {

namespace {

using nlohmann::json;

json match_json(const Match& m) {
  json j;
  j["sentence_id"] = m.sentence_id;
  j["host_eojeol"] = m.host_eojeol;
  j["verb_eojeol"] = m.verb_eojeol;
  j["adposition_token"] = m.adposition_token ? json(*m.adposition_token) : json(nullptr);
  j["verb_tokens"] = m.verb_tokens ? json::array({m.verb_tokens->begin, m.verb_tokens->end}) : json(nullptr);
  j["stem"] = m.stem;
  j["postposition_lemma"] = m.postposition_lemma;
  j["postposition"] = m.postposition;
  j["suffix"] = m.suffix;
  j["postposition_offset"] = m.postposition_offset;
  j["trailing_particle"] = m.trailing_particle ? json(*m.trailing_particle) : json(nullptr);
  return j;
}

std::vector<std::size_t> mwe_tokens(const Match& m) {
  std::vector<std::size_t> out{*m.adposition_token};
  for (std::size_t i = m.verb_tokens->begin; i < m.verb_tokens->end; ++i) out.push_back(i);
  return out;
}

}  // namespace

CuptSentence annotate(const TaggedSentence& sentence, std::span<const ClassifiedMatch> results,
                      const AnnotateOptions& options) {
  CuptSentence out;
  out.id = sentence.id;
  out.text = utf8::join(sentence.eojeols, " ");
  const auto& toks = sentence.tokens;
  for (std::size_t i = 0; i < toks.size(); ++i) {
    const bool joined = i + 1 < toks.size() && toks[i + 1].eojeol == toks[i].eojeol;
    out.rows.push_back({std::to_string(i + 1), toks[i].surface, "_", "_", toks[i].tag, "_", "_", "_",
                        "_", joined ? "SpaceAfter=No" : "_"});
  }

  std::vector<std::vector<std::size_t>> spans;
  for (const auto& r : results) {
    if (r.match.sentence_id != sentence.id) {
      throw ConsistencyError("result for sentence '" + r.match.sentence_id + "' annotated on '" +
                             sentence.id + "'");
    }
    if (!is_pvc(r.classification.label)) continue;
    if (!r.match.adposition_token || !r.match.verb_tokens || r.match.verb_tokens->end > toks.size()) {
      throw ConsistencyError("PVC result without valid token positions in '" + sentence.id + "'");
    }
    spans.push_back(mwe_tokens(r.match));
  }
  std::sort(spans.begin(), spans.end());

  std::vector<bool> used(toks.size(), false);
  for (std::size_t k = 0; k < spans.size(); ++k) {
    for (std::size_t t : spans[k]) {
      if (used[t]) {
        throw AnnotationConflict("overlapping PVC annotations at token " + std::to_string(t + 1) +
                                 " in '" + sentence.id + "'");
      }
      used[t] = true;
    }
    out.mwes.push_back({static_cast<int>(k + 1), options.category, spans[k]});
  }
  return out;
}

std::string match_record(const Match& m) {
  json j = match_json(m);
  j["schema"] = kMatchSchema;
  return j.dump();
}

std::string classified_record(const ClassifiedMatch& r) {
  json j = match_json(r.match);
  j["schema"] = kClassifiedSchema;
  j["label"] = to_string(r.classification.label);
  j["flags"] = json::array();
  for (Flag f : r.classification.flags) j["flags"].push_back(to_string(f));
  j["rules"] = r.classification.rules;
  j["confidence"] = to_string(r.classification.confidence);
  return j.dump();
}

void report_json(std::span<const SentenceResults> results, std::ostream& out) {
  for (const auto& sentence : results) {
    for (const auto& r : sentence) out << classified_record(r) << '\n';
  }
}

}  // namespace kpvc

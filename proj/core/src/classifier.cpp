#include "kpvc/classifier.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>

#include "kpvc/error.hpp"

namespace kpvc {

namespace {

ConstructionLabel pvc_label(const PvcEntry& e) {
  return e.predicative ? ConstructionLabel::PvcP : ConstructionLabel::PvcN;
}

bool same_postposition_homonym(const PvcEntry& e, const std::string& lemma) {
  const std::string verb = e.stem_hangul + "하다";
  for (const auto& h : e.homonyms) {
    const HomonymPattern p = parse_homonym_pattern(h.pattern);
    if (p.verb != verb) continue;
    if (std::find(p.postpositions.begin(), p.postpositions.end(), lemma) != p.postpositions.end()) {
      return true;
    }
  }
  return false;
}

void check_consistency(const Match& m, const TaggedSentence& s) {
  if (m.sentence_id != s.id) {
    throw ConsistencyError("match from sentence '" + m.sentence_id + "' classified against '" + s.id + "'");
  }
  if (!m.adposition_token || !m.verb_tokens) {
    throw ConsistencyError("match has no token positions; classification needs tagged input");
  }
  const auto [begin, end] = *m.verb_tokens;
  if (*m.adposition_token >= begin || begin + 3 > end || end > s.tokens.size()) {
    throw ConsistencyError("match token positions do not fit sentence '" + s.id + "'");
  }
  if (s.tokens[*m.adposition_token].surface != m.postposition || s.tokens[begin].surface != m.stem) {
    throw ConsistencyError("match surfaces disagree with sentence '" + s.id + "'");
  }
}

}  // namespace

std::string_view to_string(ConstructionLabel label) {
  switch (label) {
    case ConstructionLabel::PvcN: return "PvcN";
    case ConstructionLabel::PvcP: return "PvcP";
    case ConstructionLabel::VerbArg: return "VerbArg";
    case ConstructionLabel::Lvc: return "Lvc";
    case ConstructionLabel::Rejected: return "Rejected";
  }
  return "?";
}

std::string_view to_string(Flag flag) {
  switch (flag) {
    case Flag::TenseInflection: return "TenseInflection";
    case Flag::MainPredicate: return "MainPredicate";
    case Flag::InterveningAdverb: return "InterveningAdverb";
    case Flag::SerialNonFinal: return "SerialNonFinal";
    case Flag::HomonymAmbiguous: return "HomonymAmbiguous";
    case Flag::FreeNounStem: return "FreeNounStem";
  }
  return "?";
}

std::string_view to_string(Confidence confidence) {
  return confidence == Confidence::Certain ? "certain" : "heuristic";
}

std::string_view to_string(OpenSuggestion suggestion) {
  switch (suggestion) {
    case OpenSuggestion::LvcLikely: return "LvcLikely";
    case OpenSuggestion::PvcCandidate: return "PvcCandidate";
    case OpenSuggestion::VerbLikely: return "VerbLikely";
  }
  return "?";
}

bool is_pvc(ConstructionLabel label) {
  return label == ConstructionLabel::PvcN || label == ConstructionLabel::PvcP;
}

Classification classify(const Match& m, const TaggedSentence& s, const Lexicon& lex,
                        const ClassifierOptions& options, const StemStats* open_stats) {
  check_consistency(m, s);
  const Tagset& tags = options.tagset;
  const auto& toks = s.tokens;
  const std::size_t adp = *m.adposition_token;
  const auto [begin, end] = *m.verb_tokens;

  Classification out;
  const PvcEntry* entry = lex.find(m.stem);
  if (entry == nullptr) {
    out.confidence = Confidence::Heuristic;
    out.rules = {"R0"};
    if (open_stats != nullptr && open_stats->total + open_stats->standalone > 0 &&
        boundness(*open_stats) < options.thresholds.free) {
      out.label = ConstructionLabel::Lvc;
      out.flags.insert(Flag::FreeNounStem);
    } else {
      out.label = ConstructionLabel::VerbArg;
    }
    return out;
  }

  bool tense = false;
  for (std::size_t i = begin; i < end; ++i) tense = tense || tags.is_tense(toks[i].tag);
  const std::string& last_tag = toks[end - 1].tag;
  bool predicate_follows = false;
  for (std::size_t i = end; i < toks.size(); ++i) {
    predicate_follows = predicate_follows || tags.is_verbalizer(toks[i].tag);
  }
  const bool gerundial = tags.is_nominalizer(last_tag) && m.suffix == "함";
  const bool main_predicate = (tags.is_final_ending(last_tag) || gerundial) && !predicate_follows;
  bool adverb = false;
  for (std::size_t i = adp + 1; i < begin; ++i) adverb = adverb || tags.is_adverb(toks[i].tag);
  bool verb_follows = false;
  for (std::size_t i = s.first_token(m.verb_eojeol + 1); i < s.end_token(m.verb_eojeol + 1); ++i) {
    verb_follows = verb_follows || tags.is_verbalizer(toks[i].tag);
  }
  const bool licensed = entry->licenses_suffix(m.suffix);
  const auto kind = options.suffixes.kind(m.suffix);

  auto finish_pvc = [&](std::string rule) {
    out.label = pvc_label(*entry);
    out.rules.push_back(std::move(rule));
    if (same_postposition_homonym(*entry, m.postposition_lemma)) {
      out.flags.insert(Flag::HomonymAmbiguous);
      out.confidence = Confidence::Heuristic;
      out.rules.push_back("R6");
    }
    return out;
  };

  // R1
  if (!main_predicate && (tense || !licensed)) {
    out.label = ConstructionLabel::Rejected;
    out.flags.insert(Flag::TenseInflection);
    out.rules = {"R1"};
    return out;
  }

  // R2
  if (main_predicate) {
    if (gerundial && options.legal_register && !tense) {
      out.confidence = Confidence::Heuristic;
      return finish_pvc("R2");
    }
    out.label = entry->predicative ? ConstructionLabel::VerbArg : ConstructionLabel::Rejected;
    out.flags.insert(Flag::MainPredicate);
    if (tense) out.flags.insert(Flag::TenseInflection);
    out.rules = {"R2"};
    return out;
  }

  // R3
  if (adverb) {
    out.flags.insert(Flag::InterveningAdverb);
    out.rules = {"R3"};
    if (entry->predicative && kind == SuffixKind::Adnominal) {
      out.label = ConstructionLabel::VerbArg;
      out.confidence = Confidence::Heuristic;
    } else {
      out.label = ConstructionLabel::Rejected;
      if (kind == SuffixKind::Connective && verb_follows) out.flags.insert(Flag::SerialNonFinal);
    }
    return out;
  }

  // R4
  if (kind == SuffixKind::Connective) {
    if (verb_follows) out.flags.insert(Flag::SerialNonFinal);
    return finish_pvc("R4");
  }

  // R5; licensed register forms outside the standard inventory land here too.
  if (kind != SuffixKind::Adnominal) out.confidence = Confidence::Heuristic;
  return finish_pvc("R5");
}

OpenSuggestion classify_open(std::string_view stem, const StemStats& stats, const Lexicon& lex,
                             const OpenThresholds& thresholds) {
  if (lex.find(stem) != nullptr) {
    throw std::invalid_argument("classify_open: '" + std::string(stem) + "' is a lexicon stem");
  }
  if (boundness(stats) < thresholds.free) return OpenSuggestion::LvcLikely;
  if (stats.distinct_triples() <= thresholds.fixed) return OpenSuggestion::PvcCandidate;
  return OpenSuggestion::VerbLikely;
}

std::vector<SentenceResults> classify_all(std::span<const TaggedSentence> corpus,
                                          const FormIndex& index,
                                          const MatchOptions& match_options,
                                          const ClassifierOptions& options, unsigned jobs) {
  std::vector<SentenceResults> out(corpus.size());
  auto work = [&](std::size_t i) {
    for (auto& m : match_tagged(corpus[i], index, match_options)) {
      Classification c = classify(m, corpus[i], index.lexicon(), options);
      out[i].push_back({std::move(m), std::move(c)});
    }
  };

  jobs = std::max(1u, jobs);
  if (jobs == 1 || corpus.size() < 2) {
    for (std::size_t i = 0; i < corpus.size(); ++i) work(i);
    return out;
  }

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  {
    std::vector<std::jthread> workers;
    for (unsigned w = 0; w < jobs; ++w) {
      workers.emplace_back([&] {
        for (std::size_t i = next++; i < corpus.size() && !failed; i = next++) {
          try {
            work(i);
          } catch (...) {
            if (!failed.exchange(true)) failure = std::current_exception();
          }
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

}  // namespace kpvc

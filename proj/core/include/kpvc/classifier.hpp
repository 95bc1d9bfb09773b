#pragma once

#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kpvc/corpus_io.hpp"
#include "kpvc/lexicon.hpp"
#include "kpvc/matcher.hpp"
#include "kpvc/miner.hpp"
#include "kpvc/tagset.hpp"

namespace kpvc {

enum class ConstructionLabel { PvcN, PvcP, VerbArg, Lvc, Rejected };

enum class Flag {
  TenseInflection,    // inflection outside the fossilized suffix set (tense infix, other endings)
  MainPredicate,
  InterveningAdverb,
  SerialNonFinal,
  HomonymAmbiguous,
  FreeNounStem,
};

enum class Confidence { Certain, Heuristic };

std::string_view to_string(ConstructionLabel label);
std::string_view to_string(Flag flag);
std::string_view to_string(Confidence confidence);

bool is_pvc(ConstructionLabel label);

struct Classification {
  ConstructionLabel label = ConstructionLabel::Rejected;
  std::set<Flag> flags;
  Confidence confidence = Confidence::Certain;
  std::vector<std::string> rules;  // R0..R6, decisive rule first

  bool has(Flag f) const { return flags.contains(f); }

  friend bool operator==(const Classification&, const Classification&) = default;
};

struct OpenThresholds {
  double free = 0.8;       // boundness below this marks a free noun
  std::size_t fixed = 8;   // at most this many distinct triples counts as fixed
};

struct ClassifierOptions {
  Tagset tagset;
  SuffixInventory suffixes = SuffixInventory::standard();
  bool legal_register = false;  // accept clause-final gerundial 함
  OpenThresholds thresholds;
};

/// Decides which construction a tagged match instantiates. Rules, first decisive wins:
///   R1  tense infix or unlicensed ending in a non-final verb complex -> Rejected
///   R2  clause-final predicate (EF, or gerundial 함) -> Rejected, or VerbArg for predicative stems
///   R3  adverb between postposition and stem -> Rejected, or VerbArg for an adnominal predicative stem
///   R4  connective form; SerialNonFinal when another verb complex follows
///   R5  adnominal form
///   R6  a same-postposition homonym exists -> HomonymAmbiguous, heuristic
/// Stems outside the lexicon get R0: VerbArg, or Lvc when `open_stats` shows a free noun.
/// Throws ConsistencyError when `m` does not come from `sentence`.
Classification classify(const Match& m, const TaggedSentence& sentence, const Lexicon& lex,
                        const ClassifierOptions& options = {},
                        const StemStats* open_stats = nullptr);

enum class OpenSuggestion { LvcLikely, PvcCandidate, VerbLikely };

std::string_view to_string(OpenSuggestion suggestion);

/// Triage for a mined stem that is not in the lexicon. Throws std::invalid_argument
/// if `stem` is a lexicon stem, UndefinedScore if the stats are empty.
OpenSuggestion classify_open(std::string_view stem, const StemStats& stats, const Lexicon& lex,
                             const OpenThresholds& thresholds = {});

struct ClassifiedMatch {
  Match match;
  Classification classification;
};

using SentenceResults = std::vector<ClassifiedMatch>;

/// match_tagged then classify, one result list per input sentence in input order.
std::vector<SentenceResults> classify_all(std::span<const TaggedSentence> corpus,
                                          const FormIndex& index,
                                          const MatchOptions& match_options = {},
                                          const ClassifierOptions& options = {},
                                          unsigned jobs = 1);

}  // namespace kpvc

#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>

#include "kpvc/classifier.hpp"
#include "kpvc/corpus_io.hpp"
#include "kpvc/matcher.hpp"

namespace kpvc {

inline constexpr std::string_view kMatchSchema = "kpvc.match/1";
inline constexpr std::string_view kClassifiedSchema = "kpvc.classified/1";

struct AnnotateOptions {
  std::string category = "ADP";
};

/// One cupt row per morpheme. Every PvcN/PvcP result becomes an MWE over the
/// postposition and the verb complex; the host noun and any trailing particle stay
/// out. Ids follow textual order. Throws AnnotationConflict when two PVCs share a
/// token and ConsistencyError for results from another sentence.
CuptSentence annotate(const TaggedSentence& sentence, std::span<const ClassifiedMatch> results,
                      const AnnotateOptions& options = {});

/// Single-line JSON for a match, keys in lexicographic order.
std::string match_record(const Match& m);

/// Match fields plus label, flags, rules and confidence.
std::string classified_record(const ClassifiedMatch& r);

/// JSON-lines, one classified record per result, corpus order.
void report_json(std::span<const SentenceResults> results, std::ostream& out);

}  // namespace kpvc

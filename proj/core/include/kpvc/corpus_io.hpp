#pragma once

#include <array>
#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace kpvc {

// ---------------------------------------------------------------------------
// Plain text

struct RawSentence {
  std::string id;
  std::vector<std::string> eojeols;
  std::vector<std::pair<std::size_t, std::size_t>> offsets;  // byte [begin, end) per eojeol

  friend bool operator==(const RawSentence&, const RawSentence&) = default;
};

/// Splits on newlines and after an eojeol ending in '.', '?' or '!'. Eojeols keep
/// their punctuation. Sentence ids are s1, s2, ... in input order. Throws
/// DecodeError on invalid UTF-8.
std::vector<RawSentence> read_plain(std::istream& in);

// ---------------------------------------------------------------------------
// Morphologically tagged text

struct MorphToken {
  std::string surface;
  std::string tag;
  std::size_t eojeol = 0;

  friend bool operator==(const MorphToken&, const MorphToken&) = default;
};

struct TaggedSentence {
  std::string id;
  std::vector<MorphToken> tokens;
  std::vector<std::string> eojeols;  // surface of each eojeol, indexed by MorphToken::eojeol

  /// Index of the first token of eojeol `e`, or tokens.size() if it has none.
  std::size_t first_token(std::size_t e) const;
  /// One past the last token of eojeol `e`.
  std::size_t end_token(std::size_t e) const;

  friend bool operator==(const TaggedSentence&, const TaggedSentence&) = default;
};

/// Splits an analyzer token with `+`-joined tags into one token per tag.
/// 하-contractions are undone (해 -> 하 + 여, 했 -> 하 + 였, 한 -> 하 + ㄴ); a surface
/// that cannot be divided among its tags is kept whole under the joined tag.
std::vector<MorphToken> split_fused(std::string_view surface, std::string_view tags,
                                    std::size_t eojeol);

/// Concatenates morpheme surfaces, folding a leading final-consonant jamo into an
/// open preceding syllable: {관, 하, ㄴ} -> 관한.
std::string realize(std::span<const std::string> surfaces);

/// Reads `surface<TAB>tag<TAB>eojeol_index` lines, blank line between sentences.
/// Optional `# sent_id = ` and `# text = ` comments set the id and the eojeol
/// surfaces. Throws ParseError with a 1-based line number.
std::vector<TaggedSentence> read_tagged(std::istream& in);

void write_tagged(std::span<const TaggedSentence> sentences, std::ostream& out);

/// Reads 10-column treebank records. Each word is one eojeol; `+`-joined XPOS
/// values are split into morphemes, taking surfaces from a matching `+`-joined
/// LEMMA when available. Range and empty-node lines are skipped.
std::vector<TaggedSentence> read_conllu(std::istream& in);

// ---------------------------------------------------------------------------
// PARSEME cupt

inline constexpr std::string_view kCuptColumnsHeader =
    "# global.columns = ID FORM LEMMA UPOS XPOS FEATS HEAD DEPREL DEPS MISC PARSEME:MWE";

struct MweAnnotation {
  int id = 0;
  std::string category;
  std::vector<std::size_t> tokens;  // 0-based row indices, ascending

  friend bool operator==(const MweAnnotation&, const MweAnnotation&) = default;
};

using CuptRow = std::array<std::string, 10>;

struct CuptSentence {
  std::string id;
  std::string text;
  std::vector<CuptRow> rows;
  std::vector<MweAnnotation> mwes;  // ids 1..k in order

  friend bool operator==(const CuptSentence&, const CuptSentence&) = default;
};

/// Throws SerializationError if ids are not 1..k, a token index is out of range,
/// or a column is empty or contains a tab or newline.
void write_cupt(std::span<const CuptSentence> sentences, std::ostream& out);

std::vector<CuptSentence> read_cupt(std::istream& in);

}  // namespace kpvc

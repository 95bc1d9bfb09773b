#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "kpvc/corpus_io.hpp"
#include "kpvc/hangul.hpp"
#include "kpvc/lexicon.hpp"
#include "kpvc/tagset.hpp"

namespace kpvc {

/// One concrete spelling of a lexicon entry: 에 + 관한, 을 + 통해서, ...
struct SurfaceForm {
  std::size_t entry = 0;
  std::string stem;
  std::string postposition_lemma;
  std::string postposition;  // allomorph actually written
  std::string suffix;
  std::string verb;  // stem + suffix

  friend bool operator==(const SurfaceForm&, const SurfaceForm&) = default;
};

/// Entry order, then licensed postposition (core before extra, lemma form before
/// its alternant), then suffix form.
std::vector<SurfaceForm> expand(const Lexicon& lex);

struct MatchOptions {
  std::vector<std::string> trailing_particles{"는", "도", "만"};
  bool strict = false;  // reject verb complexes with a tense infix or an unlicensed ending
  hangul::AllomorphOptions allomorph;
  Tagset tagset;
  SuffixInventory suffixes = SuffixInventory::standard();
};

/// Expanded surface forms keyed by verb surface. Immutable once built.
class FormIndex {
 public:
  explicit FormIndex(Lexicon lex, SuffixInventory suffixes = SuffixInventory::standard());

  const Lexicon& lexicon() const { return lexicon_; }
  const std::vector<SurfaceForm>& forms() const { return forms_; }
  const SuffixInventory& suffixes() const { return suffixes_; }

  /// Indices into forms() whose verb surface equals `verb`.
  std::span<const std::size_t> by_verb(std::string_view verb) const;

 private:
  Lexicon lexicon_;
  SuffixInventory suffixes_;
  std::vector<SurfaceForm> forms_;
  std::unordered_map<std::string, std::vector<std::size_t>> by_verb_;
};

struct TokenSpan {
  std::size_t begin = 0;
  std::size_t end = 0;

  friend bool operator==(const TokenSpan&, const TokenSpan&) = default;
};

struct Match {
  std::string sentence_id;
  std::size_t host_eojeol = 0;
  std::size_t verb_eojeol = 0;
  std::optional<std::size_t> adposition_token;  // tagged input only
  std::optional<TokenSpan> verb_tokens;         // stem .. last ending; tagged input only
  std::string stem;
  std::string postposition_lemma;
  std::string postposition;
  std::string suffix;
  std::size_t postposition_offset = 0;  // code points into the host eojeol
  std::optional<std::string> trailing_particle;

  friend bool operator==(const Match&, const Match&) = default;
};

/// Adjacent eojeol pairs host+postposition / verb(+particle). The longest
/// compatible postposition wins; an eojeol takes part in at most one match.
std::vector<Match> match_raw(const RawSentence& sentence, const FormIndex& index,
                             const MatchOptions& options = {});

/// An occurrence of the tag shape adposition | adverb* | stem 하 ending+,
/// regardless of the lexicon. Shared by the matcher and the miner.
struct Candidate {
  std::size_t adposition = 0;  // token index; closes the host eojeol
  std::size_t stem = 0;        // token index; opens the verb eojeol
  std::size_t verb_end = 0;    // one past the last ending token
  std::size_t host_eojeol = 0;
  std::size_t verb_eojeol = 0;
  std::string suffix;          // 하-form as written, e.g. 한, 해서, 했다
  TokenSpan remainder;         // tokens after the verb complex within the verb eojeol
};

std::vector<Candidate> find_candidates(const TaggedSentence& sentence, const Tagset& tagset);

std::vector<Match> match_tagged(const TaggedSentence& sentence, const FormIndex& index,
                                const MatchOptions& options = {});

}  // namespace kpvc

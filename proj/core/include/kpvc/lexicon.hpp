#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kpvc/error.hpp"

namespace kpvc {

enum class SuffixKind { Adnominal, Connective, Gerundial };

std::string_view to_string(SuffixKind kind);
std::optional<SuffixKind> parse_suffix_kind(std::string_view name);

/// The closed set of 하다 verb forms a lexicon entry may license. The standard
/// inventory is 한 (adnominal) plus 해, 해서, 하여, 하고 (connective); register
/// extensions such as the gerundial 함 are added explicitly.
class SuffixInventory {
 public:
  static SuffixInventory standard();

  void add(std::string form, SuffixKind kind);
  std::optional<SuffixKind> kind(std::string_view form) const;
  bool contains(std::string_view form) const { return kind(form).has_value(); }
  const std::map<std::string, SuffixKind, std::less<>>& forms() const { return forms_; }

 private:
  std::map<std::string, SuffixKind, std::less<>> forms_;
};

struct ExtraPostposition {
  std::string lemma;
  std::string condition;  // informational only, e.g. "animate"

  friend bool operator==(const ExtraPostposition&, const ExtraPostposition&) = default;
};

struct Homonym {
  std::string pattern;  // e.g. "를 대하다"
  std::string gloss;    // may be empty

  friend bool operator==(const Homonym&, const Homonym&) = default;
};

/// A homonym note split into the postpositions it governs and its verb.
/// "에(게) 반하다" -> {에, 에게}, "반하다".
struct HomonymPattern {
  std::vector<std::string> postpositions;
  std::string verb;
};

HomonymPattern parse_homonym_pattern(std::string_view pattern);

struct PvcEntry {
  std::string stem_hangul;
  std::string stem_roman;
  std::vector<std::string> postpositions;
  std::vector<ExtraPostposition> extra_postpositions;
  std::string gloss;
  std::vector<std::string> suffix_forms;
  bool predicative = false;
  std::vector<Homonym> homonyms;

  /// Core postpositions followed by the extra ones, without duplicates.
  std::vector<std::string> licensed_postpositions() const;
  bool licenses_postposition(std::string_view lemma) const;
  bool licenses_suffix(std::string_view form) const;

  friend bool operator==(const PvcEntry&, const PvcEntry&) = default;
};

struct Lexicon {
  std::vector<PvcEntry> entries;
  std::string version;

  const PvcEntry* find(std::string_view stem) const;

  friend bool operator==(const Lexicon&, const Lexicon&) = default;
};

struct Violation {
  std::size_t entry = 0;
  std::string stem;
  std::string rule;
  std::string message;
};

struct ValidationOptions {
  SuffixInventory suffixes = SuffixInventory::standard();
  std::vector<std::string> predicative_stems{"속", "향", "기"};
};

class LexiconValidationError : public Error {
 public:
  explicit LexiconValidationError(std::vector<Violation> violations);

  const std::vector<Violation>& violations() const noexcept { return violations_; }

 private:
  std::vector<Violation> violations_;
};

/// The fourteen built-in entries, most frequent first.
const Lexicon& builtin();

std::vector<Violation> validate(const Lexicon& lex, const ValidationOptions& options = {});

enum class LexiconFormat { Tsv, Json };

/// Parses without checking invariants. Throws ParseError (with a line number for TSV).
Lexicon parse_lexicon(std::istream& in, LexiconFormat format);

/// parse_lexicon followed by validate; throws LexiconValidationError on violations.
Lexicon load(std::istream& in, LexiconFormat format, const ValidationOptions& options = {});

void export_lexicon(const Lexicon& lex, std::ostream& out, LexiconFormat format = LexiconFormat::Tsv);

inline constexpr std::string_view kLexiconTsvHeader =
    "stem_hangul\tstem_roman\tpostpositions\textra_postpositions\tgloss\tsuffix_forms\t"
    "predicative\thomonyms";

}  // namespace kpvc

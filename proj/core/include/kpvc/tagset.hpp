#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace kpvc {

/// Tag classes consulted by matching, mining and classification. Each class is a
/// list of tag prefixes; the defaults follow the Sejong tagset used by Mecab-ko.
struct Tagset {
  std::vector<std::string> adposition{"J"};
  std::vector<std::string> stem{"XR", "N"};  // analyzers often tag bound stems as NN*
  std::vector<std::string> verbalizer{"XSV", "V"};
  std::vector<std::string> ending{"E"};
  std::vector<std::string> tense{"EP"};
  std::vector<std::string> final_ending{"EF"};
  std::vector<std::string> nominalizer{"ETN"};
  std::vector<std::string> adverb{"MAG"};
  std::vector<std::string> noun{"N"};
  std::string verbalizer_surface = "하";

  bool is_adposition(std::string_view tag) const { return matches(adposition, tag); }
  bool is_stem(std::string_view tag) const { return matches(stem, tag); }
  bool is_verbalizer(std::string_view tag) const { return matches(verbalizer, tag); }
  bool is_ending(std::string_view tag) const { return matches(ending, tag); }
  bool is_tense(std::string_view tag) const { return matches(tense, tag); }
  bool is_final_ending(std::string_view tag) const { return matches(final_ending, tag); }
  bool is_nominalizer(std::string_view tag) const { return matches(nominalizer, tag); }
  bool is_adverb(std::string_view tag) const { return matches(adverb, tag); }
  bool is_noun(std::string_view tag) const { return matches(noun, tag); }

  /// Overrides one class from a comma-separated prefix list. Keys are the field
  /// names above (`verbalizer_surface` takes a single surface). Throws
  /// std::invalid_argument for an unknown key or an empty list.
  void set(std::string_view key, std::string_view prefixes);

  static bool matches(const std::vector<std::string>& prefixes, std::string_view tag);
};

}  // namespace kpvc

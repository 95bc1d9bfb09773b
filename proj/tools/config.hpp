#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kpvc/error.hpp"
#include "kpvc/hangul.hpp"
#include "kpvc/lexicon.hpp"

namespace kpvc::cli {

class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Everything a run depends on. Config files hold `key = value` lines; `#` starts a comment.
struct RunConfig {
  std::optional<std::string> lexicon_path;
  LexiconFormat lexicon_format = LexiconFormat::Tsv;
  std::vector<std::pair<std::string, std::string>> tag_overrides;  // tag.<class> = prefixes
  std::vector<std::string> particles{"는", "도", "만"};
  std::vector<std::pair<std::string, SuffixKind>> extra_suffixes;
  bool strict = false;
  bool legal_register = false;
  double theta_free = 0.8;
  std::size_t theta_fixed = 8;
  std::size_t k = 300;
  unsigned jobs = 1;
  std::string category = "ADP";
  hangul::NonHangulPolicy non_hangul = hangul::NonHangulPolicy::LemmaForm;
};

/// Applies one setting. Throws ConfigError on an unknown key or a bad value.
void apply_setting(RunConfig& config, const std::string& key, const std::string& value);

void apply_config_file(RunConfig& config, std::istream& in);

/// Checks cross-field ranges: theta_free in [0,1], theta_fixed, k and jobs positive.
void check(const RunConfig& config);

}  // namespace kpvc::cli

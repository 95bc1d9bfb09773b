#include "config.hpp"

#include <charconv>
#include <istream>

#include "kpvc/tagset.hpp"
#include "kpvc/utf8.hpp"

namespace kpvc::cli {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

bool parse_bool(const std::string& key, const std::string& v) {
  if (v == "true" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "no") return false;
  throw ConfigError(key + ": expected a boolean, got '" + v + "'");
}

template <typename T>
T parse_number(const std::string& key, const std::string& v) {
  T value{};
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), value);
  if (ec != std::errc{} || ptr != v.data() + v.size() || v.empty()) {
    throw ConfigError(key + ": expected a number, got '" + v + "'");
  }
  return value;
}

std::vector<std::string> parse_list(const std::string& v) {
  std::vector<std::string> out;
  for (auto& item : utf8::split(v, ',')) {
    std::string t = trim(item);
    if (!t.empty()) out.push_back(std::move(t));
  }
  return out;
}

}  // namespace

void apply_setting(RunConfig& c, const std::string& key, const std::string& value) {
  if (key == "lexicon") {
    c.lexicon_path = value;
  } else if (key == "lexicon_format") {
    if (value == "tsv") c.lexicon_format = LexiconFormat::Tsv;
    else if (value == "json") c.lexicon_format = LexiconFormat::Json;
    else throw ConfigError("lexicon_format: expected tsv or json");
  } else if (key.starts_with("tag.")) {
    Tagset probe;
    try {
      probe.set(key.substr(4), value);
    } catch (const std::invalid_argument& e) {
      throw ConfigError(e.what());
    }
    c.tag_overrides.emplace_back(key.substr(4), value);
  } else if (key == "particles") {
    c.particles = parse_list(value);
  } else if (key == "extra_suffixes") {
    c.extra_suffixes.clear();
    for (const auto& item : parse_list(value)) {
      const auto colon = item.find(':');
      const auto kind = colon == std::string::npos ? std::nullopt : parse_suffix_kind(item.substr(colon + 1));
      if (!kind) throw ConfigError("extra_suffixes: expected form:kind, got '" + item + "'");
      c.extra_suffixes.emplace_back(item.substr(0, colon), *kind);
    }
  } else if (key == "strict") {
    c.strict = parse_bool(key, value);
  } else if (key == "legal_register") {
    c.legal_register = parse_bool(key, value);
  } else if (key == "theta_free") {
    c.theta_free = parse_number<double>(key, value);
  } else if (key == "theta_fixed") {
    c.theta_fixed = parse_number<std::size_t>(key, value);
  } else if (key == "k") {
    c.k = parse_number<std::size_t>(key, value);
  } else if (key == "jobs") {
    c.jobs = parse_number<unsigned>(key, value);
  } else if (key == "category") {
    if (value.empty()) throw ConfigError("category: empty");
    c.category = value;
  } else if (key == "non_hangul") {
    if (value == "lemma") c.non_hangul = hangul::NonHangulPolicy::LemmaForm;
    else if (value == "consonant") c.non_hangul = hangul::NonHangulPolicy::ConsonantForm;
    else throw ConfigError("non_hangul: expected lemma or consonant");
  } else {
    throw ConfigError("unknown config key '" + key + "'");
  }
}

void apply_config_file(RunConfig& config, std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("config line " + std::to_string(lineno) + ": expected key = value");
    }
    apply_setting(config, trim(t.substr(0, eq)), trim(t.substr(eq + 1)));
  }
}

void check(const RunConfig& c) {
  if (!(c.theta_free >= 0.0 && c.theta_free <= 1.0)) throw ConfigError("theta_free must lie in [0,1]");
  if (c.theta_fixed == 0) throw ConfigError("theta_fixed must be positive");
  if (c.k == 0) throw ConfigError("k must be positive");
  if (c.jobs == 0) throw ConfigError("jobs must be positive");
}

}  // namespace kpvc::cli

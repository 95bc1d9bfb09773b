#include "kpvc/lexicon.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "kpvc/hangul.hpp"
#include "kpvc/utf8.hpp"

namespace kpvc {

namespace {

constexpr std::string_view kVersionPrefix = "# version = ";

const std::vector<std::string> kFourForms{"한", "해", "해서", "하여"};
const std::vector<std::string> kTwoForms{"한", "해"};

PvcEntry make_entry(std::string stem, std::string roman, std::vector<std::string> adps,
                    std::string gloss, std::vector<std::string> forms, bool predicative,
                    std::vector<Homonym> homonyms = {},
                    std::vector<ExtraPostposition> extras = {}) {
  PvcEntry e;
  e.stem_hangul = std::move(stem);
  e.stem_roman = std::move(roman);
  e.postpositions = std::move(adps);
  e.extra_postpositions = std::move(extras);
  e.gloss = std::move(gloss);
  e.suffix_forms = std::move(forms);
  e.predicative = predicative;
  e.homonyms = std::move(homonyms);
  return e;
}

Lexicon make_builtin() {
  Lexicon lex;
  lex.version = "builtin-1";
  auto& v = lex.entries;
  v.push_back(make_entry("대", "tay", {"에"}, "about", kFourForms, false, {{"를 대하다", "treat"}}));
  v.push_back(make_entry("의", "ui", {"에"}, "by", kFourForms, false));
  v.push_back(make_entry("통", "thong", {"를"}, "via, through", kFourForms, false,
                         {{"와 통하다", "connect, flow"}}));
  v.push_back(make_entry("위", "wi", {"를"}, "for", kFourForms, false, {{"를 위하다", "care for"}}));
  v.push_back(make_entry("인", "in", {"로"}, "due to", kFourForms, false));
  v.push_back(make_entry("관", "kwan", {"에"}, "about", kFourForms, false));
  v.push_back(make_entry("속", "sok", {"에"}, "in, belong to", kTwoForms, true));
  v.push_back(make_entry("향", "hyang", {"로", "를"}, "towards", kTwoForms, true, {},
                         {{"에게", "animate"}}));
  v.push_back(make_entry("비", "pi", {"에"}, "than, compared to", kFourForms, false,
                         {{"와 비하다", "be comparable to"}}));
  v.push_back(make_entry("불구", "pwulkwu", {"에도"}, "although", {"하고"}, false,
                         {{"불구되다", ""}, {"불구가 되다", ""}}));
  v.push_back(make_entry("비롯", "piros", {"를"}, "such as", kFourForms, false,
                         {{"에서 비롯하다", ""}, {"비롯되다", ""}}));
  v.push_back(make_entry("기", "ki", {"를"}, "since", kTwoForms, true));
  v.push_back(make_entry("반", "pan", {"에"}, "against, unlike", kFourForms, false,
                         {{"에(게) 반하다", "fall for"}}));
  v.push_back(make_entry("위시", "wisi", {"를"}, "such as", kFourForms, false));
  return lex;
}

std::vector<std::string> split_list(std::string_view field, char sep) {
  if (field.empty()) return {};
  return utf8::split(field, sep);
}

PvcEntry parse_row(const std::vector<std::string>& f, std::size_t line) {
  PvcEntry e;
  e.stem_hangul = f[0];
  e.stem_roman = f[1];
  e.postpositions = split_list(f[2], ',');
  for (const auto& item : split_list(f[3], ',')) {
    const auto colon = item.find(':');
    if (item.empty() || colon == 0) throw ParseError(line, "empty extra postposition lemma");
    if (colon == std::string::npos) {
      e.extra_postpositions.push_back({item, ""});
    } else {
      e.extra_postpositions.push_back({item.substr(0, colon), item.substr(colon + 1)});
    }
  }
  e.gloss = f[4];
  e.suffix_forms = split_list(f[5], ',');
  if (f[6] == "1") {
    e.predicative = true;
  } else if (f[6] != "0") {
    throw ParseError(line, "predicative must be 0 or 1, got '" + f[6] + "'");
  }
  for (const auto& item : split_list(f[7], ';')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) {
      e.homonyms.push_back({item, ""});
    } else {
      e.homonyms.push_back({item.substr(0, eq), item.substr(eq + 1)});
    }
  }
  return e;
}

Lexicon load_tsv(std::istream& in) {
  Lexicon lex;
  std::string line;
  std::size_t lineno = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto bad = utf8::find_invalid(line); bad != std::string::npos) {
      throw ParseError(lineno, "invalid UTF-8 at column byte " + std::to_string(bad));
    }
    if (!header_seen) {
      if (line.starts_with(kVersionPrefix) && lex.entries.empty() && lex.version.empty()) {
        lex.version = line.substr(kVersionPrefix.size());
        continue;
      }
      if (line != kLexiconTsvHeader) throw ParseError(lineno, "expected lexicon header row");
      header_seen = true;
      continue;
    }
    if (line.empty()) continue;
    const auto fields = utf8::split(line, '\t');
    if (fields.size() != 8) {
      throw ParseError(lineno, "expected 8 columns, got " + std::to_string(fields.size()));
    }
    lex.entries.push_back(parse_row(fields, lineno));
  }
  if (!header_seen) throw ParseError(lineno, "missing lexicon header row");
  return lex;
}

Lexicon load_json(std::istream& in) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(0, std::string("lexicon JSON: ") + e.what());
  }
  Lexicon lex;
  try {
    lex.version = doc.value("version", std::string{});
    for (const auto& j : doc.at("entries")) {
      PvcEntry e;
      e.stem_hangul = j.at("stem_hangul").get<std::string>();
      e.stem_roman = j.value("stem_roman", std::string{});
      e.postpositions = j.at("postpositions").get<std::vector<std::string>>();
      for (const auto& x : j.value("extra_postpositions", nlohmann::json::array())) {
        e.extra_postpositions.push_back(
            {x.at("lemma").get<std::string>(), x.value("condition", std::string{})});
      }
      e.gloss = j.value("gloss", std::string{});
      e.suffix_forms = j.at("suffix_forms").get<std::vector<std::string>>();
      e.predicative = j.value("predicative", false);
      for (const auto& h : j.value("homonyms", nlohmann::json::array())) {
        e.homonyms.push_back({h.at("pattern").get<std::string>(), h.value("gloss", std::string{})});
      }
      lex.entries.push_back(std::move(e));
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(0, std::string("lexicon JSON: ") + e.what());
  }
  return lex;
}

std::string join_extras(const std::vector<ExtraPostposition>& extras) {
  std::vector<std::string> parts;
  for (const auto& x : extras) {
    parts.push_back(x.condition.empty() ? x.lemma : x.lemma + ":" + x.condition);
  }
  return utf8::join(parts, ",");
}

std::string join_homonyms(const std::vector<Homonym>& homonyms) {
  std::vector<std::string> parts;
  for (const auto& h : homonyms) {
    parts.push_back(h.gloss.empty() ? h.pattern : h.pattern + "=" + h.gloss);
  }
  return utf8::join(parts, ";");
}

}  // namespace

std::string_view to_string(SuffixKind kind) {
  switch (kind) {
    case SuffixKind::Adnominal: return "adnominal";
    case SuffixKind::Connective: return "connective";
    case SuffixKind::Gerundial: return "gerundial";
  }
  return "?";
}

std::optional<SuffixKind> parse_suffix_kind(std::string_view name) {
  if (name == "adnominal") return SuffixKind::Adnominal;
  if (name == "connective") return SuffixKind::Connective;
  if (name == "gerundial") return SuffixKind::Gerundial;
  return std::nullopt;
}

SuffixInventory SuffixInventory::standard() {
  SuffixInventory inv;
  inv.add("한", SuffixKind::Adnominal);
  inv.add("해", SuffixKind::Connective);
  inv.add("해서", SuffixKind::Connective);
  inv.add("하여", SuffixKind::Connective);
  inv.add("하고", SuffixKind::Connective);
  return inv;
}

void SuffixInventory::add(std::string form, SuffixKind kind) { forms_[std::move(form)] = kind; }

std::optional<SuffixKind> SuffixInventory::kind(std::string_view form) const {
  const auto it = forms_.find(form);
  if (it == forms_.end()) return std::nullopt;
  return it->second;
}

HomonymPattern parse_homonym_pattern(std::string_view pattern) {
  HomonymPattern out;
  auto words = utf8::split_whitespace(pattern);
  if (words.empty()) return out;
  out.verb = words.back().text;
  if (words.size() < 2) return out;
  // "에(게)" spells both 에 and 에게.
  const std::string& adp = words[words.size() - 2].text;
  const auto open = adp.find('(');
  const auto close = adp.find(')');
  if (open != std::string::npos && close != std::string::npos && close > open) {
    const std::string base = adp.substr(0, open);
    out.postpositions.push_back(base);
    out.postpositions.push_back(base + adp.substr(open + 1, close - open - 1) +
                                adp.substr(close + 1));
  } else {
    out.postpositions.push_back(adp);
  }
  return out;
}

std::vector<std::string> PvcEntry::licensed_postpositions() const {
  std::vector<std::string> out;
  auto push = [&out](const std::string& lemma) {
    if (std::find(out.begin(), out.end(), lemma) == out.end()) out.push_back(lemma);
  };
  for (const auto& p : postpositions) push(p);
  for (const auto& x : extra_postpositions) push(x.lemma);
  return out;
}

bool PvcEntry::licenses_postposition(std::string_view lemma) const {
  if (std::find(postpositions.begin(), postpositions.end(), lemma) != postpositions.end()) {
    return true;
  }
  return std::any_of(extra_postpositions.begin(), extra_postpositions.end(),
                     [&](const ExtraPostposition& x) { return x.lemma == lemma; });
}

bool PvcEntry::licenses_suffix(std::string_view form) const {
  return std::find(suffix_forms.begin(), suffix_forms.end(), form) != suffix_forms.end();
}

const PvcEntry* Lexicon::find(std::string_view stem) const {
  for (const auto& e : entries) {
    if (e.stem_hangul == stem) return &e;
  }
  return nullptr;
}

LexiconValidationError::LexiconValidationError(std::vector<Violation> violations)
    : Error([&] {
        std::ostringstream msg;
        msg << violations.size() << " lexicon violation(s)";
        for (const auto& v : violations) {
          msg << "\n  entry " << v.entry << " (" << v.stem << "): " << v.rule << ": " << v.message;
        }
        return msg.str();
      }()),
      violations_(std::move(violations)) {}

const Lexicon& builtin() {
  static const Lexicon lex = make_builtin();
  return lex;
}

std::vector<Violation> validate(const Lexicon& lex, const ValidationOptions& options) {
  std::vector<Violation> out;
  std::set<std::string> seen;
  for (std::size_t i = 0; i < lex.entries.size(); ++i) {
    const PvcEntry& e = lex.entries[i];
    auto flag = [&](std::string rule, std::string message) {
      out.push_back({i, e.stem_hangul, std::move(rule), std::move(message)});
    };

    bool stem_ok = !e.stem_hangul.empty() && utf8::find_invalid(e.stem_hangul) == std::string::npos;
    if (stem_ok) {
      for (char32_t cp : utf8::decode(e.stem_hangul)) {
        if (!hangul::is_syllable(cp)) stem_ok = false;
      }
    }
    if (!stem_ok) flag("stem-hangul", "stem must be a nonempty run of precomposed syllables");

    if (!seen.insert(e.stem_hangul).second) flag("stem-unique", "duplicate stem");

    if (e.postpositions.empty()) flag("postpositions-nonempty", "no postposition listed");
    for (const auto& p : e.postpositions) {
      if (!hangul::is_postposition_lemma(p)) flag("postposition-known", "unknown postposition '" + p + "'");
    }
    for (const auto& x : e.extra_postpositions) {
      if (!hangul::is_postposition_lemma(x.lemma)) {
        flag("postposition-known", "unknown extra postposition '" + x.lemma + "'");
      }
    }

    if (e.suffix_forms.empty()) flag("suffix-forms-nonempty", "no suffix form listed");
    for (const auto& s : e.suffix_forms) {
      if (!options.suffixes.contains(s)) flag("suffix-form-known", "unknown suffix form '" + s + "'");
    }

    if (e.predicative &&
        std::find(options.predicative_stems.begin(), options.predicative_stems.end(),
                  e.stem_hangul) == options.predicative_stems.end()) {
      flag("predicative-whitelist", "stem may not be marked predicative");
    }
  }
  return out;
}

Lexicon parse_lexicon(std::istream& in, LexiconFormat format) {
  return format == LexiconFormat::Tsv ? load_tsv(in) : load_json(in);
}

Lexicon load(std::istream& in, LexiconFormat format, const ValidationOptions& options) {
  Lexicon lex = parse_lexicon(in, format);
  auto violations = validate(lex, options);
  if (!violations.empty()) throw LexiconValidationError(std::move(violations));
  return lex;
}

void export_lexicon(const Lexicon& lex, std::ostream& out, LexiconFormat format) {
  if (format == LexiconFormat::Json) {
    nlohmann::ordered_json doc;
    doc["version"] = lex.version;
    doc["entries"] = nlohmann::ordered_json::array();
    for (const auto& e : lex.entries) {
      nlohmann::ordered_json j;
      j["stem_hangul"] = e.stem_hangul;
      j["stem_roman"] = e.stem_roman;
      j["postpositions"] = e.postpositions;
      j["extra_postpositions"] = nlohmann::ordered_json::array();
      for (const auto& x : e.extra_postpositions) {
        j["extra_postpositions"].push_back({{"lemma", x.lemma}, {"condition", x.condition}});
      }
      j["gloss"] = e.gloss;
      j["suffix_forms"] = e.suffix_forms;
      j["predicative"] = e.predicative;
      j["homonyms"] = nlohmann::ordered_json::array();
      for (const auto& h : e.homonyms) {
        j["homonyms"].push_back({{"pattern", h.pattern}, {"gloss", h.gloss}});
      }
      doc["entries"].push_back(std::move(j));
    }
    out << doc.dump(2) << '\n';
    return;
  }

  if (!lex.version.empty()) out << kVersionPrefix << lex.version << '\n';
  out << kLexiconTsvHeader << '\n';
  for (const auto& e : lex.entries) {
    out << e.stem_hangul << '\t' << e.stem_roman << '\t' << utf8::join(e.postpositions, ",") << '\t'
        << join_extras(e.extra_postpositions) << '\t' << e.gloss << '\t'
        << utf8::join(e.suffix_forms, ",") << '\t' << (e.predicative ? '1' : '0') << '\t'
        << join_homonyms(e.homonyms) << '\n';
  }
}

}  // namespace kpvc

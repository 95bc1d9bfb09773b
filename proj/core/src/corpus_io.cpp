#include "kpvc/corpus_io.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <iterator>
#include <map>
#include <optional>
#include <ostream>
#include <set>

#include "kpvc/error.hpp"
#include "kpvc/hangul.hpp"
#include "kpvc/utf8.hpp"

namespace kpvc {

namespace {

constexpr std::string_view kSentIdPrefix = "# sent_id = ";
constexpr std::string_view kTextPrefix = "# text = ";

bool is_terminal(char c) { return c == '.' || c == '?' || c == '!'; }

void strip_cr(std::string& line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
}

std::optional<std::size_t> parse_index(std::string_view s) {
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
  return value;
}

// The 하-contraction and final-jamo cases split_fused knows how to undo.
struct Contraction {
  std::u32string head;
  std::u32string rest;
};

std::optional<Contraction> contraction_of(char32_t syllable) {
  static const char32_t kHa = U'하';
  if (syllable == U'해') return Contraction{{kHa}, U"여"};
  if (syllable == U'했') return Contraction{{kHa}, U"였"};
  const auto parts = hangul::decompose(syllable);
  if (!parts) return std::nullopt;
  switch (parts->final) {
    case 4: case 8: case 16: case 17: {  // ㄴ ㄹ ㅁ ㅂ
      hangul::SyllableParts open = *parts;
      open.final = 0;
      return Contraction{{hangul::compose(open)}, {*hangul::final_jamo(parts->final)}};
    }
    default:
      return std::nullopt;
  }
}

bool is_verbal_tag(std::string_view tag) { return tag.starts_with("XSV") || tag.starts_with("V"); }

std::string join_eojeols(const std::vector<std::string>& eojeols) { return utf8::join(eojeols, " "); }

void check_column(const std::string& value, std::string_view what) {
  if (value.empty()) throw SerializationError("empty " + std::string(what) + " column");
  if (value.find_first_of("\t\n\r") != std::string::npos) {
    throw SerializationError(std::string(what) + " column contains a tab or newline");
  }
}

}  // namespace

std::size_t TaggedSentence::first_token(std::size_t e) const {
  const auto it = std::find_if(tokens.begin(), tokens.end(),
                               [e](const MorphToken& t) { return t.eojeol >= e; });
  if (it == tokens.end() || it->eojeol != e) return tokens.size();
  return static_cast<std::size_t>(it - tokens.begin());
}

std::size_t TaggedSentence::end_token(std::size_t e) const {
  const auto it = std::find_if(tokens.begin(), tokens.end(),
                               [e](const MorphToken& t) { return t.eojeol > e; });
  return static_cast<std::size_t>(it - tokens.begin());
}

// ---------------------------------------------------------------------------

std::vector<RawSentence> read_plain(std::istream& in) {
  const std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  if (const auto bad = utf8::find_invalid(text); bad != std::string::npos) throw DecodeError(bad);

  std::vector<RawSentence> out;
  RawSentence current;
  auto flush = [&] {
    if (current.eojeols.empty()) return;
    current.id = "s" + std::to_string(out.size() + 1);
    out.push_back(std::move(current));
    current = RawSentence{};
  };

  std::size_t line_start = 0;
  while (line_start <= text.size()) {
    std::size_t line_end = text.find('\n', line_start);
    if (line_end == std::string::npos) line_end = text.size();
    const std::string_view line(text.data() + line_start, line_end - line_start);
    for (auto& piece : utf8::split_whitespace(line, line_start)) {
      const bool terminal = is_terminal(piece.text.back());
      current.eojeols.push_back(std::move(piece.text));
      current.offsets.emplace_back(piece.begin, piece.end);
      if (terminal) flush();
    }
    flush();
    if (line_end == text.size()) break;
    line_start = line_end + 1;
  }
  return out;
}

// ---------------------------------------------------------------------------

std::vector<MorphToken> split_fused(std::string_view surface, std::string_view tags,
                                    std::size_t eojeol) {
  const auto tag_list = utf8::split(tags, '+');
  if (tag_list.size() <= 1 || std::any_of(tag_list.begin(), tag_list.end(),
                                          [](const std::string& t) { return t.empty(); })) {
    return {MorphToken{std::string(surface), std::string(tags), eojeol}};
  }

  const std::u32string syllables = utf8::decode(surface);
  std::vector<MorphToken> out;
  std::size_t cursor = 0;
  std::u32string carried;  // remainder of a contraction, owed to the next tag

  for (std::size_t i = 0; i + 1 < tag_list.size(); ++i) {
    std::u32string unit;
    if (!carried.empty()) {
      unit = std::move(carried);
      carried.clear();
    } else if (cursor < syllables.size()) {
      const char32_t s = syllables[cursor++];
      const bool contracts = is_verbal_tag(tag_list[i]) && tag_list[i + 1].starts_with("E");
      const auto c = contracts ? contraction_of(s) : std::nullopt;
      if (c) {
        unit = c->head;
        carried = c->rest;
      } else {
        unit = std::u32string(1, s);
      }
    } else {
      return {MorphToken{std::string(surface), std::string(tags), eojeol}};
    }
    out.push_back({utf8::encode(unit), tag_list[i], eojeol});
  }

  std::u32string last = carried + syllables.substr(std::min(cursor, syllables.size()));
  if (last.empty()) return {MorphToken{std::string(surface), std::string(tags), eojeol}};
  out.push_back({utf8::encode(last), tag_list.back(), eojeol});
  return out;
}

std::string realize(std::span<const std::string> surfaces) {
  std::u32string out;
  for (const auto& s : surfaces) {
    std::u32string piece = utf8::decode(s);
    if (!piece.empty() && !out.empty()) {
      const auto final = hangul::final_index_of(piece.front());
      auto parts = hangul::decompose(out.back());
      if (final && parts && parts->final == 0) {
        parts->final = *final;
        out.back() = hangul::compose(*parts);
        piece.erase(0, 1);
      }
    }
    out += piece;
  }
  return utf8::encode(out);
}

std::vector<TaggedSentence> read_tagged(std::istream& in) {
  std::vector<TaggedSentence> out;
  TaggedSentence current;
  std::optional<std::string> text_line;
  std::size_t text_lineno = 0;
  std::vector<std::vector<std::string>> pieces;  // original line surfaces per eojeol

  auto flush = [&] {
    if (current.tokens.empty()) {
      current = TaggedSentence{};
      text_line.reset();
      pieces.clear();
      return;
    }
    if (current.id.empty()) current.id = "s" + std::to_string(out.size() + 1);
    if (text_line) {
      for (auto& p : utf8::split_whitespace(*text_line)) current.eojeols.push_back(std::move(p.text));
      if (current.eojeols.size() != pieces.size()) {
        throw ParseError(text_lineno, "# text has " + std::to_string(current.eojeols.size()) +
                                          " eojeols but tokens span " +
                                          std::to_string(pieces.size()));
      }
    } else {
      for (const auto& p : pieces) current.eojeols.push_back(realize(p));
    }
    out.push_back(std::move(current));
    current = TaggedSentence{};
    text_line.reset();
    pieces.clear();
  };

  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    strip_cr(line);
    if (const auto bad = utf8::find_invalid(line); bad != std::string::npos) {
      throw ParseError(lineno, "invalid UTF-8 at byte " + std::to_string(bad));
    }
    if (line.empty()) {
      flush();
      continue;
    }
    if (line.front() == '#' && line.find('\t') == std::string::npos) {
      if (line.starts_with(kSentIdPrefix)) {
        current.id = line.substr(kSentIdPrefix.size());
      } else if (line.starts_with(kTextPrefix)) {
        text_line = line.substr(kTextPrefix.size());
        text_lineno = lineno;
      }
      continue;
    }
    const auto fields = utf8::split(line, '\t');
    if (fields.size() != 3) {
      throw ParseError(lineno, "expected 3 tab-separated columns, got " + std::to_string(fields.size()));
    }
    if (fields[0].empty()) throw ParseError(lineno, "empty surface");
    if (fields[1].empty()) throw ParseError(lineno, "empty tag");
    const auto index = parse_index(fields[2]);
    if (!index) throw ParseError(lineno, "eojeol index is not a non-negative integer: '" + fields[2] + "'");
    const std::size_t expected_new = pieces.size();
    if (pieces.empty() ? *index != 0 : (*index + 1 != expected_new && *index != expected_new)) {
      if (!pieces.empty() && *index + 1 < expected_new) {
        throw ParseError(lineno, "eojeol index decreases");
      }
      throw ParseError(lineno, "eojeol index must start at 0 and grow by at most 1");
    }
    if (*index == expected_new) pieces.emplace_back();
    pieces.back().push_back(fields[0]);
    for (auto& t : split_fused(fields[0], fields[1], *index)) current.tokens.push_back(std::move(t));
  }
  flush();
  return out;
}

void write_tagged(std::span<const TaggedSentence> sentences, std::ostream& out) {
  bool first = true;
  for (const auto& s : sentences) {
    if (!first) out << '\n';
    first = false;
    out << kSentIdPrefix << s.id << '\n';
    out << kTextPrefix << join_eojeols(s.eojeols) << '\n';
    for (const auto& t : s.tokens) out << t.surface << '\t' << t.tag << '\t' << t.eojeol << '\n';
  }
}

std::vector<TaggedSentence> read_conllu(std::istream& in) {
  std::vector<TaggedSentence> out;
  TaggedSentence current;
  std::size_t next_id = 1;

  auto flush = [&] {
    if (!current.tokens.empty()) {
      if (current.id.empty()) current.id = "s" + std::to_string(out.size() + 1);
      out.push_back(std::move(current));
    }
    current = TaggedSentence{};
    next_id = 1;
  };

  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    strip_cr(line);
    if (const auto bad = utf8::find_invalid(line); bad != std::string::npos) {
      throw ParseError(lineno, "invalid UTF-8 at byte " + std::to_string(bad));
    }
    if (line.empty()) {
      flush();
      continue;
    }
    if (line.front() == '#') {
      if (line.starts_with(kSentIdPrefix)) current.id = line.substr(kSentIdPrefix.size());
      continue;
    }
    const auto f = utf8::split(line, '\t');
    if (f.size() != 10) {
      throw ParseError(lineno, "expected 10 columns, got " + std::to_string(f.size()));
    }
    if (f[0].find_first_of("-.") != std::string::npos) continue;  // ranges and empty nodes
    const auto id = parse_index(f[0]);
    if (!id) throw ParseError(lineno, "malformed token id '" + f[0] + "'");
    if (*id != next_id) {
      throw ParseError(lineno, "token id " + f[0] + " out of sequence, expected " +
                                   std::to_string(next_id));
    }
    ++next_id;
    if (f[1].empty() || f[1] == "_") throw ParseError(lineno, "empty FORM");

    const std::size_t eojeol = current.eojeols.size();
    current.eojeols.push_back(f[1]);
    const std::string& tags = (f[4].empty() || f[4] == "_") ? f[3] : f[4];
    const auto tag_list = utf8::split(tags, '+');
    const auto lemma_list = utf8::split(f[2], '+');
    const bool lemma_usable =
        tag_list.size() > 1 && lemma_list.size() == tag_list.size() &&
        std::none_of(lemma_list.begin(), lemma_list.end(), [](const std::string& s) { return s.empty(); }) &&
        std::none_of(tag_list.begin(), tag_list.end(), [](const std::string& s) { return s.empty(); });
    if (lemma_usable) {
      for (std::size_t i = 0; i < tag_list.size(); ++i) {
        current.tokens.push_back({lemma_list[i], tag_list[i], eojeol});
      }
    } else {
      for (auto& t : split_fused(f[1], tags, eojeol)) current.tokens.push_back(std::move(t));
    }
  }
  flush();
  return out;
}

// ---------------------------------------------------------------------------

void write_cupt(std::span<const CuptSentence> sentences, std::ostream& out) {
  out << kCuptColumnsHeader << '\n';
  for (const auto& s : sentences) {
    std::vector<std::vector<std::string>> marks(s.rows.size());
    for (std::size_t m = 0; m < s.mwes.size(); ++m) {
      const MweAnnotation& mwe = s.mwes[m];
      if (mwe.id != static_cast<int>(m + 1)) {
        throw SerializationError("sentence " + s.id + ": MWE ids must be 1..k in order");
      }
      if (mwe.tokens.empty()) throw SerializationError("sentence " + s.id + ": MWE without tokens");
      if (mwe.category.empty() || mwe.category.find_first_of(":;*\t\n ") != std::string::npos) {
        throw SerializationError("sentence " + s.id + ": bad MWE category '" + mwe.category + "'");
      }
      for (std::size_t i = 0; i < mwe.tokens.size(); ++i) {
        const std::size_t t = mwe.tokens[i];
        if (t >= s.rows.size()) throw SerializationError("sentence " + s.id + ": MWE token out of range");
        if (i > 0 && t <= mwe.tokens[i - 1]) {
          throw SerializationError("sentence " + s.id + ": MWE tokens not ascending");
        }
        marks[t].push_back(i == 0 ? std::to_string(mwe.id) + ":" + mwe.category
                                  : std::to_string(mwe.id));
      }
    }

    if (!s.id.empty()) out << kSentIdPrefix << s.id << '\n';
    if (!s.text.empty()) out << kTextPrefix << s.text << '\n';
    for (std::size_t r = 0; r < s.rows.size(); ++r) {
      for (std::size_t c = 0; c < s.rows[r].size(); ++c) {
        check_column(s.rows[r][c], "cupt");
        out << s.rows[r][c] << '\t';
      }
      out << (marks[r].empty() ? std::string("*") : utf8::join(marks[r], ";")) << '\n';
    }
    out << '\n';
  }
}

std::vector<CuptSentence> read_cupt(std::istream& in) {
  std::vector<CuptSentence> out;
  CuptSentence current;
  std::map<int, MweAnnotation> mwes;
  std::size_t lineno = 0;

  auto flush = [&] {
    if (!current.rows.empty()) {
      int expected = 1;
      for (auto& [id, mwe] : mwes) {
        if (id != expected++) throw ParseError(lineno, "MWE ids are not consecutive in " + current.id);
        if (mwe.category.empty()) throw ParseError(lineno, "MWE " + std::to_string(id) + " has no category");
        current.mwes.push_back(std::move(mwe));
      }
      out.push_back(std::move(current));
    }
    current = CuptSentence{};
    mwes.clear();
  };

  std::string line;
  while (std::getline(in, line)) {
    ++lineno;
    strip_cr(line);
    if (line.empty()) {
      flush();
      continue;
    }
    if (line.front() == '#') {
      if (line.starts_with(kSentIdPrefix)) current.id = line.substr(kSentIdPrefix.size());
      else if (line.starts_with(kTextPrefix)) current.text = line.substr(kTextPrefix.size());
      continue;
    }
    const auto f = utf8::split(line, '\t');
    if (f.size() != 11) throw ParseError(lineno, "expected 11 columns, got " + std::to_string(f.size()));
    CuptRow row;
    std::copy_n(f.begin(), 10, row.begin());
    const std::size_t index = current.rows.size();
    current.rows.push_back(std::move(row));
    if (f[10] == "*" || f[10] == "_") continue;
    for (const auto& code : utf8::split(f[10], ';')) {
      const auto colon = code.find(':');
      const auto id = parse_index(std::string_view(code).substr(0, colon));
      if (!id || *id == 0) throw ParseError(lineno, "malformed MWE code '" + code + "'");
      auto& mwe = mwes[static_cast<int>(*id)];
      mwe.id = static_cast<int>(*id);
      if (colon != std::string::npos) {
        if (!mwe.tokens.empty()) throw ParseError(lineno, "MWE category not on the first token");
        mwe.category = code.substr(colon + 1);
      } else if (mwe.tokens.empty()) {
        throw ParseError(lineno, "first token of MWE " + code + " lacks a category");
      }
      mwe.tokens.push_back(index);
    }
  }
  flush();
  return out;
}

}  // namespace kpvc

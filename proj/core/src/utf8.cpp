#include "kpvc/utf8.hpp"

#include <boost/locale/utf.hpp>

#include "kpvc/error.hpp"

namespace kpvc::utf8 {

namespace butf = boost::locale::utf;
using Traits = butf::utf_traits<char>;

std::u32string decode(std::string_view text) {
  std::u32string out;
  out.reserve(text.size());
  const char* p = text.data();
  const char* const end = p + text.size();
  while (p != end) {
    const char* start = p;
    butf::code_point cp = Traits::decode(p, end);
    if (cp == butf::illegal || cp == butf::incomplete) {
      throw DecodeError(static_cast<std::size_t>(start - text.data()));
    }
    out.push_back(static_cast<char32_t>(cp));
  }
  return out;
}

std::string encode(char32_t cp) {
  std::string out;
  Traits::encode(static_cast<butf::code_point>(cp), std::back_inserter(out));
  return out;
}

std::string encode(std::u32string_view text) {
  std::string out;
  out.reserve(text.size() * 3);
  for (char32_t cp : text) {
    Traits::encode(static_cast<butf::code_point>(cp), std::back_inserter(out));
  }
  return out;
}

std::size_t find_invalid(std::string_view text) {
  const char* p = text.data();
  const char* const end = p + text.size();
  while (p != end) {
    const char* start = p;
    butf::code_point cp = Traits::decode(p, end);
    if (cp == butf::illegal || cp == butf::incomplete) {
      return static_cast<std::size_t>(start - text.data());
    }
  }
  return std::string_view::npos;
}

char32_t last_code_point(std::string_view text) {
  std::size_t i = text.size();
  while (i > 0 && Traits::is_trail(text[i - 1])) --i;
  if (i == 0) throw DecodeError(0);
  --i;
  const char* p = text.data() + i;
  butf::code_point cp = Traits::decode(p, text.data() + text.size());
  if (cp == butf::illegal || cp == butf::incomplete) throw DecodeError(i);
  return static_cast<char32_t>(cp);
}

std::size_t length(std::string_view text) {
  std::size_t n = 0;
  for (char c : text) {
    if (!Traits::is_trail(c)) ++n;
  }
  return n;
}

bool is_space(char32_t cp) {
  switch (cp) {
    case 0x09: case 0x0A: case 0x0B: case 0x0C: case 0x0D: case 0x20:
    case 0x85: case 0xA0: case 0x1680:
    case 0x2028: case 0x2029: case 0x202F: case 0x205F: case 0x3000:
      return true;
    default:
      return cp >= 0x2000 && cp <= 0x200A;
  }
}

std::vector<Piece> split_whitespace(std::string_view text, std::size_t base) {
  std::vector<Piece> pieces;
  const char* const begin = text.data();
  const char* p = begin;
  const char* const end = begin + text.size();
  const char* word = nullptr;
  while (p != end) {
    const char* start = p;
    butf::code_point cp = Traits::decode(p, end);
    if (cp == butf::illegal || cp == butf::incomplete) {
      throw DecodeError(base + static_cast<std::size_t>(start - begin));
    }
    if (is_space(static_cast<char32_t>(cp))) {
      if (word != nullptr) {
        pieces.push_back({std::string(word, start), base + static_cast<std::size_t>(word - begin),
                          base + static_cast<std::size_t>(start - begin)});
        word = nullptr;
      }
    } else if (word == nullptr) {
      word = start;
    }
  }
  if (word != nullptr) {
    pieces.push_back({std::string(word, end), base + static_cast<std::size_t>(word - begin),
                      base + text.size()});
  }
  return pieces;
}

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = text.find(sep, start);
    if (pos == std::string_view::npos) {
      out.emplace_back(text.substr(start));
      return out;
    }
    out.emplace_back(text.substr(start, pos - start));
    start = pos + 1;
  }
}

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += sep;
    out += parts[i];
  }
  return out;
}

}  // namespace kpvc::utf8

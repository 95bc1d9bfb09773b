#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace kpvc::utf8 {

/// Decodes a whole UTF-8 string. Throws DecodeError with the offending byte offset.
std::u32string decode(std::string_view text);

std::string encode(char32_t cp);
std::string encode(std::u32string_view text);

/// Byte offset of the first invalid sequence, or npos when `text` is valid UTF-8.
std::size_t find_invalid(std::string_view text);

/// Last code point of a nonempty valid UTF-8 string.
char32_t last_code_point(std::string_view text);

std::size_t length(std::string_view text);

bool is_space(char32_t cp);

struct Piece {
  std::string text;
  std::size_t begin = 0;  // byte offsets into the source
  std::size_t end = 0;
};

/// Splits on Unicode whitespace, recording byte offsets relative to `base`.
std::vector<Piece> split_whitespace(std::string_view text, std::size_t base = 0);

std::vector<std::string> split(std::string_view text, char sep);

std::string join(const std::vector<std::string>& parts, std::string_view sep);

}  // namespace kpvc::utf8

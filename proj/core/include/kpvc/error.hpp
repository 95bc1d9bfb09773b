#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kpvc {

/// Base class for every error raised by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input record. `line` is 1-based; 0 when unknown.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Invalid UTF-8 in an input stream.
class DecodeError : public Error {
 public:
  explicit DecodeError(std::size_t byte_offset)
      : Error("invalid UTF-8 at byte offset " + std::to_string(byte_offset)),
        byte_offset_(byte_offset) {}

  std::size_t byte_offset() const noexcept { return byte_offset_; }

 private:
  std::size_t byte_offset_;
};

class UnknownPostposition : public Error {
 public:
  explicit UnknownPostposition(const std::string& lemma)
      : Error("unknown postposition: " + lemma) {}
};

class SerializationError : public Error {
 public:
  using Error::Error;
};

class AnnotationConflict : public Error {
 public:
  using Error::Error;
};

/// A match was handed to the classifier together with a sentence it was not produced from.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

class UndefinedScore : public Error {
 public:
  using Error::Error;
};

}  // namespace kpvc

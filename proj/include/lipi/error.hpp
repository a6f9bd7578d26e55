#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lipi {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Filesystem failures.
class IoError : public Error {
 public:
  using Error::Error;
};

/// Malformed or inconsistent table / lexicon input. The message names the
/// file and line where one applies.
class TableError : public Error {
 public:
  using Error::Error;
};

class UnmappedGrapheme : public Error {
 public:
  UnmappedGrapheme(char32_t cp, std::size_t position);
  char32_t code_point() const { return cp_; }
  std::size_t position() const { return position_; }

 private:
  char32_t cp_;
  std::size_t position_;
};

class UnknownPhoneme : public Error {
 public:
  explicit UnknownPhoneme(std::string id);
  const std::string& id() const { return id_; }

 private:
  std::string id_;
};

class NoPreimage : public Error {
 public:
  using Error::Error;
};

}  // namespace lipi

#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace sahl {

enum class ErrorKind {
  Parse,
  InvalidArgument,
  NotInClass,
  NotUniform,
  NotRegularAntecedent,
  CyclicDigraph,
  ConjunctCap,
  Unsupported,
  SharedLetters,
  ResourceCap,
  UnboundVariable,
  NotMeetPreserving,
  NotResiduated,
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, std::vector<std::string> expected, std::string found);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }
  const std::string& found() const noexcept { return found_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::vector<std::string> expected_;
  std::string found_;
};

}  // namespace sahl

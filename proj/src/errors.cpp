#include "errors.hpp"

#include <sstream>

namespace sahl {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::NotInClass: return "NotInClass";
    case ErrorKind::NotUniform: return "NotUniform";
    case ErrorKind::NotRegularAntecedent: return "NotRegularAntecedent";
    case ErrorKind::CyclicDigraph: return "CyclicDigraph";
    case ErrorKind::ConjunctCap: return "ConjunctCap";
    case ErrorKind::Unsupported: return "Unsupported";
    case ErrorKind::SharedLetters: return "SharedLetters";
    case ErrorKind::ResourceCap: return "ResourceCap";
    case ErrorKind::UnboundVariable: return "UnboundVariable";
    case ErrorKind::NotMeetPreserving: return "NotMeetPreserving";
    case ErrorKind::NotResiduated: return "NotResiduated";
  }
  return "Error";
}

namespace {

std::string parse_message(std::size_t line, std::size_t column, const std::vector<std::string>& expected,
                          const std::string& found) {
  std::ostringstream os;
  os << "syntax error at " << line << ":" << column << ": expected ";
  if (expected.size() == 1) {
    os << expected.front();
  } else {
    os << "one of ";
    for (std::size_t i = 0; i < expected.size(); ++i) os << (i ? ", " : "") << expected[i];
  }
  os << ", found " << found;
  return os.str();
}

}  // namespace

ParseError::ParseError(std::size_t line, std::size_t column, std::vector<std::string> expected, std::string found)
    : Error(ErrorKind::Parse, parse_message(line, column, expected, found)),
      line_(line),
      column_(column),
      expected_(std::move(expected)),
      found_(std::move(found)) {}

}  // namespace sahl

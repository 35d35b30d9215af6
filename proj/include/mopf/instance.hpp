#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mopf/poset.hpp"
#include "mopf/rational.hpp"

namespace mopf {

struct SourceLocation {
  int line = 0;
  int column = 0;
};

/// Syntactic content of an instance file, with token locations kept for
/// error reporting.
///
///   elements: <label> <label> ...
///   cover: <a> <b>               # a is covered by b
///   marked: <label> <rational>   # integer or num/den
///
/// '#' starts a comment; blank lines are ignored; directives may repeat.
struct InstanceFile {
  template <typename T>
  struct Located {
    T value;
    SourceLocation where;
  };

  std::string source;  // path or "<input>"
  std::vector<Located<std::string>> elements;
  std::vector<Located<std::pair<std::string, std::string>>> covers;
  std::vector<Located<std::pair<std::string, Rational>>> marks;
};

/// Tokenizes and checks the syntax. Throws Error{Parse} with "source:line:col".
InstanceFile parse_instance_file(std::string_view text, std::string source = "<input>");

/// Builds and validates the marked poset; validation errors are rethrown
/// with the location of the offending token.
MarkedPoset to_marked_poset(const InstanceFile& file);

inline MarkedPoset parse_instance(std::string_view text, std::string source = "<input>") {
  return to_marked_poset(parse_instance_file(text, std::move(source)));
}

/// Reads a file from disk; throws Error{Parse} when it cannot be opened.
MarkedPoset load_instance(const std::string& path);

/// Canonical text form: one elements line, one line per Hasse cover, one line
/// per mark.
std::string emit_instance(const MarkedPoset& mp);

}  // namespace mopf

#include "mopf/instance.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "mopf/error.hpp"

namespace mopf {

namespace {

std::string where(const std::string& source, SourceLocation loc) {
  return source + ":" + std::to_string(loc.line) + ":" + std::to_string(loc.column);
}

struct Token {
  std::string_view text;
  int column;  // 1-based
};

std::vector<Token> split(std::string_view line, int offset) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back(Token{line.substr(start, i - start), offset + static_cast<int>(start) + 1});
  }
  return out;
}

}  // namespace

InstanceFile parse_instance_file(std::string_view text, std::string source) {
  InstanceFile file;
  file.source = std::move(source);
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

    const auto tokens = split(line, 0);
    if (tokens.empty()) {
      if (end == text.size()) break;
      continue;
    }
    auto fail = [&](const Token& t, const std::string& msg) -> void {
      throw Error(ErrorKind::Parse, where(file.source, {line_no, t.column}) + ": " + msg);
    };

    const Token& head = tokens.front();
    const auto colon = head.text.find(':');
    if (colon == std::string_view::npos || colon + 1 != head.text.size())
      fail(head, "expected 'elements:', 'cover:' or 'marked:'");
    const std::string_view directive = head.text.substr(0, colon);
    const std::vector<Token> args(tokens.begin() + 1, tokens.end());

    if (directive == "elements") {
      if (args.empty()) fail(head, "'elements:' needs at least one label");
      for (const auto& t : args)
        file.elements.push_back({std::string(t.text), {line_no, t.column}});
    } else if (directive == "cover") {
      if (args.size() != 2) fail(head, "'cover:' takes exactly two labels");
      file.covers.push_back(
          {{std::string(args[0].text), std::string(args[1].text)}, {line_no, args[0].column}});
    } else if (directive == "marked") {
      if (args.size() != 2) fail(head, "'marked:' takes a label and a rational value");
      const auto value = parse_rational(args[1].text);
      if (!value) fail(args[1], "'" + std::string(args[1].text) + "' is not a rational (expected n or n/d)");
      file.marks.push_back({{std::string(args[0].text), *value}, {line_no, args[0].column}});
    } else {
      fail(head, "unknown directive '" + std::string(directive) + "'");
    }
    if (end == text.size()) break;
  }
  return file;
}

MarkedPoset to_marked_poset(const InstanceFile& file) {
  std::map<std::string, SourceLocation> declared;
  std::vector<std::string> labels;
  for (const auto& e : file.elements) {
    if (!declared.emplace(e.value, e.where).second)
      throw Error(ErrorKind::DuplicateLabel,
                  where(file.source, e.where) + ": duplicate element label '" + e.value + "'", e.value);
    labels.push_back(e.value);
  }
  auto require = [&](const std::string& label, SourceLocation loc) {
    if (!declared.count(label))
      throw Error(ErrorKind::UnknownLabel, where(file.source, loc) + ": unknown element label '" + label + "'",
                  label);
  };

  std::vector<std::pair<std::string, std::string>> covers;
  for (const auto& c : file.covers) {
    require(c.value.first, c.where);
    require(c.value.second, c.where);
    covers.push_back(c.value);
  }
  std::vector<std::pair<std::string, Rational>> marks;
  std::set<std::string> marked;
  for (const auto& m : file.marks) {
    require(m.value.first, m.where);
    if (!marked.insert(m.value.first).second)
      throw Error(ErrorKind::DuplicateLabel,
                  where(file.source, m.where) + ": element '" + m.value.first + "' marked twice", m.value.first);
    marks.push_back(m.value);
  }

  Poset poset = [&] {
    try {
      return build_poset(labels, covers);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::Cycle) throw;
      // Point at the first cover whose endpoints lie on a common cycle.
      std::map<std::string, std::vector<std::string>> succ;
      for (const auto& [a, b] : covers) succ[a].push_back(b);
      auto reaches = [&](const std::string& from, const std::string& to) {
        std::set<std::string> seen{from};
        std::vector<std::string> stack{from};
        while (!stack.empty()) {
          const std::string x = stack.back();
          stack.pop_back();
          if (x == to) return true;
          for (const auto& y : succ[x])
            if (seen.insert(y).second) stack.push_back(y);
        }
        return false;
      };
      for (const auto& c : file.covers)
        if (reaches(c.value.second, c.value.first))
          throw Error(ErrorKind::Cycle, where(file.source, c.where) + ": " + e.what(), c.value.first);
      throw;
    }
  }();

  try {
    return build_marked_poset(std::move(poset), marks);
  } catch (const Error& e) {
    SourceLocation loc{};
    if (e.kind() == ErrorKind::ExtremalNotMarked) {
      loc = declared.at(e.subject());
    } else {
      for (const auto& m : file.marks)
        if (m.value.first == e.subject()) loc = m.where;
    }
    throw Error(e.kind(), where(file.source, loc) + ": " + e.what(), e.subject());
  }
}

MarkedPoset load_instance(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Parse, path + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_instance(buf.str(), path);
}

std::string emit_instance(const MarkedPoset& mp) {
  const Poset& poset = mp.poset();
  std::ostringstream out;
  out << "elements:";
  for (const auto& l : poset.labels()) out << ' ' << l;
  out << '\n';
  for (const auto& [a, b] : poset.covers()) out << "cover: " << poset.label(a) << ' ' << poset.label(b) << '\n';
  for (int x : mp.marked().elements()) out << "marked: " << poset.label(x) << ' ' << format_rational(mp.value(x)) << '\n';
  return out.str();
}

}  // namespace mopf

#include <cctype>
#include <map>
#include <sstream>

#include "chkit/diagram.hpp"

namespace chkit {

namespace {

struct Cursor {
  const std::string& s;
  size_t pos = 0;
  int line;
  void skip_ws() {
    while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= s.size();
  }
  int col() const { return static_cast<int>(pos) + 1; }
  std::string token(const char* what) {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) ||
                              s[pos] == '_' || s[pos] == '-' || s[pos] == '.'))
      ++pos;
    if (pos == start)
      throw ParseError(std::string("expected ") + what, line, col());
    return s.substr(start, pos - start);
  }
  void expect(char c) {
    skip_ws();
    if (pos >= s.size() || s[pos] != c)
      throw ParseError(std::string("expected '") + c + "'", line, col());
    ++pos;
  }
};

}  // namespace

Diagram parse_mgd(const std::string& text) {
  Diagram d;
  std::map<std::string, std::vector<SlotRef>> edge_uses;
  std::map<std::string, int> node_names;

  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = raw;
    size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    Cursor cur{line, 0, lineno};
    if (cur.done()) continue;
    std::string head = cur.token("statement");
    if (head == "loops") {
      std::string num = cur.token("loop count");
      int v = 0;
      for (char c : num) {
        if (!std::isdigit(static_cast<unsigned char>(c)))
          throw ParseError("loop count must be a nonnegative integer", lineno, cur.col());
        v = v * 10 + (c - '0');
      }
      d.free_loops += v;
    } else if (head == "node") {
      std::string name = cur.token("node name");
      if (node_names.count(name))
        throw ParseError("duplicate node name '" + name + "'", lineno, cur.col());
      cur.expect('=');
      std::string kind = cur.token("node kind");
      NodeKind k;
      if (kind == "X")
        k = NodeKind::Crossing;
      else if (kind == "M")
        k = NodeKind::MarkedVertex;
      else
        throw ParseError("node kind must be X or M", lineno, cur.col());
      cur.expect('(');
      Node node;
      node.kind = k;
      int id = static_cast<int>(d.nodes.size());
      node_names[name] = id;
      for (int s = 0; s < 4; ++s) {
        if (s) cur.expect(',');
        std::string tok = cur.token("edge label");
        edge_uses[tok].push_back({id, s});
        node.edge[s] = -1;
      }
      cur.expect(')');
      if (!cur.done()) {
        // a fifth slot or trailing junk is an arity violation
        throw ParseError("trailing input after node statement", lineno, cur.col());
      }
      d.nodes.push_back(node);
    } else {
      throw ParseError("unknown statement '" + head + "'", lineno, 1);
    }
  }

  for (const auto& [tok, uses] : edge_uses) {
    if (uses.size() != 2)
      throw ParseError("edge label '" + tok + "' used " + std::to_string(uses.size()) +
                           " times (need exactly 2)",
                       lineno, 1);
    int e = static_cast<int>(d.edges.size());
    d.edges.push_back({uses[0], uses[1]});
    d.nodes[uses[0].node].edge[uses[0].slot] = e;
    d.nodes[uses[1].node].edge[uses[1].slot] = e;
  }
  d.check_valid();
  return d;
}

}  // namespace chkit

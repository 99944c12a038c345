#pragma once

#include <optional>
#include <string>
#include <vector>

#include "chkit/diagram.hpp"
#include "chkit/verdict.hpp"

namespace chkit {

struct LibraryEntry {
  std::string name;
  std::string file;
  int euler = 0;
  int surface_comps = 0;
  Tri admissible = Tri::Yes;
  bool marked = true;  // false: classical corpus entry, admissibility not expected
};

const std::vector<LibraryEntry>& diagram_library();
std::optional<LibraryEntry> library_entry(const std::string& name);
Diagram library_diagram(const std::string& name);
std::string library_source(const std::string& name);

// ch-diagram corpus used by the randomized move suites
std::vector<std::string> ch_corpus();
// vertex-free corpus for the classical oracle checks
std::vector<std::string> classical_corpus();

}  // namespace chkit

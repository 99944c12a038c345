#include "chkit/library.hpp"

#include <map>
#include <stdexcept>

namespace chkit {

const std::map<std::string, std::string>& embedded_data();

const std::vector<LibraryEntry>& diagram_library() {
  static const std::vector<LibraryEntry> entries = {
      {"unknot", "diagrams/unknot.mgd", 2, 1, Tri::Yes, true},
      {"sphere_pinched", "diagrams/sphere_pinched.mgd", 2, 1, Tri::Yes, true},
      {"sphere_tube", "diagrams/sphere_tube.mgd", 2, 1, Tri::Yes, true},
      {"torus", "diagrams/torus.mgd", 0, 1, Tri::Yes, true},
      {"p2_plus", "diagrams/p2_plus.mgd", 1, 1, Tri::Yes, true},
      {"p2_minus", "diagrams/p2_minus.mgd", 1, 1, Tri::Yes, true},
      {"klein_bottle", "diagrams/klein_bottle.mgd", 0, 1, Tri::Yes, true},
      {"omega4_demo", "diagrams/omega4_demo.mgd", 4, 2, Tri::Yes, true},
      {"d1", "diagrams/d1.mgd", 3, 2, Tri::Yes, true},
      {"d2", "diagrams/d2.mgd", 3, 2, Tri::Yes, true},
      {"trefoil", "diagrams/trefoil.mgd", 0, 1, Tri::No, false},
      {"fig8", "diagrams/fig8.mgd", 0, 1, Tri::No, false},
      {"hopf", "diagrams/hopf.mgd", 0, 2, Tri::No, false},
      {"unlink2", "diagrams/unlink2.mgd", 0, 2, Tri::Yes, false},
      {"kink", "diagrams/kink.mgd", 0, 1, Tri::Yes, false},
  };
  return entries;
}

std::optional<LibraryEntry> library_entry(const std::string& name) {
  for (const auto& e : diagram_library())
    if (e.name == name) return e;
  return std::nullopt;
}

std::string library_source(const std::string& name) {
  auto e = library_entry(name);
  if (!e) throw std::invalid_argument("unknown built-in diagram: " + name);
  auto it = embedded_data().find(e->file);
  if (it == embedded_data().end()) throw std::runtime_error("missing data file: " + e->file);
  return it->second;
}

Diagram library_diagram(const std::string& name) { return parse_mgd(library_source(name)); }

std::vector<std::string> ch_corpus() {
  return {"unknot",   "sphere_pinched", "sphere_tube", "torus", "p2_plus",
          "p2_minus", "klein_bottle",   "omega4_demo", "d1",    "d2"};
}

std::vector<std::string> classical_corpus() {
  return {"trefoil", "fig8", "hopf", "unlink2", "kink"};
}

}  // namespace chkit

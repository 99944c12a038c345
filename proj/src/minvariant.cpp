#include "chkit/minvariant.hpp"

namespace chkit {

MInvariant minvariant(const Diagram& d, const MInvariantOptions& opt) {
  MInvariant out;
  Diagram c = canonical(d);
  if (opt.check_admissibility) out.admissibility = is_admissible(c, opt.admissibility_budget);

  for (const Orientation& o : enumerate_orientations(c)) {
    Diagram w = mirror_cut(c, o, opt.twist_rule);
    Presentation p = tietze_simplify(wirtinger_presentation(w));
    IdealFingerprint fp = elementary_ideal(p, component_varmap(p), opt.k, opt.shifted_convention);
    MInvariantEntry e;
    e.bits = o.bits;
    e.fp = std::move(fp);
    out.per_orientation.push_back(std::move(e));
  }

  for (const auto& e : out.per_orientation) {
    bool dup = false;
    for (const auto& f : out.set) {
      if (f.text() == e.fp.text() || fingerprint_equal(f, e.fp).verdict == Tri::Yes) {
        dup = true;
        break;
      }
    }
    if (!dup) out.set.push_back(e.fp);
  }
  return out;
}

CompareResult minvariant_equal(const MInvariant& a, const MInvariant& b) {
  return fingerprint_sets_equal(a.set, b.set);
}

}  // namespace chkit

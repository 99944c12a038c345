#pragma once

#include <vector>

#include "chkit/diagram.hpp"
#include "chkit/fingerprint.hpp"
#include "chkit/group.hpp"
#include "chkit/orient.hpp"
#include "chkit/simplify.hpp"

namespace chkit {

struct MInvariantEntry {
  std::vector<int> bits;
  IdealFingerprint fp;
};

struct MInvariant {
  std::vector<MInvariantEntry> per_orientation;  // binary-counter order
  std::vector<IdealFingerprint> set;             // deduplicated
  Tri admissibility = Tri::Unknown;              // warning channel, not failure
};

struct MInvariantOptions {
  int k = 1;
  bool shifted_convention = false;
  TwistRule twist_rule;
  int admissibility_budget = 20000;
  bool check_admissibility = true;
};

// For every orientation of L-(D): build W(D), present its group, simplify,
// and take the k-th elementary ideal fingerprint.
MInvariant minvariant(const Diagram& d, const MInvariantOptions& opt = {});

CompareResult minvariant_equal(const MInvariant& a, const MInvariant& b);

}  // namespace chkit

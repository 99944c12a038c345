#pragma once

#include <string>
#include <vector>

#include "chkit/diagram.hpp"
#include "chkit/fingerprint.hpp"
#include "chkit/laurent.hpp"

namespace chkit {

// Word in group generators: sequence of (generator, +1/-1).
using Word = std::vector<std::pair<int, int>>;

struct Presentation {
  int generators = 0;
  std::vector<int> component;  // surface component per generator
  int components = 0;
  std::vector<Word> relators;

  std::string text() const;  // deterministic serialization
};

// Wirtinger-style presentation of the group of S(D): one generator per arc
// (arcs break at under-crossings and at marked vertices) plus one per free
// loop; the conjugation relation at each crossing and three channel
// relations at each marked vertex, which are independent of the marker
// orientation.  `flip` optionally reverses chosen arc orientations (the
// fingerprints downstream must not depend on this).
Presentation wirtinger_presentation(const Diagram& d, const std::vector<bool>* flip = nullptr);

// Rotates each listed vertex's marker by 90 degrees (cyclic slot shift).
Diagram marker_switch(const Diagram& d, const std::vector<int>& vertices);

// Generator merges from length-2 relators plus cleanup; Tietze moves only.
Presentation tietze_simplify(const Presentation& p, int budget = 10000);

// Invariant factors of the abelianization: torsion entries (>1) then one 0
// per free factor.
std::vector<mpz_class> abelianization_fingerprint(const Presentation& p);

struct VarMap {
  int arity = 0;
  std::vector<int> var_of_gen;
  std::vector<int> exp_of_gen;  // +1 or -1
};

VarMap component_varmap(const Presentation& p);

// Fox free-derivative matrix under the abelianization variable map: one row
// per relator, one column per generator.
LaurentMatrix fox_jacobian(const Presentation& p, const VarMap& vm);

struct SizeError : std::runtime_error {
  explicit SizeError(const std::string& m) : std::runtime_error(m) {}
};

// E_k from the (g-k)-minors of the Jacobian; with `shifted_convention` uses
// (g-k-1)-minors instead (the calibration alternative).  E_k = <1> when the
// minor size is <= 0; the zero ideal when no minor of that size exists.
IdealFingerprint elementary_ideal(const Presentation& p, const VarMap& vm, int k,
                                  bool shifted_convention = false);

// Fox derivative d(word)/d(gen) as a Laurent polynomial; exposed for tests.
LaurentPoly fox_derivative(const Word& w, int gen, const VarMap& vm);

}  // namespace chkit

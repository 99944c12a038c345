#pragma once

#include <optional>
#include <string>
#include <vector>

#include "chkit/laurent.hpp"
#include "chkit/verdict.hpp"

namespace chkit {

// One evaluation-panel row: integer point, gcd of the evaluated generators,
// and that gcd reduced modulo each panel prime.
struct EvalEntry {
  std::vector<int> point;
  mpz_class gcd;
  std::vector<int> mod_primes;
};

struct EvalPanel {
  std::vector<int> coords = {-2, -1, 2, 3, 5};
  std::vector<int> primes = {2, 3, 5, 7, 11, 13};
};

// Normalized generating set of an ideal in ZZ[x1^, .., xk^] together with an
// evaluation table.  Generators are canonicalized up to unit monomials and
// up to the variable symmetries (permutation and inversion x -> x^-1), which
// absorbs the orientation and component-order conventions upstream.
struct IdealFingerprint {
  int arity = 0;
  std::vector<LaurentPoly> gens;  // sorted canonical forms; empty = zero ideal
  LaurentPoly gcd;
  std::vector<EvalEntry> table;

  bool is_zero() const { return gens.empty(); }
  bool is_unit() const;
  std::string text() const;  // canonical serialization, bit-stable
};

// `arity_hint` keeps the variable count on fingerprints whose generator
// list collapses to nothing (the zero ideal).
IdealFingerprint ideal_fingerprint(std::vector<LaurentPoly> gens, int arity_hint = -1,
                                   const EvalPanel& panel = EvalPanel());

struct CompareResult {
  Tri verdict = Tri::Unknown;  // Yes = Equal, No = Distinct
  std::string witness;         // evaluation point for Distinct
};

CompareResult fingerprint_equal(const IdealFingerprint& a, const IdealFingerprint& b,
                                const EvalPanel& panel = EvalPanel());

// Matches two fingerprint sets elementwise with fingerprint_equal.
CompareResult fingerprint_sets_equal(const std::vector<IdealFingerprint>& a,
                                     const std::vector<IdealFingerprint>& b);

// Rational-coefficient Groebner machinery used for the membership checks.
// Exposed mainly for tests.
namespace qpoly {

struct QPoly {
  int arity = 0;
  std::map<Exponents, mpq_class> terms;
};

QPoly from_laurent(const LaurentPoly& p);
QPoly reduce(const QPoly& p, const std::vector<QPoly>& basis);
std::optional<std::vector<QPoly>> groebner(std::vector<QPoly> gens, int max_basis = 64);
bool is_zero(const QPoly& p);

}  // namespace qpoly

}  // namespace chkit

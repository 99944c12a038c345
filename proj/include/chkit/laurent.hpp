#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace chkit {

using Exponents = std::vector<int>;

// Multivariate Laurent polynomial with exact integer coefficients.
// Terms are keyed by exponent vectors (one coordinate per variable);
// zero coefficients are never stored.
class LaurentPoly {
 public:
  LaurentPoly() : arity_(0) {}
  explicit LaurentPoly(int arity) : arity_(arity) {}

  static LaurentPoly constant(int arity, const mpz_class& c);
  static LaurentPoly variable(int arity, int index, int power = 1);
  static LaurentPoly monomial(int arity, const Exponents& e, const mpz_class& c);

  int arity() const { return arity_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Exponents, mpz_class>& terms() const { return terms_; }

  void add_term(const Exponents& e, const mpz_class& c);

  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly operator-() const;
  bool operator==(const LaurentPoly& o) const {
    return arity_ == o.arity_ && terms_ == o.terms_;
  }

  // Multiplies by the unique +/- monomial that shifts every variable's
  // minimal exponent to zero and makes the grlex-leading coefficient
  // positive.  Idempotent.
  LaurentPoly normalized() const;

  // Substitution x_i -> x_i^{-1} on the chosen variables, and/or a
  // permutation of the variables: perm[i] = new index of old variable i.
  LaurentPoly transformed(const std::vector<int>& perm,
                          const std::vector<bool>& invert) const;

  mpz_class evaluate(const std::vector<mpz_class>& point) const;
  mpz_class content() const;  // gcd of coefficients, nonnegative; 0 for zero poly

  // Grlex-leading term (after conceptually shifting exponents nonnegative;
  // the comparison itself works on raw exponents).
  std::pair<Exponents, mpz_class> leading_term() const;

  int total_degree_span() const;  // max total degree minus min, crude size hint

  std::string to_string() const;  // uses t / x,y / x1..xk aliases

  static std::string var_name(int arity, int index);

 private:
  int arity_;
  std::map<Exponents, mpz_class> terms_;
};

bool grlex_less(const Exponents& a, const Exponents& b);

// Polynomial gcd over ZZ (primitive-PRS), up to unit-monomial normalization.
LaurentPoly laurent_gcd(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly laurent_gcd(const std::vector<LaurentPoly>& gens);

// Divides p by the divisor list using only exact integer steps (a reduction
// step requires the divisor's leading coefficient to divide the target's).
// Returns the remainder.
LaurentPoly reduce_integer(const LaurentPoly& p, const std::vector<LaurentPoly>& divisors);

struct LaurentMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<LaurentPoly> entries;  // row-major

  LaurentPoly& at(int r, int c) { return entries[r * cols + c]; }
  const LaurentPoly& at(int r, int c) const { return entries[r * cols + c]; }
};

LaurentMatrix make_matrix(int rows, int cols, int arity);

// All k x k minors, deterministic row-major subset order.
std::vector<LaurentPoly> minors(const LaurentMatrix& m, int k);

// Determinant by memoized Laplace expansion (exact, division-free).
LaurentPoly determinant(const LaurentMatrix& m);

// ---- Smith normal form over ZZ ---------------------------------------

// Returns the invariant factor list d1 | d2 | ... of length min(rows, cols),
// nonnegative, including zeros.
std::vector<mpz_class> smith_normal_form(std::vector<std::vector<mpz_class>> m);

// Abelianization fingerprint style list: nontrivial torsion factors (>1)
// followed by one 0 per free factor.
std::vector<mpz_class> group_invariant_factors(const std::vector<std::vector<mpz_class>>& rel,
                                               int generators);

}  // namespace chkit

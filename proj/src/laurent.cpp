#include "chkit/laurent.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace chkit {

LaurentPoly LaurentPoly::constant(int arity, const mpz_class& c) {
  LaurentPoly p(arity);
  p.add_term(Exponents(arity, 0), c);
  return p;
}

LaurentPoly LaurentPoly::variable(int arity, int index, int power) {
  LaurentPoly p(arity);
  Exponents e(arity, 0);
  e.at(index) = power;
  p.add_term(e, 1);
  return p;
}

LaurentPoly LaurentPoly::monomial(int arity, const Exponents& e, const mpz_class& c) {
  LaurentPoly p(arity);
  p.add_term(e, c);
  return p;
}

void LaurentPoly::add_term(const Exponents& e, const mpz_class& c) {
  if (c == 0) return;
  assert(static_cast<int>(e.size()) == arity_);
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  if (arity_ != o.arity_) throw std::invalid_argument("laurent arity mismatch");
  LaurentPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const { return *this + (-o); }

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r(arity_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  if (arity_ != o.arity_) throw std::invalid_argument("laurent arity mismatch");
  LaurentPoly r(arity_);
  Exponents e(arity_);
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      for (int i = 0; i < arity_; ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

bool grlex_less(const Exponents& a, const Exponents& b) {
  long da = std::accumulate(a.begin(), a.end(), 0L);
  long db = std::accumulate(b.begin(), b.end(), 0L);
  if (da != db) return da < db;
  return a < b;
}

std::pair<Exponents, mpz_class> LaurentPoly::leading_term() const {
  assert(!terms_.empty());
  auto best = terms_.begin();
  for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it) {
    if (grlex_less(best->first, it->first)) best = it;
  }
  return {best->first, best->second};
}

LaurentPoly LaurentPoly::normalized() const {
  if (terms_.empty()) return *this;
  Exponents shift(arity_, 0);
  bool first = true;
  for (const auto& [e, c] : terms_) {
    for (int i = 0; i < arity_; ++i)
      shift[i] = first ? e[i] : std::min(shift[i], e[i]);
    first = false;
  }
  LaurentPoly r(arity_);
  for (const auto& [e, c] : terms_) {
    Exponents ne(arity_);
    for (int i = 0; i < arity_; ++i) ne[i] = e[i] - shift[i];
    r.terms_.emplace(ne, c);
  }
  if (r.leading_term().second < 0) r = -r;
  return r;
}

LaurentPoly LaurentPoly::transformed(const std::vector<int>& perm,
                                     const std::vector<bool>& invert) const {
  LaurentPoly r(arity_);
  for (const auto& [e, c] : terms_) {
    Exponents ne(arity_, 0);
    for (int i = 0; i < arity_; ++i) ne[perm[i]] = invert[i] ? -e[i] : e[i];
    r.add_term(ne, c);
  }
  return r;
}

mpz_class LaurentPoly::evaluate(const std::vector<mpz_class>& point) const {
  // Evaluation of a Laurent polynomial at nonzero integers: clear the
  // common denominator monomial first (normalized() shifts exponents to 0).
  LaurentPoly p = normalized();
  mpz_class r = 0;
  for (const auto& [e, c] : p.terms_) {
    mpz_class t = c;
    for (int i = 0; i < arity_; ++i) {
      mpz_class pw;
      mpz_pow_ui(pw.get_mpz_t(), point[i].get_mpz_t(), e[i]);
      t *= pw;
    }
    r += t;
  }
  return r;
}

mpz_class LaurentPoly::content() const {
  mpz_class g = 0;
  for (const auto& [e, c] : terms_) {
    mpz_class a = abs(c);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
  }
  return g;
}

int LaurentPoly::total_degree_span() const {
  if (terms_.empty()) return 0;
  long mx = 0, mn = 0;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    long d = std::accumulate(e.begin(), e.end(), 0L);
    if (first) { mx = mn = d; first = false; }
    mx = std::max(mx, d);
    mn = std::min(mn, d);
  }
  return static_cast<int>(mx - mn);
}

std::string LaurentPoly::var_name(int arity, int index) {
  if (arity == 1) return "t";
  if (arity == 2) return index == 0 ? "x" : "y";
  return "x" + std::to_string(index + 1);
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<const std::pair<const Exponents, mpz_class>*> ts;
  for (const auto& t : terms_) ts.push_back(&t);
  std::sort(ts.begin(), ts.end(), [](auto* a, auto* b) {
    return grlex_less(b->first, a->first);
  });
  std::ostringstream out;
  bool first = true;
  for (auto* t : ts) {
    const mpz_class& c = t->second;
    mpz_class ac = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool all_zero = std::all_of(t->first.begin(), t->first.end(), [](int e) { return e == 0; });
    bool coeff_one = (ac == 1);
    if (!coeff_one || all_zero) out << ac.get_str();
    bool printed = false;
    for (int i = 0; i < arity_; ++i) {
      int e = t->first[i];
      if (e == 0) continue;
      if (!coeff_one || printed) out << "*";
      out << var_name(arity_, i);
      if (e != 1) out << "^" << e;
      printed = true;
    }
  }
  return out.str();
}

// ---- gcd ---------------------------------------------------------------

namespace {

// Dense recursive representation helpers for gcd: a poly in k variables is
// viewed as univariate in the last variable with (k-1)-variable coefficients.
// We only ever call this on normalized (nonnegative exponent) polynomials.

struct RPoly {  // univariate with LaurentPoly coefficients
  std::vector<LaurentPoly> coeff;  // index = degree in main var
  int deg() const {
    for (int i = static_cast<int>(coeff.size()) - 1; i >= 0; --i)
      if (!coeff[i].is_zero()) return i;
    return -1;
  }
};

RPoly to_rpoly(const LaurentPoly& p, int main_var) {
  RPoly r;
  for (const auto& [e, c] : p.terms()) {
    int d = e[main_var];
    Exponents rest = e;
    rest[main_var] = 0;
    if (static_cast<int>(r.coeff.size()) <= d)
      r.coeff.resize(d + 1, LaurentPoly(p.arity()));
    r.coeff[d].add_term(rest, c);
  }
  return r;
}

LaurentPoly from_rpoly(const RPoly& r, int main_var, int arity) {
  LaurentPoly p(arity);
  for (int d = 0; d < static_cast<int>(r.coeff.size()); ++d) {
    for (const auto& [e, c] : r.coeff[d].terms()) {
      Exponents ne = e;
      ne[main_var] = d;
      p.add_term(ne, c);
    }
  }
  return p;
}

LaurentPoly gcd_rec(LaurentPoly a, LaurentPoly b, int nvars);

LaurentPoly rp_content(const RPoly& r, int nvars) {
  LaurentPoly g(r.coeff.empty() ? 0 : r.coeff[0].arity());
  bool started = false;
  for (const auto& c : r.coeff) {
    if (c.is_zero()) continue;
    if (!started) { g = c; started = true; }
    else g = gcd_rec(g, c, nvars);
  }
  return g;
}

// exact division p / q, assuming it divides; works in the polynomial ring
LaurentPoly exact_div(const LaurentPoly& p, const LaurentPoly& q) {
  if (p.is_zero()) return p;
  LaurentPoly rem = p;
  LaurentPoly quot(p.arity());
  auto [qe, qc] = q.leading_term();
  while (!rem.is_zero()) {
    auto [re, rc] = rem.leading_term();
    Exponents de(p.arity());
    for (int i = 0; i < p.arity(); ++i) de[i] = re[i] - qe[i];
    mpz_class dc = rc / qc;
    if (dc * qc != rc) throw std::logic_error("exact_div: coeff not divisible");
    LaurentPoly m = LaurentPoly::monomial(p.arity(), de, dc);
    quot = quot + m;
    rem = rem - m * q;
  }
  return quot;
}

LaurentPoly gcd_rec(LaurentPoly a, LaurentPoly b, int nvars) {
  int arity = a.arity();
  a = a.normalized();
  b = b.normalized();
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (nvars == 0) {
    mpz_class g;
    mpz_class ca = a.content(), cb = b.content();
    mpz_gcd(g.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    return LaurentPoly::constant(arity, g);
  }
  int mv = nvars - 1;
  RPoly ra = to_rpoly(a, mv), rb = to_rpoly(b, mv);
  if (ra.deg() == 0 && rb.deg() == 0)
    return gcd_rec(ra.coeff[0], rb.coeff[0], nvars - 1);
  LaurentPoly ca = rp_content(ra, nvars - 1);
  LaurentPoly cb = rp_content(rb, nvars - 1);
  LaurentPoly cont_gcd = gcd_rec(ca, cb, nvars - 1);
  // primitive parts
  RPoly pa, pb;
  pa.coeff.reserve(ra.coeff.size());
  for (auto& c : ra.coeff) pa.coeff.push_back(c.is_zero() ? c : exact_div(c, ca));
  for (auto& c : rb.coeff) pb.coeff.push_back(c.is_zero() ? c : exact_div(c, cb));
  // primitive PRS
  while (true) {
    int da = pa.deg(), db = pb.deg();
    if (db < 0) break;
    if (da < db) { std::swap(pa, pb); continue; }
    // pseudo-remainder: lc(pb)^(da-db+1) * pa  mod pb
    LaurentPoly lcb = pb.coeff[pb.deg()];
    RPoly rem = pa;
    while (rem.deg() >= pb.deg() && rem.deg() >= 0) {
      int dr = rem.deg(), dq = pb.deg();
      LaurentPoly lcr = rem.coeff[dr];
      // rem = rem * lcb - lcr * x^(dr-dq) * pb
      for (auto& c : rem.coeff) c = c * lcb;
      for (int i = 0; i <= dq; ++i) {
        int idx = i + dr - dq;
        rem.coeff[idx] = rem.coeff[idx] - lcr * pb.coeff[i];
      }
      while (!rem.coeff.empty() && rem.coeff.back().is_zero()) rem.coeff.pop_back();
      if (rem.deg() < 0) break;
    }
    pa = pb;
    if (rem.deg() < 0) { pb = rem; break; }
    LaurentPoly rc = rp_content(rem, nvars - 1);
    RPoly prem;
    for (auto& c : rem.coeff) prem.coeff.push_back(c.is_zero() ? c : exact_div(c, rc));
    pb = prem;
  }
  LaurentPoly prim = from_rpoly(pa, mv, arity);
  return (cont_gcd * prim).normalized();
}

}  // namespace

LaurentPoly laurent_gcd(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.arity() != b.arity()) throw std::invalid_argument("laurent arity mismatch");
  return gcd_rec(a, b, a.arity()).normalized();
}

LaurentPoly laurent_gcd(const std::vector<LaurentPoly>& gens) {
  if (gens.empty()) return LaurentPoly(0);
  LaurentPoly g = gens[0];
  for (size_t i = 1; i < gens.size(); ++i) g = laurent_gcd(g, gens[i]);
  return g.normalized();
}

LaurentPoly reduce_integer(const LaurentPoly& p, const std::vector<LaurentPoly>& divisors) {
  LaurentPoly rem(p.arity());
  LaurentPoly cur = p.normalized();
  int guard = 0;
  while (!cur.is_zero() && guard++ < 10000) {
    auto [ce, cc] = cur.leading_term();
    bool stepped = false;
    for (const auto& d : divisors) {
      if (d.is_zero()) continue;
      auto [de, dc] = d.leading_term();
      bool div_exp = true;
      Exponents q(cur.arity());
      for (int i = 0; i < cur.arity(); ++i) {
        q[i] = ce[i] - de[i];
        if (q[i] < 0) { div_exp = false; break; }
      }
      if (!div_exp) continue;
      mpz_class qc = cc / dc;
      if (qc * dc != cc) continue;
      cur = cur - LaurentPoly::monomial(cur.arity(), q, qc) * d;
      stepped = true;
      break;
    }
    if (!stepped) {
      // move the leading term to the remainder and continue
      rem.add_term(ce, cc);
      cur.add_term(ce, -cc);
    }
  }
  return (rem + cur);
}

LaurentMatrix make_matrix(int rows, int cols, int arity) {
  LaurentMatrix m;
  m.rows = rows;
  m.cols = cols;
  m.entries.assign(static_cast<size_t>(rows) * cols, LaurentPoly(arity));
  return m;
}

namespace {

// determinant of the submatrix rows[0..k) x cols(bitmask) via subset DP
LaurentPoly det_subset(const LaurentMatrix& m, const std::vector<int>& rows,
                       const std::vector<int>& cols, int arity) {
  int k = static_cast<int>(rows.size());
  if (k == 0) return LaurentPoly::constant(arity, 1);
  // dp over subsets of cols of size i = det of first i rows with those cols
  std::vector<LaurentPoly> dp(1u << k, LaurentPoly(arity));
  dp[0] = LaurentPoly::constant(arity, 1);
  for (unsigned mask = 1; mask < (1u << k); ++mask) {
    int i = __builtin_popcount(mask);  // expanding along row rows[i-1]
    LaurentPoly acc(arity);
    int pos = 0;
    for (int j = 0; j < k; ++j) {
      if (!(mask & (1u << j))) continue;
      const LaurentPoly& e = m.at(rows[i - 1], cols[j]);
      if (!e.is_zero()) {
        LaurentPoly term = e * dp[mask ^ (1u << j)];
        acc = (((i - 1) + pos) % 2 == 0) ? acc + term : acc - term;
      }
      ++pos;
    }
    dp[mask] = acc;
  }
  return dp[(1u << k) - 1];
}

void subsets(int n, int k, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> idx(k);
  std::function<void(int, int)> rec = [&](int start, int depth) {
    if (depth == k) { fn(idx); return; }
    for (int i = start; i <= n - (k - depth); ++i) {
      idx[depth] = i;
      rec(i + 1, depth + 1);
    }
  };
  rec(0, 0);
}

}  // namespace

std::vector<LaurentPoly> minors(const LaurentMatrix& m, int k) {
  std::vector<LaurentPoly> out;
  if (k <= 0 || k > m.rows || k > m.cols) return out;
  int arity = m.entries.empty() ? 0 : m.entries[0].arity();
  subsets(m.rows, k, [&](const std::vector<int>& rs) {
    subsets(m.cols, k, [&](const std::vector<int>& cs) {
      out.push_back(det_subset(m, rs, cs, arity));
    });
  });
  return out;
}

LaurentPoly determinant(const LaurentMatrix& m) {
  if (m.rows != m.cols) throw std::invalid_argument("determinant: not square");
  int arity = m.entries.empty() ? 0 : m.entries[0].arity();
  std::vector<int> all(m.rows);
  for (int i = 0; i < m.rows; ++i) all[i] = i;
  return det_subset(m, all, all, arity);
}

}  // namespace chkit

#include "chkit/fingerprint.hpp"

#include <algorithm>

namespace chkit::qpoly {

bool is_zero(const QPoly& p) { return p.terms.empty(); }

namespace {

void add_term(QPoly& p, const Exponents& e, const mpq_class& c) {
  if (c == 0) return;
  auto it = p.terms.find(e);
  if (it == p.terms.end()) {
    p.terms.emplace(e, c);
  } else {
    it->second += c;
    if (it->second == 0) p.terms.erase(it);
  }
}

std::pair<Exponents, mpq_class> lead(const QPoly& p) {
  auto best = p.terms.begin();
  for (auto it = std::next(p.terms.begin()); it != p.terms.end(); ++it)
    if (grlex_less(best->first, it->first)) best = it;
  return {best->first, best->second};
}

QPoly monic(QPoly p) {
  if (is_zero(p)) return p;
  mpq_class lc = lead(p).second;
  for (auto& [e, c] : p.terms) c /= lc;
  return p;
}

QPoly mul_monomial(const QPoly& p, const Exponents& e, const mpq_class& c) {
  QPoly r;
  r.arity = p.arity;
  for (const auto& [pe, pc] : p.terms) {
    Exponents ne(p.arity);
    for (int i = 0; i < p.arity; ++i) ne[i] = pe[i] + e[i];
    r.terms.emplace(ne, pc * c);
  }
  return r;
}

QPoly sub(const QPoly& a, const QPoly& b) {
  QPoly r = a;
  for (const auto& [e, c] : b.terms) add_term(r, e, -c);
  return r;
}

}  // namespace

QPoly from_laurent(const LaurentPoly& p) {
  LaurentPoly n = p.normalized();
  QPoly q;
  q.arity = n.arity();
  for (const auto& [e, c] : n.terms()) q.terms.emplace(e, mpq_class(c));
  return q;
}

QPoly reduce(const QPoly& p, const std::vector<QPoly>& basis) {
  QPoly rem;
  rem.arity = p.arity;
  QPoly cur = p;
  while (!is_zero(cur)) {
    auto [ce, cc] = lead(cur);
    bool stepped = false;
    for (const auto& d : basis) {
      if (is_zero(d)) continue;
      auto [de, dc] = lead(d);
      Exponents q(cur.arity);
      bool ok = true;
      for (int i = 0; i < cur.arity; ++i) {
        q[i] = ce[i] - de[i];
        if (q[i] < 0) { ok = false; break; }
      }
      if (!ok) continue;
      cur = sub(cur, mul_monomial(d, q, cc / dc));
      stepped = true;
      break;
    }
    if (!stepped) {
      add_term(rem, ce, cc);
      auto it = cur.terms.find(ce);
      cur.terms.erase(it);
    }
  }
  return rem;
}

std::optional<std::vector<QPoly>> groebner(std::vector<QPoly> gens, int max_basis) {
  std::vector<QPoly> basis;
  for (auto& g : gens)
    if (!is_zero(g)) basis.push_back(monic(g));
  if (basis.empty()) return basis;
  int arity = basis[0].arity;

  std::vector<std::pair<int, int>> pairs;
  for (size_t i = 0; i < basis.size(); ++i)
    for (size_t j = i + 1; j < basis.size(); ++j) pairs.emplace_back(i, j);

  int guard = 0;
  while (!pairs.empty()) {
    if (static_cast<int>(basis.size()) > max_basis || guard++ > 5000) return std::nullopt;
    auto [i, j] = pairs.back();
    pairs.pop_back();
    auto [ei, ci] = lead(basis[i]);
    auto [ej, cj] = lead(basis[j]);
    Exponents l(arity);
    for (int v = 0; v < arity; ++v) l[v] = std::max(ei[v], ej[v]);
    // Buchberger's first criterion: skip coprime leading monomials.
    bool coprime = true;
    for (int v = 0; v < arity; ++v)
      if (ei[v] > 0 && ej[v] > 0) coprime = false;
    if (coprime) continue;
    Exponents qi(arity), qj(arity);
    for (int v = 0; v < arity; ++v) {
      qi[v] = l[v] - ei[v];
      qj[v] = l[v] - ej[v];
    }
    QPoly s = sub(mul_monomial(basis[i], qi, 1), mul_monomial(basis[j], qj, 1));
    QPoly r = reduce(s, basis);
    if (!is_zero(r)) {
      basis.push_back(monic(r));
      for (size_t k = 0; k + 1 < basis.size(); ++k)
        pairs.emplace_back(k, basis.size() - 1);
    }
  }
  return basis;
}

}  // namespace chkit::qpoly

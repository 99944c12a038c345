#include "chkit/fingerprint.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace chkit {

namespace {

std::vector<std::vector<int>> panel_points(int arity, const EvalPanel& panel) {
  std::vector<std::vector<int>> pts;
  std::vector<int> cur(arity, 0);
  std::function<void(int)> rec = [&](int i) {
    if (i == arity) {
      pts.push_back(cur);
      return;
    }
    for (int v : panel.coords) {
      cur[i] = v;
      rec(i + 1);
    }
  };
  rec(0);
  return pts;
}

std::vector<EvalEntry> eval_table(const std::vector<LaurentPoly>& gens, int arity,
                                  const EvalPanel& panel) {
  std::vector<EvalEntry> table;
  for (const auto& pt : panel_points(arity, panel)) {
    EvalEntry e;
    e.point = pt;
    std::vector<mpz_class> zpt(pt.begin(), pt.end());
    mpz_class g = 0;
    for (const auto& p : gens) {
      mpz_class v = abs(p.evaluate(zpt));
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    }
    e.gcd = g;
    for (int p : panel.primes)
      e.mod_primes.push_back(mpz_class(g % p).get_si());
    table.push_back(std::move(e));
  }
  return table;
}

std::vector<std::pair<std::vector<int>, std::vector<bool>>> transforms(int arity) {
  std::vector<std::pair<std::vector<int>, std::vector<bool>>> out;
  std::vector<int> perm(arity);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    for (unsigned mask = 0; mask < (1u << arity); ++mask) {
      std::vector<bool> inv(arity);
      for (int i = 0; i < arity; ++i) inv[i] = mask & (1u << i);
      out.emplace_back(perm, inv);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

std::vector<LaurentPoly> apply_transform(const std::vector<LaurentPoly>& gens,
                                         const std::vector<int>& perm,
                                         const std::vector<bool>& inv) {
  std::vector<LaurentPoly> out;
  out.reserve(gens.size());
  for (const auto& g : gens) out.push_back(g.transformed(perm, inv).normalized());
  std::sort(out.begin(), out.end(), [](const LaurentPoly& a, const LaurentPoly& b) {
    return a.to_string() < b.to_string();
  });
  return out;
}

std::string gens_key(const std::vector<LaurentPoly>& gens) {
  std::string k;
  for (const auto& g : gens) {
    k += g.to_string();
    k += ";";
  }
  return k;
}

}  // namespace

bool IdealFingerprint::is_unit() const {
  for (const auto& g : gens) {
    auto [e, c] = g.leading_term();
    bool const_one = c == 1 || c == -1;
    for (int v : e) const_one = const_one && v == 0;
    if (const_one && g.terms().size() == 1) return true;
  }
  return false;
}

std::string IdealFingerprint::text() const {
  std::ostringstream out;
  out << "<";
  if (gens.empty()) {
    out << "0";
  } else {
    for (size_t i = 0; i < gens.size(); ++i) {
      if (i) out << ", ";
      out << gens[i].to_string();
    }
  }
  out << ">";
  return out.str();
}

IdealFingerprint ideal_fingerprint(std::vector<LaurentPoly> gens, int arity_hint,
                                   const EvalPanel& panel) {
  IdealFingerprint fp;
  fp.arity = gens.empty() ? std::max(0, arity_hint) : gens[0].arity();

  // normalize, drop zeros, dedupe
  std::vector<LaurentPoly> ns;
  for (auto& g : gens) {
    if (g.is_zero()) continue;
    LaurentPoly n = g.normalized();
    bool dup = false;
    for (const auto& h : ns) dup = dup || h == n;
    if (!dup) ns.push_back(n);
  }
  std::sort(ns.begin(), ns.end(), [](const LaurentPoly& a, const LaurentPoly& b) {
    if (a.terms().size() != b.terms().size()) return a.terms().size() < b.terms().size();
    return a.to_string() < b.to_string();
  });

  // drop generators that reduce to zero against the others (exact integer steps)
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < ns.size(); ++i) {
      std::vector<LaurentPoly> others;
      for (size_t j = 0; j < ns.size(); ++j)
        if (j != i) others.push_back(ns[j]);
      if (others.empty()) break;
      if (reduce_integer(ns[i], others).is_zero()) {
        ns.erase(ns.begin() + i);
        changed = true;
        break;
      }
    }
  }

  // canonicalize over variable permutations and inversions
  if (!ns.empty() && fp.arity >= 1 && fp.arity <= 4) {
    std::vector<LaurentPoly> best;
    std::string best_key;
    for (const auto& [perm, inv] : transforms(fp.arity)) {
      auto cand = apply_transform(ns, perm, inv);
      std::string key = gens_key(cand);
      if (best_key.empty() || key > best_key) {
        best_key = key;
        best = cand;
      }
    }
    ns = best;
  }

  fp.gens = ns;
  fp.gcd = laurent_gcd(ns);
  fp.table = eval_table(ns, fp.arity, panel);
  return fp;
}

namespace {

// Panel comparison of two generator lists; returns point witness on mismatch.
std::optional<std::string> panel_mismatch(const std::vector<EvalEntry>& ta,
                                          const std::vector<EvalEntry>& tb) {
  for (size_t i = 0; i < ta.size() && i < tb.size(); ++i) {
    if (ta[i].gcd != tb[i].gcd || ta[i].mod_primes != tb[i].mod_primes) {
      std::ostringstream w;
      w << "(";
      for (size_t j = 0; j < ta[i].point.size(); ++j) {
        if (j) w << ",";
        w << ta[i].point[j];
      }
      w << ") -> <" << ta[i].gcd.get_str() << "> vs <" << tb[i].gcd.get_str() << ">";
      return w.str();
    }
  }
  return std::nullopt;
}

Tri mutual_membership(const std::vector<LaurentPoly>& a, const std::vector<LaurentPoly>& b) {
  using namespace qpoly;
  std::vector<QPoly> qa, qb;
  for (const auto& g : a) qa.push_back(from_laurent(g));
  for (const auto& g : b) qb.push_back(from_laurent(g));
  auto gba = groebner(qa);
  auto gbb = groebner(qb);
  if (!gba || !gbb) return Tri::Unknown;
  for (const auto& g : qa)
    if (!is_zero(reduce(g, *gbb))) return Tri::Unknown;
  for (const auto& g : qb)
    if (!is_zero(reduce(g, *gba))) return Tri::Unknown;
  return Tri::Yes;
}

}  // namespace

CompareResult fingerprint_equal(const IdealFingerprint& a, const IdealFingerprint& b,
                                const EvalPanel& panel) {
  CompareResult res;
  if (a.is_zero() && b.is_zero()) {
    res.verdict = Tri::Yes;
    return res;
  }
  if (a.arity != b.arity) {
    res.verdict = Tri::No;
    res.witness = "arity mismatch";
    return res;
  }
  if (gens_key(a.gens) == gens_key(b.gens)) {
    res.verdict = Tri::Yes;
    return res;
  }
  if (a.is_zero() != b.is_zero()) {
    auto w = panel_mismatch(a.table, b.table);
    res.verdict = Tri::No;
    res.witness = w.value_or("zero vs nonzero ideal");
    return res;
  }

  // compare up to the variable symmetry group
  bool any_unknown = false;
  std::string first_witness;
  for (const auto& [perm, inv] : transforms(std::max(1, a.arity))) {
    auto tb = apply_transform(b.gens, perm, inv);
    if (gens_key(a.gens) == gens_key(tb)) {
      res.verdict = Tri::Yes;
      return res;
    }
    auto ttable = eval_table(tb, a.arity, panel);
    auto w = panel_mismatch(a.table, ttable);
    if (w) {
      if (first_witness.empty()) first_witness = *w;
      continue;
    }
    Tri m = mutual_membership(a.gens, tb);
    if (m == Tri::Yes) {
      res.verdict = Tri::Yes;
      return res;
    }
    any_unknown = true;
  }
  if (any_unknown) {
    res.verdict = Tri::Unknown;
  } else {
    res.verdict = Tri::No;
    res.witness = first_witness;
  }
  return res;
}

CompareResult fingerprint_sets_equal(const std::vector<IdealFingerprint>& a,
                                     const std::vector<IdealFingerprint>& b) {
  CompareResult res;
  if (a.size() != b.size()) {
    res.verdict = Tri::No;
    res.witness = "set sizes " + std::to_string(a.size()) + " vs " + std::to_string(b.size());
    return res;
  }
  std::vector<bool> used(b.size(), false);
  bool any_unknown = false;
  for (const auto& fa : a) {
    bool matched = false;
    for (size_t j = 0; j < b.size(); ++j) {
      if (used[j]) continue;
      CompareResult c = fingerprint_equal(fa, b[j]);
      if (c.verdict == Tri::Yes) {
        used[j] = true;
        matched = true;
        break;
      }
      if (c.verdict == Tri::Unknown) any_unknown = true;
    }
    if (!matched) {
      if (any_unknown) {
        res.verdict = Tri::Unknown;
      } else {
        res.verdict = Tri::No;
        CompareResult c = fingerprint_equal(fa, b[0]);
        res.witness = "unmatched " + fa.text() + (c.witness.empty() ? "" : " at " + c.witness);
      }
      return res;
    }
  }
  res.verdict = Tri::Yes;
  return res;
}

}  // namespace chkit

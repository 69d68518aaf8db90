#ifndef SMASHFRAME_VALUE_GROUP_HPP
#define SMASHFRAME_VALUE_GROUP_HPP

// Exact arithmetic for the lexicographic value group
//   Gamma = G_1 x ... x G_n (ordered lexicographically),
// where slot i is Z[1/ell] when the i-th prime is idempotent and Z otherwise.
// On top of it: Hahn-series polynomials with rational coefficients and
// exponents in Gamma, their fractions, the valuation (lex-least exponent),
// the prime filters F_j = { v > 0 : supp(v) <= j }, and an exact
// decomposition procedure witnessing which filters are idempotent.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "smashframe/error.hpp"
#include "smashframe/ring_model.hpp"

namespace smashframe {

// --- scalars ---------------------------------------------------------------

// num / ell^exp, normalized so exp = 0 or ell does not divide num; 0 is (0,0).
struct LFraction {
  long long num = 0;
  int exp = 0;

  friend bool operator==(const LFraction&, const LFraction&) = default;
};

namespace detail {

inline long long mul_checked(long long a, long long b) {
  long long r = 0;
  require(!__builtin_mul_overflow(a, b, &r), "OVERFLOW", "value-group arithmetic");
  return r;
}

inline long long add_checked_ll(long long a, long long b) {
  long long r = 0;
  require(!__builtin_add_overflow(a, b, &r), "OVERFLOW", "value-group arithmetic");
  return r;
}

inline long long ipow_checked(long long base, int e) {
  long long r = 1;
  for (int i = 0; i < e; ++i) r = mul_checked(r, base);
  return r;
}

}  // namespace detail

inline LFraction lf_make(long long num, int exp, long long ell) {
  require(exp >= 0, "REJECT", "negative denominator exponent");
  if (num == 0) return LFraction{0, 0};
  while (exp > 0 && num % ell == 0) {
    num /= ell;
    --exp;
  }
  return LFraction{num, exp};
}

inline LFraction lf_add(const LFraction& a, const LFraction& b, long long ell) {
  const int e = std::max(a.exp, b.exp);
  long long num = detail::add_checked_ll(
      detail::mul_checked(a.num, detail::ipow_checked(ell, e - a.exp)),
      detail::mul_checked(b.num, detail::ipow_checked(ell, e - b.exp)));
  return lf_make(num, e, ell);
}

inline LFraction lf_neg(const LFraction& a) { return LFraction{-a.num, a.exp}; }

inline LFraction lf_sub(const LFraction& a, const LFraction& b, long long ell) {
  return lf_add(a, lf_neg(b), ell);
}

inline int lf_sign(const LFraction& a) { return (a.num > 0) - (a.num < 0); }

inline int lf_cmp(const LFraction& a, const LFraction& b, long long ell) {
  return lf_sign(lf_sub(a, b, ell));
}

// Exact rational p/q, gcd-reduced, q > 0. Coefficient field of the series.
struct Rat {
  long long p = 0;
  long long q = 1;

  friend bool operator==(const Rat&, const Rat&) = default;
};

inline Rat rat_make(long long p, long long q) {
  require(q != 0, "ZERO_DENOMINATOR", "rational coefficient with denominator 0");
  if (q < 0) {
    p = -p;
    q = -q;
  }
  long long g = std::gcd(p < 0 ? -p : p, q);
  if (g > 1) {
    p /= g;
    q /= g;
  }
  return Rat{p, q};
}

inline Rat rat_add(const Rat& a, const Rat& b) {
  return rat_make(detail::add_checked_ll(detail::mul_checked(a.p, b.q),
                                         detail::mul_checked(b.p, a.q)),
                  detail::mul_checked(a.q, b.q));
}

inline Rat rat_mul(const Rat& a, const Rat& b) {
  return rat_make(detail::mul_checked(a.p, b.p), detail::mul_checked(a.q, b.q));
}

inline bool rat_is_zero(const Rat& a) { return a.p == 0; }

// --- group elements ----------------------------------------------------------

// One component per prime position 1..n (stored 0-based). Non-idempotent slots
// are integer slots: their components must normalize to exp = 0.
struct GroupElement {
  std::vector<LFraction> comp;

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

inline GroupElement ge_zero(const RingSpec& s) {
  return GroupElement{std::vector<LFraction>(static_cast<std::size_t>(s.n))};
}

// Unit vector at slot k (1-based).
inline GroupElement ge_unit(const RingSpec& s, int k) {
  require(1 <= k && k <= s.n, "REJECT", "slot out of range");
  GroupElement v = ge_zero(s);
  v.comp[static_cast<std::size_t>(k - 1)] = LFraction{1, 0};
  return v;
}

inline void validate_group_element(const RingSpec& s, const GroupElement& v) {
  require(v.comp.size() == static_cast<std::size_t>(s.n), "LENGTH_MISMATCH",
          "element has " + std::to_string(v.comp.size()) + " components, need n = " +
              std::to_string(s.n));
  for (int i = 1; i <= s.n; ++i) {
    const LFraction& c = v.comp[static_cast<std::size_t>(i - 1)];
    LFraction norm = lf_make(c.num, c.exp, s.ell);
    require(norm == c, "REJECT",
            "component " + std::to_string(i) + " is not normalized");
    if (!s.idem[static_cast<std::size_t>(i)])
      require(c.exp == 0, "REJECT",
              "component " + std::to_string(i) + " must be an integer (idem[" +
                  std::to_string(i) + "]=0)");
  }
}

inline GroupElement ge_add(const RingSpec& s, const GroupElement& v, const GroupElement& w) {
  require(v.comp.size() == w.comp.size(), "LENGTH_MISMATCH",
          "component counts differ: " + std::to_string(v.comp.size()) + " vs " +
              std::to_string(w.comp.size()));
  GroupElement out;
  out.comp.reserve(v.comp.size());
  for (std::size_t i = 0; i < v.comp.size(); ++i)
    out.comp.push_back(lf_add(v.comp[i], w.comp[i], s.ell));
  return out;
}

inline GroupElement ge_neg(const GroupElement& v) {
  GroupElement out = v;
  for (auto& c : out.comp) c = lf_neg(c);
  return out;
}

inline GroupElement ge_sub(const RingSpec& s, const GroupElement& v, const GroupElement& w) {
  return ge_add(s, v, ge_neg(w));
}

// Lexicographic comparison: the first differing component decides.
inline int lex_compare(const RingSpec& s, const GroupElement& v, const GroupElement& w) {
  require(v.comp.size() == w.comp.size(), "LENGTH_MISMATCH",
          "component counts differ: " + std::to_string(v.comp.size()) + " vs " +
              std::to_string(w.comp.size()));
  for (std::size_t i = 0; i < v.comp.size(); ++i) {
    int c = lf_cmp(v.comp[i], w.comp[i], s.ell);
    if (c != 0) return c;
  }
  return 0;
}

inline bool ge_positive(const RingSpec& s, const GroupElement& v) {
  return lex_compare(s, v, ge_zero(s)) > 0;
}

// 1-based index of the first nonzero component; 0 when v = 0.
inline int support(const GroupElement& v) {
  for (std::size_t i = 0; i < v.comp.size(); ++i)
    if (v.comp[i].num != 0) return static_cast<int>(i) + 1;
  return 0;
}

// --- prime filters and decomposition ----------------------------------------

inline bool filter_member(const RingSpec& s, const GroupElement& v, int j) {
  validate(s);
  require(1 <= j && j <= s.n, "REJECT", "filter index j=" + std::to_string(j) +
                                            " out of range 1.." + std::to_string(s.n));
  validate_group_element(s, v);
  int k = support(v);
  return k != 0 && k <= j && lf_sign(v.comp[static_cast<std::size_t>(k - 1)]) > 0;
}

struct Decomposition {
  bool indecomposable = false;
  GroupElement a, b;  // a + b = v, both in F_j, when decomposable
};

// Split v in F_j as a sum of two filter members, deterministically:
// scan past the support for the next nonzero entry at or before j and split
// there (absorbing a negative entry into part a), otherwise borrow a unit one
// slot after the support, and when the support IS j split the j-th component
// itself: num/ell^e = (num-1)/ell^e + 1/ell^e for num >= 2, and
// 1/ell^e = (ell-1)/ell^{e+1} + 1/ell^{e+1} on idempotent slots. An integer
// slot holding exactly 1 at support j admits no split: both parts would need
// support j and positive integer j-entries summing to 1.
inline Decomposition decompose_in_filter(const RingSpec& s, const GroupElement& v, int j) {
  require(filter_member(s, v, j), "NOT_IN_FILTER",
          "element is not in F_" + std::to_string(j));
  const int k = support(v);
  const auto at = [&](const GroupElement& g, int slot) -> const LFraction& {
    return g.comp[static_cast<std::size_t>(slot - 1)];
  };
  const auto set = [&](GroupElement& g, int slot, LFraction val) {
    g.comp[static_cast<std::size_t>(slot - 1)] = val;
  };

  int kp = 0;  // smallest index in (k, j] with a nonzero entry, if any
  for (int t = k + 1; t <= j; ++t) {
    if (at(v, t).num != 0) {
      kp = t;
      break;
    }
  }

  Decomposition r;
  r.a = ge_zero(s);
  r.b = ge_zero(s);
  if (kp != 0) {
    if (lf_sign(at(v, kp)) > 0) {
      // Entries k..kp-1 to a, the rest of v (from kp on) to b.
      for (int t = k; t < kp; ++t) set(r.a, t, at(v, t));
      for (int t = kp; t <= s.n; ++t) set(r.b, t, at(v, t));
    } else {
      // Negative at kp: double it in a so b can lead with the positive -v_kp.
      for (int t = k; t < kp; ++t) set(r.a, t, at(v, t));
      set(r.a, kp, lf_add(at(v, kp), at(v, kp), s.ell));
      set(r.b, kp, lf_neg(at(v, kp)));
      for (int t = kp + 1; t <= s.n; ++t) set(r.b, t, at(v, t));
    }
    return r;
  }

  if (k < j) {
    // Nothing nonzero in (k, j]: borrow a unit at slot k+1.
    r.a = v;
    set(r.a, k + 1, lf_sub(at(v, k + 1), LFraction{1, 0}, s.ell));
    r.b = ge_unit(s, k + 1);
    return r;
  }

  // support(v) = j: split the j-th component, keeping v's tail with a.
  const LFraction vj = at(v, j);
  if (s.idem[static_cast<std::size_t>(j)]) {
    LFraction aj, bj;
    if (vj.num >= 2) {
      aj = lf_make(vj.num - 1, vj.exp, s.ell);
      bj = lf_make(1, vj.exp, s.ell);
    } else {  // num = 1 by positivity and normalization
      aj = lf_make(s.ell - 1, vj.exp + 1, s.ell);
      bj = lf_make(1, vj.exp + 1, s.ell);
    }
    r.a = v;
    set(r.a, j, aj);
    set(r.b, j, bj);
    return r;
  }
  if (vj.num >= 2) {
    r.a = v;
    set(r.a, j, LFraction{vj.num - 1, 0});
    set(r.b, j, LFraction{1, 0});
    return r;
  }
  r.indecomposable = true;
  r.a = ge_zero(s);
  r.b = ge_zero(s);
  return r;
}

// Whether F_j is an idempotent filter (F_j + F_j = F_j): true exactly when the
// j-th prime is idempotent. Self-checks on a small deterministic sample: every
// sampled member of F_j must split when true, and the generator (unit at j)
// must be indecomposable when false.
inline bool filter_idempotent(const RingSpec& s, int j) {
  validate(s);
  require(1 <= j && j <= s.n, "REJECT", "filter index j=" + std::to_string(j) +
                                            " out of range 1.." + std::to_string(s.n));
  const bool ans = s.idem[static_cast<std::size_t>(j)] == 1;
  if (ans) {
    std::vector<GroupElement> sample;
    for (int k = 1; k <= j; ++k) {
      sample.push_back(ge_unit(s, k));
      GroupElement w = ge_unit(s, k);
      w.comp[static_cast<std::size_t>(j - 1)] =
          lf_add(w.comp[static_cast<std::size_t>(j - 1)], LFraction{1, 1}, s.ell);
      sample.push_back(w);
      if (k < s.n) sample.push_back(ge_add(s, ge_unit(s, k), ge_neg(ge_unit(s, k + 1))));
    }
    GroupElement frac = ge_zero(s);
    frac.comp[static_cast<std::size_t>(j - 1)] = lf_make(1, 1, s.ell);
    sample.push_back(frac);
    for (const GroupElement& v : sample) {
      if (!filter_member(s, v, j)) continue;
      Decomposition d = decompose_in_filter(s, v, j);
      require(!d.indecomposable, "ASSERT_MISMATCH",
              "idempotent filter F_" + std::to_string(j) + " refused to split a member");
      require(ge_add(s, d.a, d.b) == v && filter_member(s, d.a, j) && filter_member(s, d.b, j),
              "ASSERT_MISMATCH", "split of F_" + std::to_string(j) + " member is invalid");
    }
  } else {
    Decomposition d = decompose_in_filter(s, ge_unit(s, j), j);
    require(d.indecomposable, "ASSERT_MISMATCH",
            "non-idempotent filter F_" + std::to_string(j) + " split its generator");
  }
  return ans;
}

// --- Hahn-series polynomials and fractions -----------------------------------

struct LexLess {
  RingSpec spec;
  bool operator()(const GroupElement& a, const GroupElement& b) const {
    return lex_compare(spec, a, b) < 0;
  }
};

// Finite formal sum of terms coef * t^g with distinct exponents g in Gamma.
// The zero polynomial has no terms.
struct HahnPoly {
  std::map<GroupElement, Rat, LexLess> terms;

  explicit HahnPoly(const RingSpec& s) : terms(LexLess{s}) {}
};

inline bool poly_is_zero(const HahnPoly& f) { return f.terms.empty(); }

inline void poly_add_term(const RingSpec& s, HahnPoly& f, const GroupElement& g, const Rat& c) {
  validate_group_element(s, g);
  if (rat_is_zero(c)) return;
  auto [it, inserted] = f.terms.emplace(g, c);
  if (!inserted) {
    it->second = rat_add(it->second, c);
    if (rat_is_zero(it->second)) f.terms.erase(it);
  }
}

inline HahnPoly poly_add(const RingSpec& s, const HahnPoly& f, const HahnPoly& g) {
  HahnPoly out = f;
  for (const auto& [e, c] : g.terms) poly_add_term(s, out, e, c);
  return out;
}

inline HahnPoly poly_mul(const RingSpec& s, const HahnPoly& f, const HahnPoly& g) {
  HahnPoly out(s);
  for (const auto& [e1, c1] : f.terms)
    for (const auto& [e2, c2] : g.terms)
      poly_add_term(s, out, ge_add(s, e1, e2), rat_mul(c1, c2));
  return out;
}

// Valuation: lex-least exponent; nullopt encodes +infinity (zero polynomial).
inline std::optional<GroupElement> poly_valuation(const HahnPoly& f) {
  if (f.terms.empty()) return std::nullopt;
  return f.terms.begin()->first;
}

struct HahnFraction {
  HahnPoly num;
  HahnPoly den;
};

inline std::optional<GroupElement> frac_valuation(const RingSpec& s, const HahnFraction& x) {
  require(!poly_is_zero(x.den), "ZERO_DENOMINATOR", "fraction with zero denominator");
  if (poly_is_zero(x.num)) return std::nullopt;
  return ge_sub(s, *poly_valuation(x.num), *poly_valuation(x.den));
}

// Membership of x in the smashing-ideal generator I_j = {x : nu(x) in F_j}.
// The zero element belongs to every ideal; elements outside the valuation ring
// (negative valuation) are rejected.
inline bool ideal_member(const RingSpec& s, const HahnFraction& x, int j) {
  auto nu = frac_valuation(s, x);
  if (!nu.has_value()) return true;
  int sign = lex_compare(s, *nu, ge_zero(s));
  require(sign >= 0, "NOT_IN_RING", "element has negative valuation");
  return filter_member(s, *nu, j);
}

}  // namespace smashframe

#endif

#ifndef SMASHFRAME_FRAME_HPP
#define SMASHFRAME_FRAME_HPP

// The frame of smashing ideals, modeled combinatorially: elements are chains
// of admissible, strictly separated intervals of prime positions. A chain
// lists the residue pieces of a product localization A -> prod A_{p_hi}/p_lo.
//
// Order convention: x <= y iff every interval of y is contained in some
// interval of x. The empty chain is the top element and {[0,n]} (the identity
// localization) is the bottom. Under this order
//   meet(x, y) = merge all intersecting intervals of the union (coarsen),
//   join(x, y) = all nonempty pairwise intersections (refine).
// Adjacent-but-disjoint intervals are never merged: [0,0] followed by [1,1]
// is a genuine two-factor product, distinct from [0,1].

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "smashframe/error.hpp"
#include "smashframe/ring_model.hpp"

namespace smashframe {

using Chain = std::vector<Interval>;  // sorted, strictly separated

inline bool chain_valid(const RingSpec& s, const Chain& x) {
  for (std::size_t t = 0; t < x.size(); ++t) {
    if (!admissible(s, x[t])) return false;
    if (t + 1 < x.size() && x[t].hi >= x[t + 1].lo) return false;
  }
  return true;
}

inline void require_chain(const RingSpec& s, const Chain& x) {
  if (!chain_valid(s, x)) {
    std::string lit;
    for (const auto& iv : x)
      lit += (lit.empty() ? "" : ";") + ("[" + std::to_string(iv.lo) + "," +
                                         std::to_string(iv.hi) + "]");
    fail("SPEC_MISMATCH", "chain " + (x.empty() ? std::string("empty") : lit) +
                              " is not valid for n=" + std::to_string(s.n) +
                              " idem=" + mask_string(s));
  }
}

// Canonical element order: shorter chains first, then lexicographic on the
// flattened (lo, hi) sequence.
inline bool canonical_less(const Chain& a, const Chain& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

inline bool leq(const Chain& x, const Chain& y) {
  // Every interval of y must sit inside an interval of x; both are sorted and
  // separated, so one forward scan over x suffices.
  std::size_t i = 0;
  for (const Interval& J : y) {
    while (i < x.size() && x[i].hi < J.hi) ++i;
    if (i == x.size() || !(x[i].lo <= J.lo && J.hi <= x[i].hi)) return false;
  }
  return true;
}

inline Chain meet(const Chain& x, const Chain& y) {
  Chain all;
  all.reserve(x.size() + y.size());
  std::merge(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(all));
  Chain out;
  for (const Interval& iv : all) {
    if (!out.empty() && iv.lo <= out.back().hi) {
      if (iv.hi > out.back().hi) out.back().hi = iv.hi;
    } else {
      out.push_back(iv);
    }
  }
  return out;
}

inline Chain join(const Chain& x, const Chain& y) {
  Chain out;
  for (const Interval& I : x) {
    for (const Interval& J : y) {
      Interval c{std::max(I.lo, J.lo), std::min(I.hi, J.hi)};
      if (c.lo <= c.hi) out.push_back(c);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Upper covers of x, from local surgery on one interval:
//   drop   — remove a singleton [i,i];
//   split  — replace [m,k] by [m,k1],[k1+1,k] where idem(k1+1) = 1;
//   shrink — replace [m,k] (m < k) by [m,k-1], only when idem(k) = 0
//            (otherwise [m,k-1],[k,k] would sit strictly between).
// Results come back canonically sorted.
inline std::vector<Chain> covers_rule(const RingSpec& s, const Chain& x) {
  require_chain(s, x);
  std::vector<Chain> out;
  for (std::size_t t = 0; t < x.size(); ++t) {
    const Interval iv = x[t];
    if (iv.lo == iv.hi) {
      Chain y = x;
      y.erase(y.begin() + static_cast<std::ptrdiff_t>(t));
      out.push_back(std::move(y));
    }
    for (int k1 = iv.lo; k1 < iv.hi; ++k1) {
      if (!s.idem[static_cast<std::size_t>(k1 + 1)]) continue;
      Chain y = x;
      y[t] = Interval{iv.lo, k1};
      y.insert(y.begin() + static_cast<std::ptrdiff_t>(t) + 1, Interval{k1 + 1, iv.hi});
      out.push_back(std::move(y));
    }
    if (iv.lo < iv.hi && !s.idem[static_cast<std::size_t>(iv.hi)]) {
      Chain y = x;
      y[t] = Interval{iv.lo, iv.hi - 1};
      out.push_back(std::move(y));
    }
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

// Exact chain counting, independent of enumeration: ways[pos][k] counts chains
// of exactly k intervals confined to positions >= pos.
namespace detail {

inline unsigned long long add_checked(unsigned long long a, unsigned long long b) {
  unsigned long long r = 0;
  require(!__builtin_add_overflow(a, b, &r), "OVERFLOW", "chain count exceeds 64 bits");
  return r;
}

inline std::vector<std::vector<unsigned long long>> count_table(const RingSpec& s) {
  validate(s);
  const std::size_t n = static_cast<std::size_t>(s.n);
  const std::size_t kmax = n + 1;  // n+1 disjoint singletons at most
  std::vector<std::vector<unsigned long long>> ways(
      n + 2, std::vector<unsigned long long>(kmax + 1, 0));
  for (std::size_t pos = 0; pos <= n + 1; ++pos) ways[pos][0] = 1;
  for (std::size_t pos = n + 1; pos-- > 0;) {
    for (std::size_t k = 1; k <= kmax; ++k) {
      unsigned long long total = 0;
      for (std::size_t i = pos; i <= n; ++i) {
        if (!s.idem[i]) continue;
        for (std::size_t j = i; j <= n; ++j)
          total = add_checked(total, ways[j + 1][k - 1]);
      }
      ways[pos][k] = total;
    }
  }
  return ways;
}

}  // namespace detail

inline unsigned long long count_by_size(const RingSpec& s, int k) {
  require(k >= 0, "REJECT", "size must be nonnegative");
  auto ways = detail::count_table(s);
  if (static_cast<std::size_t>(k) >= ways[0].size()) return 0;
  return ways[0][static_cast<std::size_t>(k)];
}

inline std::vector<unsigned long long> count_histogram(const RingSpec& s) {
  auto ways = detail::count_table(s);
  std::vector<unsigned long long> hist = ways[0];
  while (hist.size() > 1 && hist.back() == 0) hist.pop_back();
  return hist;
}

inline unsigned long long count_all(const RingSpec& s) {
  unsigned long long total = 0;
  for (unsigned long long c : count_histogram(s)) total = detail::add_checked(total, c);
  return total;
}

// A smashing ideal is compactly generated iff it is the whole category (empty
// chain) or a single localization piece A_{p_hi} (one interval anchored at 0).
inline bool is_compactly_generated(const Chain& x) {
  return x.empty() || (x.size() == 1 && x[0].lo == 0);
}

// Display name of the epimorphism class a chain classifies, one factor per
// interval: [0,0] -> Q, [0,n] -> A, [0,j] -> A_pj, [i,i] -> k(pi),
// [i,n] -> A/pi, otherwise A_pj/pi. The empty chain is the zero ring.
inline std::string epi_label(const RingSpec& s, const Chain& x) {
  require_chain(s, x);
  if (x.empty()) return "0";
  std::string out;
  for (const Interval& iv : x) {
    if (!out.empty()) out += " × ";
    const int i = iv.lo, j = iv.hi;
    if (i == 0 && j == 0)
      out += "Q";
    else if (i == 0 && j == s.n)
      out += "A";
    else if (i == 0)
      out += "A_p" + std::to_string(j);
    else if (i == j)
      out += "k(p" + std::to_string(i) + ")";
    else if (j == s.n)
      out += "A/p" + std::to_string(i);
    else
      out += "A_p" + std::to_string(j) + "/p" + std::to_string(i);
  }
  return out;
}

constexpr unsigned long long kMaxEnumerate = 1'000'000;

// The fully materialized frame: all chains in canonical order plus id lookup.
struct Frame {
  RingSpec spec;
  std::vector<Chain> elements;

  int id_of(const Chain& x) const {
    auto it = std::lower_bound(elements.begin(), elements.end(), x, canonical_less);
    require(it != elements.end() && *it == x, "SPEC_MISMATCH",
            "chain is not an element of this frame");
    return static_cast<int>(it - elements.begin());
  }

  int top_id() const { return 0; }  // empty chain sorts first

  int bottom_id() const {
    Chain b{Interval{0, spec.n}};
    return id_of(b);
  }

  bool leq_ids(int a, int b) const {
    return leq(elements[static_cast<std::size_t>(a)], elements[static_cast<std::size_t>(b)]);
  }

  // Cover edges (u, v) with v covering u, by element id, u ascending.
  std::vector<std::pair<int, int>> cover_edges() const {
    std::vector<std::pair<int, int>> out;
    for (std::size_t u = 0; u < elements.size(); ++u)
      for (const Chain& c : covers_rule(spec, elements[u]))
        out.emplace_back(static_cast<int>(u), id_of(c));
    return out;
  }
};

inline Frame enumerate_frame(const RingSpec& s) {
  validate(s);
  unsigned long long total = count_all(s);
  require(total <= kMaxEnumerate, "FRAME_TOO_LARGE",
          "frame has " + std::to_string(total) + " elements, enumeration cap is " +
              std::to_string(kMaxEnumerate));
  Frame f;
  f.spec = s;
  f.elements.reserve(total);
  Chain cur;
  auto extend = [&](auto&& self, int pos) -> void {
    f.elements.push_back(cur);
    for (int lo = pos; lo <= s.n; ++lo) {
      if (!s.idem[static_cast<std::size_t>(lo)]) continue;
      for (int hi = lo; hi <= s.n; ++hi) {
        cur.push_back(Interval{lo, hi});
        self(self, hi + 1);  // next interval starts past hi; adjacency is allowed
        cur.pop_back();
      }
    }
  };
  extend(extend, 0);
  std::sort(f.elements.begin(), f.elements.end(), canonical_less);
  require(f.elements.size() == total, "ASSERT_MISMATCH",
          "enumerated " + std::to_string(f.elements.size()) + " chains, counted " +
              std::to_string(total));
  return f;
}

}  // namespace smashframe

#endif

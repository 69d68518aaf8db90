#ifndef SMASHFRAME_RING_MODEL_HPP
#define SMASHFRAME_RING_MODEL_HPP

// Combinatorial ring descriptor: a finite-dimensional valuation domain is
// modeled by its Krull dimension n, an idempotence mask over the prime chain
// 0 = p0 < p1 < ... < pn (idem[m] = 1 iff the m-th prime is idempotent; p0 = (0)
// is always idempotent), and the base ell of the value-group denominators.

#include <cstdint>
#include <string>
#include <vector>

#include "smashframe/error.hpp"

namespace smashframe {

struct RingSpec {
  int n = 1;
  std::vector<std::uint8_t> idem;  // size n+1, indexed by prime position
  long long ell = 2;
};

inline RingSpec make_spec(int n, std::vector<std::uint8_t> idem, long long ell = 2) {
  return RingSpec{n, std::move(idem), ell};
}

inline RingSpec all_ones_spec(int n, long long ell = 2) {
  return RingSpec{n, std::vector<std::uint8_t>(static_cast<std::size_t>(n) + 1, 1), ell};
}

inline std::string mask_string(const RingSpec& s) {
  std::string out;
  out.reserve(s.idem.size());
  for (auto b : s.idem) out.push_back(b ? '1' : '0');
  return out;
}

inline void validate(const RingSpec& s) {
  require(s.n >= 1, "REJECT", "n=" + std::to_string(s.n) + ", need n >= 1");
  require(s.idem.size() == static_cast<std::size_t>(s.n) + 1, "REJECT",
          "idem has " + std::to_string(s.idem.size()) + " entries, need n+1 = " +
              std::to_string(s.n + 1));
  for (std::size_t i = 0; i < s.idem.size(); ++i)
    require(s.idem[i] <= 1, "REJECT", "idem[" + std::to_string(i) + "] not 0/1");
  require(s.idem[0] == 1, "REJECT", "idem[0]=0");
  require(s.ell >= 2, "REJECT", "ell=" + std::to_string(s.ell) + ", need ell >= 2");
}

// A closed interval [lo, hi] of prime positions. Admissible intervals have an
// idempotent left endpoint; they index the residue pieces A_{p_hi} / p_lo.
struct Interval {
  int lo = 0;
  int hi = 0;

  friend bool operator==(const Interval& a, const Interval& b) = default;
  friend auto operator<=>(const Interval& a, const Interval& b) = default;
};

inline bool admissible(const RingSpec& s, const Interval& iv) {
  return 0 <= iv.lo && iv.lo <= iv.hi && iv.hi <= s.n &&
         s.idem[static_cast<std::size_t>(iv.lo)] == 1;
}

// All admissible intervals, ordered by (lo, hi).
inline std::vector<Interval> admissible_intervals(const RingSpec& s) {
  validate(s);
  std::vector<Interval> out;
  for (int lo = 0; lo <= s.n; ++lo) {
    if (!s.idem[static_cast<std::size_t>(lo)]) continue;
    for (int hi = lo; hi <= s.n; ++hi) out.push_back(Interval{lo, hi});
  }
  return out;
}

// Successor data for the idempotence mask:
//   next[i]  = smallest idempotent index > i, or n when none exists;
//   next0[k] = k-fold iterate of next starting at 0 (stabilizes by k = n+1);
//   M        = largest idempotent index;
//   d        = max(n - M, largest step between consecutive next0 iterates).
// The smashing spectrum of the ring has specialization chains of at most
// d + 1 points.
struct NextProfile {
  std::vector<int> next;   // size n+1
  std::vector<int> next0;  // size n+2, iterates 0..n+1
  int M = 0;
  int d = 0;
};

inline NextProfile next_profile(const RingSpec& s) {
  validate(s);
  NextProfile p;
  p.next.assign(static_cast<std::size_t>(s.n) + 1, s.n);
  for (int i = s.n; i >= 0; --i) {
    int nxt = s.n;
    for (int k = i + 1; k <= s.n; ++k) {
      if (s.idem[static_cast<std::size_t>(k)]) {
        nxt = k;
        break;
      }
    }
    p.next[static_cast<std::size_t>(i)] = nxt;
  }
  p.next0.assign(static_cast<std::size_t>(s.n) + 2, 0);
  for (int k = 1; k <= s.n + 1; ++k)
    p.next0[static_cast<std::size_t>(k)] =
        p.next[static_cast<std::size_t>(p.next0[static_cast<std::size_t>(k - 1)])];
  p.M = 0;
  for (int i = 0; i <= s.n; ++i)
    if (s.idem[static_cast<std::size_t>(i)]) p.M = i;
  p.d = s.n - p.M;
  for (int k = 0; k < s.n; ++k) {
    int step = p.next0[static_cast<std::size_t>(k + 1)] - p.next0[static_cast<std::size_t>(k)];
    if (step < 0) step = -step;
    if (step > p.d) p.d = step;
  }
  return p;
}

}  // namespace smashframe

#endif

#ifndef SMASHFRAME_SPECTRA_HPP
#define SMASHFRAME_SPECTRA_HPP

// Spectral spaces attached to the frame of smashing ideals:
//   - the smashing spectrum (meet-irreducible frame elements with the
//     specialization order inherited from the frame),
//   - the order-dual spectrum of thick primes (a total order on n+1 points),
//   - the comparison map between them, and the telescope verdict that decides
//     when the comparison is a bijection,
//   - the embedding of any frame into the all-idempotent frame of the same
//     dimension.

#include <algorithm>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "smashframe/error.hpp"
#include "smashframe/frame.hpp"
#include "smashframe/ring_model.hpp"

namespace smashframe {

struct SpectralSpace {
  std::vector<int> points;                          // frame element ids, ascending
  std::vector<std::pair<int, int>> specialization;  // (p, q) with p ~> q, full irreflexive
  std::vector<std::pair<int, int>> reduction;       // transitive reduction of the above
  std::vector<int> closed_points;                   // no outgoing specialization
  std::vector<int> open_points;                     // no incoming specialization
};

// Meet-irreducible elements are the chains with exactly one upper cover; the
// top (empty chain) is excluded. Closed form: single-interval chains {[m,k]}
// with idem(m) = 1 and either k = m or m < k <= next(m). The cover-count
// computation and the closed form are cross-checked against each other.
inline SpectralSpace smashing_spectrum(const Frame& f) {
  std::vector<int> by_covers;
  for (std::size_t i = 0; i < f.elements.size(); ++i) {
    if (static_cast<int>(i) == f.top_id()) continue;
    if (covers_rule(f.spec, f.elements[i]).size() == 1)
      by_covers.push_back(static_cast<int>(i));
  }

  NextProfile prof = next_profile(f.spec);
  std::vector<int> closed_form;
  for (int m = 0; m <= f.spec.n; ++m) {
    if (!f.spec.idem[static_cast<std::size_t>(m)]) continue;
    closed_form.push_back(f.id_of(Chain{Interval{m, m}}));
    for (int k = m + 1; k <= prof.next[static_cast<std::size_t>(m)]; ++k)
      closed_form.push_back(f.id_of(Chain{Interval{m, k}}));
  }
  std::sort(closed_form.begin(), closed_form.end());
  require(by_covers == closed_form, "FRAME_INVALID",
          "cover-count points disagree with the closed-form point set");

  SpectralSpace sp;
  sp.points = std::move(by_covers);
  const std::size_t m = sp.points.size();
  std::vector<std::vector<bool>> lt(m, std::vector<bool>(m, false));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      if (a != b && f.leq_ids(sp.points[a], sp.points[b])) lt[a][b] = true;
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      if (lt[a][b]) sp.specialization.emplace_back(sp.points[a], sp.points[b]);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      if (!lt[a][b]) continue;
      bool direct = true;
      for (std::size_t c = 0; c < m && direct; ++c)
        if (lt[a][c] && lt[c][b]) direct = false;
      if (direct) sp.reduction.emplace_back(sp.points[a], sp.points[b]);
    }
  }
  for (std::size_t a = 0; a < m; ++a) {
    bool out = false, in = false;
    for (std::size_t b = 0; b < m; ++b) {
      out = out || lt[a][b];
      in = in || lt[b][a];
    }
    if (!out) sp.closed_points.push_back(sp.points[a]);
    if (!in) sp.open_points.push_back(sp.points[a]);
  }
  return sp;
}

// Point count of the smashing spectrum straight from the mask: the number of
// idempotent positions, plus the total step covered by the next-iterates of 0
// while they land on idempotent positions, plus the co-idempotent tail n - M.
inline unsigned long long point_count_formula(const RingSpec& s) {
  NextProfile p = next_profile(s);
  unsigned long long total = 0;
  for (int i = 0; i <= s.n; ++i)
    if (s.idem[static_cast<std::size_t>(i)]) ++total;
  for (std::size_t k = 0; k + 1 < p.next0.size(); ++k) {
    int cur = p.next0[k], nxt = p.next0[k + 1];
    if (nxt <= cur || !s.idem[static_cast<std::size_t>(nxt)]) break;
    total += static_cast<unsigned long long>(nxt - cur);
  }
  total += static_cast<unsigned long long>(s.n - p.M);
  return total;
}

// Length (in points) of the longest specialization chain; always d + 1.
inline int spectrum_dimension(const Frame& f, const SpectralSpace& sp) {
  const std::size_t m = sp.points.size();
  std::vector<int> best(m, 1);
  // points are in canonical frame order; p ~> q implies q has fewer/earlier
  // intervals is not guaranteed, so iterate to a fixed point (tiny graphs).
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& [p, q] : sp.specialization) {
      std::size_t a = static_cast<std::size_t>(
          std::lower_bound(sp.points.begin(), sp.points.end(), p) - sp.points.begin());
      std::size_t b = static_cast<std::size_t>(
          std::lower_bound(sp.points.begin(), sp.points.end(), q) - sp.points.begin());
      if (best[b] + 1 > best[a]) {
        best[a] = best[b] + 1;
        changed = true;
      }
    }
  }
  int longest = m == 0 ? 0 : *std::max_element(best.begin(), best.end());
  NextProfile prof = next_profile(f.spec);
  require(longest == prof.d + 1, "ASSERT_MISMATCH",
          "longest specialization chain has " + std::to_string(longest) +
              " points, profile predicts " + std::to_string(prof.d + 1));
  return longest;
}

// The dual spectrum of thick primes: a totally ordered space with points
// 0..n (point i is the thick ideal generated by the i-th localization) and
// i ~> j exactly when j < i. There are n+2 thick ideals in total.
struct BalmerSpace {
  int point_count = 0;                              // n+1 points, labeled 0..n
  std::vector<std::pair<int, int>> specialization;  // (i, j) with j < i
  std::vector<std::pair<int, int>> reduction;       // (i, i-1)
  unsigned long long thick_count = 0;               // n+2
};

inline BalmerSpace balmer_dual(const RingSpec& s) {
  validate(s);
  BalmerSpace b;
  b.point_count = s.n + 1;
  for (int i = 0; i <= s.n; ++i)
    for (int j = 0; j < i; ++j) b.specialization.emplace_back(i, j);
  for (int i = 1; i <= s.n; ++i) b.reduction.emplace_back(i, i - 1);
  b.thick_count = static_cast<unsigned long long>(s.n) + 2;
  return b;
}

// Telescope verdict: holds iff no positive prime position is idempotent,
// equivalently iff every smashing ideal is compactly generated. The witness is
// the first idempotent j >= 1 when the conjecture fails, -1 otherwise. Both
// directions of the equivalence are re-verified on the spot.
struct TelescopeVerdict {
  bool holds = false;
  int witness = -1;
};

inline TelescopeVerdict telescope_holds(const RingSpec& s) {
  validate(s);
  TelescopeVerdict v;
  v.holds = true;
  for (int j = 1; j <= s.n; ++j) {
    if (s.idem[static_cast<std::size_t>(j)]) {
      v.holds = false;
      v.witness = j;
      break;
    }
  }
  if (v.holds) {
    Frame f = enumerate_frame(s);  // n+2 elements when no positive idempotents
    for (const Chain& x : f.elements)
      require(is_compactly_generated(x), "ASSERT_MISMATCH",
              "telescope verdict holds but a non-compact smashing ideal exists");
  } else {
    Chain witness_chain{Interval{v.witness, v.witness}};
    require(chain_valid(s, witness_chain) && !is_compactly_generated(witness_chain),
            "ASSERT_MISMATCH", "telescope witness does not yield a non-compact ideal");
  }
  return v;
}

// The comparison map from the smashing spectrum onto the dual spectrum: a
// point {[a,b]} goes to b. Monotone and surjective always; bijective exactly
// when the telescope verdict holds.
struct ComparisonMap {
  std::vector<std::pair<int, int>> assignment;  // (frame point id, dual point)
  bool bijective = false;
};

inline ComparisonMap comparison_map(const Frame& f, const SpectralSpace& sp) {
  ComparisonMap cm;
  std::set<int> image;
  for (int p : sp.points) {
    const Chain& x = f.elements[static_cast<std::size_t>(p)];
    require(x.size() == 1, "FRAME_INVALID", "spectrum point is not a single interval");
    cm.assignment.emplace_back(p, x[0].hi);
    image.insert(x[0].hi);
  }
  auto target_of = [&](int p) {
    auto it = std::lower_bound(cm.assignment.begin(), cm.assignment.end(),
                               std::make_pair(p, -1));
    return it->second;
  };
  for (const auto& [p, q] : sp.specialization)
    require(target_of(q) <= target_of(p), "ASSERT_MISMATCH",
            "comparison map is not monotone");
  require(static_cast<int>(image.size()) == f.spec.n + 1, "ASSERT_MISMATCH",
          "comparison map is not surjective");
  cm.bijective = cm.assignment.size() == image.size();
  TelescopeVerdict tv = telescope_holds(f.spec);
  require(cm.bijective == tv.holds, "ASSERT_MISMATCH",
          "comparison bijectivity disagrees with the telescope verdict");
  return cm;
}

// Embedding of the frame for (n, idem) into the all-idempotent frame of the
// same dimension, sending a chain to itself. Injective, preserves meet, join,
// order in both directions, top and bottom; verified pairwise (exhaustively on
// small frames, on a deterministic stride sample beyond that).
struct Embedding {
  Frame source;
  Frame target;
  std::vector<int> map;  // source id -> target id
};

inline Embedding embed_subframe(const RingSpec& s) {
  validate(s);
  Embedding e;
  e.source = enumerate_frame(s);
  e.target = enumerate_frame(all_ones_spec(s.n, s.ell));
  e.map.reserve(e.source.elements.size());
  for (const Chain& x : e.source.elements) {
    require(chain_valid(e.target.spec, x), "NOT_ADMISSIBLE",
            "source chain is not admissible in the all-idempotent frame");
    e.map.push_back(e.target.id_of(x));
  }
  std::set<int> distinct(e.map.begin(), e.map.end());
  require(distinct.size() == e.map.size(), "ASSERT_MISMATCH", "embedding is not injective");
  require(e.map[static_cast<std::size_t>(e.source.top_id())] == e.target.top_id() &&
              e.map[static_cast<std::size_t>(e.source.bottom_id())] == e.target.bottom_id(),
          "ASSERT_MISMATCH", "embedding moved top or bottom");

  const std::size_t count = e.source.elements.size();
  std::size_t stride = 1;
  while (count * (count / stride) > 4'000'000) ++stride;
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = i % stride; j < count; j += stride) {
      const Chain &x = e.source.elements[i], &y = e.source.elements[j];
      const Chain &tx = e.target.elements[static_cast<std::size_t>(e.map[i])],
                  &ty = e.target.elements[static_cast<std::size_t>(e.map[j])];
      require(leq(x, y) == leq(tx, ty), "ASSERT_MISMATCH",
              "embedding does not preserve and reflect order");
      require(e.map[static_cast<std::size_t>(e.source.id_of(meet(x, y)))] ==
                  e.target.id_of(meet(tx, ty)),
              "ASSERT_MISMATCH", "embedding does not preserve meet");
      require(e.map[static_cast<std::size_t>(e.source.id_of(join(x, y)))] ==
                  e.target.id_of(join(tx, ty)),
              "ASSERT_MISMATCH", "embedding does not preserve join");
    }
  }
  return e;
}

}  // namespace smashframe

#endif

#ifndef SMASHFRAME_CHECKS_HPP
#define SMASHFRAME_CHECKS_HPP

// Self-validation suites: every closed-form rule in the library is replayed
// against a structure-blind oracle on the actual frame. Small frames are
// checked exhaustively; larger ones on a fixed-seed deterministic sample, so
// repeated runs are byte-identical.

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "smashframe/error.hpp"
#include "smashframe/frame.hpp"
#include "smashframe/ring_model.hpp"
#include "smashframe/spectra.hpp"

namespace smashframe {

constexpr std::size_t kExhaustiveLawCap = 300;    // frames up to this get full triple sweeps
constexpr std::size_t kExhaustiveOrderCap = 2500; // full order-matrix oracles up to this

// Order matrix as bitset rows: row x has bit y set iff x <= y, x != y.
struct StrictOrder {
  std::size_t count = 0;
  std::size_t words = 0;
  std::vector<std::uint64_t> up;    // row-major strict up-sets
  std::vector<std::uint64_t> down;  // transpose

  bool lt(std::size_t x, std::size_t y) const {
    return (up[x * words + y / 64] >> (y % 64)) & 1u;
  }
};

inline StrictOrder strict_order(const Frame& f) {
  StrictOrder o;
  o.count = f.elements.size();
  o.words = (o.count + 63) / 64;
  o.up.assign(o.count * o.words, 0);
  o.down.assign(o.count * o.words, 0);
  for (std::size_t x = 0; x < o.count; ++x) {
    for (std::size_t y = 0; y < o.count; ++y) {
      if (x != y && leq(f.elements[x], f.elements[y])) {
        o.up[x * o.words + y / 64] |= std::uint64_t{1} << (y % 64);
        o.down[y * o.words + x / 64] |= std::uint64_t{1} << (x % 64);
      }
    }
  }
  return o;
}

// Cover edges recovered from the order alone: (x, y) with x < y and nothing
// strictly between. This is the oracle the closed-form cover rule must match.
inline std::vector<std::pair<int, int>> covers_from_order(const StrictOrder& o) {
  std::vector<std::pair<int, int>> out;
  for (std::size_t x = 0; x < o.count; ++x) {
    for (std::size_t y = 0; y < o.count; ++y) {
      if (!o.lt(x, y)) continue;
      bool between = false;
      for (std::size_t w = 0; w < o.words && !between; ++w)
        if (o.up[x * o.words + w] & o.down[y * o.words + w]) between = true;
      if (!between) out.emplace_back(static_cast<int>(x), static_cast<int>(y));
    }
  }
  return out;
}

// Upper covers of one element, from the order alone: minimal strict uppers.
inline std::vector<int> covers_of_element(const Frame& f, std::size_t x) {
  std::vector<int> ups;
  for (std::size_t y = 0; y < f.elements.size(); ++y)
    if (x != y && leq(f.elements[x], f.elements[y])) ups.push_back(static_cast<int>(y));
  std::vector<int> out;
  for (int y : ups) {
    bool minimal = true;
    for (int z : ups)
      if (z != y && leq(f.elements[static_cast<std::size_t>(z)],
                        f.elements[static_cast<std::size_t>(y)]))
        minimal = false;
    if (minimal) out.push_back(y);
  }
  return out;
}

struct CheckReport {
  std::vector<std::pair<std::string, bool>> suites;
  std::vector<std::string> failures;

  bool all_passed() const {
    for (const auto& [name, ok] : suites)
      if (!ok) return false;
    return true;
  }
};

namespace detail {

inline std::vector<std::size_t> sample_ids(std::size_t count, std::size_t want) {
  std::vector<std::size_t> ids;
  if (count <= want) {
    for (std::size_t i = 0; i < count; ++i) ids.push_back(i);
    return ids;
  }
  std::mt19937 rng(12345);
  std::uniform_int_distribution<std::size_t> dist(0, count - 1);
  for (std::size_t i = 0; i < want; ++i) ids.push_back(dist(rng));
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids;
}

inline unsigned long long fib(int k) {
  unsigned long long a = 0, b = 1;
  for (int i = 0; i < k; ++i) {
    unsigned long long c = a + b;
    a = b;
    b = c;
  }
  return a;
}

inline unsigned long long binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  unsigned long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<unsigned long long>(n - k + i) /
                                   static_cast<unsigned long long>(i);
  return r;
}

}  // namespace detail

inline bool check_lattice_laws(const Frame& f, CheckReport& rep) {
  const std::size_t count = f.elements.size();
  auto id = [&](const Chain& c) { return f.id_of(c); };
  auto test_triple = [&](std::size_t x, std::size_t y, std::size_t z) -> bool {
    const Chain &cx = f.elements[x], &cy = f.elements[y], &cz = f.elements[z];
    if (meet(cx, cy) != meet(cy, cx) || join(cx, cy) != join(cy, cx)) return false;
    if (meet(cx, meet(cy, cz)) != meet(meet(cx, cy), cz)) return false;
    if (join(cx, join(cy, cz)) != join(join(cx, cy), cz)) return false;
    if (meet(cx, join(cy, cz)) != join(meet(cx, cy), meet(cx, cz))) return false;
    if (join(cx, meet(cy, cz)) != meet(join(cx, cy), join(cx, cz))) return false;
    return true;
  };
  auto test_pair = [&](std::size_t x, std::size_t y) -> bool {
    const Chain &cx = f.elements[x], &cy = f.elements[y];
    if (meet(cx, join(cx, cy)) != cx || join(cx, meet(cx, cy)) != cx) return false;
    bool le = leq(cx, cy);
    if (le != (meet(cx, cy) == cx)) return false;
    if (le != (join(cx, cy) == cy)) return false;
    if (id(meet(cx, cy)) < 0 || id(join(cx, cy)) < 0) return false;  // closure
    return true;
  };
  bool ok = true;
  if (count <= kExhaustiveLawCap) {
    for (std::size_t x = 0; x < count && ok; ++x)
      for (std::size_t y = 0; y < count && ok; ++y) {
        if (!test_pair(x, y)) ok = false;
        for (std::size_t z = 0; z < count && ok; ++z)
          if (!test_triple(x, y, z)) ok = false;
      }
  } else {
    std::mt19937 rng(20240);
    std::uniform_int_distribution<std::size_t> dist(0, count - 1);
    for (int i = 0; i < 20000 && ok; ++i) {
      std::size_t x = dist(rng), y = dist(rng), z = dist(rng);
      if (!test_pair(x, y) || !test_triple(x, y, z)) ok = false;
    }
  }
  if (!ok) rep.failures.push_back("lattice laws violated");
  rep.suites.emplace_back("lattice laws", ok);
  return ok;
}

inline bool check_covers_oracle(const Frame& f, CheckReport& rep) {
  bool ok = true;
  if (f.elements.size() <= kExhaustiveOrderCap) {
    StrictOrder o = strict_order(f);
    auto oracle = covers_from_order(o);
    auto rule = f.cover_edges();
    std::sort(rule.begin(), rule.end());
    std::sort(oracle.begin(), oracle.end());
    ok = rule == oracle;
  } else {
    for (std::size_t x : detail::sample_ids(f.elements.size(), 48)) {
      std::vector<int> oracle = covers_of_element(f, x);
      std::vector<int> rule;
      for (const Chain& c : covers_rule(f.spec, f.elements[x])) rule.push_back(f.id_of(c));
      std::sort(rule.begin(), rule.end());
      std::sort(oracle.begin(), oracle.end());
      if (rule != oracle) {
        ok = false;
        break;
      }
    }
  }
  if (!ok) rep.failures.push_back("cover rule disagrees with the order oracle");
  rep.suites.emplace_back("covers oracle", ok);
  return ok;
}

inline bool check_counts(const Frame& f, CheckReport& rep) {
  bool ok = true;
  std::vector<unsigned long long> hist = count_histogram(f.spec);
  std::vector<unsigned long long> seen;
  for (const Chain& x : f.elements) {
    if (x.size() >= seen.size()) seen.resize(x.size() + 1, 0);
    ++seen[x.size()];
  }
  while (seen.size() > 1 && seen.back() == 0) seen.pop_back();
  if (hist != seen) ok = false;
  if (count_all(f.spec) != f.elements.size()) ok = false;

  bool all_ones = true;
  for (auto b : f.spec.idem) all_ones = all_ones && b == 1;
  if (ok && all_ones) {
    if (count_all(f.spec) != detail::fib(2 * f.spec.n + 3)) ok = false;
    for (std::size_t k = 0; k < hist.size() && ok; ++k)
      if (hist[k] != detail::binom(f.spec.n + static_cast<int>(k) + 1, 2 * static_cast<int>(k)))
        ok = false;
  }
  if (ok && hist.size() > 2) {
    // Independent closed form for two-interval chains.
    unsigned long long two = 0;
    for (int i1 = 0; i1 <= f.spec.n; ++i1) {
      if (!f.spec.idem[static_cast<std::size_t>(i1)]) continue;
      for (int i2 = i1 + 1; i2 <= f.spec.n; ++i2) {
        if (!f.spec.idem[static_cast<std::size_t>(i2)]) continue;
        two += static_cast<unsigned long long>(i2 - i1) *
               static_cast<unsigned long long>(f.spec.n + 1 - i2);
      }
    }
    if (two != hist[2]) ok = false;
  }
  if (!ok) rep.failures.push_back("chain counts disagree between recurrence and enumeration");
  rep.suites.emplace_back("counts", ok);
  return ok;
}

inline bool check_points(const Frame& f, const SpectralSpace& sp, CheckReport& rep) {
  bool ok = true;
  if (f.elements.size() <= kExhaustiveOrderCap) {
    StrictOrder o = strict_order(f);
    auto oracle_edges = covers_from_order(o);
    std::vector<int> cover_count(f.elements.size(), 0);
    for (const auto& [u, v] : oracle_edges) {
      (void)v;
      ++cover_count[static_cast<std::size_t>(u)];
    }
    std::vector<int> oracle_points;
    for (std::size_t i = 0; i < f.elements.size(); ++i)
      if (static_cast<int>(i) != f.top_id() && cover_count[i] == 1)
        oracle_points.push_back(static_cast<int>(i));
    ok = oracle_points == sp.points;
  } else {
    for (std::size_t x : detail::sample_ids(f.elements.size(), 32)) {
      bool is_point = std::binary_search(sp.points.begin(), sp.points.end(),
                                         static_cast<int>(x));
      bool oracle_point = static_cast<int>(x) != f.top_id() &&
                          covers_of_element(f, x).size() == 1;
      if (is_point != oracle_point) {
        ok = false;
        break;
      }
    }
  }
  if (!ok) rep.failures.push_back("spectrum points disagree with the meet-irreducible oracle");
  rep.suites.emplace_back("points", ok);
  return ok;
}

inline bool check_formulas(const Frame& f, const SpectralSpace& sp, CheckReport& rep) {
  bool ok = true;
  std::string why;
  try {
    if (point_count_formula(f.spec) != sp.points.size()) {
      ok = false;
      why = "point-count formula disagrees with the spectrum";
    }
    spectrum_dimension(f, sp);      // asserts longest chain = d + 1
    comparison_map(f, sp);          // asserts monotone, surjective, telescope link
    telescope_holds(f.spec);        // asserts compact-generation equivalence
  } catch (const Error& e) {
    ok = false;
    why = e.what();
  }
  if (!ok) rep.failures.push_back(why.empty() ? "formula checks failed" : why);
  rep.suites.emplace_back("formulas", ok);
  return ok;
}

inline CheckReport run_checks(const RingSpec& s) {
  CheckReport rep;
  Frame f = enumerate_frame(s);
  SpectralSpace sp = smashing_spectrum(f);
  check_lattice_laws(f, rep);
  check_covers_oracle(f, rep);
  check_counts(f, rep);
  check_points(f, sp, rep);
  check_formulas(f, sp, rep);
  return rep;
}

}  // namespace smashframe

#endif

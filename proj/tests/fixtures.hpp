#ifndef SMASHFRAME_TESTS_FIXTURES_HPP
#define SMASHFRAME_TESTS_FIXTURES_HPP

// Frozen regression data for the two fully worked rings:
//   dim 2 with every prime idempotent          (mask 111)
//   dim 5 with idempotent primes at 0 and 4    (mask 100010)
// plus the dim-1 all-idempotent ring. Chains are given as literals; edges as
// literal pairs (u, v) with v covering u in Hasse data and u ~> v in
// specialization data.

#include <string>
#include <utility>
#include <vector>

namespace fixtures {

using LabeledChain = std::pair<std::string, std::string>;  // (chain, label)
using Edge = std::pair<std::string, std::string>;

// --- dim 1, mask 11 ----------------------------------------------------------

inline std::vector<std::string> dim1_elements() {
  return {"empty", "[0,0]", "[0,1]", "[1,1]", "[0,0];[1,1]"};
}

inline std::vector<Edge> dim1_hasse() {
  return {
      {"[0,1]", "[0,0];[1,1]"},
      {"[0,0];[1,1]", "[0,0]"},
      {"[0,0];[1,1]", "[1,1]"},
      {"[0,0]", "empty"},
      {"[1,1]", "empty"},
  };
}

inline std::vector<std::string> dim1_spectrum_points() { return {"[0,0]", "[0,1]", "[1,1]"}; }

inline std::vector<Edge> dim1_spectrum_arrows() {
  return {{"[0,1]", "[0,0]"}, {"[0,1]", "[1,1]"}};
}

// (chain, dual point) for the comparison map.
inline std::vector<std::pair<std::string, int>> dim1_comparison() {
  return {{"[0,0]", 0}, {"[0,1]", 1}, {"[1,1]", 1}};
}

// --- dim 2, mask 111 ---------------------------------------------------------

inline std::vector<LabeledChain> dim2_labels() {
  return {
      {"empty", "0"},
      {"[0,0]", "Q"},
      {"[0,1]", "A_p1"},
      {"[0,2]", "A"},
      {"[1,1]", "k(p1)"},
      {"[1,2]", "A/p1"},
      {"[2,2]", "k(p2)"},
      {"[0,0];[1,1]", "Q × k(p1)"},
      {"[0,0];[2,2]", "Q × k(p2)"},
      {"[1,1];[2,2]", "k(p1) × k(p2)"},
      {"[0,0];[1,2]", "Q × A/p1"},
      {"[0,1];[2,2]", "A_p1 × k(p2)"},
      {"[0,0];[1,1];[2,2]", "Q × k(p1) × k(p2)"},
  };
}

inline std::vector<Edge> dim2_hasse() {
  return {
      {"[2,2]", "empty"},
      {"[1,1]", "empty"},
      {"[0,0]", "empty"},
      {"[1,1];[2,2]", "[2,2]"},
      {"[1,1];[2,2]", "[1,1]"},
      {"[0,0];[2,2]", "[2,2]"},
      {"[0,0];[2,2]", "[0,0]"},
      {"[0,0];[1,1]", "[1,1]"},
      {"[0,0];[1,1]", "[0,0]"},
      {"[1,2]", "[1,1];[2,2]"},
      {"[0,0];[1,1];[2,2]", "[1,1];[2,2]"},
      {"[0,0];[1,1];[2,2]", "[0,0];[2,2]"},
      {"[0,0];[1,1];[2,2]", "[0,0];[1,1]"},
      {"[0,1]", "[0,0];[1,1]"},
      {"[0,0];[1,2]", "[1,2]"},
      {"[0,0];[1,2]", "[0,0];[1,1];[2,2]"},
      {"[0,1];[2,2]", "[0,0];[1,1];[2,2]"},
      {"[0,1];[2,2]", "[0,1]"},
      {"[0,2]", "[0,0];[1,2]"},
      {"[0,2]", "[0,1];[2,2]"},
  };
}

inline std::vector<std::string> dim2_compacts() { return {"empty", "[0,0]", "[0,1]", "[0,2]"}; }

inline std::vector<std::string> dim2_spectrum_points() {
  return {"[0,0]", "[0,1]", "[1,1]", "[1,2]", "[2,2]"};
}

inline std::vector<Edge> dim2_spectrum_arrows() {
  return {
      {"[1,2]", "[2,2]"},
      {"[1,2]", "[1,1]"},
      {"[0,1]", "[1,1]"},
      {"[0,1]", "[0,0]"},
  };
}

// --- dim 5, mask 100010 --------------------------------------------------------

inline std::vector<LabeledChain> dim5_labels() {
  return {
      {"empty", "0"},
      {"[0,0]", "Q"},
      {"[0,1]", "A_p1"},
      {"[0,2]", "A_p2"},
      {"[0,3]", "A_p3"},
      {"[0,4]", "A_p4"},
      {"[0,5]", "A"},
      {"[4,4]", "k(p4)"},
      {"[4,5]", "A/p4"},
      {"[0,0];[4,4]", "Q × k(p4)"},
      {"[0,0];[4,5]", "Q × A/p4"},
      {"[0,1];[4,4]", "A_p1 × k(p4)"},
      {"[0,1];[4,5]", "A_p1 × A/p4"},
      {"[0,2];[4,4]", "A_p2 × k(p4)"},
      {"[0,2];[4,5]", "A_p2 × A/p4"},
      {"[0,3];[4,4]", "A_p3 × k(p4)"},
      {"[0,3];[4,5]", "A_p3 × A/p4"},
  };
}

inline std::vector<Edge> dim5_hasse() {
  return {
      {"[0,0]", "empty"},
      {"[4,4]", "empty"},
      {"[0,1]", "[0,0]"},
      {"[0,0];[4,4]", "[0,0]"},
      {"[0,0];[4,4]", "[4,4]"},
      {"[4,5]", "[4,4]"},
      {"[0,2]", "[0,1]"},
      {"[0,1];[4,4]", "[0,1]"},
      {"[0,1];[4,4]", "[0,0];[4,4]"},
      {"[0,0];[4,5]", "[0,0];[4,4]"},
      {"[0,0];[4,5]", "[4,5]"},
      {"[0,3]", "[0,2]"},
      {"[0,2];[4,4]", "[0,2]"},
      {"[0,2];[4,4]", "[0,1];[4,4]"},
      {"[0,1];[4,5]", "[0,1];[4,4]"},
      {"[0,1];[4,5]", "[0,0];[4,5]"},
      {"[0,3];[4,4]", "[0,3]"},
      {"[0,3];[4,4]", "[0,2];[4,4]"},
      {"[0,2];[4,5]", "[0,2];[4,4]"},
      {"[0,2];[4,5]", "[0,1];[4,5]"},
      {"[0,4]", "[0,3];[4,4]"},
      {"[0,3];[4,5]", "[0,3];[4,4]"},
      {"[0,3];[4,5]", "[0,2];[4,5]"},
      {"[0,5]", "[0,4]"},
      {"[0,5]", "[0,3];[4,5]"},
  };
}

inline std::vector<std::string> dim5_compacts() {
  return {"empty", "[0,0]", "[0,1]", "[0,2]", "[0,3]", "[0,4]", "[0,5]"};
}

inline std::vector<std::string> dim5_spectrum_points() {
  return {"[0,0]", "[0,1]", "[0,2]", "[0,3]", "[0,4]", "[4,4]", "[4,5]"};
}

inline std::vector<Edge> dim5_spectrum_arrows() {
  return {
      {"[4,5]", "[4,4]"},
      {"[0,4]", "[4,4]"},
      {"[0,4]", "[0,3]"},
      {"[0,3]", "[0,2]"},
      {"[0,2]", "[0,1]"},
      {"[0,1]", "[0,0]"},
  };
}

}  // namespace fixtures

#endif

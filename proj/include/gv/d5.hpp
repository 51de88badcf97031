#pragma once

// Bundled d=5 reference data: the eight g-vector component sets, the five
// residual extremal sets with their inequalities, and the CD/g values of the
// exceptional 24-vertex polytope. Used by `gvlab verify` and the acceptance
// suite.

#include <string>
#include <utility>
#include <vector>

#include "gv/cdbasis.hpp"

namespace gv::d5 {

// Order-zero components.
inline WordSet s11111() { return word_set(5, {"CCCCC"}); }
inline WordSet s2111() { return word_set(5, {"DCCC", "CDCC", "CCDC", "CCCD"}); }
inline WordSet s221() { return word_set(5, {"DDC", "DCD", "CDD"}); }
// Higher-order components.
inline WordSet s1211() { return word_set(5, {"CDCC", "CCDC", "CCCD", "CDD"}); }
inline WordSet s1121() { return word_set(5, {"CCDC", "CCCD", "DCD"}); }
inline WordSet s1112() { return word_set(5, {"CCCD"}); }
inline WordSet s122() { return word_set(5, {"CDD"}); }
inline WordSet s212() { return word_set(5, {"DCD"}); }

// All eight, in the upper-triangular order used for inequality rendering.
inline std::vector<WordSet> component_sets() {
  return {s11111(), s2111(), s221(), s1211(), s1121(), s1112(), s122(), s212()};
}

// The five residual extremal sets with their rendered inequalities.
inline std::vector<std::pair<WordSet, std::string>> residual_sets() {
  return {
      {word_set(5, {"DDC", "DCD", "DCCC", "CDCC", "CCDC", "CCCD"}),
       "g_122 <= g_221 + g_2111"},
      {word_set(5, {"DDC", "DCD", "CDD", "CDCC", "CCDC", "CCCD"}),
       "g_122 <= g_221 + g_1211"},
      {word_set(5, {"DDC", "CDD", "CCCD"}), "g_212 <= g_221 + g_1112"},
      {word_set(5, {"DDC", "DCD", "CDD", "CCDC", "CCCD"}),
       "g_212 <= g_221 + g_1121"},
      {word_set(5, {"DDC", "CDD", "DCCC", "CDCC", "CCDC", "CCCD"}),
       "g_212 <= g_221 + g_2111"},
  };
}

// All thirteen extremal sets of the d=5 computation.
inline std::vector<WordSet> extremal_sets() {
  std::vector<WordSet> out = component_sets();
  for (auto& [s, ineq] : residual_sets()) out.push_back(s);
  return out;
}

// CD vector of the exceptional polytope (canonical word order:
// CCCCC, DCCC, CDCC, CCDC, CCCD, DDC, DCD, CDD).
inline CDVector exceptional_cd() {
  CDVector cd;
  cd.d = 5;
  cd.coeffs = {Rat(1), Rat(20), Rat(-66), Rat(56), Rat(8), Rat(-5), Rat(0), Rat(20)};
  return cd;
}

// Its g components, aligned with component_sets().
inline std::vector<Rat> exceptional_g() {
  return {Rat(1), Rat(18), Rat(15), Rat(18), Rat(64), Rat(8), Rat(20), Rat(0)};
}

inline std::vector<int> exceptional_distance_count() { return {1, 0, 2, 4, 1, 0}; }

}  // namespace gv::d5

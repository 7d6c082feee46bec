#pragma once

// In-code copies of the knot Floer fixtures used across the suite. These
// mirror the JSON files under fixtures/; test_json_io checks the two stay
// in sync.

#include <string>
#include <utility>

#include "hfo/cfk.hpp"

namespace hfo::testing {

inline CFKMinusData make_unknot() {
  CFKMinusData cfk;
  cfk.generators = {{"u", 0, std::nullopt}};
  cfk.tau = 0;
  cfk.epsilon = 0;
  cfk.w0 = "u";
  cfk.w0prime = "u";
  cfk.infinity_differentials = std::vector<CFKInfinityArrow>{};
  return cfk;
}

inline CFKMinusData make_trefoil_lh() {
  CFKMinusData cfk;
  cfk.generators = {{"a", 1, std::nullopt}, {"b", 0, std::nullopt}, {"c", -1, std::nullopt}};
  cfk.vertical_arrows = {{"a", "b", 1}};
  cfk.horizontal_arrows = {{"c", "b", 1}};
  cfk.tau = -1;
  cfk.epsilon = -1;
  cfk.w0 = "c";
  cfk.w0prime = "a";
  cfk.infinity_differentials = std::vector<CFKInfinityArrow>{{"a", "b", 0}, {"c", "b", 1}};
  return cfk;
}

inline CFKMinusData make_trefoil_rh() {
  CFKMinusData cfk;
  cfk.generators = {{"a", 1, std::nullopt}, {"b", 0, std::nullopt}, {"c", -1, std::nullopt}};
  cfk.vertical_arrows = {{"b", "c", 1}};
  cfk.horizontal_arrows = {{"b", "a", 1}};
  cfk.tau = 1;
  cfk.epsilon = 1;
  cfk.w0 = "a";
  cfk.w0prime = "c";
  cfk.infinity_differentials = std::vector<CFKInfinityArrow>{{"b", "c", 0}, {"b", "a", 1}};
  return cfk;
}

inline CFKMinusData make_figure8() {
  CFKMinusData cfk;
  cfk.generators = {{"a", 1, std::nullopt},
                    {"b", 0, std::nullopt},
                    {"c", 0, std::nullopt},
                    {"d", -1, std::nullopt},
                    {"e", 0, std::nullopt}};
  cfk.vertical_arrows = {{"a", "b", 1}, {"c", "d", 1}};
  cfk.horizontal_arrows = {{"c", "a", 1}, {"d", "b", 1}};
  cfk.tau = 0;
  cfk.epsilon = 0;
  cfk.w0 = "e";
  cfk.w0prime = "e";
  cfk.infinity_differentials =
      std::vector<CFKInfinityArrow>{{"a", "b", 0}, {"c", "d", 0}, {"c", "a", 1}, {"d", "b", 1}};
  return cfk;
}

inline std::string fixture_path(const std::string& name) {
  return std::string(HFO_FIXTURES_DIR) + "/" + name;
}

}  // namespace hfo::testing

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "heisurf/errors.hpp"

namespace heisurf {

struct NumericInvariants {
  std::string family;
  int d = 0;      // Albanese degree
  int delta = 0;  // Pfaffian of the polarization
  int k2 = 0;     // K^2 of S
  int k2_cover = 0;  // K^2 of the etale cover S'
  int chi = 0;
  int chi_cover = 0;
  int pg = 0, q = 0;
  std::optional<int> c2;  // c2 of the Tschirnhaus bundle, where the paper computes it
};

inline const std::vector<std::string>& family_names() {
  static const std::vector<std::string> names{"CHPP", "PP4", "HESSE3", "AC3", "QUARTIC4"};
  return names;
}

inline NumericInvariants numeric_invariants(const std::string& family) {
  NumericInvariants n;
  n.family = family;
  n.chi = 1;
  if (family == "CHPP" || family == "HESSE3" || family == "AC3") {
    n.d = 3;
    n.delta = family == "CHPP" ? 2 : 3;
    n.k2 = n.delta + 3;
    n.pg = n.q = family == "HESSE3" ? 3 : 2;
  } else if (family == "PP4") {
    n.d = 4;
    n.delta = 3;
    n.k2 = 6;
    n.pg = n.q = 2;
    n.c2 = n.delta * n.delta * (n.k2 - 4);
  } else if (family == "QUARTIC4") {
    n.d = 4;
    n.delta = 4;
    // (H + D)^3 = 3 H D^2 = 6 delta^2 on P^3 x A'
    n.k2 = 6 * n.delta * n.delta / (n.delta * n.delta);
    n.pg = n.q = 3;
  } else {
    throw UnknownFamily(family);
  }
  n.k2_cover = n.delta * n.delta * n.k2;
  n.chi_cover = n.delta * n.delta * n.chi;
  return n;
}

}  // namespace heisurf

#pragma once

#include <vector>

#include "polyreal/group.hpp"

namespace fixtures {

using polyreal::Permutation;
using polyreal::Point;

inline Permutation cyc(std::size_t n, std::vector<std::vector<Point>> cycles) {
  return Permutation::from_cycles(n, cycles);
}

inline polyreal::Group sym3() { return polyreal::enumerate_group(std::vector{cyc(3, {{0, 1}}), cyc(3, {{0, 1, 2}})}); }
inline polyreal::Group sym4() { return polyreal::enumerate_group(std::vector{cyc(4, {{0, 1}}), cyc(4, {{0, 1, 2, 3}})}); }
inline polyreal::Group alt5() {
  return polyreal::enumerate_group(std::vector{cyc(5, {{0, 1, 2, 3, 4}}), cyc(5, {{0, 1, 2}})});
}
inline polyreal::Group cyclic(std::size_t n) {
  std::vector<Point> cycle(n);
  for (std::size_t i = 0; i < n; ++i) cycle[i] = static_cast<Point>(i);
  return polyreal::enumerate_group(std::vector{cyc(n, {cycle})});
}
inline polyreal::Group dihedral4() {
  return polyreal::enumerate_group(std::vector{cyc(4, {{0, 1, 2, 3}}), cyc(4, {{1, 3}})});
}
// Regular permutation model of the quaternion group.
inline polyreal::Group quaternion8() {
  return polyreal::enumerate_group(
      std::vector{cyc(8, {{0, 1, 2, 3}, {4, 5, 6, 7}}), cyc(8, {{0, 4, 2, 6}, {1, 7, 3, 5}})});
}

}  // namespace fixtures

namespace fixtures {

// SL(2,q) acting on the nonzero row vectors of F_q^2, v -> vM.
inline polyreal::Group special_linear2(unsigned q) {
  auto index = [q](unsigned a, unsigned b) { return a * q + b - 1; };
  auto act = [&](long m00, long m01, long m10, long m11) {
    std::vector<Point> images(q * q - 1);
    for (unsigned a = 0; a < q; ++a) {
      for (unsigned b = 0; b < q; ++b) {
        if (a == 0 && b == 0) continue;
        const long x = ((a * m00 + b * m10) % long(q) + q) % q;
        const long y = ((a * m01 + b * m11) % long(q) + q) % q;
        images[index(a, b)] = static_cast<Point>(index(unsigned(x), unsigned(y)));
      }
    }
    return Permutation(images);
  };
  return polyreal::enumerate_group(std::vector{act(1, 1, 0, 1), act(0, 1, q - 1, 0)});
}

}  // namespace fixtures

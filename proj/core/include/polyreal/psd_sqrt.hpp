#pragma once

#include <cstddef>
#include <vector>

#include "polyreal/permutation.hpp"

namespace polyreal {

class InvariantMatrix;

/// Dense row-major square matrix of doubles.
struct DenseMatrix {
  std::size_t n = 0;
  std::vector<double> data;

  double& operator()(std::size_t i, std::size_t j) { return data[i * n + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data[i * n + j]; }
};

struct SqrtResult {
  DenseMatrix root;
  double residual = 0;              // max |(A A^t - Q)_{ij}|
  double commutation_residual = 0;  // max over generators of max |(P A - A P)_{ij}|
};

/// Numeric symmetric square root of a G-invariant PSD matrix, commuting with
/// the permutation matrices of the given generators (point images of each).
/// Throws NotInvariant if Q is not symmetric or not invariant within 1e-9,
/// NotPSD if an eigenvalue is below -1e-6. Smaller negative eigenvalues are
/// clamped to 0.
SqrtResult psd_sqrt_commuting(const DenseMatrix& q, const std::vector<std::vector<Point>>& generator_actions);
/// Expands an invariant matrix (which must be real) and uses the group's generators.
SqrtResult psd_sqrt_commuting(const InvariantMatrix& q);

/// Float expansion of an invariant matrix.
DenseMatrix to_dense(const InvariantMatrix& q);
/// Point images of each group generator on the G-set of q.
std::vector<std::vector<Point>> generator_actions(const InvariantMatrix& q);

}  // namespace polyreal

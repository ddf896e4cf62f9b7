#pragma once

#include <vector>

#include <Eigen/Dense>

// Truncated bosonic operator algebra and dense Hermitian linear-algebra
// primitives. Conventions used everywhere in this library:
//   - operators are square, dense, row-major in the logical sense;
//   - multi-mode operators live in the Kronecker-product space with mode 0
//     as the leftmost (slowest-varying) factor;
//   - Hermitian contracts are relative to max|entry| of the input.
namespace eprq {

using ComplexMatrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;

/// Per-mode Fock truncation sizes; every entry must be >= 2.
class ModeDims {
 public:
  explicit ModeDims(std::vector<int> levels);

  int count() const { return static_cast<int>(levels_.size()); }
  int operator[](int mode) const { return levels_.at(mode); }
  const std::vector<int>& levels() const { return levels_; }
  long total_dimension() const;

 private:
  std::vector<int> levels_;
};

/// Largest entry magnitude; 0 for empty matrices.
double max_abs(const ComplexMatrix& m);

/// max|M - M†| <= rel_tol * max|M|.
bool is_hermitian(const ComplexMatrix& m, double rel_tol = 1e-12);

/// Bosonic lowering operator on n_levels Fock states: A(n-1, n) = sqrt(n).
ComplexMatrix annihilation(int n_levels);

/// I ⊗ ... ⊗ op ⊗ ... ⊗ I with op acting on slot mode_index.
ComplexMatrix embed_operator(const ComplexMatrix& op, int mode_index,
                             const ModeDims& dims);

struct EigenSystem {
  RealVector eigenvalues;     // ascending
  ComplexMatrix eigenvectors;  // orthonormal columns, matching order
};

/// Dense Hermitian eigendecomposition. The input must be Hermitian within
/// 1e-10 * max|H|; eigenvalues come back sorted ascending.
EigenSystem hermitian_eigendecomposition(const ComplexMatrix& h);

/// exp(iX) for Hermitian X, via the eigendecomposition of X. Unitary to 1e-9.
ComplexMatrix unitary_exp_i(const ComplexMatrix& x);

}  // namespace eprq

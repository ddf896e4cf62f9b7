#include "eprq/operators.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace eprq {

ModeDims::ModeDims(std::vector<int> levels) : levels_(std::move(levels)) {
  if (levels_.empty()) {
    throw std::invalid_argument("ModeDims: at least one mode required");
  }
  for (int n : levels_) {
    if (n < 2) {
      throw std::invalid_argument("ModeDims: every truncation must be >= 2, got " +
                                  std::to_string(n));
    }
  }
}

long ModeDims::total_dimension() const {
  long total = 1;
  for (int n : levels_) {
    total *= n;
    if (total > (1L << 24)) {
      throw std::invalid_argument("ModeDims: composite dimension too large");
    }
  }
  return total;
}

double max_abs(const ComplexMatrix& m) {
  if (m.size() == 0) return 0.0;
  return m.cwiseAbs().maxCoeff();
}

bool is_hermitian(const ComplexMatrix& m, double rel_tol) {
  if (m.rows() != m.cols()) return false;
  const double scale = max_abs(m);
  if (scale == 0.0) return true;
  return max_abs(m - m.adjoint()) <= rel_tol * scale;
}

ComplexMatrix annihilation(int n_levels) {
  if (n_levels < 2) {
    throw std::invalid_argument("annihilation: n_levels must be >= 2, got " +
                                std::to_string(n_levels));
  }
  ComplexMatrix a = ComplexMatrix::Zero(n_levels, n_levels);
  for (int n = 1; n < n_levels; ++n) {
    a(n - 1, n) = std::sqrt(static_cast<double>(n));
  }
  return a;
}

ComplexMatrix embed_operator(const ComplexMatrix& op, int mode_index,
                             const ModeDims& dims) {
  if (mode_index < 0 || mode_index >= dims.count()) {
    throw std::invalid_argument("embed_operator: mode index out of range");
  }
  const int d = dims[mode_index];
  if (op.rows() != d || op.cols() != d) {
    throw std::invalid_argument("embed_operator: operator dimension " +
                                std::to_string(op.rows()) + " does not match mode size " +
                                std::to_string(d));
  }
  long pre = 1, post = 1;
  for (int m = 0; m < mode_index; ++m) pre *= dims[m];
  for (int m = mode_index + 1; m < dims.count(); ++m) post *= dims[m];

  const long total = pre * d * post;
  ComplexMatrix out = ComplexMatrix::Zero(total, total);
  for (long a = 0; a < pre; ++a) {
    for (int i = 0; i < d; ++i) {
      for (int j = 0; j < d; ++j) {
        const std::complex<double> v = op(i, j);
        if (v == std::complex<double>(0.0, 0.0)) continue;
        const long row0 = (a * d + i) * post;
        const long col0 = (a * d + j) * post;
        for (long b = 0; b < post; ++b) {
          out(row0 + b, col0 + b) = v;
        }
      }
    }
  }
  return out;
}

namespace {

void require_hermitian_input(const ComplexMatrix& h, const char* who) {
  if (h.rows() != h.cols()) {
    throw std::invalid_argument(std::string(who) + ": matrix must be square");
  }
  const double scale = max_abs(h);
  if (scale > 0.0 && max_abs(h - h.adjoint()) > 1e-10 * scale) {
    throw std::invalid_argument(std::string(who) + ": input is not Hermitian within 1e-10 relative");
  }
}

}  // namespace

EigenSystem hermitian_eigendecomposition(const ComplexMatrix& h) {
  require_hermitian_input(h, "hermitian_eigendecomposition");
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("hermitian_eigendecomposition: solver failed to converge");
  }
  return EigenSystem{solver.eigenvalues(), solver.eigenvectors()};
}

ComplexMatrix unitary_exp_i(const ComplexMatrix& x) {
  require_hermitian_input(x, "unitary_exp_i");
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(x);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("unitary_exp_i: eigendecomposition failed");
  }
  const RealVector& lam = solver.eigenvalues();
  const ComplexMatrix& v = solver.eigenvectors();
  Eigen::VectorXcd phases(lam.size());
  for (Eigen::Index k = 0; k < lam.size(); ++k) {
    phases(k) = std::exp(std::complex<double>(0.0, lam(k)));
  }
  return v * phases.asDiagonal() * v.adjoint();
}

}  // namespace eprq

#include "eigensolver.hpp"

#include <complex>
#include <string>

#include <lapacke.h>

#include "csemit/types.hpp"

namespace csemit::detail {

void complex_eigensystem(const Eigen::MatrixXcd& matrix,
                         Eigen::VectorXcd& eigenvalues,
                         Eigen::MatrixXcd* eigenvectors) {
  const auto n = static_cast<lapack_int>(matrix.rows());
  Eigen::MatrixXcd work = matrix; // zgeev destroys its input
  eigenvalues.resize(n);
  if (eigenvectors != nullptr) eigenvectors->resize(n, n);

  const lapack_int info = LAPACKE_zgeev(
      LAPACK_COL_MAJOR, 'N', eigenvectors != nullptr ? 'V' : 'N', n,
      reinterpret_cast<lapack_complex_double*>(work.data()), n,
      reinterpret_cast<lapack_complex_double*>(eigenvalues.data()), nullptr,
      n,
      eigenvectors != nullptr
          ? reinterpret_cast<lapack_complex_double*>(eigenvectors->data())
          : nullptr,
      n);
  if (info != 0) {
    throw Error(ErrorCode::eigensolver_failure,
                "zgeev failed to converge (info = " + std::to_string(info) +
                    ")");
  }
}

void symmetric_eigensystem(const Eigen::MatrixXd& matrix,
                           Eigen::VectorXd& eigenvalues,
                           Eigen::MatrixXd& eigenvectors) {
  const auto n = static_cast<lapack_int>(matrix.rows());
  eigenvectors = matrix;
  eigenvalues.resize(n);
  const lapack_int info = LAPACKE_dsyev(LAPACK_COL_MAJOR, 'V', 'L', n,
                                        eigenvectors.data(), n,
                                        eigenvalues.data());
  if (info != 0) {
    throw Error(ErrorCode::eigensolver_failure,
                "dsyev failed to converge (info = " + std::to_string(info) +
                    ")");
  }
}

}  // namespace csemit::detail

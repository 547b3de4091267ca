#pragma once

#include <Eigen/Core>

namespace csemit::detail {

// Dense general complex eigenproblem (LAPACK zgeev). Eigenvalues come back
// unordered; vectors are the unit right eigenvectors when requested.
void complex_eigensystem(const Eigen::MatrixXcd& matrix,
                         Eigen::VectorXcd& eigenvalues,
                         Eigen::MatrixXcd* eigenvectors);

// Dense real symmetric eigenproblem (LAPACK dsyev), eigenvalues ascending.
void symmetric_eigensystem(const Eigen::MatrixXd& matrix,
                           Eigen::VectorXd& eigenvalues,
                           Eigen::MatrixXd& eigenvectors);

}  // namespace csemit::detail

#include "vadm/linear_solver.hpp"

#include <sstream>
#include <stdexcept>

namespace vadm {

Factorization::Factorization(const SparseSym& A, Backend backend)
    : dim_(static_cast<int>(A.rows())), backend_(backend) {
    if (A.rows() != A.cols())
        throw std::invalid_argument("factor: matrix must be square");
    if (dim_ == 0) return;  // degenerate all-Dirichlet problems have no free dofs

    if (backend_ == Backend::Cholesky) {
        ldlt_.compute(A);
        if (ldlt_.info() != Eigen::Success)
            throw std::runtime_error("factor: sparse Cholesky failed to factorize");
        const auto& d = ldlt_.vectorD();
        for (int i = 0; i < d.size(); ++i) {
            if (!(d(i) > 0.0)) {
                const int original = ldlt_.permutationPinv().indices()(i);
                std::ostringstream msg;
                msg << "factor: matrix is not positive definite (pivot " << original
                    << " has D = " << d(i) << ")";
                throw std::runtime_error(msg.str());
            }
        }
    } else {
        cg_matrix_ = A;
        cg_.setTolerance(1e-13);
        cg_.setMaxIterations(20 * dim_);
        cg_.compute(cg_matrix_);
        if (cg_.info() != Eigen::Success)
            throw std::runtime_error("factor: conjugate-gradient setup failed");
    }
}

Eigen::VectorXd Factorization::solve(const Eigen::VectorXd& b) const {
    if (b.size() != dim_)
        throw std::invalid_argument("solve: right-hand side dimension mismatch");
    if (dim_ == 0) return Eigen::VectorXd();

    if (backend_ == Backend::Cholesky) return ldlt_.solve(b);

    Eigen::VectorXd x = cg_.solve(b);
    if (cg_.info() != Eigen::Success)
        throw std::runtime_error("solve: conjugate gradient did not converge");
    return x;
}

}  // namespace vadm

#pragma once

#include <Eigen/Sparse>
#include <Eigen/SparseCholesky>
#include <Eigen/IterativeLinearSolvers>
#include <memory>

namespace vadm {

/// Sparse symmetric matrix, stored fully (both triangles).
using SparseSym = Eigen::SparseMatrix<double>;

/// One-time factorization of an SPD matrix, reusable across many right
/// hand sides. The default backend is a direct sparse Cholesky (LDL^T);
/// a conjugate-gradient backend with tolerance 1e-13 is kept as a
/// fallback path. Immutable after construction; concurrent solves are
/// safe.
class Factorization {
public:
    enum class Backend { Cholesky, ConjugateGradient };

    explicit Factorization(const SparseSym& A, Backend backend = Backend::Cholesky);

    Eigen::VectorXd solve(const Eigen::VectorXd& b) const;

    int dimension() const { return dim_; }
    Backend backend() const { return backend_; }

private:
    int dim_ = 0;
    Backend backend_;
    Eigen::SimplicialLDLT<SparseSym> ldlt_;
    SparseSym cg_matrix_;
    Eigen::ConjugateGradient<SparseSym, Eigen::Lower | Eigen::Upper> cg_;
};

inline Factorization factor(const SparseSym& A,
                            Factorization::Backend backend = Factorization::Backend::Cholesky) {
    return Factorization(A, backend);
}

inline Eigen::VectorXd solve(const Factorization& f, const Eigen::VectorXd& b) {
    return f.solve(b);
}

}  // namespace vadm

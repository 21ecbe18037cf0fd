#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "fracfactor/graph.hpp"

namespace fracfactor {

inline constexpr double kDefaultEigenTol = 1e-10;
inline constexpr int kDefaultSweepBudget = 100;
/// Margin for strict spectral comparisons: x > y only if x > y + margin.
inline constexpr double kStrictMargin = 1e-9;

/// Dense symmetric real matrix, row-major.
class SymmetricMatrix {
public:
    explicit SymmetricMatrix(int order);

    [[nodiscard]] int order() const noexcept { return n_; }
    [[nodiscard]] double operator()(int i, int j) const { return a_[index(i, j)]; }
    /// Writes both (i,j) and (j,i).
    void set(int i, int j, double value);
    void add(int i, int j, double value);

private:
    [[nodiscard]] std::size_t index(int i, int j) const
    {
        return static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j);
    }

    int n_;
    std::vector<double> a_;
};

struct EigenPair {
    double value = 0.0;
    std::vector<double> vector;
    double residual = 0.0;  // ||M x - value x||_inf with ||x||_2 = 1
};

class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& what, double last_residual)
        : std::runtime_error(what), last_residual_(last_residual)
    {
    }
    [[nodiscard]] double last_residual() const noexcept { return last_residual_; }

private:
    double last_residual_;
};

/// Largest eigenvalue of a symmetric matrix by cyclic Jacobi rotations.
/// Sweeps until the off-diagonal Frobenius norm is at most tol and the
/// eigenpair residual is at most tol; throws ConvergenceError otherwise.
EigenPair eigen_max_symmetric(const SymmetricMatrix& m, double tol = kDefaultEigenTol,
                              int sweep_budget = kDefaultSweepBudget);

/// All eigenvalues in ascending order (same Jacobi kernel).
std::vector<double> eigenvalues_symmetric(const SymmetricMatrix& m, double tol = kDefaultEigenTol,
                                          int sweep_budget = kDefaultSweepBudget);

SymmetricMatrix adjacency_matrix(const Graph& g);
/// Q(G) = D(G) + A(G).
SymmetricMatrix signless_laplacian(const Graph& g);

struct SpectralSummary {
    double rho = 0.0;
    double q = 0.0;
    double residual = 0.0;  // worse of the two eigenpair residuals
    double tol = kDefaultEigenTol;
};

SpectralSummary spectral_summary(const Graph& g, double tol = kDefaultEigenTol);
double spectral_radius(const Graph& g, double tol = kDefaultEigenTol);
double signless_laplacian_radius(const Graph& g, double tol = kDefaultEigenTol);

/// (δ-1)/2 + sqrt(2e - nδ + (δ+1)^2/4), an upper bound on ρ(G).
double hsf_bound(const Graph& g);

/// (x-1)/2 + sqrt(2e - n x + (x+1)^2/4), non-increasing in x on [0, n-1]
/// whenever e <= C(n,2).
double prop32_f(long e, int n, double x);

/// 2e/(n-1) + n - 2, an upper bound on q(G) for connected G with n >= 2.
double feng_yu_bound(const Graph& g);

inline bool strictly_greater(double x, double y, double margin = kStrictMargin) { return x > y + margin; }

}  // namespace fracfactor

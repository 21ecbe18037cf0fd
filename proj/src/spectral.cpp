#include "fracfactor/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace fracfactor {

SymmetricMatrix::SymmetricMatrix(int order) : n_(order)
{
    if (order < 0)
        throw std::invalid_argument("matrix order must be non-negative");
    a_.assign(static_cast<std::size_t>(order) * static_cast<std::size_t>(order), 0.0);
}

void SymmetricMatrix::set(int i, int j, double value)
{
    if (!std::isfinite(value))
        throw std::invalid_argument("matrix entries must be finite");
    a_[index(i, j)] = value;
    a_[index(j, i)] = value;
}

void SymmetricMatrix::add(int i, int j, double value)
{
    set(i, j, (*this)(i, j) + value);
}

namespace {

struct JacobiState {
    int n;
    std::vector<double> a;  // working copy, row-major
    std::vector<double> v;  // accumulated rotations, columns are eigenvectors

    double& at(int i, int j) { return a[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(j)]; }
    double& vec(int i, int j) { return v[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(j)]; }

    double off_norm()
    {
        double sum = 0.0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q)
                sum += at(p, q) * at(p, q);
        return std::sqrt(2.0 * sum);
    }

    void rotate(int p, int q)
    {
        const double apq = at(p, q);
        if (apq == 0.0)
            return;
        const double app = at(p, p);
        const double aqq = at(q, q);
        const double theta = (aqq - app) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (int k = 0; k < n; ++k) {
            if (k == p || k == q)
                continue;
            const double akp = at(k, p);
            const double akq = at(k, q);
            at(k, p) = at(p, k) = c * akp - s * akq;
            at(k, q) = at(q, k) = s * akp + c * akq;
        }
        at(p, p) = app - t * apq;
        at(q, q) = aqq + t * apq;
        at(p, q) = at(q, p) = 0.0;
        for (int k = 0; k < n; ++k) {
            const double vkp = vec(k, p);
            const double vkq = vec(k, q);
            vec(k, p) = c * vkp - s * vkq;
            vec(k, q) = s * vkp + c * vkq;
        }
    }

    void sweep()
    {
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q)
                rotate(p, q);
    }
};

JacobiState make_state(const SymmetricMatrix& m)
{
    const int n = m.order();
    JacobiState st{n, std::vector<double>(static_cast<std::size_t>(n) * static_cast<std::size_t>(n)),
                   std::vector<double>(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0.0)};
    for (int i = 0; i < n; ++i) {
        st.vec(i, i) = 1.0;
        for (int j = 0; j < n; ++j)
            st.at(i, j) = m(i, j);
    }
    return st;
}

// Eigenpair residual of column `col` of the rotation matrix against m.
EigenPair extract(const SymmetricMatrix& m, JacobiState& st, int col)
{
    const int n = st.n;
    EigenPair out;
    out.value = st.at(col, col);
    out.vector.resize(static_cast<std::size_t>(n));
    double norm = 0.0;
    for (int i = 0; i < n; ++i) {
        out.vector[static_cast<std::size_t>(i)] = st.vec(i, col);
        norm += st.vec(i, col) * st.vec(i, col);
    }
    norm = std::sqrt(norm);
    for (double& x : out.vector)
        x /= norm;
    // Perron vectors of non-negative matrices are returned with a non-negative sum.
    double sum = 0.0;
    for (double x : out.vector)
        sum += x;
    if (sum < 0.0)
        for (double& x : out.vector)
            x = -x;
    for (int i = 0; i < n; ++i) {
        double mx = 0.0;
        for (int j = 0; j < n; ++j)
            mx += m(i, j) * out.vector[static_cast<std::size_t>(j)];
        out.residual = std::max(out.residual, std::abs(mx - out.value * out.vector[static_cast<std::size_t>(i)]));
    }
    return out;
}

int argmax_diagonal(JacobiState& st)
{
    int best = 0;
    for (int i = 1; i < st.n; ++i)
        if (st.at(i, i) > st.at(best, best))
            best = i;
    return best;
}

void check_args(const SymmetricMatrix& m, double tol, int sweep_budget)
{
    if (m.order() < 1)
        throw std::invalid_argument("eigensolver needs order >= 1");
    if (!(tol > 0.0))
        throw std::invalid_argument("eigensolver tolerance must be positive");
    if (sweep_budget < 1)
        throw std::invalid_argument("sweep budget must be positive");
}

}  // namespace

EigenPair eigen_max_symmetric(const SymmetricMatrix& m, double tol, int sweep_budget)
{
    check_args(m, tol, sweep_budget);
    JacobiState st = make_state(m);
    double last_residual = std::numeric_limits<double>::infinity();
    for (int sweep = 0; sweep <= sweep_budget; ++sweep) {
        const double off = st.off_norm();
        if (off <= tol) {
            EigenPair best = extract(m, st, argmax_diagonal(st));
            last_residual = best.residual;
            if (best.residual <= tol)
                return best;
            if (off == 0.0)
                break;
        }
        if (sweep < sweep_budget)
            st.sweep();
    }
    if (!std::isfinite(last_residual))
        last_residual = extract(m, st, argmax_diagonal(st)).residual;
    throw ConvergenceError("Jacobi eigensolver did not converge within " + std::to_string(sweep_budget) +
                               " sweeps (last residual " + std::to_string(last_residual) + ")",
                           last_residual);
}

std::vector<double> eigenvalues_symmetric(const SymmetricMatrix& m, double tol, int sweep_budget)
{
    check_args(m, tol, sweep_budget);
    JacobiState st = make_state(m);
    int sweep = 0;
    double off = st.off_norm();
    while (off > tol) {
        if (sweep++ == sweep_budget)
            throw ConvergenceError("Jacobi eigensolver did not converge", off);
        st.sweep();
        off = st.off_norm();
    }
    std::vector<double> values(static_cast<std::size_t>(st.n));
    for (int i = 0; i < st.n; ++i)
        values[static_cast<std::size_t>(i)] = st.at(i, i);
    std::sort(values.begin(), values.end());
    return values;
}

SymmetricMatrix adjacency_matrix(const Graph& g)
{
    SymmetricMatrix m(g.order());
    for (auto [u, v] : g.edges())
        m.set(u, v, 1.0);
    return m;
}

SymmetricMatrix signless_laplacian(const Graph& g)
{
    SymmetricMatrix m = adjacency_matrix(g);
    for (Vertex v = 0; v < g.order(); ++v)
        m.set(v, v, static_cast<double>(g.degree(v)));
    return m;
}

SpectralSummary spectral_summary(const Graph& g, double tol)
{
    const EigenPair a = eigen_max_symmetric(adjacency_matrix(g), tol);
    const EigenPair q = eigen_max_symmetric(signless_laplacian(g), tol);
    return {a.value, q.value, std::max(a.residual, q.residual), tol};
}

double spectral_radius(const Graph& g, double tol) { return eigen_max_symmetric(adjacency_matrix(g), tol).value; }

double signless_laplacian_radius(const Graph& g, double tol)
{
    return eigen_max_symmetric(signless_laplacian(g), tol).value;
}

double prop32_f(long e, int n, double x)
{
    const double radicand = 2.0 * static_cast<double>(e) - static_cast<double>(n) * x + (x + 1.0) * (x + 1.0) / 4.0;
    if (radicand < 0.0)
        throw std::domain_error("negative radicand " + std::to_string(radicand) + " (e=" + std::to_string(e) +
                                ", n=" + std::to_string(n) + ", x=" + std::to_string(x) + ")");
    return (x - 1.0) / 2.0 + std::sqrt(radicand);
}

double hsf_bound(const Graph& g)
{
    if (g.order() < 1)
        throw std::invalid_argument("hsf_bound needs n >= 1");
    // 2e >= n·δ always, so the radicand is at least (δ+1)^2/4.
    return prop32_f(g.size(), g.order(), static_cast<double>(g.min_degree()));
}

double feng_yu_bound(const Graph& g)
{
    if (g.order() < 2)
        throw std::invalid_argument("feng_yu_bound needs n >= 2");
    if (!is_connected(g))
        throw std::invalid_argument("feng_yu_bound needs a connected graph");
    const double n = g.order();
    return 2.0 * static_cast<double>(g.size()) / (n - 1.0) + n - 2.0;
}

}  // namespace fracfactor

#include "sfac/oracle.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace sfac::oracle {

namespace {
constexpr std::size_t kMaxDense = 4096;

void size_guard(std::size_t n) {
    if (n == 0 || n > kMaxDense)
        throw std::invalid_argument("dense oracle size out of range (1..4096)");
}

Eigen::MatrixXd to_eigen(const DenseMatrix& m) {
    const std::size_t n = m.size();
    Eigen::MatrixXd e(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) e(i, j) = m.at(i, j);
    return e;
}

DenseMatrix from_eigen(const Eigen::MatrixXd& e) {
    DenseMatrix m(static_cast<std::size_t>(e.rows()));
    for (Eigen::Index i = 0; i < e.rows(); ++i)
        for (Eigen::Index j = 0; j < e.cols(); ++j)
            m.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = e(i, j);
    return m;
}
}  // namespace

DenseMatrix::DenseMatrix(std::size_t n) : n_(n), data_(n * n, 0.0) { size_guard(n); }

std::vector<double> DenseMatrix::multiply(const std::vector<double>& x) const {
    if (x.size() != n_) throw std::invalid_argument("vector length mismatch");
    std::vector<double> y(n_, 0.0);
    for (std::size_t i = 0; i < n_; ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < n_; ++j) s += at(i, j) * x[j];
        y[i] = s;
    }
    return y;
}

DenseMatrix DenseMatrix::multiply(const DenseMatrix& other) const {
    if (other.n_ != n_) throw std::invalid_argument("matrix size mismatch");
    return from_eigen(to_eigen(*this) * to_eigen(other));
}

DenseMatrix DenseMatrix::transpose() const {
    DenseMatrix t(n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) t.at(j, i) = at(i, j);
    return t;
}

bool DenseMatrix::is_symmetric(double tol) const {
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = i + 1; j < n_; ++j)
            if (std::abs(at(i, j) - at(j, i)) > tol) return false;
    return true;
}

double DenseMatrix::norm_inf() const {
    double m = 0.0;
    for (std::size_t i = 0; i < n_; ++i) {
        double row = 0.0;
        for (std::size_t j = 0; j < n_; ++j) row += std::abs(at(i, j));
        m = std::max(m, row);
    }
    return m;
}

DenseMatrix DenseMatrix::identity(std::size_t n) {
    DenseMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1.0;
    return m;
}

DenseMatrix dense_D_alpha(double alpha, std::size_t n, const CoeffTable& weights) {
    size_guard(n);
    if (!(alpha > 1.0 && alpha < 2.0)) throw std::domain_error("alpha out of (1,2)");
    if (weights.omega.size() < n + 1) throw std::invalid_argument("weight table too short");
    DenseMatrix d(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (j <= i + 1) d.at(i, j) = weights.omega[i - j + 1];
    return d;
}

DenseMatrix dense_B(double alpha, double h, double eps, std::size_t n) {
    const CoeffTable table = make_coeff_table(alpha, n);
    const DenseMatrix d = dense_D_alpha(alpha, n, table);
    const double scale =
        -eps * eps / (2.0 * std::pow(h, alpha) * std::cos(alpha * std::numbers::pi / 2.0));
    DenseMatrix b(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            b.at(i, j) = scale * (d.at(i, j) + d.at(j, i));
    return b;
}

DenseMatrix dense_circulant(const std::vector<double>& first_col) {
    const std::size_t n = first_col.size();
    size_guard(n);
    DenseMatrix c(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            c.at(i, j) = first_col[(i + n - j) % n];
    return c;
}

DenseMatrix dense_skew_circulant(const std::vector<double>& first_col) {
    const std::size_t n = first_col.size();
    size_guard(n);
    DenseMatrix s(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i >= j)
                s.at(i, j) = first_col[i - j];
            else
                s.at(i, j) = -first_col[n + i - j];
        }
    return s;
}

DenseMatrix dense_A(const GridSpec& grid, const FracOrders& orders, double eps) {
    grid.validate();
    orders.validate(grid.dim);
    const std::size_t total = grid.total_interior();
    size_guard(total);

    DenseMatrix a(total);
    for (int ax = 0; ax < grid.dim; ++ax) {
        const std::size_t n = grid.interior(ax);
        const DenseMatrix b = dense_B(orders.alpha[ax], grid.h(ax), eps, n);
        std::size_t inner = 1;  // product of interior counts before ax
        for (int k = 0; k < ax; ++k) inner *= grid.interior(k);
        const std::size_t outer = total / (inner * n);
        // A += I_outer (x) B (x) I_inner, first axis fastest
        for (std::size_t o = 0; o < outer; ++o)
            for (std::size_t r = 0; r < n; ++r)
                for (std::size_t c = 0; c < n; ++c) {
                    const double v = b.at(r, c);
                    if (v == 0.0) continue;
                    for (std::size_t in = 0; in < inner; ++in) {
                        const std::size_t row = in + r * inner + o * inner * n;
                        const std::size_t col = in + c * inner + o * inner * n;
                        a.at(row, col) += v;
                    }
                }
    }
    return a;
}

namespace {
// Order-13 Pade with the standard scaling heuristic, used when the matrix
// is not symmetric.
Eigen::MatrixXd expm_pade(const Eigen::MatrixXd& a) {
    static const double pade13[] = {
        64764752532480000.0, 32382376266240000.0, 7771770303897600.0,
        1187353796428800.0,  129060195264000.0,   10559470521600.0,
        670442572800.0,      33522128640.0,       1323241920.0,
        40840800.0,          960960.0,            16380.0,
        182.0,               1.0};
    const double theta13 = 5.371920351148152;
    const double norm = a.cwiseAbs().rowwise().sum().maxCoeff();
    int squarings = 0;
    Eigen::MatrixXd as = a;
    if (norm > theta13) {
        squarings = static_cast<int>(std::ceil(std::log2(norm / theta13)));
        as /= std::pow(2.0, squarings);
    }
    const Eigen::Index n = a.rows();
    const Eigen::MatrixXd ident = Eigen::MatrixXd::Identity(n, n);
    const Eigen::MatrixXd a2 = as * as;
    const Eigen::MatrixXd a4 = a2 * a2;
    const Eigen::MatrixXd a6 = a4 * a2;
    Eigen::MatrixXd u =
        as * (a6 * (pade13[13] * a6 + pade13[11] * a4 + pade13[9] * a2) +
              pade13[7] * a6 + pade13[5] * a4 + pade13[3] * a2 + pade13[1] * ident);
    Eigen::MatrixXd v = a6 * (pade13[12] * a6 + pade13[10] * a4 + pade13[8] * a2) +
                        pade13[6] * a6 + pade13[4] * a4 + pade13[2] * a2 +
                        pade13[0] * ident;
    Eigen::MatrixXd r = (v - u).partialPivLu().solve(v + u);
    for (int i = 0; i < squarings; ++i) r = r * r;
    return r;
}
}  // namespace

DenseMatrix dense_expm(const DenseMatrix& m, double t) {
    const std::size_t n = m.size();
    size_guard(n);
    Eigen::MatrixXd a = to_eigen(m) * t;
    if (!a.allFinite()) throw std::invalid_argument("matrix has non-finite entries");
    if (m.is_symmetric(0.0)) {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a);
        Eigen::VectorXd e = es.eigenvalues().array().exp();
        return from_eigen(es.eigenvectors() * e.asDiagonal() *
                          es.eigenvectors().transpose());
    }
    return from_eigen(expm_pade(a));
}

Field reference_linear_step(const Field& field, const SolverConfig& config) {
    const DenseMatrix a = dense_A(config.grid, config.orders, config.eps);
    const DenseMatrix propagator = dense_expm(a, config.tau);
    Field out = field;
    out.data = propagator.multiply(field.data);
    return out;
}

Field reference_strang_step(const Field& field, const SolverConfig& config) {
    // Bernoulli flow written out locally; the oracle shares no stepping
    // code with the fast path.
    auto half_flow = [&](Field& u) {
        const double q = std::exp(-config.tau);  // exp(-2 * tau/2)
        for (double& v : u.data) v = v / std::sqrt(v * v + (1.0 - v * v) * q);
    };
    Field u = field;
    half_flow(u);
    u = reference_linear_step(u, config);
    half_flow(u);
    return u;
}

}  // namespace sfac::oracle

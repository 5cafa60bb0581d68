#include "rieszlab/hermitian.hpp"

#include <cmath>
#include <istream>
#include <ostream>

#include <Eigen/Dense>

namespace rieszlab {

namespace {

Eigen::MatrixXcd to_eigen(const HermitianMatrix& h) {
    const int n = h.dim();
    Eigen::MatrixXcd a(n, n);
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) a(j, k) = h.entry(j, k);
    return a;
}

} // namespace

double HermitianMatrix::frobenius_norm() const {
    double s = 0.0;
    for (const auto& z : a_) s += std::norm(z);
    return std::sqrt(s);
}

std::vector<double> hermitian_eigenvalues(const HermitianMatrix& h) {
    if (h.dim() > kMaxEigenDim)
        throw InvalidArgument("eigensolve dimension " + std::to_string(h.dim()) +
                              " exceeds cap " + std::to_string(kMaxEigenDim));
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(
        to_eigen(h), Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw ConvergenceFailure("Hermitian eigensolve did not converge at dim " +
                                 std::to_string(h.dim()));
    const auto& ev = solver.eigenvalues();
    return {ev.data(), ev.data() + ev.size()};
}

double hermitian_eigen_residual(const HermitianMatrix& h) {
    Eigen::MatrixXcd a = to_eigen(h);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(a);
    if (solver.info() != Eigen::Success)
        throw ConvergenceFailure("Hermitian eigensolve did not converge at dim " +
                                 std::to_string(h.dim()));
    double norm = a.norm();
    if (norm == 0.0) norm = 1.0;
    double worst = 0.0;
    for (int i = 0; i < a.rows(); ++i) {
        Eigen::VectorXcd v = solver.eigenvectors().col(i);
        double r = (a * v - solver.eigenvalues()[i] * v).norm();
        worst = std::max(worst, r / norm);
    }
    return worst;
}

SpectrumReport make_spectrum_report(const HermitianMatrix& h,
                                    std::string set_desc, std::string seq_desc,
                                    Window window) {
    SpectrumReport rep;
    rep.eigenvalues = hermitian_eigenvalues(h);
    rep.lambda_min = rep.eigenvalues.front();
    rep.lambda_max = rep.eigenvalues.back();
    rep.set_desc = std::move(set_desc);
    rep.seq_desc = std::move(seq_desc);
    rep.window = window;
    return rep;
}

void write_matrix(std::ostream& os, const HermitianMatrix& h) {
    os << h.dim() << "\n";
    os.precision(17);
    for (int j = 0; j < h.dim(); ++j)
        for (int k = 0; k < h.dim(); ++k) {
            auto z = h.entry(j, k);
            os << z.real() << " " << z.imag() << "\n";
        }
}

HermitianMatrix read_matrix(std::istream& is) {
    int n = 0;
    if (!(is >> n) || n < 1) throw ParseError("matrix dump: bad dimension");
    HermitianMatrix h(n);
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
            double re = 0.0, im = 0.0;
            if (!(is >> re >> im))
                throw ParseError("matrix dump: truncated entry list");
            h.data()[static_cast<size_t>(j) * n + static_cast<size_t>(k)] = {re, im};
        }
    return h;
}

} // namespace rieszlab

#pragma once

#include <complex>
#include <iosfwd>
#include <string>
#include <vector>

#include "rieszlab/errors.hpp"
#include "rieszlab/sequences.hpp"

namespace rieszlab {

// Dense complex Hermitian matrix.  Entries are stored row-major for the full
// matrix; set() writes both triangles so Hermitian symmetry is exact by
// construction (diagonal imaginary parts are forced to zero).
class HermitianMatrix {
  public:
    HermitianMatrix() = default;
    explicit HermitianMatrix(int n)
        : n_(n), a_(static_cast<size_t>(n) * static_cast<size_t>(n)) {
        if (n < 1) throw InvalidArgument("matrix dimension must be >= 1");
    }

    int dim() const { return n_; }

    std::complex<double> entry(int j, int k) const {
        return a_[static_cast<size_t>(j) * n_ + static_cast<size_t>(k)];
    }

    void set(int j, int k, std::complex<double> z) {
        if (j == k) z = {z.real(), 0.0};
        a_[static_cast<size_t>(j) * n_ + static_cast<size_t>(k)] = z;
        a_[static_cast<size_t>(k) * n_ + static_cast<size_t>(j)] = std::conj(z);
    }

    double trace() const {
        double t = 0.0;
        for (int j = 0; j < n_; ++j) t += entry(j, j).real();
        return t;
    }

    double frobenius_norm() const;

    const std::vector<std::complex<double>>& data() const { return a_; }
    std::vector<std::complex<double>>& data() { return a_; }

  private:
    int n_ = 0;
    std::vector<std::complex<double>> a_;
};

inline constexpr int kMaxEigenDim = 4096;

// Eigenvalues in ascending order via a dense complex Hermitian solve
// (single-threaded, deterministic for fixed input).  Dimension is capped at
// kMaxEigenDim; a solver that does not converge raises ConvergenceFailure.
std::vector<double> hermitian_eigenvalues(const HermitianMatrix& h);

// max_i ||H v_i - lambda_i v_i||_2 / ||H||_F over all eigenpairs; used by
// validation tests to check the solver contract.
double hermitian_eigen_residual(const HermitianMatrix& h);

struct SpectrumReport {
    std::vector<double> eigenvalues;    // ascending
    double lambda_min = 0.0;
    double lambda_max = 0.0;
    std::string set_desc;
    std::string seq_desc;
    Window window{0, 0};
    std::string notes;
};

SpectrumReport make_spectrum_report(const HermitianMatrix& h,
                                    std::string set_desc, std::string seq_desc,
                                    Window window);

// Debug/oracle dump format: first line N, then N*N lines "re im" row-major.
void write_matrix(std::ostream& os, const HermitianMatrix& h);
HermitianMatrix read_matrix(std::istream& is);

} // namespace rieszlab

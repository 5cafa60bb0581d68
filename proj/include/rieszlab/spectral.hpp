#pragma once

#include <string>
#include <vector>

#include "rieszlab/arcs.hpp"
#include "rieszlab/hermitian.hpp"
#include "rieszlab/kernels.hpp"
#include "rieszlab/sequences.hpp"

namespace rieszlab {

// Gram section of the windowed exponential system over S: entry(j,k) is the
// Fourier coefficient of chi_S at lambda_j - lambda_k.  This equals the
// lambda x lambda submatrix of the Laurent operator with symbol chi_S^.
HermitianMatrix gram_matrix(const ArcUnion& s, const IndexSet& lambda);

struct TrendReport {
    std::vector<SpectrumReport> reports;   // one per window, in input order
    std::string classification;           // "bounded-below" or "decaying"
    double decay_ratio = 0.0;             // last lambda_min / first lambda_min
};

inline constexpr double kDecayThreshold = 0.2;

// lambda_min trend of Gram sections over nested windows; the two-point decay
// classifier compares the last window against the first.
TrendReport riesz_trend(const ArcUnion& s, const SeqDescriptor& lambda,
                        const std::vector<Window>& windows,
                        double decay_threshold = kDecayThreshold,
                        const std::string& set_desc = {});

// Truncation of P_S + P_M on a window: Toeplitz(chi_S^(j-k)) plus the 0/1
// diagonal indicator of M.  All eigenvalues lie in [0,2].  Passing the
// in-window complement of a set as M gives the reading with P_{Z \ Lambda};
// passing the set itself gives the literal projection-sum reading.
SpectrumReport projection_sum_spectrum(const ArcUnion& s, const IndexSet& m,
                                       Window window);

// eps2 = eps1 / sqrt(1 + eps1^2), strictly increasing, range (0,1).
double epsilon_convert(double eps1);

} // namespace rieszlab

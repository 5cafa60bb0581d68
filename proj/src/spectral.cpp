#include "rieszlab/spectral.hpp"

#include <cmath>

#include "rieszlab/descriptors.hpp"

namespace rieszlab {

HermitianMatrix gram_matrix(const ArcUnion& s, const IndexSet& lambda) {
    if (lambda.members.empty())
        throw EmptyIndexSet("gram_matrix needs a nonempty index set");
    long long max_diff = lambda.members.back() - lambda.members.front();
    auto table = coefficient_table(s, max_diff);
    return gram_fill(lambda.members, table);
}

TrendReport riesz_trend(const ArcUnion& s, const SeqDescriptor& lambda,
                        const std::vector<Window>& windows,
                        double decay_threshold, const std::string& set_desc) {
    if (windows.empty()) throw InvalidArgument("riesz_trend needs windows");
    for (size_t i = 0; i + 1 < windows.size(); ++i)
        if (!(windows[i + 1].lo <= windows[i].lo && windows[i].hi <= windows[i + 1].hi))
            throw InvalidArgument("riesz_trend windows must be nested increasing");

    TrendReport trend;
    std::string seq_text = to_string(lambda);
    for (const Window& w : windows) {
        IndexSet section = generate(lambda, w);
        HermitianMatrix h = gram_matrix(s, section);
        trend.reports.push_back(make_spectrum_report(h, set_desc, seq_text, w));
    }
    // Cauchy interlacing across nested sections, up to solver tolerance
    for (size_t i = 0; i + 1 < trend.reports.size(); ++i) {
        if (trend.reports[i + 1].lambda_min >
            trend.reports[i].lambda_min + 1e-9)
            throw ConvergenceFailure(
                "interlacing violated beyond tolerance between windows " +
                std::to_string(i) + " and " + std::to_string(i + 1));
    }
    double first = trend.reports.front().lambda_min;
    double last = trend.reports.back().lambda_min;
    // a floor already at solver noise has collapsed; the two-point ratio
    // would only compare noise
    if (std::abs(first) <= 1e-12) {
        trend.decay_ratio = 0.0;
        trend.classification = "decaying";
        return trend;
    }
    trend.decay_ratio = last / first;
    trend.classification =
        trend.decay_ratio < decay_threshold ? "decaying" : "bounded-below";
    return trend;
}

SpectrumReport projection_sum_spectrum(const ArcUnion& s, const IndexSet& m,
                                       Window window) {
    if (window.lo > window.hi)
        throw InvalidArgument("projection_sum_spectrum needs a nonempty window");
    const long long n = window.length();
    if (n > kMaxEigenDim)
        throw InvalidArgument("window larger than eigensolver cap");
    auto table = coefficient_table(s, n - 1);
    HermitianMatrix h(static_cast<int>(n));
    for (long long j = 0; j < n; ++j)
        for (long long k = j; k < n; ++k) {
            auto z = j == k ? std::complex<double>(table[0].real(), 0.0)
                            : std::conj(table[static_cast<size_t>(k - j)]);
            if (j == k && m.contains(window.lo + j)) z += 1.0;
            h.set(static_cast<int>(j), static_cast<int>(k), z);
        }
    SpectrumReport rep = make_spectrum_report(h, "", "", window);
    rep.notes = "toeplitz(chi_S) + diag(chi_M); under the sum-of-norms reading "
                "eps2 >= sqrt(lambda_min)";
    return rep;
}

double epsilon_convert(double eps1) {
    if (!(eps1 > 0.0)) throw NonPositive("epsilon_convert needs eps1 > 0");
    return eps1 / std::sqrt(1.0 + eps1 * eps1);
}

} // namespace rieszlab

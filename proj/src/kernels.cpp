#include "rieszlab/kernels.hpp"

#include <atomic>
#include <omp.h>

namespace rieszlab {

namespace {
std::atomic<int> g_parallelism{1};

std::complex<double> table_lookup(const std::vector<std::complex<double>>& table,
                                  long long d) {
    return d >= 0 ? table[static_cast<size_t>(d)]
                  : std::conj(table[static_cast<size_t>(-d)]);
}
} // namespace

int parallelism() { return g_parallelism.load(); }

void set_parallelism(int workers) {
    g_parallelism.store(workers < 1 ? 1 : workers);
}

namespace kernels {

std::vector<std::complex<double>> coefficient_table_serial(const ArcUnion& s,
                                                           long long max_diff) {
    std::vector<std::complex<double>> table(static_cast<size_t>(max_diff) + 1);
    for (long long d = 0; d <= max_diff; ++d)
        table[static_cast<size_t>(d)] = fourier_coefficient(s, d);
    return table;
}

std::vector<std::complex<double>> coefficient_table_omp(const ArcUnion& s,
                                                        long long max_diff) {
    std::vector<std::complex<double>> table(static_cast<size_t>(max_diff) + 1);
#pragma omp parallel for schedule(static) num_threads(parallelism())
    for (long long d = 0; d <= max_diff; ++d)
        table[static_cast<size_t>(d)] = fourier_coefficient(s, d);
    return table;
}

HermitianMatrix gram_fill_serial(const std::vector<long long>& members,
                                 const std::vector<std::complex<double>>& table) {
    const int n = static_cast<int>(members.size());
    HermitianMatrix h(n);
    for (int j = 0; j < n; ++j)
        for (int k = j; k < n; ++k)
            h.set(j, k, table_lookup(table, members[static_cast<size_t>(j)] -
                                                members[static_cast<size_t>(k)]));
    return h;
}

HermitianMatrix gram_fill_omp(const std::vector<long long>& members,
                              const std::vector<std::complex<double>>& table) {
    const int n = static_cast<int>(members.size());
    HermitianMatrix h(n);
#pragma omp parallel for schedule(static) num_threads(parallelism())
    for (int j = 0; j < n; ++j)
        for (int k = j; k < n; ++k)
            h.set(j, k, table_lookup(table, members[static_cast<size_t>(j)] -
                                                members[static_cast<size_t>(k)]));
    return h;
}

std::vector<double> circular_correlate_serial(const std::vector<double>& weights,
                                              const std::vector<long long>& shifts,
                                              const std::vector<std::uint8_t>& ind) {
    const long long g = static_cast<long long>(ind.size());
    std::vector<double> v(ind.size(), 0.0);
    for (long long cell = 0; cell < g; ++cell) {
        double acc = 0.0;
        for (size_t i = 0; i < weights.size(); ++i) {
            long long src = (cell - shifts[i]) % g;
            if (src < 0) src += g;
            if (ind[static_cast<size_t>(src)]) acc += weights[i];
        }
        v[static_cast<size_t>(cell)] = acc;
    }
    return v;
}

std::vector<double> circular_correlate_omp(const std::vector<double>& weights,
                                           const std::vector<long long>& shifts,
                                           const std::vector<std::uint8_t>& ind) {
    const long long g = static_cast<long long>(ind.size());
    std::vector<double> v(ind.size(), 0.0);
#pragma omp parallel for schedule(static) num_threads(parallelism())
    for (long long cell = 0; cell < g; ++cell) {
        double acc = 0.0;
        for (size_t i = 0; i < weights.size(); ++i) {
            long long src = (cell - shifts[i]) % g;
            if (src < 0) src += g;
            if (ind[static_cast<size_t>(src)]) acc += weights[i];
        }
        v[static_cast<size_t>(cell)] = acc;
    }
    return v;
}

namespace {
// membership of g/grid in S via one sorted sweep per chunk
void sample_range(const ArcUnion& s, long long grid, long long begin,
                  long long end, std::uint8_t* out) {
    for (long long g = begin; g < end; ++g)
        out[g] = s.contains(Rational(g, grid)) ? 1 : 0;
}
} // namespace

std::vector<std::uint8_t> sample_indicator_serial(const ArcUnion& s, long long grid) {
    std::vector<std::uint8_t> out(static_cast<size_t>(grid), 0);
    sample_range(s, grid, 0, grid, out.data());
    return out;
}

std::vector<std::uint8_t> sample_indicator_omp(const ArcUnion& s, long long grid) {
    std::vector<std::uint8_t> out(static_cast<size_t>(grid), 0);
#pragma omp parallel num_threads(parallelism())
    {
        int nt = omp_get_num_threads();
        int id = omp_get_thread_num();
        long long chunk = (grid + nt - 1) / nt;
        long long begin = id * chunk;
        long long end = std::min(grid, begin + chunk);
        if (begin < end) sample_range(s, grid, begin, end, out.data());
    }
    return out;
}

} // namespace kernels

std::vector<std::complex<double>> coefficient_table(const ArcUnion& s,
                                                    long long max_diff) {
    return parallelism() > 1 ? kernels::coefficient_table_omp(s, max_diff)
                             : kernels::coefficient_table_serial(s, max_diff);
}

HermitianMatrix gram_fill(const std::vector<long long>& members,
                          const std::vector<std::complex<double>>& table) {
    return parallelism() > 1 ? kernels::gram_fill_omp(members, table)
                             : kernels::gram_fill_serial(members, table);
}

std::vector<double> circular_correlate(const std::vector<double>& weights,
                                       const std::vector<long long>& shifts,
                                       const std::vector<std::uint8_t>& ind) {
    return parallelism() > 1 ? kernels::circular_correlate_omp(weights, shifts, ind)
                             : kernels::circular_correlate_serial(weights, shifts, ind);
}

std::vector<std::uint8_t> sample_indicator(const ArcUnion& s, long long grid) {
    return parallelism() > 1 ? kernels::sample_indicator_omp(s, grid)
                             : kernels::sample_indicator_serial(s, grid);
}

} // namespace rieszlab

#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "rieszlab/arcs.hpp"
#include "rieszlab/hermitian.hpp"

namespace rieszlab {

// Worker-count knob shared by the OpenMP kernels and the sweep runner.
// Every kernel has a serial reference implementation and an OpenMP variant
// producing bit-identical output; the dispatcher picks the OpenMP path when
// more than one worker is configured.
int parallelism();
void set_parallelism(int workers);

namespace kernels {

// chi_S^(d) for d = 0..max_diff; negative differences follow by conjugation.
std::vector<std::complex<double>> coefficient_table_serial(const ArcUnion& s,
                                                           long long max_diff);
std::vector<std::complex<double>> coefficient_table_omp(const ArcUnion& s,
                                                        long long max_diff);

// Gram section from a coefficient table: entry(j,k) = table[lambda_j - lambda_k].
HermitianMatrix gram_fill_serial(const std::vector<long long>& members,
                                 const std::vector<std::complex<double>>& table);
HermitianMatrix gram_fill_omp(const std::vector<long long>& members,
                              const std::vector<std::complex<double>>& table);

// v[g] = sum_i weights[i] * ind[(g - shifts[i]) mod G]; the weighted sum runs
// in index order for every g, so results do not depend on the schedule.
std::vector<double> circular_correlate_serial(const std::vector<double>& weights,
                                              const std::vector<long long>& shifts,
                                              const std::vector<std::uint8_t>& ind);
std::vector<double> circular_correlate_omp(const std::vector<double>& weights,
                                           const std::vector<long long>& shifts,
                                           const std::vector<std::uint8_t>& ind);

// Exact half-open membership of the grid point g/grid in S, per cell.
std::vector<std::uint8_t> sample_indicator_serial(const ArcUnion& s, long long grid);
std::vector<std::uint8_t> sample_indicator_omp(const ArcUnion& s, long long grid);

} // namespace kernels

// Dispatchers: OpenMP path iff parallelism() > 1.
std::vector<std::complex<double>> coefficient_table(const ArcUnion& s,
                                                    long long max_diff);
HermitianMatrix gram_fill(const std::vector<long long>& members,
                          const std::vector<std::complex<double>>& table);
std::vector<double> circular_correlate(const std::vector<double>& weights,
                                       const std::vector<long long>& shifts,
                                       const std::vector<std::uint8_t>& ind);
std::vector<std::uint8_t> sample_indicator(const ArcUnion& s, long long grid);

} // namespace rieszlab

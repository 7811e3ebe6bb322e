#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "convseq/spike_matrix.hpp"

namespace convseq {

/// Length-T response of one filter convolved with the data.
struct ResponseTrace {
  std::vector<double> values;
  std::size_t filter_index = 0;
};

/// Cross-correlation-oriented 2D convolution of an N x M kernel with the
/// matrix (no kernel flip):
///
///   trace[t] = sum_n sum_m kernel[n, m] * X[n, t + m - M/2]
///
/// with X treated as zero outside [0, T). Output has length exactly T
/// (left pad M/2, right pad M - 1 - M/2). The loop runs over the spikes of
/// X, so cost is O(|spikes| * M) rather than O(N * T * M).
void convolve_into(std::span<const double> kernel, std::size_t width,
                   const SpikeMatrix& matrix, std::span<double> trace);

ResponseTrace convolve(std::span<const double> kernel, std::size_t width,
                       const SpikeMatrix& matrix,
                       std::size_t filter_index = 0);

/// Transpose of convolve_into: scatters a gradient w.r.t. the trace back to
/// a gradient w.r.t. the kernel, accumulating into `kernel_grad`:
///
///   kernel_grad[n, m] += sum_t trace_grad[t] * X[n, t + m - M/2]
void accumulate_kernel_gradient(std::span<const double> trace_grad,
                                std::size_t width, const SpikeMatrix& matrix,
                                std::span<double> kernel_grad);

}  // namespace convseq

#include "convseq/convolution.hpp"

#include <algorithm>

#include "convseq/errors.hpp"

namespace convseq {

void convolve_into(std::span<const double> kernel, std::size_t width,
                   const SpikeMatrix& matrix, std::span<double> trace) {
  const std::size_t n_bins = matrix.n_bins();
  if (width == 0) throw InvalidArgument("convolve: zero kernel width");
  if (kernel.size() != matrix.n_neurons() * width)
    throw InvalidArgument("convolve: kernel height does not match matrix");
  if (trace.size() != n_bins)
    throw InvalidArgument("convolve: trace buffer size mismatch");

  std::fill(trace.begin(), trace.end(), 0.0);
  const std::ptrdiff_t half = static_cast<std::ptrdiff_t>(width / 2);
  const std::ptrdiff_t t_max = static_cast<std::ptrdiff_t>(n_bins) - 1;
  for (const Spike& s : matrix.spikes()) {
    // Spike at bin b contributes kernel[n, m] to trace[b + M/2 - m].
    const std::ptrdiff_t base = static_cast<std::ptrdiff_t>(s.bin) + half;
    const std::ptrdiff_t m_lo = std::max<std::ptrdiff_t>(0, base - t_max);
    const std::ptrdiff_t m_hi = std::min<std::ptrdiff_t>(
        static_cast<std::ptrdiff_t>(width) - 1, base);
    const double* row = kernel.data() + s.neuron * width;
    for (std::ptrdiff_t m = m_lo; m <= m_hi; ++m) trace[base - m] += row[m];
  }
}

ResponseTrace convolve(std::span<const double> kernel, std::size_t width,
                       const SpikeMatrix& matrix, std::size_t filter_index) {
  ResponseTrace out;
  out.filter_index = filter_index;
  out.values.resize(matrix.n_bins());
  convolve_into(kernel, width, matrix, out.values);
  return out;
}

void accumulate_kernel_gradient(std::span<const double> trace_grad,
                                std::size_t width, const SpikeMatrix& matrix,
                                std::span<double> kernel_grad) {
  const std::size_t n_bins = matrix.n_bins();
  if (trace_grad.size() != n_bins)
    throw InvalidArgument("kernel gradient: trace length mismatch");
  if (kernel_grad.size() != matrix.n_neurons() * width)
    throw InvalidArgument("kernel gradient: kernel buffer size mismatch");

  const std::ptrdiff_t half = static_cast<std::ptrdiff_t>(width / 2);
  const std::ptrdiff_t t_max = static_cast<std::ptrdiff_t>(n_bins) - 1;
  for (const Spike& s : matrix.spikes()) {
    const std::ptrdiff_t base = static_cast<std::ptrdiff_t>(s.bin) + half;
    const std::ptrdiff_t m_lo = std::max<std::ptrdiff_t>(0, base - t_max);
    const std::ptrdiff_t m_hi = std::min<std::ptrdiff_t>(
        static_cast<std::ptrdiff_t>(width) - 1, base);
    double* row = kernel_grad.data() + s.neuron * width;
    for (std::ptrdiff_t m = m_lo; m <= m_hi; ++m) row[m] += trace_grad[base - m];
  }
}

}  // namespace convseq

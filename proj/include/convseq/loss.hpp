#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace convseq {

/// Per-step loss decomposition. By construction
///   total = sum_k (-per_filter_variance[k] + beta_tv * tv[k])
///           + beta_xcor * xcorr
/// where xcorr sums the pairwise terms over filter pairs l > k.
struct LossBreakdown {
  double total = 0.0;
  std::vector<double> per_filter_variance;
  std::vector<double> tv;
  double xcorr = 0.0;
  double beta_tv = 0.0;
  double beta_xcor = 0.0;
  std::size_t max_lag = 0;
};

/// Population variance (1/T) * sum (x_t - mean)^2.
double variance_term(std::span<const double> trace);

/// Mean squared difference of adjacent values:
/// (1/T) * sum_{t=0}^{T-2} (x_t - x_{t+1})^2.
double tv_term(std::span<const double> trace);

/// Lag-bounded raw sliding inner product of two traces, normalized by T:
/// (1/T) * sum_{|tau| <= lag} sum_t a_t * b_{t+tau}, zero outside range.
/// Symmetric in its trace arguments.
double xcorr_term(std::span<const double> a, std::span<const double> b,
                  std::size_t lag);

/// windowed[t] = sum_{u in [t-lag, t+lag] ∩ [0,T)} trace[u]; the shared
/// building block of the cross-correlation value and its gradient.
void windowed_sums(std::span<const double> trace, std::size_t lag,
                   std::span<double> windowed);

/// Assembles the breakdown from per-filter traces. With a single filter the
/// cross-correlation contribution is empty and beta_xcor is recorded as 0.
LossBreakdown loss_from_traces(const std::vector<std::vector<double>>& traces,
                               double beta_tv, double beta_xcor,
                               std::size_t max_lag);

/// d total / d trace[k], written per filter into `trace_grads`
/// (same shapes as `traces`).
void loss_trace_gradients(const std::vector<std::vector<double>>& traces,
                          double beta_tv, double beta_xcor,
                          std::size_t max_lag,
                          std::vector<std::vector<double>>& trace_grads);

}  // namespace convseq

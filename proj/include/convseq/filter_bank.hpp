#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "convseq/spike_matrix.hpp"

namespace convseq {

enum class FilterVariant { Direct, Gaussian };

FilterVariant parse_filter_variant(const std::string& name);
std::string to_string(FilterVariant variant);

/// Per-filter sorting outcome: `latencies[n]` is the time bin at which row n
/// of the materialized filter peaks (Direct) or the row's Gaussian mean
/// (Gaussian); `order` is the stable argsort of the latencies, ties broken
/// by neuron index.
struct SortResult {
  Permutation order;
  std::vector<double> latencies;
};

/// K learnable filters over N neurons and M time bins.
///
/// Direct variant: each filter holds a raw N x M weight matrix; a row of the
/// materialized kernel is the softmax of the raw row over time. Gaussian
/// variant: each filter holds one mean per neuron; a materialized row is a
/// Gaussian bump with fixed sigma truncated to [0, M), normalized to unit
/// sum by default. Both variants therefore materialize row-stochastic
/// kernels, which keeps the total convolution response equal to the total
/// spike count and makes one significance threshold valid for any filter.
class FilterBank {
 public:
  /// Raw weights i.i.d. normal(0, 0.01^2).
  static FilterBank direct(std::size_t n_neurons, std::size_t width,
                           std::size_t n_filters, std::uint64_t seed);

  /// Means i.i.d. uniform over [0, M-1].
  static FilterBank gaussian(std::size_t n_neurons, std::size_t width,
                             std::size_t n_filters, double sigma,
                             std::uint64_t seed, bool normalized = true);

  FilterVariant variant() const { return variant_; }
  std::size_t n_neurons() const { return n_neurons_; }
  std::size_t width() const { return width_; }
  std::size_t n_filters() const { return n_filters_; }
  double sigma() const { return sigma_; }
  bool normalized_gaussian() const { return normalized_; }

  /// All trainable parameters, filter-major: Direct holds K*N*M raw
  /// weights, Gaussian K*N means.
  std::span<double> params() { return params_; }
  std::span<const double> params() const { return params_; }
  std::size_t params_per_filter() const;

  std::span<double> filter_params(std::size_t k);
  std::span<const double> filter_params(std::size_t k) const;

  /// Dense N x M row-major kernel for filter k.
  std::vector<double> materialize(std::size_t k) const;
  void materialize_into(std::size_t k, std::span<double> kernel) const;

  /// Latency per row and the neuron order that sorts latencies
  /// non-decreasingly (stable; ties by neuron index).
  SortResult sort_filter(std::size_t k) const;

  /// JSON serialization: self-describing header plus parameters.
  void save(const std::filesystem::path& path) const;
  static FilterBank load(const std::filesystem::path& path);

 private:
  FilterBank(FilterVariant variant, std::size_t n_neurons, std::size_t width,
             std::size_t n_filters, double sigma, bool normalized);

  FilterVariant variant_;
  std::size_t n_neurons_;
  std::size_t width_;
  std::size_t n_filters_;
  double sigma_;      // Gaussian only
  bool normalized_;   // Gaussian only
  std::vector<double> params_;
};

/// Softmax of `raw` written to `out` (max-subtracted, sums to 1).
void softmax_row(std::span<const double> raw, std::span<double> out);

/// Truncated Gaussian row over bins 0..M-1 with the given mean; normalized
/// to unit sum when `normalized`.
void gaussian_row(double mean, double sigma, bool normalized,
                  std::span<double> out);

}  // namespace convseq

#include "convseq/filter_bank.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>

#include <json.hpp>

#include "convseq/errors.hpp"
#include "convseq/rng.hpp"

namespace convseq {

FilterVariant parse_filter_variant(const std::string& name) {
  if (name == "direct") return FilterVariant::Direct;
  if (name == "gaussian") return FilterVariant::Gaussian;
  throw InvalidArgument("unknown filter variant '" + name + "'");
}

std::string to_string(FilterVariant variant) {
  return variant == FilterVariant::Direct ? "direct" : "gaussian";
}

void softmax_row(std::span<const double> raw, std::span<double> out) {
  const double mx = *std::max_element(raw.begin(), raw.end());
  double sum = 0.0;
  for (std::size_t m = 0; m < raw.size(); ++m) {
    out[m] = std::exp(raw[m] - mx);
    sum += out[m];
  }
  for (std::size_t m = 0; m < raw.size(); ++m) out[m] /= sum;
}

void gaussian_row(double mean, double sigma, bool normalized,
                  std::span<double> out) {
  const double inv = 1.0 / (2.0 * sigma * sigma);
  double sum = 0.0;
  for (std::size_t m = 0; m < out.size(); ++m) {
    const double d = static_cast<double>(m) - mean;
    out[m] = std::exp(-d * d * inv);
    sum += out[m];
  }
  if (normalized) {
    for (std::size_t m = 0; m < out.size(); ++m) out[m] /= sum;
  }
}

FilterBank::FilterBank(FilterVariant variant, std::size_t n_neurons,
                       std::size_t width, std::size_t n_filters, double sigma,
                       bool normalized)
    : variant_(variant),
      n_neurons_(n_neurons),
      width_(width),
      n_filters_(n_filters),
      sigma_(sigma),
      normalized_(normalized) {
  if (n_neurons_ == 0 || width_ == 0 || n_filters_ == 0)
    throw InvalidArgument("filter bank dimensions must be >= 1");
  params_.resize(n_filters_ * params_per_filter(), 0.0);
}

FilterBank FilterBank::direct(std::size_t n_neurons, std::size_t width,
                              std::size_t n_filters, std::uint64_t seed) {
  FilterBank bank(FilterVariant::Direct, n_neurons, width, n_filters, 0.0,
                  true);
  auto rng = make_rng(seed);
  std::normal_distribution<double> init(0.0, 0.01);
  for (double& w : bank.params_) w = init(rng);
  return bank;
}

FilterBank FilterBank::gaussian(std::size_t n_neurons, std::size_t width,
                                std::size_t n_filters, double sigma,
                                std::uint64_t seed, bool normalized) {
  if (sigma <= 0.0) throw InvalidArgument("gaussian filter sigma must be > 0");
  FilterBank bank(FilterVariant::Gaussian, n_neurons, width, n_filters, sigma,
                  normalized);
  auto rng = make_rng(seed);
  std::uniform_real_distribution<double> init(0.0,
                                              static_cast<double>(width - 1));
  for (double& mu : bank.params_) mu = init(rng);
  return bank;
}

std::size_t FilterBank::params_per_filter() const {
  return variant_ == FilterVariant::Direct ? n_neurons_ * width_ : n_neurons_;
}

std::span<double> FilterBank::filter_params(std::size_t k) {
  return params().subspan(k * params_per_filter(), params_per_filter());
}

std::span<const double> FilterBank::filter_params(std::size_t k) const {
  return params().subspan(k * params_per_filter(), params_per_filter());
}

void FilterBank::materialize_into(std::size_t k,
                                  std::span<double> kernel) const {
  if (k >= n_filters_) throw InvalidArgument("filter index out of range");
  if (kernel.size() != n_neurons_ * width_)
    throw InvalidArgument("materialize: kernel buffer size mismatch");
  const auto p = filter_params(k);
  for (std::size_t n = 0; n < n_neurons_; ++n) {
    auto row = kernel.subspan(n * width_, width_);
    if (variant_ == FilterVariant::Direct) {
      softmax_row(p.subspan(n * width_, width_), row);
    } else {
      gaussian_row(p[n], sigma_, normalized_, row);
    }
  }
}

std::vector<double> FilterBank::materialize(std::size_t k) const {
  std::vector<double> kernel(n_neurons_ * width_);
  materialize_into(k, kernel);
  return kernel;
}

SortResult FilterBank::sort_filter(std::size_t k) const {
  if (k >= n_filters_) throw InvalidArgument("filter index out of range");
  SortResult result;
  result.latencies.resize(n_neurons_);
  if (variant_ == FilterVariant::Direct) {
    const std::vector<double> kernel = materialize(k);
    for (std::size_t n = 0; n < n_neurons_; ++n) {
      const auto row = std::span(kernel).subspan(n * width_, width_);
      // first index on ties
      const auto it = std::max_element(row.begin(), row.end());
      result.latencies[n] =
          static_cast<double>(std::distance(row.begin(), it));
    }
  } else {
    const auto p = filter_params(k);
    result.latencies.assign(p.begin(), p.end());
  }
  result.order = Permutation::identity(n_neurons_);
  std::stable_sort(result.order.indices.begin(), result.order.indices.end(),
                   [&](std::size_t a, std::size_t b) {
                     return result.latencies[a] < result.latencies[b];
                   });
  return result;
}

void FilterBank::save(const std::filesystem::path& path) const {
  nlohmann::json j;
  j["variant"] = to_string(variant_);
  j["n_neurons"] = n_neurons_;
  j["width"] = width_;
  j["n_filters"] = n_filters_;
  if (variant_ == FilterVariant::Gaussian) {
    j["sigma"] = sigma_;
    j["normalized"] = normalized_;
  }
  j["params"] = params_;
  std::ofstream out(path);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out << j.dump(2) << "\n";
}

FilterBank FilterBank::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
  nlohmann::json j;
  try {
    in >> j;
    const FilterVariant variant =
        parse_filter_variant(j.at("variant").get<std::string>());
    FilterBank bank(variant, j.at("n_neurons").get<std::size_t>(),
                    j.at("width").get<std::size_t>(),
                    j.at("n_filters").get<std::size_t>(),
                    variant == FilterVariant::Gaussian
                        ? j.at("sigma").get<double>()
                        : 0.0,
                    variant == FilterVariant::Gaussian
                        ? j.value("normalized", true)
                        : true);
    const auto params = j.at("params").get<std::vector<double>>();
    if (params.size() != bank.params_.size())
      throw ParseError(path.string() + ": parameter count does not match header");
    bank.params_ = params;
    return bank;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

}  // namespace convseq

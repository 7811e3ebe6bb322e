#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

namespace convseq {

/// One spike: neuron row index and time-bin column index, both 0-based.
struct Spike {
  std::uint32_t neuron = 0;
  std::uint32_t bin = 0;

  friend bool operator==(const Spike& a, const Spike& b) {
    return a.neuron == b.neuron && a.bin == b.bin;
  }
  friend bool operator<(const Spike& a, const Spike& b) {
    return a.neuron != b.neuron ? a.neuron < b.neuron : a.bin < b.bin;
  }
};

/// A bijection on [0, size()).
struct Permutation {
  std::vector<std::size_t> indices;

  static Permutation identity(std::size_t n);
  static Permutation random(std::size_t n, std::mt19937_64& rng);

  std::size_t size() const { return indices.size(); }
  std::size_t operator[](std::size_t i) const { return indices[i]; }
  bool is_valid() const;
  Permutation inverse() const;

  /// Composition matching row reordering: reorder(reorder(X, p), q)
  /// equals reorder(X, p.compose(q)), i.e. result[i] = p[q[i]].
  Permutation compose(const Permutation& q) const;
};

/// Immutable binary raster of N neurons by T time bins, stored as a sorted
/// set of (neuron, bin) pairs. Densities of interest are well below 1%, so
/// the sparse set is the working representation; dense() materializes a
/// row-major byte matrix on demand.
class SpikeMatrix {
 public:
  /// Sorts and deduplicates `spikes`; throws InvalidArgument on any
  /// out-of-range index.
  SpikeMatrix(std::size_t n_neurons, std::size_t n_bins,
              std::vector<Spike> spikes);

  static SpikeMatrix empty(std::size_t n_neurons, std::size_t n_bins) {
    return SpikeMatrix(n_neurons, n_bins, {});
  }

  std::size_t n_neurons() const { return n_neurons_; }
  std::size_t n_bins() const { return n_bins_; }
  const std::vector<Spike>& spikes() const { return spikes_; }
  std::size_t spike_count() const { return spikes_.size(); }

  /// Fraction of cells set: |spikes| / (N*T).
  double density() const;

  bool has_spike(std::size_t neuron, std::size_t bin) const;

  /// Row-major N*T dense view; intended for small instances and tests.
  std::vector<std::uint8_t> dense() const;

  /// New matrix with X'[row_perm[n], col_perm[t]] = X[n, t].
  SpikeMatrix permuted(const Permutation& row_perm,
                       const Permutation& col_perm) const;

  /// New matrix whose row n is row order[n] of this matrix.
  SpikeMatrix rows_reordered(const Permutation& order) const;

  friend bool operator==(const SpikeMatrix& a, const SpikeMatrix& b) {
    return a.n_neurons_ == b.n_neurons_ && a.n_bins_ == b.n_bins_ &&
           a.spikes_ == b.spikes_;
  }

 private:
  std::size_t n_neurons_;
  std::size_t n_bins_;
  std::vector<Spike> spikes_;
};

}  // namespace convseq

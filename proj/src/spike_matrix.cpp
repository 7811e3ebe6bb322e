#include "convseq/spike_matrix.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "convseq/errors.hpp"

namespace convseq {

Permutation Permutation::identity(std::size_t n) {
  Permutation p;
  p.indices.resize(n);
  std::iota(p.indices.begin(), p.indices.end(), std::size_t{0});
  return p;
}

Permutation Permutation::random(std::size_t n, std::mt19937_64& rng) {
  Permutation p = identity(n);
  std::shuffle(p.indices.begin(), p.indices.end(), rng);
  return p;
}

bool Permutation::is_valid() const {
  std::vector<bool> seen(indices.size(), false);
  for (std::size_t v : indices) {
    if (v >= indices.size() || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

Permutation Permutation::inverse() const {
  Permutation inv;
  inv.indices.resize(indices.size());
  for (std::size_t i = 0; i < indices.size(); ++i) inv.indices[indices[i]] = i;
  return inv;
}

Permutation Permutation::compose(const Permutation& q) const {
  if (q.size() != size())
    throw InvalidArgument("permutation composition: size mismatch");
  Permutation r;
  r.indices.resize(size());
  for (std::size_t i = 0; i < size(); ++i) r.indices[i] = indices[q[i]];
  return r;
}

SpikeMatrix::SpikeMatrix(std::size_t n_neurons, std::size_t n_bins,
                         std::vector<Spike> spikes)
    : n_neurons_(n_neurons), n_bins_(n_bins), spikes_(std::move(spikes)) {
  for (const Spike& s : spikes_) {
    if (s.neuron >= n_neurons_ || s.bin >= n_bins_) {
      std::ostringstream msg;
      msg << "spike (" << s.neuron << ", " << s.bin << ") out of range for "
          << n_neurons_ << "x" << n_bins_ << " matrix";
      throw InvalidArgument(msg.str());
    }
  }
  std::sort(spikes_.begin(), spikes_.end());
  spikes_.erase(std::unique(spikes_.begin(), spikes_.end()), spikes_.end());
}

double SpikeMatrix::density() const {
  const double cells = static_cast<double>(n_neurons_) * n_bins_;
  return cells == 0.0 ? 0.0 : static_cast<double>(spikes_.size()) / cells;
}

bool SpikeMatrix::has_spike(std::size_t neuron, std::size_t bin) const {
  const Spike probe{static_cast<std::uint32_t>(neuron),
                    static_cast<std::uint32_t>(bin)};
  return std::binary_search(spikes_.begin(), spikes_.end(), probe);
}

std::vector<std::uint8_t> SpikeMatrix::dense() const {
  std::vector<std::uint8_t> out(n_neurons_ * n_bins_, 0);
  for (const Spike& s : spikes_) out[s.neuron * n_bins_ + s.bin] = 1;
  return out;
}

SpikeMatrix SpikeMatrix::permuted(const Permutation& row_perm,
                                  const Permutation& col_perm) const {
  if (row_perm.size() != n_neurons_ || col_perm.size() != n_bins_)
    throw InvalidArgument("permuted: permutation length mismatch");
  if (!row_perm.is_valid() || !col_perm.is_valid())
    throw InvalidArgument("permuted: not a bijection");
  std::vector<Spike> out;
  out.reserve(spikes_.size());
  for (const Spike& s : spikes_) {
    out.push_back(Spike{static_cast<std::uint32_t>(row_perm[s.neuron]),
                        static_cast<std::uint32_t>(col_perm[s.bin])});
  }
  return SpikeMatrix(n_neurons_, n_bins_, std::move(out));
}

SpikeMatrix SpikeMatrix::rows_reordered(const Permutation& order) const {
  if (order.size() != n_neurons_)
    throw InvalidArgument("rows_reordered: order length mismatch");
  if (!order.is_valid())
    throw InvalidArgument("rows_reordered: not a bijection");
  // Output row n is input row order[n]; spikes move via the inverse map.
  const Permutation inv = order.inverse();
  std::vector<Spike> out;
  out.reserve(spikes_.size());
  for (const Spike& s : spikes_) {
    out.push_back(
        Spike{static_cast<std::uint32_t>(inv[s.neuron]), s.bin});
  }
  return SpikeMatrix(n_neurons_, n_bins_, std::move(out));
}

}  // namespace convseq

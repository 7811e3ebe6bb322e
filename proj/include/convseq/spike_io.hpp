#pragma once

#include <filesystem>
#include <iosfwd>

#include "convseq/spike_matrix.hpp"

namespace convseq {

enum class SpikeFileFormat { CooText, DenseCsv };

/// Parses "coo-text" or "dense-csv" (case-insensitive); throws
/// InvalidArgument otherwise.
SpikeFileFormat parse_spike_format(const std::string& name);
std::string to_string(SpikeFileFormat format);

/// coo-text: header line "N=<int> T=<int>", then one "neuron bin" pair per
/// line, whitespace separated, 0-based.
///
/// dense-csv: optional header "# N=<int> T=<int>"; rows are neurons,
/// columns are time bins, every cell exactly "0" or "1". Without a header
/// the dimensions are inferred from the grid.
SpikeMatrix load_spike_matrix(const std::filesystem::path& path,
                              SpikeFileFormat format);
SpikeMatrix read_spike_matrix(std::istream& in, SpikeFileFormat format,
                              const std::string& source_name = "<stream>");

void save_spike_matrix(const SpikeMatrix& matrix,
                       const std::filesystem::path& path,
                       SpikeFileFormat format);
void write_spike_matrix(const SpikeMatrix& matrix, std::ostream& out,
                        SpikeFileFormat format);

}  // namespace convseq

#include "convseq/spike_io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <string>

#include "convseq/errors.hpp"

namespace convseq {
namespace {

[[noreturn]] void fail(const std::string& source, std::size_t line,
                       const std::string& what) {
  std::ostringstream msg;
  msg << source << ":" << line << ": " << what;
  throw ParseError(msg.str());
}

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

/// Parses "N=<int> T=<int>"; returns false if the shape does not match.
bool parse_dims(const std::string& text, std::size_t& n, std::size_t& t) {
  std::istringstream ss(text);
  std::string ntok, ttok;
  if (!(ss >> ntok >> ttok)) return false;
  std::string rest;
  if (ss >> rest) return false;
  if (ntok.rfind("N=", 0) != 0 || ttok.rfind("T=", 0) != 0) return false;
  try {
    std::size_t pos = 0;
    long long nv = std::stoll(ntok.substr(2), &pos);
    if (pos != ntok.size() - 2 || nv < 0) return false;
    long long tv = std::stoll(ttok.substr(2), &pos);
    if (pos != ttok.size() - 2 || tv < 0) return false;
    n = static_cast<std::size_t>(nv);
    t = static_cast<std::size_t>(tv);
  } catch (const std::exception&) {
    return false;
  }
  return true;
}

SpikeMatrix read_coo(std::istream& in, const std::string& source) {
  std::string line;
  std::size_t lineno = 0;
  if (!std::getline(in, line)) fail(source, 1, "missing header 'N=<int> T=<int>'");
  ++lineno;
  std::size_t n = 0, t = 0;
  if (!parse_dims(trim(line), n, t))
    fail(source, lineno, "malformed header, expected 'N=<int> T=<int>'");

  std::vector<Spike> spikes;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string body = trim(line);
    if (body.empty()) continue;
    std::istringstream ss(body);
    long long neuron = -1, bin = -1;
    std::string rest;
    if (!(ss >> neuron >> bin) || (ss >> rest))
      fail(source, lineno, "expected 'neuron bin' pair");
    if (neuron < 0 || static_cast<std::size_t>(neuron) >= n)
      fail(source, lineno, "neuron index out of range");
    if (bin < 0 || static_cast<std::size_t>(bin) >= t)
      fail(source, lineno, "bin index out of range");
    spikes.push_back(Spike{static_cast<std::uint32_t>(neuron),
                           static_cast<std::uint32_t>(bin)});
  }
  return SpikeMatrix(n, t, std::move(spikes));
}

SpikeMatrix read_dense_csv(std::istream& in, const std::string& source) {
  std::string line;
  std::size_t lineno = 0;
  bool have_dims = false;
  std::size_t n = 0, t = 0;

  std::vector<Spike> spikes;
  std::size_t row = 0;
  std::size_t cols = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string body = trim(line);
    if (body.empty()) continue;
    if (body[0] == '#') {
      if (lineno == 1 && parse_dims(trim(body.substr(1)), n, t)) have_dims = true;
      continue;  // other comment lines are ignored
    }
    std::size_t col = 0;
    std::size_t pos = 0;
    while (true) {
      const std::size_t comma = body.find(',', pos);
      const std::string cell =
          trim(body.substr(pos, comma == std::string::npos ? std::string::npos
                                                           : comma - pos));
      if (cell == "1") {
        spikes.push_back(Spike{static_cast<std::uint32_t>(row),
                               static_cast<std::uint32_t>(col)});
      } else if (cell != "0") {
        fail(source, lineno, "non-binary value '" + cell + "'");
      }
      ++col;
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    if (row == 0) {
      cols = col;
    } else if (col != cols) {
      fail(source, lineno, "ragged row: expected " + std::to_string(cols) +
                               " columns, got " + std::to_string(col));
    }
    ++row;
  }

  if (!have_dims) {
    n = row;
    t = cols;
  } else if (row != n || (row > 0 && cols != t)) {
    fail(source, lineno == 0 ? 1 : lineno,
         "grid shape does not match declared header dimensions");
  }
  return SpikeMatrix(n, t, std::move(spikes));
}

}  // namespace

SpikeFileFormat parse_spike_format(const std::string& name) {
  std::string low = name;
  std::transform(low.begin(), low.end(), low.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  if (low == "coo-text" || low == "coo") return SpikeFileFormat::CooText;
  if (low == "dense-csv" || low == "csv") return SpikeFileFormat::DenseCsv;
  throw InvalidArgument("unknown spike file format '" + name + "'");
}

std::string to_string(SpikeFileFormat format) {
  return format == SpikeFileFormat::CooText ? "coo-text" : "dense-csv";
}

SpikeMatrix read_spike_matrix(std::istream& in, SpikeFileFormat format,
                              const std::string& source_name) {
  return format == SpikeFileFormat::CooText ? read_coo(in, source_name)
                                            : read_dense_csv(in, source_name);
}

SpikeMatrix load_spike_matrix(const std::filesystem::path& path,
                              SpikeFileFormat format) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
  return read_spike_matrix(in, format, path.string());
}

void write_spike_matrix(const SpikeMatrix& matrix, std::ostream& out,
                        SpikeFileFormat format) {
  if (format == SpikeFileFormat::CooText) {
    out << "N=" << matrix.n_neurons() << " T=" << matrix.n_bins() << "\n";
    for (const Spike& s : matrix.spikes())
      out << s.neuron << " " << s.bin << "\n";
    return;
  }
  out << "# N=" << matrix.n_neurons() << " T=" << matrix.n_bins() << "\n";
  const auto& spikes = matrix.spikes();
  std::size_t next = 0;
  for (std::size_t n = 0; n < matrix.n_neurons(); ++n) {
    for (std::size_t t = 0; t < matrix.n_bins(); ++t) {
      const bool on = next < spikes.size() && spikes[next].neuron == n &&
                      spikes[next].bin == t;
      if (on) ++next;
      if (t) out << ',';
      out << (on ? '1' : '0');
    }
    out << "\n";
  }
}

void save_spike_matrix(const SpikeMatrix& matrix,
                       const std::filesystem::path& path,
                       SpikeFileFormat format) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  write_spike_matrix(matrix, out, format);
  out.flush();
  if (!out) throw IoError("write failed for '" + path.string() + "'");
}

}  // namespace convseq

#include "ieh/csv.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <string_view>
#include <system_error>

namespace ieh {

std::string format_double(double x) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

namespace {

double parse_double(std::string_view token, long line) {
  // Trim a trailing carriage return so Windows-style files still parse.
  if (!token.empty() && token.back() == '\r') {
    token.remove_suffix(1);
  }
  double value = 0.0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  const auto res = std::from_chars(first, last, value);
  if (res.ec != std::errc() || res.ptr != last) {
    throw ParseError("non-numeric cell '" + std::string(token) + "'", line);
  }
  if (!std::isfinite(value)) {
    throw ParseError("non-finite value '" + std::string(token) + "'", line);
  }
  return value;
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      fields.push_back(line.substr(start));
      break;
    }
    fields.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
  return fields;
}

std::string_view strip_cr(std::string_view s) {
  if (!s.empty() && s.back() == '\r') {
    s.remove_suffix(1);
  }
  return s;
}

}  // namespace

std::vector<VoltageSeries> read_csv(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot open '" + path.string() + "' for reading");
  }

  std::string line;
  long line_no = 0;

  // Header (first non-comment, non-blank line).
  std::size_t n_channels = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view sv = strip_cr(line);
    if (sv.empty() || sv.front() == '#') {
      continue;
    }
    if (sv == "time,v1") {
      n_channels = 1;
    } else if (sv == "time,v1,v2") {
      n_channels = 2;
    } else {
      throw ParseError("header must be 'time,v1' or 'time,v1,v2', got '" + std::string(sv) + "'",
                       line_no);
    }
    break;
  }
  if (n_channels == 0) {
    throw ParseError("missing header line", line_no == 0 ? 1 : line_no);
  }

  std::vector<double> times;
  std::vector<std::vector<double>> columns(n_channels);
  double dt = 0.0;  // first interval, reference for the uniformity check
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view sv = strip_cr(line);
    if (sv.empty() || sv.front() == '#') {
      continue;
    }
    const auto fields = split_fields(sv);
    if (fields.size() != n_channels + 1) {
      throw ParseError("expected " + std::to_string(n_channels + 1) + " columns, got " +
                           std::to_string(fields.size()),
                       line_no);
    }
    const double t = parse_double(fields[0], line_no);
    if (!times.empty()) {
      const double step = t - times.back();
      if (!(step > 0.0)) {
        throw ParseError("time column must be strictly increasing", line_no);
      }
      if (times.size() == 1) {
        dt = step;
      } else if (std::abs(step - dt) > 1e-9 * std::abs(dt)) {
        throw ParseError("non-uniform time spacing", line_no);
      }
    }
    times.push_back(t);
    for (std::size_t c = 0; c < n_channels; ++c) {
      columns[c].push_back(parse_double(fields[c + 1], line_no));
    }
  }
  if (times.empty()) {
    throw ParseError("empty data section", line_no + 1);
  }
  const double sample_rate = times.size() >= 2 ? 1.0 / dt : 1.0;

  std::vector<VoltageSeries> out(n_channels);
  for (std::size_t c = 0; c < n_channels; ++c) {
    out[c].samples = std::move(columns[c]);
    out[c].sample_rate = sample_rate;
    validate(out[c]);
  }
  return out;
}

void write_csv(const std::filesystem::path& path,
               const std::vector<VoltageSeries>& channels,
               const std::vector<std::string>& comments) {
  if (channels.empty() || channels.size() > 2) {
    throw ConfigError("write_csv supports 1 or 2 channels");
  }
  for (const auto& ch : channels) {
    validate(ch);
  }
  if (channels.size() == 2) {
    if (channels[0].samples.size() != channels[1].samples.size()) {
      throw DimensionError("write_csv: channel lengths differ");
    }
    if (channels[0].sample_rate != channels[1].sample_rate) {
      throw ConfigError("write_csv: channel sample rates differ");
    }
  }

  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw IoError("cannot open '" + path.string() + "' for writing");
  }
  for (const auto& c : comments) {
    out << "# " << c << '\n';
  }
  out << (channels.size() == 1 ? "time,v1" : "time,v1,v2") << '\n';

  const double rate = channels[0].sample_rate;
  for (std::size_t i = 0; i < channels[0].samples.size(); ++i) {
    out << format_double(static_cast<double>(i) / rate);
    for (const auto& ch : channels) {
      out << ',' << format_double(ch.samples[i]);
    }
    out << '\n';
  }
  if (!out) {
    throw IoError("write failed for '" + path.string() + "'");
  }
}

}  // namespace ieh

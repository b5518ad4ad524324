#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "ieh/signal.hpp"

namespace ieh {

/// Reads a `time,v1` or `time,v1,v2` CSV file. The time column must be
/// strictly increasing with uniform spacing (1e-9 relative tolerance); the
/// implied rate becomes the sample rate of every returned channel. Lines
/// starting with '#' are skipped. Throws ParseError (with line number) on
/// malformed content and IoError when the file cannot be opened.
std::vector<VoltageSeries> read_csv(const std::filesystem::path& path);

/// Writes 1 or 2 channels in the same format with '\n' line endings. Values
/// use the shortest representation that round-trips exactly. Optional
/// comment lines are emitted first, each prefixed with "# ".
void write_csv(const std::filesystem::path& path,
               const std::vector<VoltageSeries>& channels,
               const std::vector<std::string>& comments = {});

/// Shortest exact decimal form of a double (used for all CSV output).
std::string format_double(double x);

}  // namespace ieh

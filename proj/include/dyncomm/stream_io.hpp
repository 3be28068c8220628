#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "dyncomm/gen.hpp"
#include "dyncomm/metrics.hpp"
#include "dyncomm/temporal.hpp"

namespace dyncomm {

/// Reads `op,src,dst[,weight[,timestamp]]` lines, op ∈ {+,-}. Blank lines and
/// lines starting with '#' are skipped. Missing weight defaults to 1, missing
/// timestamp to the 0-based index of the event (or the previous event's
/// timestamp if that is later). Throws
/// ParseError (with the 1-based file line) on malformed input and
/// OutOfOrderError when timestamps decrease.
std::vector<EdgeEvent> parse_stream(std::istream& in);
std::vector<EdgeEvent> parse_stream(const std::filesystem::path& path);

/// Writes events in the format parse_stream reads, every field explicit.
void write_stream(std::ostream& out, const std::vector<EdgeEvent>& events);

/// `iteration,vertex,community` rows, one block per stable point.
void write_ground_truth(std::ostream& out,
                        const std::vector<StablePoint>& stable_points);
std::vector<StablePoint> read_ground_truth(std::istream& in);

/// `vertex,community` rows with a header line.
void write_mapping(std::ostream& out, const Mapping& mapping);
Mapping read_mapping(std::istream& in);
Mapping read_mapping(const std::filesystem::path& path);

/// Shortest decimal form that reads back to the same double.
std::string format_real(double x);

}  // namespace dyncomm

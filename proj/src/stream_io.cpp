#include "dyncomm/stream_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <string_view>

#include "dyncomm/errors.hpp"

namespace dyncomm {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    fields.push_back(trim(line.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return fields;
}

template <typename T>
T parse_number(std::string_view field, std::size_t line, const char* what) {
  T value{};
  const auto [ptr, ec] =
      std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || ptr != field.data() + field.size())
    throw ParseError(line, std::string("bad ") + what + " '" +
                               std::string(field) + "'");
  return value;
}

std::ifstream open_or_throw(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw NotFoundError("cannot open " + path.string());
  return in;
}

}  // namespace

std::vector<EdgeEvent> parse_stream(std::istream& in) {
  std::vector<EdgeEvent> events;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;

    const auto fields = split_fields(line);
    if (fields.size() < 3 || fields.size() > 5)
      throw ParseError(line_no, "expected op,src,dst[,weight[,timestamp]]");

    EdgeEvent e;
    if (fields[0] == "+")
      e.action = EdgeAction::kAdd;
    else if (fields[0] == "-")
      e.action = EdgeAction::kRemove;
    else
      throw ParseError(line_no, "op must be '+' or '-', got '" +
                                    std::string(fields[0]) + "'");
    e.u = parse_number<VertexId>(fields[1], line_no, "source vertex");
    e.v = parse_number<VertexId>(fields[2], line_no, "destination vertex");

    e.w = e.action == EdgeAction::kAdd ? 1.0 : 0.0;
    if (fields.size() >= 4 && !fields[3].empty() &&
        e.action == EdgeAction::kAdd) {
      e.w = parse_number<double>(fields[3], line_no, "weight");
      if (!(e.w > 0)) throw ParseError(line_no, "weight must be positive");
    }

    // Missing timestamps count events, never stepping back behind an
    // explicit one.
    e.t = events.empty() ? 0 : std::max<Timestamp>(events.size(), events.back().t);
    if (fields.size() == 5 && !fields[4].empty())
      e.t = parse_number<Timestamp>(fields[4], line_no, "timestamp");
    if (!events.empty() && e.t < events.back().t)
      throw OutOfOrderError("line " + std::to_string(line_no) + ": timestamp " +
                            std::to_string(e.t) + " precedes " +
                            std::to_string(events.back().t));
    events.push_back(e);
  }
  return events;
}

std::vector<EdgeEvent> parse_stream(const std::filesystem::path& path) {
  auto in = open_or_throw(path);
  return parse_stream(in);
}

std::string format_real(double x) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, ptr);
}

void write_stream(std::ostream& out, const std::vector<EdgeEvent>& events) {
  out << "# op,src,dst,weight,timestamp\n";
  for (const EdgeEvent& e : events) {
    if (e.action == EdgeAction::kAdd)
      out << "+," << e.u << ',' << e.v << ',' << format_real(e.w) << ',' << e.t
          << '\n';
    else
      out << "-," << e.u << ',' << e.v << ",," << e.t << '\n';
  }
}

void write_ground_truth(std::ostream& out,
                        const std::vector<StablePoint>& stable_points) {
  out << "iteration,vertex,community\n";
  for (const StablePoint& sp : stable_points)
    for (const auto& [v, c] : sp.partition)
      out << sp.iteration << ',' << v << ',' << c << '\n';
}

std::vector<StablePoint> read_ground_truth(std::istream& in) {
  std::vector<StablePoint> points;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#' || line.starts_with("iteration"))
      continue;
    const auto fields = split_fields(line);
    if (fields.size() != 3)
      throw ParseError(line_no, "expected iteration,vertex,community");
    const auto it = parse_number<Timestamp>(fields[0], line_no, "iteration");
    if (points.empty() || points.back().iteration != it)
      points.push_back({it, {}});
    points.back().partition[parse_number<VertexId>(fields[1], line_no, "vertex")] =
        parse_number<CommunityId>(fields[2], line_no, "community");
  }
  return points;
}

void write_mapping(std::ostream& out, const Mapping& mapping) {
  out << "vertex,community\n";
  for (const auto& [v, c] : mapping) out << v << ',' << c << '\n';
}

Mapping read_mapping(std::istream& in) {
  Mapping m;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#' || line.starts_with("vertex"))
      continue;
    const auto fields = split_fields(line);
    if (fields.size() != 2) throw ParseError(line_no, "expected vertex,community");
    m[parse_number<VertexId>(fields[0], line_no, "vertex")] =
        parse_number<CommunityId>(fields[1], line_no, "community");
  }
  return m;
}

Mapping read_mapping(const std::filesystem::path& path) {
  auto in = open_or_throw(path);
  return read_mapping(in);
}

}  // namespace dyncomm

#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "egodyn/measurement.hpp"

namespace egodyn {

// Round-based text format, one record per round:
//
//   # round <round_id> <timestamp_s> <monitor_label>
//   <parent_label> <child_label>
//   ...
//
// Labels are non-empty and whitespace-free. The canonical form lists edges in
// ascending (parent, child) byte order, uses '\n' line endings and has no
// blank lines.

struct MalformedRound {
  std::int64_t round_id = 0;
  std::size_t line = 0;  ///< line of the record header
  std::string reason;
};

struct ParsedSeries {
  RoundSeries series;  ///< labels live in series.labels
  std::vector<MalformedRound> malformed;
};

/// Rounds that are not a tree rooted at their monitor, or whose monitor
/// differs from the first valid round's, are dropped and reported. Kept views
/// are renumbered from 0. ParseError on syntax errors, ParameterError on
/// empty input.
ParsedSeries parse_series(std::istream& in);
ParsedSeries parse_series(std::string_view text);
ParsedSeries load_series(const std::string& path);

/// Canonical text of a non-empty series.
std::string serialize_series(const RoundSeries& series);
void write_series(std::ostream& out, const RoundSeries& series);

}  // namespace egodyn

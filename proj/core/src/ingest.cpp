#include "egodyn/ingest.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <optional>
#include <sstream>
#include <utility>

#include "egodyn/error.hpp"

namespace egodyn {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

std::int64_t parse_int(std::string_view token, std::size_t line, const char* what) {
  std::int64_t value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParseError(line, std::string("invalid ") + what + " '" + std::string(token) + "'");
  }
  return value;
}

struct PendingRound {
  std::int64_t round_id = 0;
  std::int64_t timestamp_s = 0;
  NodeId monitor = 0;
  std::size_t line = 0;
  std::vector<std::pair<NodeId, NodeId>> edges;
};

class SeriesBuilder {
 public:
  void finish(PendingRound&& round) {
    const LabelTable& labels = out_.series.labels;
    auto reject = [&](std::string reason) {
      out_.malformed.push_back(MalformedRound{round.round_id, round.line, std::move(reason)});
    };
    if (monitor_ && *monitor_ != round.monitor) {
      return reject("monitor " + labels.label(round.monitor) + " differs from series monitor " +
                    labels.label(*monitor_));
    }
    EgoView view;
    view.monitor = round.monitor;
    view.round_id = round.round_id;
    view.timestamp_s = round.timestamp_s;
    for (const auto& [par, child] : round.edges) {
      if (par == child) return reject("self-loop on " + labels.label(child));
      if (child == round.monitor) return reject("monitor " + labels.label(child) + " has a parent");
      if (!view.parent.emplace(child, par).second) {
        return reject("node " + labels.label(child) + " has more than one parent");
      }
    }
    if (auto why = tree_violation(view, [&labels](NodeId u) { return labels.label(u); })) {
      return reject(*why);
    }
    monitor_ = round.monitor;
    view.round_index = out_.series.views.size();
    out_.series.views.push_back(std::move(view));
  }

  LabelTable& labels() { return out_.series.labels; }

  ParsedSeries take() {
    if (monitor_) out_.series.monitor = *monitor_;
    if (out_.series.views.size() >= 2) {
      out_.series.round_period_s = out_.series.views[1].timestamp_s - out_.series.views[0].timestamp_s;
    }
    return std::move(out_);
  }

 private:
  ParsedSeries out_;
  std::optional<NodeId> monitor_;
};

}  // namespace

ParsedSeries parse_series(std::istream& in) {
  SeriesBuilder builder;
  std::optional<PendingRound> pending;
  std::string line;
  std::size_t line_no = 0;
  bool any_content = false;

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto tokens = split_ws(line);
    if (tokens.empty()) continue;
    any_content = true;

    if (tokens[0].starts_with('#')) {
      if (tokens[0] != "#" || tokens.size() < 2 || tokens[1] != "round") {
        throw ParseError(line_no, "expected '# round <round_id> <timestamp_s> <monitor>'");
      }
      if (tokens.size() != 5) throw ParseError(line_no, "round header needs exactly 3 fields");
      if (pending) builder.finish(std::move(*pending));
      PendingRound next;
      next.round_id = parse_int(tokens[2], line_no, "round id");
      next.timestamp_s = parse_int(tokens[3], line_no, "timestamp");
      next.monitor = builder.labels().intern(tokens[4]);
      next.line = line_no;
      pending = std::move(next);
      continue;
    }
    if (!pending) throw ParseError(line_no, "edge line before the first round header");
    if (tokens.size() != 2) throw ParseError(line_no, "edge line needs exactly 2 labels");
    const NodeId par = builder.labels().intern(tokens[0]);
    const NodeId child = builder.labels().intern(tokens[1]);
    pending->edges.emplace_back(par, child);
  }
  if (!any_content) throw ParameterError("empty round file");
  if (pending) builder.finish(std::move(*pending));
  return builder.take();
}

ParsedSeries parse_series(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_series(in);
}

ParsedSeries load_series(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParameterError("cannot open series file " + path);
  return parse_series(in);
}

void write_series(std::ostream& out, const RoundSeries& series) {
  if (series.views.empty()) throw ParameterError("cannot serialize an empty series");
  std::vector<std::pair<std::string, std::string>> edges;
  for (const EgoView& view : series.views) {
    out << "# round " << view.round_id << ' ' << view.timestamp_s << ' ' << series.label(view.monitor) << '\n';
    edges.clear();
    for (const auto& [child, par] : view.parent) edges.emplace_back(series.label(par), series.label(child));
    std::sort(edges.begin(), edges.end());
    for (const auto& [par, child] : edges) out << par << ' ' << child << '\n';
  }
}

std::string serialize_series(const RoundSeries& series) {
  std::ostringstream out;
  write_series(out, series);
  return out.str();
}

}  // namespace egodyn

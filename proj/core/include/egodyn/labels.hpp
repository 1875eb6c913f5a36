#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "egodyn/graph.hpp"

namespace egodyn {

/// Bijection between opaque string labels and dense node ids, in first-seen order.
class LabelTable {
 public:
  NodeId intern(std::string_view label);

  /// Id of a known label; ParameterError otherwise.
  NodeId id(std::string_view label) const;
  bool contains(std::string_view label) const { return ids_.find(std::string(label)) != ids_.end(); }

  const std::string& label(NodeId id) const { return labels_.at(id); }
  std::size_t size() const noexcept { return labels_.size(); }
  bool empty() const noexcept { return labels_.empty(); }

  friend bool operator==(const LabelTable& a, const LabelTable& b) { return a.labels_ == b.labels_; }

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, NodeId> ids_;
};

}  // namespace egodyn

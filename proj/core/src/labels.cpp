#include "egodyn/labels.hpp"

#include "egodyn/error.hpp"

namespace egodyn {

NodeId LabelTable::intern(std::string_view label) {
  auto [it, inserted] = ids_.try_emplace(std::string(label), static_cast<NodeId>(labels_.size()));
  if (inserted) labels_.emplace_back(label);
  return it->second;
}

NodeId LabelTable::id(std::string_view label) const {
  auto it = ids_.find(std::string(label));
  if (it == ids_.end()) throw ParameterError("unknown label '" + std::string(label) + "'");
  return it->second;
}

}  // namespace egodyn

#include "nfl/context.hpp"

#include <set>

#include "nfl/errors.hpp"

namespace nfl {

VarContext::VarContext(std::vector<std::string> names, std::size_t tag_count,
                       std::size_t param_count, std::size_t geom_count)
    : names_(std::move(names)),
      tag_count_(tag_count),
      param_count_(param_count),
      geom_count_(geom_count) {
  if (tag_count_ + param_count_ + geom_count_ != names_.size())
    throw usage_error("VarContext: block sizes do not sum to name count");
  std::set<std::string> seen(names_.begin(), names_.end());
  if (seen.size() != names_.size())
    throw usage_error("VarContext: variable names must be unique");
}

ContextPtr VarContext::params(std::vector<std::string> names) {
  std::size_t n = names.size();
  return std::make_shared<const VarContext>(std::move(names), 0, n, 0);
}

VarBlock VarContext::block(std::size_t i) const {
  if (i < tag_count_) return VarBlock::Tag;
  if (i < tag_count_ + param_count_) return VarBlock::Parameter;
  return VarBlock::Geometric;
}

std::size_t VarContext::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return npos;
}

ContextPtr VarContext::with_geometric(
    std::vector<std::string> geom_names) const {
  std::vector<std::string> names = names_;
  for (auto& g : geom_names) names.push_back(std::move(g));
  return std::make_shared<const VarContext>(std::move(names), tag_count_,
                                            param_count_,
                                            geom_count_ + geom_names.size());
}

ContextPtr VarContext::with_tag_prefix(const std::string& tag_name) const {
  std::vector<std::string> names;
  names.reserve(names_.size() + 1);
  names.push_back(tag_name);
  names.insert(names.end(), names_.begin(), names_.end());
  return std::make_shared<const VarContext>(std::move(names), tag_count_ + 1,
                                            param_count_, geom_count_);
}

}  // namespace nfl

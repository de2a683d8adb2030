#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace nfl {

enum class VarBlock : uint8_t { Tag, Parameter, Geometric };

// An ordered list of named variables partitioned into consecutive blocks.
// Blocks are fixed at creation.  Block layout is [tag | parameter | geometric]
// so that elimination orders, which always eliminate a prefix, can strip tag
// variables, and geometric variables (x, y) sit at the end where the grading
// lives.
class VarContext {
 public:
  VarContext(std::vector<std::string> names, std::size_t tag_count,
             std::size_t param_count, std::size_t geom_count);

  static std::shared_ptr<const VarContext> params(
      std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  std::size_t tag_count() const { return tag_count_; }
  std::size_t param_count() const { return param_count_; }
  std::size_t geom_count() const { return geom_count_; }

  const std::string& name(std::size_t i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }

  VarBlock block(std::size_t i) const;

  // Index of a name, or npos.
  std::size_t index_of(const std::string& name) const;
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  // New context with geometric variables appended after this one's.
  std::shared_ptr<const VarContext> with_geometric(
      std::vector<std::string> geom_names) const;

  // New context with one tag variable prepended (shifts all indices by one).
  std::shared_ptr<const VarContext> with_tag_prefix(
      const std::string& tag_name) const;

  bool operator==(const VarContext& o) const {
    return names_ == o.names_ && tag_count_ == o.tag_count_ &&
           param_count_ == o.param_count_ && geom_count_ == o.geom_count_;
  }

 private:
  std::vector<std::string> names_;
  std::size_t tag_count_;
  std::size_t param_count_;
  std::size_t geom_count_;
};

using ContextPtr = std::shared_ptr<const VarContext>;

inline bool same_context(const ContextPtr& a, const ContextPtr& b) {
  return a == b || (a && b && *a == *b);
}

}  // namespace nfl

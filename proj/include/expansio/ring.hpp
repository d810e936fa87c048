#pragma once

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace expansio {

// A named polynomial ring K[x_1,...,x_n]; only the variable names matter,
// the coefficient field is fixed to Q.
class RingDescriptor {
public:
  RingDescriptor() = default;

  explicit RingDescriptor(std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.empty()) throw std::invalid_argument("ring needs at least one variable");
    std::set<std::string> seen;
    for (const auto& name : names_) {
      if (name.empty()) throw std::invalid_argument("empty variable name");
      if (!seen.insert(name).second)
        throw std::invalid_argument("duplicate variable name: " + name);
    }
  }

  // x1,...,xn
  static RingDescriptor standard(int n, const std::string& stem = "x") {
    std::vector<std::string> names;
    names.reserve(n);
    for (int i = 1; i <= n; ++i) names.push_back(stem + std::to_string(i));
    return RingDescriptor(std::move(names));
  }

  int nvars() const { return static_cast<int>(names_.size()); }
  const std::string& name(int i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }

  // Index of a variable name, -1 if absent.
  int find(const std::string& name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    return it == names_.end() ? -1 : static_cast<int>(it - names_.begin());
  }

  bool operator==(const RingDescriptor& other) const = default;

private:
  std::vector<std::string> names_;
};

}  // namespace expansio

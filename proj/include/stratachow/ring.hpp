#pragma once
// Graded polynomial ring descriptors: ordered named variables with positive
// integer weights. The variable order is fixed at construction and seeds the
// default monomial comparison.

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace stratachow {

class GradedRing;
using RingPtr = std::shared_ptr<const GradedRing>;

class GradedRing {
 public:
  explicit GradedRing(std::vector<std::pair<std::string, int>> vars) {
    names_.reserve(vars.size());
    degrees_.reserve(vars.size());
    for (auto& [name, deg] : vars) {
      if (deg < 1) throw std::invalid_argument("GradedRing: degree must be >= 1");
      if (index_.count(name)) throw std::invalid_argument("GradedRing: duplicate variable " + name);
      index_[name] = static_cast<int>(names_.size());
      names_.push_back(std::move(name));
      degrees_.push_back(deg);
    }
  }

  static RingPtr make(std::vector<std::pair<std::string, int>> vars) {
    return std::make_shared<const GradedRing>(std::move(vars));
  }

  std::size_t nvars() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  int degree(std::size_t i) const { return degrees_.at(i); }
  const std::vector<int>& degrees() const { return degrees_; }
  std::optional<int> index_of(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  friend bool operator==(const GradedRing& a, const GradedRing& b) {
    return a.names_ == b.names_ && a.degrees_ == b.degrees_;
  }
  friend bool operator!=(const GradedRing& a, const GradedRing& b) { return !(a == b); }

 private:
  std::vector<std::string> names_;
  std::vector<int> degrees_;
  std::map<std::string, int> index_;
};

inline bool same_ring(const RingPtr& a, const RingPtr& b) {
  return a == b || (a && b && *a == *b);
}

}  // namespace stratachow

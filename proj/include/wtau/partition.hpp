#pragma once

#include <string>
#include <vector>

namespace wtau {

/// Integer partition, parts weakly decreasing and strictly positive.
class Partition {
 public:
  Partition() = default;
  /// Sorts descending and drops zeros; negative parts are rejected.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int weight() const { return weight_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int part(int i) const { return i < length() ? parts_[static_cast<std::size_t>(i)] : 0; }
  bool empty() const { return parts_.empty(); }

  Partition transpose() const;

  /// Weight ascending, then parts lexicographically descending.
  bool operator<(const Partition& other) const;
  bool operator==(const Partition& other) const { return parts_ == other.parts_; }

  /// "[3,1,1]"; the empty partition is "[]".
  std::string to_string() const;
  static Partition parse(const std::string& text);

 private:
  std::vector<int> parts_;
  int weight_ = 0;
};

/// All partitions of n in the canonical order.
std::vector<Partition> partitions_of(int n);

/// z_mu = prod_k k^{m_k} m_k!
long centralizer_order(const Partition& mu);

}  // namespace wtau

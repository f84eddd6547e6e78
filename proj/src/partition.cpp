#include "wtau/partition.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "wtau/error.hpp"

namespace wtau {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_) {
    if (p < 0) throw DomainError("negative part in partition");
  }
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (int p : parts_) weight_ += p;
}

Partition Partition::transpose() const {
  std::vector<int> t(parts_.empty() ? 0 : static_cast<std::size_t>(parts_.front()), 0);
  for (int p : parts_) {
    for (int i = 0; i < p; ++i) ++t[static_cast<std::size_t>(i)];
  }
  return Partition(std::move(t));
}

bool Partition::operator<(const Partition& other) const {
  if (weight_ != other.weight_) return weight_ < other.weight_;
  return std::lexicographical_compare(other.parts_.begin(), other.parts_.end(), parts_.begin(),
                                      parts_.end());
}

std::string Partition::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts_[i]);
  }
  return s + "]";
}

Partition Partition::parse(const std::string& text) {
  if (text.size() < 2 || text.front() != '[' || text.back() != ']') {
    throw ParseError("malformed partition '" + text + "'");
  }
  std::vector<int> parts;
  std::string body = text.substr(1, text.size() - 2);
  std::size_t pos = 0;
  while (pos < body.size()) {
    std::size_t comma = body.find(',', pos);
    if (comma == std::string::npos) comma = body.size();
    try {
      parts.push_back(std::stoi(body.substr(pos, comma - pos)));
    } catch (const std::exception&) {
      throw ParseError("malformed partition '" + text + "'");
    }
    pos = comma + 1;
  }
  Partition p(parts);
  if (p.parts() != parts) throw ParseError("partition not in canonical form '" + text + "'");
  return p;
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  std::vector<int> current;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (int k = std::min(remaining, max_part); k >= 1; --k) {
      current.push_back(k);
      rec(remaining - k, k);
      current.pop_back();
    }
  };
  if (n >= 0) rec(n, n);
  return out;
}

long centralizer_order(const Partition& mu) {
  std::map<int, int> mult;
  for (int p : mu.parts()) ++mult[p];
  long z = 1;
  for (const auto& [k, m] : mult) {
    for (int i = 1; i <= m; ++i) z *= static_cast<long>(k) * i;
  }
  return z;
}

}  // namespace wtau

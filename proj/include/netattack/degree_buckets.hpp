#ifndef NETATTACK_DEGREE_BUCKETS_HPP
#define NETATTACK_DEGREE_BUCKETS_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "netattack/node_set.hpp"

namespace netattack {

/// Bucket array keyed by (non-negative) degree with a tracked maximum.
///
/// Each bucket is an ordered set so that the smallest id of the top bucket is
/// available without a scan. `max_key_` only moves down lazily when the top
/// bucket empties; moving a node up raises it immediately.
class DegreeBuckets {
 public:
  DegreeBuckets() = default;
  explicit DegreeBuckets(std::size_t node_count) : key_(node_count, kAbsent) {}

  bool contains(NodeId v) const { return key_.at(static_cast<std::size_t>(v)) != kAbsent; }
  int key(NodeId v) const { return key_.at(static_cast<std::size_t>(v)); }
  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }

  void insert(NodeId v, int key) {
    if (key < 0) throw std::invalid_argument("DegreeBuckets: negative key");
    auto& k = key_.at(static_cast<std::size_t>(v));
    if (k != kAbsent) throw std::logic_error("DegreeBuckets: node already indexed");
    if (static_cast<std::size_t>(key) >= buckets_.size()) buckets_.resize(static_cast<std::size_t>(key) + 1);
    buckets_[static_cast<std::size_t>(key)].insert(v);
    k = key;
    ++size_;
    if (key > max_key_) max_key_ = key;
  }

  void erase(NodeId v) {
    auto& k = key_.at(static_cast<std::size_t>(v));
    if (k == kAbsent) throw std::logic_error("DegreeBuckets: node not indexed");
    buckets_[static_cast<std::size_t>(k)].erase(v);
    k = kAbsent;
    --size_;
    settle_max();
  }

  /// Inserts `v` or moves it to `key`.
  void upsert(NodeId v, int key) {
    if (contains(v)) {
      if (this->key(v) == key) return;
      erase(v);
    }
    insert(v, key);
  }

  /// Largest key currently present, -1 when empty.
  int max_key() const { return size_ == 0 ? -1 : max_key_; }

  /// Member with the largest key not in `excluded`; smallest id on ties.
  std::optional<NodeId> max_node(const NodeMask* excluded = nullptr) const {
    if (size_ == 0) return std::nullopt;
    for (int k = max_key_; k >= 0; --k) {
      for (NodeId v : buckets_[static_cast<std::size_t>(k)]) {
        if (excluded == nullptr || !excluded->contains(v)) return v;
      }
    }
    return std::nullopt;
  }

  /// Members whose key is strictly greater than `threshold`, ascending by id.
  std::vector<NodeId> members_above(int threshold) const {
    std::vector<NodeId> out;
    for (int k = max_key(); k > threshold && k >= 0; --k) {
      const auto& b = buckets_[static_cast<std::size_t>(k)];
      out.insert(out.end(), b.begin(), b.end());
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  const std::set<NodeId>& bucket(int key) const {
    static const std::set<NodeId> kEmpty;
    if (key < 0 || static_cast<std::size_t>(key) >= buckets_.size()) return kEmpty;
    return buckets_[static_cast<std::size_t>(key)];
  }

 private:
  static constexpr int kAbsent = -1;

  void settle_max() {
    while (max_key_ > 0 && buckets_[static_cast<std::size_t>(max_key_)].empty()) --max_key_;
  }

  std::vector<std::set<NodeId>> buckets_;
  std::vector<int> key_;
  std::size_t size_ = 0;
  int max_key_ = 0;
};

}  // namespace netattack

#endif  // NETATTACK_DEGREE_BUCKETS_HPP

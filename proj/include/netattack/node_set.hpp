#ifndef NETATTACK_NODE_SET_HPP
#define NETATTACK_NODE_SET_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace netattack {

/// Dense node id in [0, N).
using NodeId = std::int32_t;

/// Membership mask over a fixed node range with an O(1) size.
class NodeMask {
 public:
  NodeMask() = default;
  explicit NodeMask(std::size_t node_count) : bits_(node_count, 0) {}
  NodeMask(std::size_t node_count, std::span<const NodeId> members) : bits_(node_count, 0) {
    for (NodeId v : members) insert(v);
  }

  bool contains(NodeId v) const {
    return v >= 0 && static_cast<std::size_t>(v) < bits_.size() &&
           bits_[static_cast<std::size_t>(v)] != 0;
  }

  void insert(NodeId v) {
    auto& b = bits_.at(static_cast<std::size_t>(v));
    if (b == 0) {
      b = 1;
      ++size_;
    }
  }

  void erase(NodeId v) {
    auto& b = bits_.at(static_cast<std::size_t>(v));
    if (b != 0) {
      b = 0;
      --size_;
    }
  }

  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }
  std::size_t universe() const { return bits_.size(); }

  std::vector<NodeId> to_vector() const {
    std::vector<NodeId> out;
    out.reserve(size_);
    for (std::size_t i = 0; i < bits_.size(); ++i) {
      if (bits_[i] != 0) out.push_back(static_cast<NodeId>(i));
    }
    return out;
  }

 private:
  std::vector<std::uint8_t> bits_;
  std::size_t size_ = 0;
};

}  // namespace netattack

#endif  // NETATTACK_NODE_SET_HPP

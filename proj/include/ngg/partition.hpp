#pragma once

#include <string>
#include <vector>

namespace ngg {

/// An equivalence relation on {1..n}, stored as its set of blocks in
/// canonical form: every block sorted ascending, blocks ordered by their
/// least element. Immutable after construction.
class Partition {
 public:
  /// Degree-0 partition (no blocks); placeholder state for report structs.
  Partition() = default;

  /// Validates that the blocks are disjoint, nonempty and cover {1..n},
  /// then canonicalizes. Throws std::invalid_argument otherwise.
  static Partition from_blocks(std::vector<std::vector<int>> blocks, int degree);

  static Partition discrete(int degree);  // all singletons

  int degree() const noexcept { return degree_; }
  int block_count() const noexcept { return static_cast<int>(blocks_.size()); }
  const std::vector<std::vector<int>>& blocks() const noexcept { return blocks_; }

  /// The block containing x. Throws std::out_of_range unless 1 <= x <= n.
  const std::vector<int>& block_of(int x) const;

  /// Zero-based index (in canonical block order) of the block containing x.
  int block_index_of(int x) const;

  bool operator==(const Partition& other) const noexcept {
    return degree_ == other.degree_ && blocks_ == other.blocks_;
  }

  /// Text form, e.g. "{{1,2},{3}}".
  std::string to_string() const;

 private:
  std::vector<std::vector<int>> blocks_;
  std::vector<int> block_index_;  // block_index_[x] for x in 1..n
  int degree_ = 0;
};

}  // namespace ngg

#include "ngg/partition.hpp"

#include <algorithm>
#include <stdexcept>

namespace ngg {

Partition Partition::from_blocks(std::vector<std::vector<int>> blocks, int degree) {
  if (degree < 1) {
    throw std::invalid_argument("partition degree must be positive");
  }
  std::vector<int> index(static_cast<std::size_t>(degree) + 1, -1);
  std::size_t covered = 0;
  for (auto& block : blocks) {
    if (block.empty()) {
      throw std::invalid_argument("partition block is empty");
    }
    std::sort(block.begin(), block.end());
    block.erase(std::unique(block.begin(), block.end()), block.end());
    for (int x : block) {
      if (x < 1 || x > degree) {
        throw std::invalid_argument("partition point out of range");
      }
      if (index[static_cast<std::size_t>(x)] != -1) {
        throw std::invalid_argument("partition blocks are not disjoint");
      }
      index[static_cast<std::size_t>(x)] = 0;
    }
    covered += block.size();
  }
  if (covered != static_cast<std::size_t>(degree)) {
    throw std::invalid_argument("partition blocks do not cover {1..n}");
  }

  std::sort(blocks.begin(), blocks.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });

  Partition p;
  p.degree_ = degree;
  p.blocks_ = std::move(blocks);
  p.block_index_.assign(static_cast<std::size_t>(degree) + 1, 0);
  for (int b = 0; b < p.block_count(); ++b) {
    for (int x : p.blocks_[static_cast<std::size_t>(b)]) {
      p.block_index_[static_cast<std::size_t>(x)] = b;
    }
  }
  return p;
}

Partition Partition::discrete(int degree) {
  std::vector<std::vector<int>> blocks;
  blocks.reserve(static_cast<std::size_t>(degree));
  for (int x = 1; x <= degree; ++x) {
    blocks.push_back({x});
  }
  return from_blocks(std::move(blocks), degree);
}

const std::vector<int>& Partition::block_of(int x) const {
  return blocks_[static_cast<std::size_t>(block_index_of(x))];
}

int Partition::block_index_of(int x) const {
  if (x < 1 || x > degree_) {
    throw std::out_of_range("point out of range for partition");
  }
  return block_index_[static_cast<std::size_t>(x)];
}

std::string Partition::to_string() const {
  std::string out = "{";
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    if (b > 0) {
      out += ',';
    }
    out += '{';
    for (std::size_t i = 0; i < blocks_[b].size(); ++i) {
      if (i > 0) {
        out += ',';
      }
      out += std::to_string(blocks_[b][i]);
    }
    out += '}';
  }
  out += '}';
  return out;
}

}  // namespace ngg

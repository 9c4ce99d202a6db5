#include "ngg/quotient.hpp"

#include <algorithm>
#include <stdexcept>

namespace ngg {

InducedMap::InducedMap(Partition source, std::vector<int> targets)
    : source_(std::move(source)), targets_(std::move(targets)) {
  if (targets_.size() != static_cast<std::size_t>(source_.block_count())) {
    throw std::invalid_argument("induced map target list does not match block count");
  }
  for (int t : targets_) {
    if (t != ill_defined && (t < 0 || t >= source_.block_count())) {
      throw std::invalid_argument("induced map target out of range");
    }
  }
}

std::optional<int> InducedMap::target(int block_index) const {
  int t = targets_.at(static_cast<std::size_t>(block_index));
  if (t == ill_defined) {
    return std::nullopt;
  }
  return t;
}

bool InducedMap::well_defined() const noexcept {
  return std::none_of(targets_.begin(), targets_.end(),
                      [](int t) { return t == ill_defined; });
}

std::vector<int> InducedMap::ill_defined_blocks() const {
  std::vector<int> out;
  for (std::size_t b = 0; b < targets_.size(); ++b) {
    if (targets_[b] == ill_defined) {
      out.push_back(static_cast<int>(b));
    }
  }
  return out;
}

bool InducedMap::is_identity() const noexcept {
  for (std::size_t b = 0; b < targets_.size(); ++b) {
    if (targets_[b] != static_cast<int>(b)) {
      return false;
    }
  }
  return true;
}

bool InducedMap::is_injective() const noexcept {
  std::vector<bool> hit(targets_.size(), false);
  for (int t : targets_) {
    if (t == ill_defined || hit[static_cast<std::size_t>(t)]) {
      return false;
    }
    hit[static_cast<std::size_t>(t)] = true;
  }
  return true;
}

bool InducedMap::is_surjective() const noexcept {
  std::vector<bool> hit(targets_.size(), false);
  for (int t : targets_) {
    if (t == ill_defined) {
      return false;
    }
    hit[static_cast<std::size_t>(t)] = true;
  }
  return std::all_of(hit.begin(), hit.end(), [](bool h) { return h; });
}

InducedMap compose(const InducedMap& f, const InducedMap& g) {
  if (!(f.source() == g.source())) {
    throw std::invalid_argument("induced maps live on different partitions");
  }
  std::vector<int> targets(g.targets().size(), InducedMap::ill_defined);
  for (std::size_t b = 0; b < targets.size(); ++b) {
    int mid = g.targets()[b];
    if (mid != InducedMap::ill_defined) {
      targets[b] = f.targets()[static_cast<std::size_t>(mid)];
    }
  }
  return InducedMap(f.source(), std::move(targets));
}

InducedMap induced_map(const Transformation& f, const Partition& p) {
  if (f.degree() != p.degree()) {
    throw std::invalid_argument("degree mismatch between transformation and partition");
  }
  std::vector<int> targets;
  targets.reserve(static_cast<std::size_t>(p.block_count()));
  for (const auto& block : p.blocks()) {
    int target = p.block_index_of(f(block.front()));
    for (int x : block) {
      if (p.block_index_of(f(x)) != target) {
        target = InducedMap::ill_defined;
        break;
      }
    }
    targets.push_back(target);
  }
  return InducedMap(p, std::move(targets));
}

bool is_induced_identity(const Transformation& f) {
  return induced_map(f, kernel_partition(f)).is_identity();
}

bool is_induced_bijective(const Transformation& f) {
  return induced_map(f, kernel_partition(f)).is_bijection();
}

}  // namespace ngg

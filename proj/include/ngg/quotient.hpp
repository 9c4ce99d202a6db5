#pragma once

#include <optional>
#include <vector>

#include "ngg/partition.hpp"
#include "ngg/transform.hpp"

namespace ngg {

/// The map a transformation induces on the blocks of a partition,
/// [x] -> [f(x)]. Over an arbitrary partition this may fail to be
/// well-defined on some blocks (f scatters the block across several
/// target blocks); such blocks carry an ill-defined marker instead of a
/// target. Over kernel_partition(f) it is always well-defined.
class InducedMap {
 public:
  static constexpr int ill_defined = -1;

  /// targets[b] is the target block index for source block b, or
  /// ill_defined. Indices are zero-based in canonical block order.
  InducedMap(Partition source, std::vector<int> targets);

  const Partition& source() const noexcept { return source_; }
  int block_count() const noexcept { return source_.block_count(); }

  std::optional<int> target(int block_index) const;
  const std::vector<int>& targets() const noexcept { return targets_; }

  bool well_defined() const noexcept;
  std::vector<int> ill_defined_blocks() const;

  bool is_identity() const noexcept;
  bool is_injective() const noexcept;
  bool is_surjective() const noexcept;
  bool is_bijection() const noexcept { return is_injective() && is_surjective(); }

  bool operator==(const InducedMap&) const = default;

 private:
  Partition source_;
  std::vector<int> targets_;
};

/// Block-level composition over a common partition: apply g first, then f.
/// Ill-definedness propagates per block.
InducedMap compose(const InducedMap& f, const InducedMap& g);

/// Builds the induced map of f over p, marking each block where f(B) is not
/// contained in a single block of p. Degrees must match.
InducedMap induced_map(const Transformation& f, const Partition& p);

/// True iff the induced map of f over its own kernel partition fixes every
/// block. Agrees with is_idempotent(f).
bool is_induced_identity(const Transformation& f);

/// True iff the induced map of f over its own kernel partition permutes the
/// blocks. On a finite set this agrees with image(f) == image(power(f, 2)).
bool is_induced_bijective(const Transformation& f);

}  // namespace ngg

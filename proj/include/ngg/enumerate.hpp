#pragma once

#include <cstdint>
#include <vector>

#include "ngg/group.hpp"
#include "ngg/transform.hpp"

namespace ngg {

/// Full streams of Trans(X) stay exhaustive up to degree 5 (5^5 = 3125
/// maps); group enumeration up to degree 4; the direct subset search up to
/// degree 3. Requests beyond a cap are refused with an error, never
/// silently truncated.
inline constexpr int kMaxStreamDegree = 5;
inline constexpr int kMaxGroupEnumDegree = 4;
inline constexpr int kMaxBruteForceDegree = 3;

/// All n^n total maps on {1..n} in lexicographic order of image tuples.
std::vector<Transformation> all_transformations(int n);

/// All f with f∘f = f, in lexicographic order. These are exactly the
/// possible identities of transformation groups.
std::vector<Transformation> idempotents(int n);

/// H(e) = { f : kernel_partition(f) = kernel_partition(e) and
///          image(f) = image(e) } for an idempotent e: the largest group
/// with identity e. The result is certified and its order checked against
/// rank! before returning.
std::vector<Transformation> maximal_group_at(const Transformation& e);

struct EnumerationReport {
  int degree = 0;
  int order = 0;
  std::vector<Transformation> idempotents;
  std::vector<NGCertificate> groups;  // sorted by canonical element lists
  int count = 0;
  int symmetric_count = 0;

  bool operator==(const EnumerationReport&) const = default;
};

/// Every order-k group of transformations on {1..n}, found by searching
/// inside H(e) for each idempotent e. Each group is certified before it is
/// reported.
EnumerationReport enumerate_groups_of_order(int n, int k);

/// Reference path: check every k-subset of Trans(X) directly. Only feasible
/// for n <= 3; exists so the anchored path above has something independent
/// to agree with.
std::vector<std::vector<Transformation>> enumerate_groups_brute_force(int n, int k);

}  // namespace ngg

#pragma once

#include <utility>
#include <vector>

#include "ngg/transform.hpp"

namespace ngg {

bool is_prime(int p);

/// Largest prime whose plane fits in the byte-packed degree cap
/// (13^2 = 169 <= 255).
inline constexpr int kMaxFieldPrime = 13;

/// Points of the finite plane F_p x F_p laid out as {1..p^2}:
/// index(x1, x2) = p*x1 + x2 + 1, so index(0,0) = 1 and the second
/// coordinate varies fastest.
struct PlaneEncoding {
  int p;

  explicit PlaneEncoding(int prime);
  int index(int x1, int x2) const;
  std::pair<int, int> coords(int point) const;
  int degree() const { return p * p; }
};

/// The rank-1 linear map (x1, x2) |-> (a*x1 mod p, 0) on the encoded plane.
/// Never bijective for p >= 2: its image is the first axis (p points out
/// of p^2). Requires p prime and 1 <= a <= p-1.
Transformation projection_map(int p, int a);

/// { projection_map(p, a) : a = 1..p-1 } — a group of order p-1 under
/// composition whose identity projection_map(p, 1) is idempotent but not
/// bijective. Returned in order of a; certification is the caller's job.
std::vector<Transformation> projection_group(int p);

}  // namespace ngg

#pragma once

#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include "ngg/partition.hpp"
#include "ngg/quotient.hpp"
#include "ngg/transform.hpp"

namespace ngg {

/// Composition table over a canonically sorted element list. A cell holds
/// the index of the product when it stays inside the set, otherwise the
/// escaped product itself (kept for diagnostics).
class CayleyTable {
 public:
  using Cell = std::variant<int, Transformation>;

  /// Dedupes and sorts the elements (lexicographic on image tuples), then
  /// fills the table. Requires a nonempty uniform-degree input.
  static CayleyTable build(std::vector<Transformation> elements);

  const std::vector<Transformation>& elements() const noexcept { return elements_; }
  int size() const noexcept { return static_cast<int>(elements_.size()); }

  /// cell(i, j) describes elements[i] composed with elements[j] (j applies
  /// first).
  const Cell& cell(int i, int j) const;

  bool closed() const noexcept;

  /// Row-major first escaping cell, if any: the lexicographically least
  /// witness pair against closure.
  std::optional<std::pair<int, int>> first_escape() const noexcept;

 private:
  std::vector<Transformation> elements_;
  std::vector<Cell> cells_;  // row-major, size * size
};

enum class GroupFailure {
  none,
  empty_set,
  degree_mismatch,
  not_closed,
  no_identity,
  missing_inverse,
};

std::string_view to_string(GroupFailure reason);

struct NotClosedWitness {
  Transformation left, right, product;

  bool operator==(const NotClosedWitness&) const = default;
};

/// Verdict of group verification. When is_group holds, all of identity,
/// inverse table and common kernel are populated, and every element's kernel
/// partition equals the common kernel (the shared equivalence relation all
/// group members induce). When it fails, `failure` says why and carries a
/// concrete witness where one exists.
struct NGCertificate {
  bool is_group = false;
  GroupFailure failure = GroupFailure::none;
  std::optional<NotClosedWitness> not_closed_witness;
  std::optional<Transformation> missing_inverse_element;

  std::vector<Transformation> elements;  // deduped, canonical sort
  int order = 0;                         // |elements|
  std::optional<Transformation> identity;
  std::vector<int> inverse_index;        // aligned with elements; empty unless group
  std::optional<Partition> common_kernel;
  bool is_symmetric_subset = false;      // every element bijective

  const Transformation& inverse_of(const Transformation& f) const;

  bool operator==(const NGCertificate&) const = default;
};

/// Decides whether the set forms a group under composition: closure, a
/// two-sided identity, and a two-sided inverse for every element.
/// Associativity holds for function composition and is not searched.
/// Empty or mixed-degree input yields a failure certificate, not an error.
NGCertificate verify_group(const std::vector<Transformation>& set);

/// Image-stability criterion: Im(f) = Im(f^2). Equivalent to f lying in
/// some group of transformations, which containing_group_oracle witnesses
/// independently.
bool membership_condition(const Transformation& f);

/// Independent witness search along the cyclic semigroup {f, f^2, ...}:
/// locate its idempotent power e; if e is a two-sided identity for f, the
/// eventual cycle is a group containing f and is returned, else nothing.
std::optional<std::vector<Transformation>> containing_group_oracle(const Transformation& f);

/// The membership question with its evidence: the two images the criterion
/// compares and the independent cyclic-group witness. `oracle_agrees` records
/// that the witness search reached the same verdict as the image criterion.
struct MembershipReport {
  Transformation f;
  bool member = false;
  ImageSet image_f;
  ImageSet image_f_squared;
  std::optional<std::vector<Transformation>> oracle_group;
  bool oracle_agrees = false;

  bool operator==(const MembershipReport&) const = default;
};

MembershipReport membership_report(const Transformation& f);

/// The permutation representation of a certified group on the quotient by
/// its common kernel, with the checks that make the element -> induced-map
/// correspondence an isomorphism.
struct QuotientRepresentation {
  Partition quotient;
  std::vector<InducedMap> perms;  // aligned with certificate elements
  bool all_bijective = false;
  bool homomorphism = false;      // rho(fg) = rho(f) o rho(g) over all pairs
  bool injective = false;         // induced maps pairwise distinct
  bool is_isomorphism = false;

  bool operator==(const QuotientRepresentation&) const = default;
};

/// Requires cert.is_group; throws std::invalid_argument otherwise.
QuotientRepresentation quotient_representation(const NGCertificate& cert);

/// Verdicts for the union and intersection of two certified groups. An
/// empty intersection is reported as absent (it is not a group).
struct ProbeReport {
  NGCertificate union_result;
  std::optional<NGCertificate> intersection_result;

  bool operator==(const ProbeReport&) const = default;
};

/// Requires both inputs to verify as groups of equal degree; throws
/// std::invalid_argument otherwise.
ProbeReport probe_union_intersection(const std::vector<Transformation>& s1,
                                     const std::vector<Transformation>& s2);

}  // namespace ngg

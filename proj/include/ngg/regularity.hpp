#pragma once

#include <string_view>
#include <vector>

#include "ngg/group.hpp"
#include "ngg/transform.hpp"

namespace ngg {

/// Two readings of "y witnesses the regularity of f", kept side by side
/// because they genuinely disagree on some groups (see the divergence tests):
///   paper_literal:  fyf = y
///   standard:       fyf = f   (the usual semigroup notion)
/// Every entry point takes the convention explicitly; there is no default.
enum class RegularityConvention { paper_literal, standard };

std::string_view to_string(RegularityConvention conv);
RegularityConvention convention_from_string(std::string_view text);

/// All y in the group with fyf = y (paper_literal) or fyf = f (standard),
/// in canonical element order. Exhaustive search; f must belong to the group.
std::vector<Transformation> regular_witnesses(const Transformation& f,
                                              const NGCertificate& group,
                                              RegularityConvention conv);

/// All y satisfying both equations of the convention's pair:
///   paper_literal:  fyf = y and yfy = f
///   standard:       fyf = f and yfy = y
/// Under the standard pair this is exactly {inverse_of(f)} in any group.
std::vector<Transformation> paired_inverse_witnesses(const Transformation& f,
                                                     const NGCertificate& group,
                                                     RegularityConvention conv);

struct ElementRegularity {
  Transformation f;
  std::vector<Transformation> witnesses;
  std::vector<Transformation> paired_witnesses;

  bool operator==(const ElementRegularity&) const = default;
};

struct RegularityReport {
  RegularityConvention convention = RegularityConvention::standard;
  bool is_regular = false;     // every element has at least one witness
  bool is_inverse_ng = false;  // every element has exactly one paired witness
  std::vector<ElementRegularity> elements;

  bool operator==(const RegularityReport&) const = default;
};

RegularityReport regularity_report(const NGCertificate& group,
                                   RegularityConvention conv);

}  // namespace ngg

#include "ngg/regularity.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace ngg {
namespace {

void check_member(const Transformation& f, const NGCertificate& group,
                  const char* who) {
  if (!group.is_group)
    throw std::invalid_argument(std::string(who) + ": set is not a certified group");
  if (!std::binary_search(group.elements.begin(), group.elements.end(), f))
    throw std::invalid_argument(std::string(who) + ": " + f.to_string() +
                                " is not an element of the group");
}

}  // namespace

std::string_view to_string(RegularityConvention conv) {
  return conv == RegularityConvention::paper_literal ? "paper-literal" : "standard";
}

RegularityConvention convention_from_string(std::string_view text) {
  if (text == "paper-literal") return RegularityConvention::paper_literal;
  if (text == "standard") return RegularityConvention::standard;
  throw std::invalid_argument("unknown convention '" + std::string(text) +
                              "' (expected 'paper-literal' or 'standard')");
}

std::vector<Transformation> regular_witnesses(const Transformation& f,
                                              const NGCertificate& group,
                                              RegularityConvention conv) {
  check_member(f, group, "regular_witnesses");
  std::vector<Transformation> out;
  for (const Transformation& y : group.elements) {
    const Transformation fyf = compose(f, compose(y, f));
    const bool hit = conv == RegularityConvention::paper_literal ? fyf == y
                                                                 : fyf == f;
    if (hit) out.push_back(y);
  }
  return out;
}

std::vector<Transformation> paired_inverse_witnesses(const Transformation& f,
                                                     const NGCertificate& group,
                                                     RegularityConvention conv) {
  check_member(f, group, "paired_inverse_witnesses");
  std::vector<Transformation> out;
  for (const Transformation& y : group.elements) {
    const Transformation fyf = compose(f, compose(y, f));
    const Transformation yfy = compose(y, compose(f, y));
    const bool hit = conv == RegularityConvention::paper_literal
                         ? fyf == y && yfy == f
                         : fyf == f && yfy == y;
    if (hit) out.push_back(y);
  }
  return out;
}

RegularityReport regularity_report(const NGCertificate& group,
                                   RegularityConvention conv) {
  if (!group.is_group)
    throw std::invalid_argument("regularity_report: set is not a certified group");
  RegularityReport report;
  report.convention = conv;
  report.is_regular = true;
  report.is_inverse_ng = true;
  for (const Transformation& f : group.elements) {
    ElementRegularity entry;
    entry.f = f;
    entry.witnesses = regular_witnesses(f, group, conv);
    entry.paired_witnesses = paired_inverse_witnesses(f, group, conv);
    if (entry.witnesses.empty()) report.is_regular = false;
    if (entry.paired_witnesses.size() != 1) report.is_inverse_ng = false;
    report.elements.push_back(std::move(entry));
  }
  return report;
}

}  // namespace ngg

#include "ngg/reproduce.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ngg/cli.hpp"
#include "ngg/enumerate.hpp"
#include "ngg/fieldgen.hpp"
#include "ngg/group.hpp"
#include "ngg/json_io.hpp"
#include "ngg/quotient.hpp"
#include "ngg/regularity.hpp"
#include "ngg/transform.hpp"

namespace ngg {
namespace {

// Each criterion returns "" on pass, otherwise a one-line explanation.
template <typename Fn>
CriterionResult timed(std::string name, Fn&& fn) {
  CriterionResult result;
  result.name = std::move(name);
  const auto start = std::chrono::steady_clock::now();
  try {
    result.detail = fn();
  } catch (const std::exception& e) {
    result.detail = std::string("exception: ") + e.what();
  }
  result.pass = result.detail.empty();
  result.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

Transformation t(std::vector<int> images) { return Transformation(images); }

const std::vector<Transformation> kG1{t({1, 1, 3}), t({3, 3, 1})};
const std::vector<Transformation> kG2{t({1, 2, 1}), t({2, 1, 2})};

// The nine order-2 groups on three points: six anchored at the rank-2
// idempotents, three inside the symmetric group.
std::vector<std::vector<Transformation>> expected_order_two_groups() {
  return {
      {t({1, 1, 3}), t({3, 3, 1})}, {t({2, 2, 3}), t({3, 3, 2})},
      {t({1, 2, 1}), t({2, 1, 2})}, {t({2, 3, 2}), t({3, 2, 3})},
      {t({1, 2, 2}), t({2, 1, 1})}, {t({1, 3, 3}), t({3, 1, 1})},
      {t({1, 2, 3}), t({1, 3, 2})}, {t({1, 2, 3}), t({2, 1, 3})},
      {t({1, 2, 3}), t({3, 2, 1})},
  };
}

std::string check_order_two_enumeration() {
  std::ostringstream out, err;
  const int code = cli::run({"enumerate-groups", "-n", "3", "--order", "2",
                             "--format", "json"},
                            out, err);
  if (code != 0) return "CLI exited with code " + std::to_string(code);
  const EnumerationReport report =
      io::enumeration_from_json(io::json::parse(out.str()));
  if (report.count != 9)
    return "count=" + std::to_string(report.count) + ", expected 9";
  if (report.symmetric_count != 3)
    return "symmetric_count=" + std::to_string(report.symmetric_count) + ", expected 3";

  std::vector<std::vector<Transformation>> got, expected = expected_order_two_groups();
  std::set<std::vector<Transformation>> symmetric;
  for (const NGCertificate& cert : report.groups) {
    got.push_back(cert.elements);
    if (cert.is_symmetric_subset) symmetric.insert(cert.elements);
  }
  std::sort(got.begin(), got.end());
  for (auto& g : expected) std::sort(g.begin(), g.end());
  std::sort(expected.begin(), expected.end());
  if (got != expected) return "group list differs from the nine published groups";

  const std::vector<Transformation> id3{t({1, 2, 3})};
  for (const auto& g : symmetric) {
    if (!std::binary_search(g.begin(), g.end(), id3.front()))
      return "a symmetric-flagged group lacks the identity permutation";
  }
  if (symmetric.size() != 3) return "wrong symmetric group count";
  return "";
}

std::string check_idempotent_counts() {
  const std::vector<long> published{1, 3, 10, 41, 196};
  for (int n = 1; n <= 5; ++n) {
    // Independent oracle: choose the image (k points), then map the other
    // n-k points anywhere into it: sum C(n,k) * k^(n-k).
    long expected = 0;
    for (int k = 1; k <= n; ++k) {
      long binom = 1;
      for (int i = 0; i < k; ++i) binom = binom * (n - i) / (i + 1);
      long pw = 1;
      for (int i = 0; i < n - k; ++i) pw *= k;
      expected += binom * pw;
    }
    if (expected != published[static_cast<std::size_t>(n - 1)])
      return "oracle disagrees with published count at n=" + std::to_string(n);
    const auto found = idempotents(n).size();
    if (static_cast<long>(found) != expected)
      return "n=" + std::to_string(n) + ": found " + std::to_string(found) +
             ", expected " + std::to_string(expected);
  }
  return "";
}

std::string check_membership_oracle_agreement() {
  for (const Transformation& f : all_transformations(4)) {
    const bool criterion = membership_condition(f);
    const bool witnessed = containing_group_oracle(f).has_value();
    if (criterion != witnessed)
      return "disagreement at f=" + f.to_string();
  }
  return "";
}

std::string check_idempotent_iff_induced_identity() {
  for (int n = 1; n <= 4; ++n) {
    for (const Transformation& f : all_transformations(n)) {
      if (is_idempotent(f) != is_induced_identity(f))
        return "disagreement at f=" + f.to_string();
    }
  }
  return "";
}

std::vector<NGCertificate> enumerate_all_small_groups() {
  std::vector<NGCertificate> out;
  for (int n = 1; n <= 4; ++n) {
    for (int k = 1; k <= 6; ++k) {
      EnumerationReport report = enumerate_groups_of_order(n, k);
      for (NGCertificate& cert : report.groups) out.push_back(std::move(cert));
    }
  }
  return out;
}

std::string check_common_kernels(const std::vector<NGCertificate>& groups) {
  for (const NGCertificate& cert : groups) {
    for (const Transformation& f : cert.elements) {
      if (!(kernel_partition(f) == *cert.common_kernel))
        return "kernel of " + f.to_string() + " differs from the common kernel";
    }
  }
  return "";
}

std::string check_quotient_representations(const std::vector<NGCertificate>& groups) {
  for (const NGCertificate& cert : groups) {
    const QuotientRepresentation rep = quotient_representation(cert);
    if (!rep.is_isomorphism)
      return "representation of a " + std::to_string(cert.order) +
             "-element group is not an isomorphism";
    std::set<std::vector<int>> targets;
    for (const InducedMap& m : rep.perms) targets.insert(m.targets());
    if (targets.size() != rep.perms.size())
      return "induced maps are not pairwise distinct";
    for (const InducedMap& a : rep.perms) {
      for (const InducedMap& b : rep.perms) {
        if (!targets.count(compose(a, b).targets()))
          return "block composition escapes the induced-map set";
      }
    }
  }
  return "";
}

std::string check_union_intersection_probe() {
  const ProbeReport report = probe_union_intersection(kG1, kG2);
  if (report.union_result.is_group) return "union verified as a group";
  if (report.union_result.order != 4)
    return "union order=" + std::to_string(report.union_result.order) + ", expected 4";
  if (report.union_result.failure != GroupFailure::not_closed)
    return "union failure is not closure";
  if (report.intersection_result) return "intersection unexpectedly nonempty";
  return "";
}

std::string check_order_two_regularity() {
  const NGCertificate cert = verify_group(kG1);
  if (!cert.is_group) return "order-2 group failed certification";
  const auto conv = RegularityConvention::paper_literal;
  const auto w1 = regular_witnesses(t({1, 1, 3}), cert, conv);
  if (std::find(w1.begin(), w1.end(), t({3, 3, 1})) == w1.end())
    return "(3,3,1) does not witness (1,1,3)";
  const auto w2 = regular_witnesses(t({3, 3, 1}), cert, conv);
  if (std::find(w2.begin(), w2.end(), t({1, 1, 3})) == w2.end())
    return "(1,1,3) does not witness (3,3,1)";
  if (!regularity_report(cert, conv).is_regular) return "group is not literal-regular";
  return "";
}

std::string check_convention_divergence() {
  const Transformation e = t({1, 2, 3, 1});
  const std::vector<Transformation> h = maximal_group_at(e);

  // The unique cyclic order-3 subgroup: powers of any order-3 element.
  std::vector<Transformation> cyclic;
  for (const Transformation& f : h) {
    if (!(f == e) && power(f, 3) == e && !(power(f, 2) == e)) {
      cyclic = {e, f, power(f, 2)};
      break;
    }
  }
  std::sort(cyclic.begin(), cyclic.end());
  std::vector<Transformation> expected{t({1, 2, 3, 1}), t({2, 3, 1, 2}), t({3, 1, 2, 3})};
  if (cyclic != expected) return "cyclic subgroup differs from the published one";

  const NGCertificate cert = verify_group(cyclic);
  if (!cert.is_group || cert.order != 3) return "cyclic subgroup failed certification";

  if (!regularity_report(cert, RegularityConvention::standard).is_regular)
    return "cyclic subgroup is not standard-regular";
  const RegularityReport literal =
      regularity_report(cert, RegularityConvention::paper_literal);
  if (literal.is_regular) return "cyclic subgroup is literal-regular";
  for (const ElementRegularity& entry : literal.elements) {
    const bool is_identity = entry.f == e;
    if (!is_identity && !entry.witnesses.empty())
      return "non-identity element " + entry.f.to_string() + " has a literal witness";
  }
  return "";
}

std::string check_standard_paired_uniqueness(const std::vector<NGCertificate>& groups) {
  for (const NGCertificate& cert : groups) {
    for (const Transformation& f : cert.elements) {
      const auto paired =
          paired_inverse_witnesses(f, cert, RegularityConvention::standard);
      if (paired.size() != 1 || !(paired.front() == cert.inverse_of(f)))
        return "standard paired witnesses of " + f.to_string() +
               " are not exactly the group inverse";
    }
  }
  return "";
}

std::string check_projection_group() {
  const NGCertificate cert = verify_group(projection_group(5));
  if (!cert.is_group) return "projection family failed certification";
  if (cert.order != 4) return "order=" + std::to_string(cert.order) + ", expected 4";
  if (!(*cert.identity == projection_map(5, 1))) return "identity is not the a=1 map";
  if (!is_idempotent(*cert.identity)) return "identity is not idempotent";
  if (is_bijective(*cert.identity)) return "identity is bijective";
  if (cert.is_symmetric_subset) return "flagged as a symmetric-group subset";

  const Partition& kernel = *cert.common_kernel;
  if (kernel.block_count() != 5) return "common kernel does not have 5 blocks";
  for (int i = 0; i < 5; ++i) {
    const auto& block = kernel.blocks()[static_cast<std::size_t>(i)];
    if (static_cast<int>(block.size()) != 5 || block.front() != 5 * i + 1 ||
        block.back() != 5 * i + 5)
      return "kernel blocks are not the rows of the plane";
  }

  const QuotientRepresentation rep = quotient_representation(cert);
  if (!rep.is_isomorphism) return "representation is not an isomorphism";
  bool cyclic = false;
  for (const InducedMap& g : rep.perms) {
    const InducedMap g2 = compose(g, g);
    cyclic = cyclic || (!g.is_identity() && !g2.is_identity() &&
                        compose(g2, g2).is_identity());
  }
  if (!cyclic) return "no induced map has order 4";
  return "";
}

std::string check_enumeration_path_agreement() {
  for (int k : {1, 2, 3, 6}) {
    std::vector<std::vector<Transformation>> fast;
    for (const NGCertificate& cert : enumerate_groups_of_order(3, k).groups)
      fast.push_back(cert.elements);
    const auto brute = enumerate_groups_brute_force(3, k);
    if (fast != brute)
      return "paths disagree at order " + std::to_string(k) + ": " +
             std::to_string(fast.size()) + " vs " + std::to_string(brute.size());
  }
  return "";
}

ReproductionReport run_first_twelve() {
  ReproductionReport report;
  auto add = [&report](std::string name, auto&& fn) {
    report.criteria.push_back(timed(std::move(name), fn));
  };

  add("order-two-groups-at-degree-3", check_order_two_enumeration);
  add("idempotent-counts-1-to-5", check_idempotent_counts);
  add("membership-criterion-matches-cyclic-oracle", check_membership_oracle_agreement);
  add("idempotent-iff-induced-identity", check_idempotent_iff_induced_identity);

  const std::vector<NGCertificate> groups = enumerate_all_small_groups();
  add("common-kernel-across-enumerated-groups",
      [&groups] { return check_common_kernels(groups); });
  add("quotient-representation-isomorphism",
      [&groups] { return check_quotient_representations(groups); });
  add("union-intersection-probe", check_union_intersection_probe);
  add("paper-literal-regularity-order-two-group", check_order_two_regularity);
  add("regularity-convention-divergence", check_convention_divergence);
  add("standard-paired-inverse-uniqueness",
      [&groups] { return check_standard_paired_uniqueness(groups); });
  add("projection-group-mod-5", check_projection_group);
  add("enumeration-path-agreement", check_enumeration_path_agreement);

  report.all_pass = std::all_of(report.criteria.begin(), report.criteria.end(),
                                [](const CriterionResult& c) { return c.pass; });
  return report;
}

}  // namespace

ReproductionReport run_reproduction_suite() {
  ReproductionReport report = run_first_twelve();

  // Rebuilding the whole report from scratch must reproduce it byte for
  // byte once serialized.
  report.criteria.push_back(timed("deterministic-report-bytes", [&report] {
    ReproductionReport first = report;  // criteria 1..12
    first.all_pass = std::all_of(first.criteria.begin(), first.criteria.end(),
                                 [](const CriterionResult& c) { return c.pass; });
    const ReproductionReport second = run_first_twelve();
    return io::dump(io::to_json(first)) == io::dump(io::to_json(second))
               ? std::string()
               : std::string("serialized reports differ across runs");
  }));

  report.all_pass = std::all_of(report.criteria.begin(), report.criteria.end(),
                                [](const CriterionResult& c) { return c.pass; });
  return report;
}

}  // namespace ngg

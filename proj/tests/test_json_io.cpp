#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>
#include <vector>

#include "ngg/enumerate.hpp"
#include "ngg/fieldgen.hpp"
#include "ngg/group.hpp"
#include "ngg/json_io.hpp"
#include "ngg/regularity.hpp"
#include "ngg/reproduce.hpp"
#include "ngg/transform.hpp"

using ngg::enumerate_groups_of_order;
using ngg::membership_report;
using ngg::NGCertificate;
using ngg::probe_union_intersection;
using ngg::quotient_representation;
using ngg::regularity_report;
using ngg::RegularityConvention;
using ngg::Transformation;
using ngg::verify_group;
using ngg::io::json;

namespace {

Transformation t(std::vector<int> images) { return Transformation(images); }

const std::vector<Transformation> kG1 = {t({1, 1, 3}), t({3, 3, 1})};
const std::vector<Transformation> kG2 = {t({1, 2, 1}), t({2, 1, 2})};

std::vector<std::string> keys(const json& doc) {
  std::vector<std::string> out;
  for (auto it = doc.begin(); it != doc.end(); ++it) out.push_back(it.key());
  return out;
}

}  // namespace

TEST_CASE("transformations and partitions serialize plainly") {
  CHECK(ngg::io::to_json(t({1, 1, 3})) == json::parse("[1,1,3]"));
  CHECK(ngg::io::transformation_from_json(json::parse("[3,3,1]")) == t({3, 3, 1}));

  const auto p = ngg::kernel_partition(t({1, 1, 3}));
  CHECK(ngg::io::to_json(p) == json::parse("[[1,2],[3]]"));
  CHECK(ngg::io::partition_from_json(json::parse("[[3],[1,2]]")) == p);
}

TEST_CASE("certificate JSON: fixed key order and round-trip") {
  const NGCertificate cert = verify_group(kG1);
  const json doc = ngg::io::to_json(cert);
  CHECK(keys(doc) == std::vector<std::string>{"is_group", "order", "identity",
                                              "elements", "common_kernel",
                                              "symmetric_subset", "failure"});
  CHECK(doc["is_group"] == true);
  CHECK(doc["order"] == 2);
  CHECK(doc["identity"] == json::parse("[1,1,3]"));
  CHECK(doc["elements"] == json::parse("[[1,1,3],[3,3,1]]"));
  CHECK(doc["common_kernel"] == json::parse("[[1,2],[3]]"));
  CHECK(doc["symmetric_subset"] == false);
  CHECK(doc["failure"].is_null());
  CHECK(ngg::io::certificate_from_json(doc) == cert);
}

TEST_CASE("failure certificates round-trip with their witnesses") {
  std::vector<Transformation> open = kG1;
  open.insert(open.end(), kG2.begin(), kG2.end());
  const NGCertificate not_closed = verify_group(open);
  const json doc = ngg::io::to_json(not_closed);
  CHECK(doc["is_group"] == false);
  CHECK(doc["failure"]["reason"] == "not closed");
  CHECK(doc["failure"]["witness"] ==
        json::parse("[[1,1,3],[1,2,1],[1,1,1]]"));
  CHECK(ngg::io::certificate_from_json(doc) == not_closed);

  const NGCertificate monoid = verify_group({t({1, 2, 3}), t({1, 1, 3})});
  const json monoid_doc = ngg::io::to_json(monoid);
  CHECK(monoid_doc["failure"]["reason"] == "missing inverse");
  CHECK(monoid_doc["failure"]["witness"] == json::parse("[[1,1,3]]"));
  CHECK(ngg::io::certificate_from_json(monoid_doc) == monoid);

  for (const NGCertificate& cert :
       {verify_group({}), verify_group({t({1}), t({1, 2})}),
        verify_group({t({1, 1, 1}), t({2, 2, 2})})}) {
    const json d = ngg::io::to_json(cert);
    CHECK(d["failure"]["witness"] == json::array());
    CHECK(ngg::io::certificate_from_json(d) == cert);
  }
}

TEST_CASE("quotient representation JSON") {
  const auto rep = quotient_representation(verify_group(kG1));
  const json doc = ngg::io::to_json(rep);
  CHECK(keys(doc) == std::vector<std::string>{"quotient", "perms", "all_bijective",
                                              "homomorphism", "injective",
                                              "is_isomorphism"});
  CHECK(doc["quotient"] == json::parse("[[1,2],[3]]"));
  CHECK(doc["perms"] == json::parse("[[1,2],[2,1]]"));  // 1-based block targets
  CHECK(doc["is_isomorphism"] == true);
  CHECK(ngg::io::representation_from_json(doc) == rep);

  const auto sym = quotient_representation(verify_group(
      {t({1, 2, 3}), t({1, 3, 2}), t({2, 1, 3}), t({2, 3, 1}), t({3, 1, 2}),
       t({3, 2, 1})}));
  CHECK(ngg::io::representation_from_json(ngg::io::to_json(sym)) == sym);
}

TEST_CASE("enumeration report JSON") {
  const auto report = enumerate_groups_of_order(3, 2);
  const json doc = ngg::io::to_json(report);
  CHECK(keys(doc) ==
        std::vector<std::string>{"n", "order", "count", "symmetric_count", "groups"});
  CHECK(doc["n"] == 3);
  CHECK(doc["order"] == 2);
  CHECK(doc["count"] == 9);
  CHECK(doc["symmetric_count"] == 3);
  CHECK(doc["groups"].size() == 9);
  CHECK(ngg::io::enumeration_from_json(doc) == report);
}

TEST_CASE("regularity report JSON") {
  const NGCertificate cert = verify_group(kG1);
  for (auto conv : {RegularityConvention::paper_literal, RegularityConvention::standard}) {
    const auto report = regularity_report(cert, conv);
    const json doc = ngg::io::to_json(report);
    CHECK(keys(doc) == std::vector<std::string>{"convention", "is_regular",
                                                "is_inverse_ng", "elements"});
    CHECK(doc["convention"] == ngg::to_string(conv));
    CHECK(ngg::io::regularity_from_json(doc) == report);
  }
}

TEST_CASE("membership report JSON") {
  const json in = ngg::io::to_json(membership_report(t({3, 3, 1})));
  CHECK(in["member"] == true);
  CHECK(in["oracle_group"].is_array());
  CHECK(in["oracle_agrees"] == true);
  CHECK(ngg::io::membership_from_json(in) == membership_report(t({3, 3, 1})));

  const json out = ngg::io::to_json(membership_report(t({1, 1, 2})));
  CHECK(out["member"] == false);
  CHECK(out["oracle_group"].is_null());
  CHECK(ngg::io::membership_from_json(out) == membership_report(t({1, 1, 2})));
}

TEST_CASE("probe report JSON") {
  const auto disjoint = probe_union_intersection(kG1, kG2);
  const json doc = ngg::io::to_json(disjoint);
  CHECK(doc["union"]["is_group"] == false);
  CHECK(doc["intersection"].is_null());
  CHECK(ngg::io::probe_from_json(doc) == disjoint);

  const auto self = probe_union_intersection(kG1, kG1);
  CHECK(ngg::io::probe_from_json(ngg::io::to_json(self)) == self);
}

TEST_CASE("reproduction report JSON keeps only names and verdicts") {
  ngg::ReproductionReport report;
  report.criteria = {{"first-check", true, 0.25, ""},
                     {"second-check", false, 1.5, "mismatch"}};
  report.all_pass = false;
  const json doc = ngg::io::to_json(report);
  CHECK(doc == json::parse(R"({"criteria":[{"name":"first-check","pass":true},)"
                           R"({"name":"second-check","pass":false}],"all_pass":false})"));
  const auto back = ngg::io::reproduction_from_json(doc);
  CHECK(back.criteria.size() == 2);
  CHECK(back.criteria[0].name == "first-check");
  CHECK(back.criteria[0].pass);
  CHECK(back.criteria[1].detail.empty());  // timings and details do not travel
  CHECK(!back.all_pass);
}

TEST_CASE("dump is deterministic and newline-terminated") {
  const json doc = ngg::io::to_json(verify_group(kG1));
  const std::string once = ngg::io::dump(doc);
  CHECK(once == ngg::io::dump(ngg::io::to_json(verify_group(kG1))));
  CHECK(once.back() == '\n');
  CHECK(once.find("\"is_group\": true") != std::string::npos);
}

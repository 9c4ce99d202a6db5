#include "ngg/json_io.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace ngg::io {
namespace {

json tuple_array(const Transformation& f) { return json(f.images()); }

std::vector<int> int_array(const json& j) { return j.get<std::vector<int>>(); }

json element_list(const std::vector<Transformation>& elements) {
  json arr = json::array();
  for (const Transformation& f : elements) arr.push_back(tuple_array(f));
  return arr;
}

std::vector<Transformation> element_list_from(const json& j) {
  std::vector<Transformation> out;
  out.reserve(j.size());
  for (const json& item : j) out.emplace_back(int_array(item));
  return out;
}

GroupFailure failure_from_string(const std::string& reason) {
  for (GroupFailure r : {GroupFailure::empty_set, GroupFailure::degree_mismatch,
                         GroupFailure::not_closed, GroupFailure::no_identity,
                         GroupFailure::missing_inverse}) {
    if (reason == to_string(r)) return r;
  }
  throw std::invalid_argument("unknown failure reason '" + reason + "'");
}

// Group inverses are unique, so recomputing the index table from the
// element list reproduces exactly what verification stored.
std::vector<int> recompute_inverse_index(const std::vector<Transformation>& elements,
                                         const Transformation& identity) {
  std::vector<int> inverse(elements.size(), -1);
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (std::size_t j = 0; j < elements.size(); ++j) {
      if (compose(elements[i], elements[j]) == identity &&
          compose(elements[j], elements[i]) == identity) {
        inverse[i] = static_cast<int>(j);
        break;
      }
    }
    if (inverse[i] < 0)
      throw std::invalid_argument("certificate marked as group lacks an inverse");
  }
  return inverse;
}

}  // namespace

json to_json(const Transformation& f) { return tuple_array(f); }

Transformation transformation_from_json(const json& j) {
  return Transformation(int_array(j));
}

json to_json(const Partition& p) {
  json arr = json::array();
  for (const std::vector<int>& block : p.blocks()) arr.push_back(json(block));
  return arr;
}

Partition partition_from_json(const json& j) {
  std::vector<std::vector<int>> blocks;
  int degree = 0;
  for (const json& block : j) {
    blocks.push_back(int_array(block));
    degree += static_cast<int>(blocks.back().size());
  }
  return Partition::from_blocks(std::move(blocks), degree);
}

json to_json(const NGCertificate& cert) {
  json doc = json::object();
  doc["is_group"] = cert.is_group;
  doc["order"] = cert.order;
  doc["identity"] = cert.identity ? to_json(*cert.identity) : json(nullptr);
  doc["elements"] = element_list(cert.elements);
  doc["common_kernel"] = cert.common_kernel ? to_json(*cert.common_kernel) : json(nullptr);
  doc["symmetric_subset"] = cert.is_symmetric_subset;
  if (cert.failure == GroupFailure::none) {
    doc["failure"] = nullptr;
  } else {
    json witness = json::array();
    if (cert.not_closed_witness) {
      witness.push_back(tuple_array(cert.not_closed_witness->left));
      witness.push_back(tuple_array(cert.not_closed_witness->right));
      witness.push_back(tuple_array(cert.not_closed_witness->product));
    } else if (cert.missing_inverse_element) {
      witness.push_back(tuple_array(*cert.missing_inverse_element));
    }
    doc["failure"] = json{{"reason", std::string(to_string(cert.failure))},
                          {"witness", std::move(witness)}};
  }
  return doc;
}

NGCertificate certificate_from_json(const json& j) {
  NGCertificate cert;
  cert.is_group = j.at("is_group").get<bool>();
  cert.order = j.at("order").get<int>();
  if (!j.at("identity").is_null())
    cert.identity = transformation_from_json(j.at("identity"));
  cert.elements = element_list_from(j.at("elements"));
  if (!j.at("common_kernel").is_null())
    cert.common_kernel = partition_from_json(j.at("common_kernel"));
  cert.is_symmetric_subset = j.at("symmetric_subset").get<bool>();
  if (!j.at("failure").is_null()) {
    const json& failure = j.at("failure");
    cert.failure = failure_from_string(failure.at("reason").get<std::string>());
    const json& witness = failure.at("witness");
    if (cert.failure == GroupFailure::not_closed) {
      cert.not_closed_witness =
          NotClosedWitness{transformation_from_json(witness.at(0)),
                           transformation_from_json(witness.at(1)),
                           transformation_from_json(witness.at(2))};
    } else if (cert.failure == GroupFailure::missing_inverse) {
      cert.missing_inverse_element = transformation_from_json(witness.at(0));
    }
  }
  if (cert.is_group)
    cert.inverse_index = recompute_inverse_index(cert.elements, *cert.identity);
  return cert;
}

json to_json(const QuotientRepresentation& rep) {
  json perms = json::array();
  for (const InducedMap& m : rep.perms) {
    json targets = json::array();
    for (int t : m.targets()) targets.push_back(t == InducedMap::ill_defined ? 0 : t + 1);
    perms.push_back(std::move(targets));
  }
  json doc = json::object();
  doc["quotient"] = to_json(rep.quotient);
  doc["perms"] = std::move(perms);
  doc["all_bijective"] = rep.all_bijective;
  doc["homomorphism"] = rep.homomorphism;
  doc["injective"] = rep.injective;
  doc["is_isomorphism"] = rep.is_isomorphism;
  return doc;
}

QuotientRepresentation representation_from_json(const json& j) {
  QuotientRepresentation rep;
  rep.quotient = partition_from_json(j.at("quotient"));
  for (const json& perm : j.at("perms")) {
    std::vector<int> targets;
    targets.reserve(perm.size());
    for (const json& t : perm) {
      const int v = t.get<int>();
      targets.push_back(v == 0 ? InducedMap::ill_defined : v - 1);
    }
    rep.perms.emplace_back(rep.quotient, std::move(targets));
  }
  rep.all_bijective = j.at("all_bijective").get<bool>();
  rep.homomorphism = j.at("homomorphism").get<bool>();
  rep.injective = j.at("injective").get<bool>();
  rep.is_isomorphism = j.at("is_isomorphism").get<bool>();
  return rep;
}

json to_json(const EnumerationReport& report) {
  json groups = json::array();
  for (const NGCertificate& cert : report.groups) groups.push_back(to_json(cert));
  json doc = json::object();
  doc["n"] = report.degree;
  doc["order"] = report.order;
  doc["count"] = report.count;
  doc["symmetric_count"] = report.symmetric_count;
  doc["groups"] = std::move(groups);
  return doc;
}

EnumerationReport enumeration_from_json(const json& j) {
  EnumerationReport report;
  report.degree = j.at("n").get<int>();
  report.order = j.at("order").get<int>();
  report.count = j.at("count").get<int>();
  report.symmetric_count = j.at("symmetric_count").get<int>();
  report.idempotents = idempotents(report.degree);
  for (const json& cert : j.at("groups"))
    report.groups.push_back(certificate_from_json(cert));
  return report;
}

json to_json(const RegularityReport& report) {
  json elements = json::array();
  for (const ElementRegularity& entry : report.elements) {
    json item = json::object();
    item["f"] = tuple_array(entry.f);
    item["witnesses"] = element_list(entry.witnesses);
    item["paired_witnesses"] = element_list(entry.paired_witnesses);
    elements.push_back(std::move(item));
  }
  json doc = json::object();
  doc["convention"] = std::string(to_string(report.convention));
  doc["is_regular"] = report.is_regular;
  doc["is_inverse_ng"] = report.is_inverse_ng;
  doc["elements"] = std::move(elements);
  return doc;
}

RegularityReport regularity_from_json(const json& j) {
  RegularityReport report;
  report.convention = convention_from_string(j.at("convention").get<std::string>());
  report.is_regular = j.at("is_regular").get<bool>();
  report.is_inverse_ng = j.at("is_inverse_ng").get<bool>();
  for (const json& item : j.at("elements")) {
    ElementRegularity entry;
    entry.f = transformation_from_json(item.at("f"));
    entry.witnesses = element_list_from(item.at("witnesses"));
    entry.paired_witnesses = element_list_from(item.at("paired_witnesses"));
    report.elements.push_back(std::move(entry));
  }
  return report;
}

json to_json(const MembershipReport& report) {
  json doc = json::object();
  doc["f"] = tuple_array(report.f);
  doc["member"] = report.member;
  doc["image_f"] = json(report.image_f.points());
  doc["image_f_squared"] = json(report.image_f_squared.points());
  doc["oracle_group"] =
      report.oracle_group ? element_list(*report.oracle_group) : json(nullptr);
  doc["oracle_agrees"] = report.oracle_agrees;
  return doc;
}

MembershipReport membership_from_json(const json& j) {
  MembershipReport report;
  report.f = transformation_from_json(j.at("f"));
  report.member = j.at("member").get<bool>();
  report.image_f = ImageSet(int_array(j.at("image_f")));
  report.image_f_squared = ImageSet(int_array(j.at("image_f_squared")));
  if (!j.at("oracle_group").is_null())
    report.oracle_group = element_list_from(j.at("oracle_group"));
  report.oracle_agrees = j.at("oracle_agrees").get<bool>();
  return report;
}

json to_json(const ProbeReport& report) {
  json doc = json::object();
  doc["union"] = to_json(report.union_result);
  doc["intersection"] = report.intersection_result
                            ? to_json(*report.intersection_result)
                            : json(nullptr);
  return doc;
}

ProbeReport probe_from_json(const json& j) {
  ProbeReport report;
  report.union_result = certificate_from_json(j.at("union"));
  if (!j.at("intersection").is_null())
    report.intersection_result = certificate_from_json(j.at("intersection"));
  return report;
}

json to_json(const ReproductionReport& report) {
  json criteria = json::array();
  for (const CriterionResult& c : report.criteria) {
    json item = json::object();
    item["name"] = c.name;
    item["pass"] = c.pass;
    criteria.push_back(std::move(item));
  }
  json doc = json::object();
  doc["criteria"] = std::move(criteria);
  doc["all_pass"] = report.all_pass;
  return doc;
}

ReproductionReport reproduction_from_json(const json& j) {
  ReproductionReport report;
  for (const json& item : j.at("criteria")) {
    CriterionResult c;
    c.name = item.at("name").get<std::string>();
    c.pass = item.at("pass").get<bool>();
    report.criteria.push_back(std::move(c));
  }
  report.all_pass = j.at("all_pass").get<bool>();
  return report;
}

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

}  // namespace ngg::io

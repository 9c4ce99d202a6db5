#pragma once

#include <string>

#include "json.hpp"
#include "ngg/enumerate.hpp"
#include "ngg/group.hpp"
#include "ngg/partition.hpp"
#include "ngg/quotient.hpp"
#include "ngg/regularity.hpp"
#include "ngg/reproduce.hpp"
#include "ngg/transform.hpp"

/// JSON forms of every report kind, all with fixed key order so serialized
/// output is byte-deterministic. Conventions: transformations are 1-indexed
/// image arrays, partitions are arrays of blocks in canonical order, induced
/// maps are 1-based block-target arrays (0 marks an ill-defined block), and
/// absent values are JSON null. Every to_json here round-trips through its
/// from_json counterpart.
namespace ngg::io {

using json = nlohmann::ordered_json;

json to_json(const Transformation& f);
Transformation transformation_from_json(const json& j);

json to_json(const Partition& p);
Partition partition_from_json(const json& j);

json to_json(const NGCertificate& cert);
NGCertificate certificate_from_json(const json& j);

json to_json(const QuotientRepresentation& rep);
QuotientRepresentation representation_from_json(const json& j);

json to_json(const EnumerationReport& report);
EnumerationReport enumeration_from_json(const json& j);

json to_json(const RegularityReport& report);
RegularityReport regularity_from_json(const json& j);

json to_json(const MembershipReport& report);
MembershipReport membership_from_json(const json& j);

json to_json(const ProbeReport& report);
ProbeReport probe_from_json(const json& j);

json to_json(const ReproductionReport& report);
ReproductionReport reproduction_from_json(const json& j);

/// Canonical serialization: two-space indent plus trailing newline.
std::string dump(const json& doc);

}  // namespace ngg::io

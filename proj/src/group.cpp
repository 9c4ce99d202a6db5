#include "ngg/group.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace ngg {
namespace {

std::vector<Transformation> dedupe_sorted(std::vector<Transformation> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  return elements;
}

bool uniform_degree(const std::vector<Transformation>& elements) {
  return std::all_of(elements.begin(), elements.end(), [&](const Transformation& f) {
    return f.degree() == elements.front().degree();
  });
}

}  // namespace

CayleyTable CayleyTable::build(std::vector<Transformation> elements) {
  if (elements.empty()) {
    throw std::invalid_argument("cannot build a composition table for an empty set");
  }
  if (!uniform_degree(elements)) {
    throw std::invalid_argument("composition table requires a uniform degree");
  }
  CayleyTable table;
  table.elements_ = dedupe_sorted(std::move(elements));

  std::unordered_map<Transformation, int> index;
  index.reserve(table.elements_.size());
  for (int i = 0; i < table.size(); ++i) {
    index.emplace(table.elements_[static_cast<std::size_t>(i)], i);
  }

  const int n = table.size();
  table.cells_.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      Transformation product = compose(table.elements_[static_cast<std::size_t>(i)],
                                       table.elements_[static_cast<std::size_t>(j)]);
      auto it = index.find(product);
      if (it == index.end()) {
        table.cells_.emplace_back(std::move(product));
      } else {
        table.cells_.emplace_back(it->second);
      }
    }
  }
  return table;
}

const CayleyTable::Cell& CayleyTable::cell(int i, int j) const {
  return cells_.at(static_cast<std::size_t>(i) * static_cast<std::size_t>(size()) +
                   static_cast<std::size_t>(j));
}

bool CayleyTable::closed() const noexcept {
  return std::all_of(cells_.begin(), cells_.end(),
                     [](const Cell& c) { return std::holds_alternative<int>(c); });
}

std::optional<std::pair<int, int>> CayleyTable::first_escape() const noexcept {
  for (std::size_t k = 0; k < cells_.size(); ++k) {
    if (!std::holds_alternative<int>(cells_[k])) {
      int n = size();
      return std::pair<int, int>{static_cast<int>(k) / n, static_cast<int>(k) % n};
    }
  }
  return std::nullopt;
}

std::string_view to_string(GroupFailure reason) {
  switch (reason) {
    case GroupFailure::none: return "none";
    case GroupFailure::empty_set: return "empty set";
    case GroupFailure::degree_mismatch: return "degree mismatch";
    case GroupFailure::not_closed: return "not closed";
    case GroupFailure::no_identity: return "no identity";
    case GroupFailure::missing_inverse: return "missing inverse";
  }
  return "unknown";
}

const Transformation& NGCertificate::inverse_of(const Transformation& f) const {
  if (!is_group) {
    throw std::invalid_argument("certificate does not describe a group");
  }
  auto it = std::lower_bound(elements.begin(), elements.end(), f);
  if (it == elements.end() || !(*it == f)) {
    throw std::invalid_argument("element is not in the group");
  }
  auto i = static_cast<std::size_t>(it - elements.begin());
  return elements[static_cast<std::size_t>(inverse_index[i])];
}

NGCertificate verify_group(const std::vector<Transformation>& set) {
  NGCertificate cert;
  cert.elements = dedupe_sorted(set);
  cert.order = static_cast<int>(cert.elements.size());

  if (cert.elements.empty()) {
    cert.failure = GroupFailure::empty_set;
    return cert;
  }
  if (!uniform_degree(cert.elements)) {
    cert.failure = GroupFailure::degree_mismatch;
    return cert;
  }

  CayleyTable table = CayleyTable::build(cert.elements);
  const int n = table.size();

  if (auto escape = table.first_escape()) {
    auto [i, j] = *escape;
    cert.failure = GroupFailure::not_closed;
    cert.not_closed_witness = NotClosedWitness{
        table.elements()[static_cast<std::size_t>(i)],
        table.elements()[static_cast<std::size_t>(j)],
        std::get<Transformation>(table.cell(i, j))};
    return cert;
  }

  auto entry = [&](int i, int j) { return std::get<int>(table.cell(i, j)); };

  // Scan for a two-sided identity rather than assuming any idempotent is
  // one; that an identity must be idempotent is then a checked consequence.
  int identity = -1;
  for (int e = 0; e < n && identity < 0; ++e) {
    bool works = true;
    for (int j = 0; j < n && works; ++j) {
      works = entry(e, j) == j && entry(j, e) == j;
    }
    if (works) {
      identity = e;
    }
  }
  if (identity < 0) {
    cert.failure = GroupFailure::no_identity;
    return cert;
  }

  std::vector<int> inverse(static_cast<std::size_t>(n), -1);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (entry(i, j) == identity && entry(j, i) == identity) {
        inverse[static_cast<std::size_t>(i)] = j;
        break;
      }
    }
    if (inverse[static_cast<std::size_t>(i)] < 0) {
      cert.failure = GroupFailure::missing_inverse;
      cert.missing_inverse_element = cert.elements[static_cast<std::size_t>(i)];
      return cert;
    }
  }

  cert.is_group = true;
  cert.identity = cert.elements[static_cast<std::size_t>(identity)];
  cert.inverse_index = std::move(inverse);

  // All members of a group share one kernel partition; computing each and
  // comparing keeps that a verified fact instead of an assumption.
  Partition common = kernel_partition(cert.elements.front());
  for (const Transformation& f : cert.elements) {
    if (!(kernel_partition(f) == common)) {
      throw std::logic_error("group members with distinct kernels; composition is broken");
    }
  }
  cert.common_kernel = std::move(common);
  cert.is_symmetric_subset = std::all_of(cert.elements.begin(), cert.elements.end(),
                                         [](const Transformation& f) { return is_bijective(f); });
  return cert;
}

bool membership_condition(const Transformation& f) {
  return image(f) == image(power(f, 2));
}

std::optional<std::vector<Transformation>> containing_group_oracle(const Transformation& f) {
  // Walk f, f^2, f^3, ... to the eventual cycle.
  std::vector<Transformation> powers{f};
  std::unordered_map<Transformation, std::size_t> seen{{f, 0}};
  std::size_t cycle_start = 0;
  for (;;) {
    Transformation next = compose(powers.back(), f);
    auto it = seen.find(next);
    if (it != seen.end()) {
      cycle_start = it->second;
      break;
    }
    seen.emplace(next, powers.size());
    powers.push_back(std::move(next));
  }
  std::vector<Transformation> cycle(powers.begin() + static_cast<std::ptrdiff_t>(cycle_start),
                                    powers.end());

  // The cycle contains exactly one idempotent power of f.
  std::optional<Transformation> idem;
  for (const Transformation& p : cycle) {
    if (is_idempotent(p)) {
      idem = p;
      break;
    }
  }
  if (!idem) {
    throw std::logic_error("cyclic semigroup without idempotent power");
  }
  if (!(compose(*idem, f) == f) || !(compose(f, *idem) == f)) {
    return std::nullopt;
  }
  return dedupe_sorted(std::move(cycle));
}

MembershipReport membership_report(const Transformation& f) {
  MembershipReport report;
  report.f = f;
  report.member = membership_condition(f);
  report.image_f = image(f);
  report.image_f_squared = image(power(f, 2));
  report.oracle_group = containing_group_oracle(f);
  report.oracle_agrees = report.member == report.oracle_group.has_value();
  return report;
}

QuotientRepresentation quotient_representation(const NGCertificate& cert) {
  if (!cert.is_group) {
    throw std::invalid_argument("quotient representation requires a certified group");
  }
  QuotientRepresentation rep;
  rep.quotient = *cert.common_kernel;
  rep.perms.reserve(cert.elements.size());
  for (const Transformation& f : cert.elements) {
    rep.perms.push_back(induced_map(f, rep.quotient));
  }

  rep.all_bijective = std::all_of(rep.perms.begin(), rep.perms.end(),
                                  [](const InducedMap& m) { return m.is_bijection(); });

  rep.homomorphism = true;
  for (std::size_t i = 0; i < cert.elements.size() && rep.homomorphism; ++i) {
    for (std::size_t j = 0; j < cert.elements.size() && rep.homomorphism; ++j) {
      InducedMap lhs = induced_map(compose(cert.elements[i], cert.elements[j]), rep.quotient);
      rep.homomorphism = lhs == compose(rep.perms[i], rep.perms[j]);
    }
  }

  rep.injective = true;
  for (std::size_t i = 0; i < rep.perms.size() && rep.injective; ++i) {
    for (std::size_t j = i + 1; j < rep.perms.size() && rep.injective; ++j) {
      rep.injective = !(rep.perms[i] == rep.perms[j]);
    }
  }

  // Surjectivity onto the induced-map set holds by construction.
  rep.is_isomorphism = rep.all_bijective && rep.homomorphism && rep.injective;
  return rep;
}

ProbeReport probe_union_intersection(const std::vector<Transformation>& s1,
                                     const std::vector<Transformation>& s2) {
  NGCertificate c1 = verify_group(s1);
  NGCertificate c2 = verify_group(s2);
  if (!c1.is_group || !c2.is_group) {
    throw std::invalid_argument("probe requires both inputs to be groups");
  }
  if (c1.elements.front().degree() != c2.elements.front().degree()) {
    throw std::invalid_argument("probe requires groups of equal degree");
  }

  std::vector<Transformation> united = c1.elements;
  united.insert(united.end(), c2.elements.begin(), c2.elements.end());

  std::vector<Transformation> intersection;
  std::set_intersection(c1.elements.begin(), c1.elements.end(), c2.elements.begin(),
                        c2.elements.end(), std::back_inserter(intersection));

  ProbeReport report;
  report.union_result = verify_group(united);
  if (!intersection.empty()) {
    report.intersection_result = verify_group(intersection);
  }
  return report;
}

}  // namespace ngg

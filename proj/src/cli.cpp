#include "ngg/cli.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ngg/enumerate.hpp"
#include "ngg/fieldgen.hpp"
#include "ngg/group.hpp"
#include "ngg/json_io.hpp"
#include "ngg/regularity.hpp"
#include "ngg/reproduce.hpp"
#include "ngg/transform.hpp"

namespace ngg::cli {
namespace {

std::string trimmed(const std::string& text) {
  const auto begin = text.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return "";
  const auto end = text.find_last_not_of(" \t\r\n");
  return text.substr(begin, end - begin + 1);
}

void require_uniform_degree(const std::vector<Transformation>& set) {
  for (const Transformation& f : set) {
    if (f.degree() != set.front().degree())
      throw std::invalid_argument("degree mismatch within input set");
  }
}

// Inline set literal: tuples separated by ';', e.g. "(1,1,3);(3,3,1)".
std::vector<Transformation> parse_set_literal(const std::string& text) {
  std::vector<Transformation> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t next = text.find(';', pos);
    const std::string item = trimmed(
        next == std::string::npos ? text.substr(pos) : text.substr(pos, next - pos));
    if (!item.empty()) out.push_back(Transformation::parse(item));
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  if (out.empty()) throw std::invalid_argument("empty transformation set");
  require_uniform_degree(out);
  return out;
}

// File form: one tuple per line; '#' starts a comment; blank lines ignored.
std::vector<Transformation> parse_set_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  std::vector<Transformation> out;
  std::string line;
  while (std::getline(in, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    const std::string item = trimmed(line);
    if (!item.empty()) out.push_back(Transformation::parse(item));
  }
  if (out.empty()) throw std::invalid_argument("empty transformation set: " + path);
  require_uniform_degree(out);
  return out;
}

std::vector<Transformation> load_set(const std::string& literal, const std::string& path) {
  return path.empty() ? parse_set_literal(literal) : parse_set_file(path);
}

const char* bool_text(bool b) { return b ? "true" : "false"; }

std::string join_tuples(const std::vector<Transformation>& elements) {
  if (elements.empty()) return "none";
  std::string out;
  for (const Transformation& f : elements) {
    if (!out.empty()) out += ';';
    out += f.to_string();
  }
  return out;
}

std::string failure_text(const NGCertificate& cert) {
  if (cert.failure == GroupFailure::none) return "none";
  std::string text(to_string(cert.failure));
  if (cert.not_closed_witness) {
    const auto& w = *cert.not_closed_witness;
    text += " (witness: " + w.left.to_string() + "*" + w.right.to_string() +
            " = " + w.product.to_string() + ")";
  } else if (cert.missing_inverse_element) {
    text += " (witness: " + cert.missing_inverse_element->to_string() + ")";
  }
  return text;
}

void print_certificate(std::ostream& out, const NGCertificate& cert) {
  out << "is_group: " << bool_text(cert.is_group) << "\n"
      << "order: " << cert.order << "\n"
      << "identity: " << (cert.identity ? cert.identity->to_string() : "none") << "\n"
      << "elements: " << join_tuples(cert.elements) << "\n"
      << "common_kernel: "
      << (cert.common_kernel ? cert.common_kernel->to_string() : "none") << "\n"
      << "symmetric_subset: " << bool_text(cert.is_symmetric_subset) << "\n"
      << "failure: " << failure_text(cert) << "\n";
}

std::string induced_targets_text(const InducedMap& m) {
  std::string out = "[";
  for (int b = 0; b < m.block_count(); ++b) {
    if (b) out += ',';
    const auto t = m.target(b);
    out += t ? std::to_string(*t + 1) : std::string("?");
  }
  return out + "]";
}

void print_representation(std::ostream& out, const NGCertificate& cert,
                          const QuotientRepresentation& rep) {
  out << "quotient: " << rep.quotient.to_string() << "\n";
  for (std::size_t i = 0; i < rep.perms.size(); ++i) {
    out << "induced: " << cert.elements[i].to_string() << " -> "
        << induced_targets_text(rep.perms[i]) << "\n";
  }
  out << "all_bijective: " << bool_text(rep.all_bijective) << "\n"
      << "homomorphism: " << bool_text(rep.homomorphism) << "\n"
      << "injective: " << bool_text(rep.injective) << "\n"
      << "is_isomorphism: " << bool_text(rep.is_isomorphism) << "\n";
}

NGCertificate certified_or_throw(const std::vector<Transformation>& set) {
  NGCertificate cert = verify_group(set);
  if (!cert.is_group) {
    throw std::invalid_argument("input set is not a group (" +
                                std::string(to_string(cert.failure)) + ")");
  }
  return cert;
}

int cmd_verify(std::ostream& out, const std::vector<Transformation>& set,
               const std::string& format) {
  const NGCertificate cert = verify_group(set);
  if (format == "json") {
    out << io::dump(io::to_json(cert));
  } else {
    print_certificate(out, cert);
  }
  return 0;
}

int cmd_quotient(std::ostream& out, const std::vector<Transformation>& set,
                 const std::string& format) {
  const NGCertificate cert = certified_or_throw(set);
  const QuotientRepresentation rep = quotient_representation(cert);
  if (format == "json") {
    io::json doc = io::json::object();
    doc["certificate"] = io::to_json(cert);
    doc["representation"] = io::to_json(rep);
    out << io::dump(doc);
  } else {
    print_certificate(out, cert);
    print_representation(out, cert, rep);
  }
  return 0;
}

int cmd_enumerate_idempotents(std::ostream& out, int n, const std::string& format) {
  const std::vector<Transformation> found = idempotents(n);
  if (format == "json") {
    io::json list = io::json::array();
    for (const Transformation& f : found) list.push_back(io::to_json(f));
    io::json doc = io::json::object();
    doc["n"] = n;
    doc["count"] = static_cast<int>(found.size());
    doc["idempotents"] = std::move(list);
    out << io::dump(doc);
  } else {
    out << "n: " << n << "\n"
        << "count: " << found.size() << "\n";
    for (const Transformation& f : found) out << f.to_string() << "\n";
  }
  return 0;
}

int cmd_enumerate_groups(std::ostream& out, int n, int order, bool brute_force,
                         const std::string& format) {
  EnumerationReport report;
  if (brute_force) {
    report.degree = n;
    report.order = order;
    report.idempotents = idempotents(n);
    for (const std::vector<Transformation>& elems :
         enumerate_groups_brute_force(n, order)) {
      NGCertificate cert = verify_group(elems);
      if (cert.is_symmetric_subset) ++report.symmetric_count;
      report.groups.push_back(std::move(cert));
    }
    report.count = static_cast<int>(report.groups.size());
  } else {
    report = enumerate_groups_of_order(n, order);
  }

  if (format == "json") {
    out << io::dump(io::to_json(report));
  } else {
    out << "n: " << report.degree << "\n"
        << "order: " << report.order << "\n"
        << "count: " << report.count << "\n"
        << "symmetric_count: " << report.symmetric_count << "\n";
    for (const NGCertificate& cert : report.groups) {
      out << "group: " << join_tuples(cert.elements)
          << " | identity: " << cert.identity->to_string()
          << " | symmetric: " << bool_text(cert.is_symmetric_subset) << "\n";
    }
  }
  return 0;
}

int cmd_membership(std::ostream& out, const std::string& tuple,
                   const std::string& format) {
  const MembershipReport report = membership_report(Transformation::parse(tuple));
  if (format == "json") {
    out << io::dump(io::to_json(report));
  } else {
    out << "f: " << report.f.to_string() << "\n"
        << "member: " << bool_text(report.member) << "\n"
        << "image_f: " << report.image_f.to_string() << "\n"
        << "image_f_squared: " << report.image_f_squared.to_string() << "\n"
        << "oracle_group: "
        << (report.oracle_group ? join_tuples(*report.oracle_group) : "absent") << "\n"
        << "oracle_agrees: " << bool_text(report.oracle_agrees) << "\n";
  }
  return 0;
}

int cmd_regularity(std::ostream& out, const std::vector<Transformation>& set,
                   const std::string& convention, const std::string& format) {
  const NGCertificate cert = certified_or_throw(set);
  const RegularityReport report =
      regularity_report(cert, convention_from_string(convention));
  if (format == "json") {
    out << io::dump(io::to_json(report));
  } else {
    out << "convention: " << to_string(report.convention) << "\n"
        << "is_regular: " << bool_text(report.is_regular) << "\n"
        << "is_inverse_ng: " << bool_text(report.is_inverse_ng) << "\n";
    for (const ElementRegularity& entry : report.elements) {
      out << "f: " << entry.f.to_string()
          << " | witnesses: " << join_tuples(entry.witnesses)
          << " | paired: " << join_tuples(entry.paired_witnesses) << "\n";
    }
  }
  return 0;
}

int cmd_probe(std::ostream& out, const std::vector<Transformation>& s1,
              const std::vector<Transformation>& s2, const std::string& format) {
  const ProbeReport report = probe_union_intersection(s1, s2);
  if (format == "json") {
    out << io::dump(io::to_json(report));
  } else {
    out << "== union ==\n";
    print_certificate(out, report.union_result);
    out << "== intersection ==\n";
    if (report.intersection_result) {
      print_certificate(out, *report.intersection_result);
    } else {
      out << "empty - not a group\n";
    }
  }
  return 0;
}

int cmd_fieldgen(std::ostream& out, int p, const std::string& format) {
  const NGCertificate cert = certified_or_throw(projection_group(p));
  const QuotientRepresentation rep = quotient_representation(cert);
  if (format == "json") {
    io::json doc = io::json::object();
    doc["p"] = p;
    doc["certificate"] = io::to_json(cert);
    doc["representation"] = io::to_json(rep);
    out << io::dump(doc);
  } else {
    out << "p: " << p << "\n";
    print_certificate(out, cert);
    print_representation(out, cert, rep);
  }
  return 0;
}

int cmd_reproduction(std::ostream& out, const std::string& format) {
  const ReproductionReport report = run_reproduction_suite();
  if (format == "json") {
    out << io::dump(io::to_json(report));
  } else {
    for (const CriterionResult& c : report.criteria) {
      out << (c.pass ? "[PASS] " : "[FAIL] ") << c.name;
      if (!c.pass && !c.detail.empty()) out << " - " << c.detail;
      out << "\n";
    }
    out << "all_pass: " << bool_text(report.all_pass) << "\n";
  }
  return report.all_pass ? 0 : 1;
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"groups of non-bijective transformations on finite sets"};
  app.name("ngg");
  app.require_subcommand(1);

  std::string format = "text";
  const auto add_format = [&format](CLI::App* sub) {
    sub->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
  };
  const auto add_set_input = [](CLI::App* sub, std::string& literal, std::string& path) {
    auto* group = sub->add_option_group("input", "transformation set");
    group->add_option("--set", literal, "inline set literal, tuples separated by ';'");
    group->add_option("--file", path, "file with one tuple per line ('#' comments)");
    group->require_option(1);
  };

  std::string set_literal, set_path;
  std::string set1_literal, set1_path, set2_literal, set2_path;
  std::string tuple_literal;
  std::string convention;
  int degree = 0, order = 0, prime = 0;
  bool brute_force = false;

  CLI::App* verify = app.add_subcommand("verify", "certify whether a set is a group");
  add_set_input(verify, set_literal, set_path);
  add_format(verify);

  CLI::App* quotient =
      app.add_subcommand("quotient", "permutation representation on the quotient set");
  add_set_input(quotient, set_literal, set_path);
  add_format(quotient);

  CLI::App* enum_idem =
      app.add_subcommand("enumerate-idempotents", "all idempotent transformations");
  enum_idem->add_option("-n,--degree", degree, "degree of the underlying set")->required();
  add_format(enum_idem);

  CLI::App* enum_groups =
      app.add_subcommand("enumerate-groups", "all transformation groups of one order");
  enum_groups->add_option("-n,--degree", degree, "degree of the underlying set")->required();
  enum_groups->add_option("-k,--order", order, "group order")->required();
  enum_groups->add_flag("--brute-force", brute_force,
                        "check every subset directly instead of anchoring at idempotents");
  add_format(enum_groups);

  CLI::App* membership =
      app.add_subcommand("membership", "image-stability membership criterion");
  membership->add_option("--f", tuple_literal, "transformation tuple")->required();
  add_format(membership);

  CLI::App* regularity = app.add_subcommand("regularity", "regular and inverse structure");
  add_set_input(regularity, set_literal, set_path);
  regularity->add_option("--convention", convention, "witness equation to use")
      ->required()
      ->check(CLI::IsMember({"paper-literal", "standard"}));
  add_format(regularity);

  CLI::App* probe = app.add_subcommand("probe", "union and intersection of two groups");
  {
    auto* first = probe->add_option_group("first", "first group");
    first->add_option("--set1", set1_literal, "inline set literal");
    first->add_option("--file1", set1_path, "file input");
    first->require_option(1);
    auto* second = probe->add_option_group("second", "second group");
    second->add_option("--set2", set2_literal, "inline set literal");
    second->add_option("--file2", set2_path, "file input");
    second->require_option(1);
  }
  add_format(probe);

  CLI::App* fieldgen =
      app.add_subcommand("fieldgen", "projection group on a finite plane");
  fieldgen->add_option("--p", prime, "prime field size")->required();
  add_format(fieldgen);

  CLI::App* reproduction =
      app.add_subcommand("paper-check", "run the built-in reproduction suite");
  add_format(reproduction);

  try {
    std::reverse(args.begin(), args.end());
    app.parse(std::move(args));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (app.got_subcommand(verify))
      return cmd_verify(out, load_set(set_literal, set_path), format);
    if (app.got_subcommand(quotient))
      return cmd_quotient(out, load_set(set_literal, set_path), format);
    if (app.got_subcommand(enum_idem))
      return cmd_enumerate_idempotents(out, degree, format);
    if (app.got_subcommand(enum_groups))
      return cmd_enumerate_groups(out, degree, order, brute_force, format);
    if (app.got_subcommand(membership))
      return cmd_membership(out, tuple_literal, format);
    if (app.got_subcommand(regularity))
      return cmd_regularity(out, load_set(set_literal, set_path), convention, format);
    if (app.got_subcommand(probe))
      return cmd_probe(out, load_set(set1_literal, set1_path),
                       load_set(set2_literal, set2_path), format);
    if (app.got_subcommand(fieldgen))
      return cmd_fieldgen(out, prime, format);
    if (app.got_subcommand(reproduction))
      return cmd_reproduction(out, format);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  err << "usage error: no command given\n";
  return 2;
}

}  // namespace ngg::cli

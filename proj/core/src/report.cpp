#include "monocover/report.hpp"

#include <optional>
#include <utility>

#include "json.hpp"
#include "monocover/perm.hpp"

namespace monocover {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json optional_number(const std::optional<std::int64_t>& v) {
  if (!v) {
    return nullptr;
  }
  return *v;
}

ordered_json certificate_fields(const MonodromyPair& pair,
                                const CoverInvariants& inv) {
  ordered_json j;
  j["degree"] = inv.degree;
  j["alpha"] = format_cycles(pair.alpha);
  j["beta"] = format_cycles(pair.beta);
  j["commutator"] = format_cycles(commutator(pair.alpha, pair.beta));
  j["curve_genus"] = inv.curve_genus;
  j["fibre_genus"] = optional_number(inv.fibre_genus);
  j["chi"] = optional_number(inv.chi);
  j["k_squared"] = optional_number(inv.k_squared);
  j["c2"] = optional_number(inv.c2);
  j["nodes"] = optional_number(inv.node_count);
  j["delta_gamma"] = optional_number(inv.delta_gamma);
  if (inv.group_order) {
    j["group_order"] = *inv.group_order;
  } else {
    j["group_order"] = nullptr;
  }
  j["transitive"] = inv.transitive;
  j["primitive"] = inv.primitive;
  j["reduced"] = inv.reduced_ramification;
  j["valid"] = inv.valid;
  return j;
}

ordered_json bounds_fields(const BoundsReport& r) {
  ordered_json j;
  j["all_pass"] = r.all_pass;
  j["entries"] = ordered_json::array();
  for (const BoundsEntry& e : r.entries) {
    ordered_json entry;
    entry["id"] = e.id;
    entry["statement"] = e.statement;
    entry["detail"] = e.detail;
    entry["applicable"] = e.applicable;
    entry["informational"] = e.informational;
    entry["pass"] = e.pass;
    j["entries"].push_back(std::move(entry));
  }
  j["notes"] = r.notes;
  return j;
}

std::optional<std::int64_t> json_optional_number(const ordered_json& j,
                                                 const char* key) {
  const auto& v = j.at(key);
  if (v.is_null()) {
    return std::nullopt;
  }
  return v.get<std::int64_t>();
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

void append_line(std::string& out, const std::string& line) {
  out += line;
  out += '\n';
}

std::string bounds_entry_line(const BoundsEntry& e) {
  std::string status;
  if (!e.applicable) {
    status = "not applicable";
  } else if (e.informational) {
    status = "noted";
  } else {
    status = e.pass ? "pass" : "FAIL";
  }
  return "  (" + e.id + ") " + e.statement + ": " + status + " [" + e.detail +
         "]";
}

}  // namespace

std::string certificate_json_line(const Certificate& c) {
  return certificate_fields(c.pair, c.invariants).dump();
}

Certificate certificate_from_json_line(const std::string& line) {
  ordered_json j;
  try {
    j = ordered_json::parse(line);
  } catch (const nlohmann::json::exception& e) {
    throw parse_error(std::string("bad certificate line: ") + e.what());
  }
  try {
    const int degree = j.at("degree").get<int>();
    Permutation alpha = parse_cycles(j.at("alpha").get<std::string>(), degree);
    Permutation beta = parse_cycles(j.at("beta").get<std::string>(), degree);
    MonodromyPair pair(std::move(alpha), std::move(beta));
    if (format_cycles(commutator(pair.alpha, pair.beta)) !=
        j.at("commutator").get<std::string>()) {
      throw parse_error("commutator text does not match the pair");
    }

    CoverInvariants inv;
    inv.degree = degree;
    inv.transitive = j.at("transitive").get<bool>();
    inv.primitive = j.at("primitive").get<bool>();
    inv.reduced_ramification = j.at("reduced").get<bool>();
    inv.valid = j.at("valid").get<bool>();
    inv.curve_genus = j.at("curve_genus").get<int>();
    if (j.at("group_order").is_null()) {
      inv.group_order.reset();
    } else {
      inv.group_order = j.at("group_order").get<std::uint64_t>();
    }
    inv.fibre_genus = json_optional_number(j, "fibre_genus");
    inv.chi = json_optional_number(j, "chi");
    inv.k_squared = json_optional_number(j, "k_squared");
    inv.c2 = json_optional_number(j, "c2");
    inv.node_count = json_optional_number(j, "nodes");
    inv.delta_gamma = json_optional_number(j, "delta_gamma");
    if (inv.delta_gamma) {
      inv.ramification_point_count = static_cast<int>(*inv.delta_gamma);
    } else if (inv.reduced_ramification && inv.curve_genus >= 2) {
      inv.ramification_point_count = 2 * inv.curve_genus - 2;
    }

    std::string canonical =
        format_cycles(pair.alpha) + " | " + format_cycles(pair.beta);
    return Certificate{std::move(pair), inv, std::move(canonical)};
  } catch (const nlohmann::json::exception& e) {
    throw parse_error(std::string("bad certificate line: ") + e.what());
  }
}

std::string verify_text(const MonodromyPair& pair, const CoverInvariants& inv,
                        const BoundsReport* bounds) {
  std::string out;
  append_line(out, "degree: " + std::to_string(inv.degree));
  append_line(out, "alpha: " + format_cycles(pair.alpha));
  append_line(out, "beta: " + format_cycles(pair.beta));
  const Permutation c = commutator(pair.alpha, pair.beta);
  append_line(out, "commutator: " + format_cycles(c));

  std::string profile;
  for (int length : ramification_profile(pair).lengths) {
    if (!profile.empty()) {
      profile += ' ';
    }
    profile += std::to_string(length);
  }
  append_line(out,
              "ramification indices: " + (profile.empty() ? "none" : profile));
  append_line(out, "transitive: " + yes_no(inv.transitive));
  append_line(out, "primitive: " + yes_no(inv.primitive));
  append_line(out, "reduced: " + yes_no(inv.reduced_ramification));
  append_line(out, "group order: " + (inv.group_order
                                          ? std::to_string(*inv.group_order)
                                          : std::string("above 2^64-1")));
  append_line(out, "curve genus: " + std::to_string(inv.curve_genus));
  auto numeric = [](const std::optional<std::int64_t>& v) {
    return v ? std::to_string(*v) : std::string("-");
  };
  append_line(out, "fibre genus: " + numeric(inv.fibre_genus));
  append_line(out, "chi: " + numeric(inv.chi));
  append_line(out, "K^2: " + numeric(inv.k_squared));
  append_line(out, "c_2: " + numeric(inv.c2));
  append_line(out, "nodes: " + numeric(inv.node_count));
  append_line(out, "Delta.Gamma: " + numeric(inv.delta_gamma));
  if (bounds != nullptr) {
    append_line(out, "bounds:");
    for (const BoundsEntry& e : bounds->entries) {
      append_line(out, bounds_entry_line(e));
    }
    for (const std::string& note : bounds->notes) {
      append_line(out, "  note: " + note);
    }
  }
  append_line(out, std::string("verdict: ") + (inv.valid ? "valid" : "invalid"));
  return out;
}

std::string verify_json(const MonodromyPair& pair, const CoverInvariants& inv,
                        const BoundsReport* bounds) {
  ordered_json j = certificate_fields(pair, inv);
  j["bounds"] = bounds != nullptr ? bounds_fields(*bounds) : ordered_json();
  return j.dump(2) + "\n";
}

std::string bounds_text(const BoundsReport& r) {
  std::string out;
  append_line(out, "bounds:");
  for (const BoundsEntry& e : r.entries) {
    append_line(out, bounds_entry_line(e));
  }
  for (const std::string& note : r.notes) {
    append_line(out, "  note: " + note);
  }
  append_line(out, std::string("result: ") +
                       (r.all_pass ? "all pass" : "FAILED"));
  return out;
}

std::string bounds_json(const BoundsReport& r) {
  return bounds_fields(r).dump(2) + "\n";
}

std::string example_text(const ExampleOutcome& o) {
  std::string out = o.name + ": " + (o.passed ? "pass" : "FAIL");
  for (const std::string& failure : o.failures) {
    out += "\n  " + failure;
  }
  out += '\n';
  return out;
}

std::string example_json(const ExampleOutcome& o) {
  ordered_json j;
  j["name"] = o.name;
  j["passed"] = o.passed;
  j["failures"] = o.failures;
  return j.dump();
}

std::string search_summary_text(const SearchStats& stats,
                                std::size_t emitted) {
  std::string out;
  append_line(out, "pairs scanned: " + std::to_string(stats.pairs_scanned));
  append_line(out, "commutator matches: " +
                       std::to_string(stats.commutator_matches));
  append_line(out, "transitive matches: " +
                       std::to_string(stats.transitive_matches));
  append_line(out,
              "valid pairs: " + std::to_string(stats.raw_certificates));
  append_line(out, "classes: " + std::to_string(stats.classes));
  append_line(out, "emitted: " + std::to_string(emitted));
  return out;
}

std::string search_summary_json(const SearchStats& stats,
                                std::size_t emitted) {
  ordered_json j;
  j["pairs_scanned"] = stats.pairs_scanned;
  j["commutator_matches"] = stats.commutator_matches;
  j["transitive_matches"] = stats.transitive_matches;
  j["valid_pairs"] = stats.raw_certificates;
  j["classes"] = stats.classes;
  j["emitted"] = emitted;
  return j.dump();
}

}  // namespace monocover

#include "hnp/report.hpp"

#include <json.hpp>
#include <sstream>

namespace hnp {

using ordered_json = nlohmann::ordered_json;

std::vector<std::int64_t> to_int64(const std::vector<Int>& v) {
  std::vector<std::int64_t> out;
  out.reserve(v.size());
  for (const Int& x : v) out.push_back(x.convert_to<std::int64_t>());
  return out;
}

ObstructionReport make_obstruction_report(const Subgroup& h, const SubgroupInfo& info,
                                          const std::string& group_label,
                                          const ObstructionResult& result) {
  const Group& g = *h.parent();
  ObstructionReport r;
  r.group_order = g.order();
  r.degree = g.degree();
  r.group_label = group_label;
  r.subgroup = info;
  r.ker_psi1 = to_int64(result.ker_psi1);
  for (ElementIndex e : result.ker_witnesses) r.ker_witnesses.push_back(g.element(e).cycle_string());
  r.dnr = to_int64(result.dnr);
  r.h1 = to_int64(result.h1);
  for (const ClassOutcome& c : result.classes) {
    ObstructionReport::ClassRow row;
    row.id = c.id;
    row.label = c.label;
    row.order = c.order;
    row.verdict = c.verdict;
    for (const PositionOutcome& p : c.positions)
      row.positions.push_back({g.element(p.rep).cycle_string(), to_int64(p.dr_invariants), p.covers});
    r.classes.push_back(std::move(row));
  }
  r.minimal_true_ids = result.minimal_true;
  for (int id : result.minimal_true)
    for (const ClassOutcome& c : result.classes)
      if (c.id == id) r.minimal_true_labels.push_back(c.label);
  return r;
}

ScenarioReport make_scenario_report(const Subgroup& h, const SubgroupInfo& info,
                                    const std::string& group_label,
                                    const std::vector<SubgroupInfo>& places,
                                    const ScenarioResult& result) {
  ScenarioReport r;
  r.group_order = h.parent()->order();
  r.group_label = group_label;
  r.subgroup = info;
  r.places = places;
  r.h1 = to_int64(result.h1);
  r.obs = to_int64(result.obs);
  r.sha = to_int64(result.sha);
  r.at = to_int64(result.at);
  r.hnp_holds = result.hnp_holds;
  r.tamagawa_num = result.tamagawa_num.convert_to<std::int64_t>();
  r.tamagawa_den = result.tamagawa_den.convert_to<std::int64_t>();
  r.has_ramified_only = result.has_ramified_only;
  if (result.has_ramified_only) r.obs_ramified_only = to_int64(result.obs_ramified_only);
  return r;
}

namespace {

ordered_json subgroup_json(const SubgroupInfo& s) {
  ordered_json j;
  if (s.class_id > 0) j["class_id"] = s.class_id;
  j["label"] = s.label;
  j["order"] = s.order;
  j["generators"] = s.generators;
  return j;
}

}  // namespace

std::string to_json(const ObstructionReport& r) {
  ordered_json j;
  j["schema_version"] = "1";
  j["command"] = "analyze";
  j["group"] = {{"label", r.group_label}, {"order", r.group_order}, {"degree", r.degree}};
  j["subgroup"] = subgroup_json(r.subgroup);
  j["ker_psi1"] = {{"invariants", r.ker_psi1}, {"witnesses", r.ker_witnesses}};
  j["dnr"] = {{"invariants", r.dnr}};
  j["h1"] = r.h1;
  ordered_json classes = ordered_json::array();
  for (const auto& c : r.classes) {
    ordered_json jc;
    jc["class_id"] = c.id;
    jc["label"] = c.label;
    jc["order"] = c.order;
    ordered_json pos = ordered_json::array();
    for (const auto& p : c.positions)
      pos.push_back({{"rep", p.rep}, {"dr", p.dr}, {"covers", p.covers}});
    jc["positions"] = pos;
    jc["verdict"] = c.verdict;
    classes.push_back(jc);
  }
  j["classification"] = classes;
  ordered_json minimal = ordered_json::array();
  for (std::size_t i = 0; i < r.minimal_true_ids.size(); ++i)
    minimal.push_back({{"class_id", r.minimal_true_ids[i]}, {"label", r.minimal_true_labels[i]}});
  j["minimal_true"] = minimal;
  return j.dump(2) + "\n";
}

namespace {

std::string invariants_str(const std::vector<std::int64_t>& v) {
  if (v.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += " x ";
    s += "Z/" + std::to_string(v[i]) + "Z";
  }
  return s;
}

std::string list_str(const std::vector<std::int64_t>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += std::to_string(v[i]);
  }
  return s + "]";
}

}  // namespace

std::string to_markdown(const ObstructionReport& r) {
  std::ostringstream os;
  os << "# First obstruction analysis\n\n";
  os << "Group: " << r.group_label << " (order " << r.group_order << ", degree " << r.degree
     << ")\n";
  os << "Subgroup: " << r.subgroup.label << " (order " << r.subgroup.order << ")\n\n";
  os << "- Ker psi1: " << list_str(r.ker_psi1) << "\n";
  os << "- unramified term Dnr: " << list_str(r.dnr) << "\n";
  os << "- H^1 = Ker psi1 / Dnr: " << invariants_str(r.h1) << "\n";
  if (!r.classes.empty()) {
    os << "\n## Decomposition group classification\n\n";
    os << "| class | label | order | positions | verdict |\n";
    os << "|------:|-------|------:|----------:|---------|\n";
    for (const auto& c : r.classes)
      os << "| " << c.id << " | " << c.label << " | " << c.order << " | " << c.positions.size()
         << " | " << (c.verdict ? "true" : "false") << " |\n";
    os << "\nMinimal classes with trivial obstruction:";
    if (r.minimal_true_labels.empty()) os << " none";
    for (const auto& s : r.minimal_true_labels) os << " " << s << ";";
    os << "\n";
  }
  return os.str();
}

std::string to_json(const ScenarioReport& r) {
  ordered_json j;
  j["schema_version"] = "1";
  j["command"] = "scenario";
  j["group"] = {{"label", r.group_label}, {"order", r.group_order}};
  j["subgroup"] = subgroup_json(r.subgroup);
  ordered_json places = ordered_json::array();
  for (const auto& p : r.places) places.push_back(subgroup_json(p));
  j["places"] = places;
  j["h1"] = r.h1;
  j["obs"] = r.obs;
  j["sha"] = r.sha;
  j["at"] = r.at;
  j["hnp_holds"] = r.hnp_holds;
  j["tamagawa"] = {{"numerator", r.tamagawa_num}, {"denominator", r.tamagawa_den}};
  if (r.has_ramified_only) j["obs_ramified_only"] = r.obs_ramified_only;
  return j.dump(2) + "\n";
}

std::string to_markdown(const ScenarioReport& r) {
  std::ostringstream os;
  os << "# Ramification scenario\n\n";
  os << "Group: " << r.group_label << "; subgroup: " << r.subgroup.label << " (order "
     << r.subgroup.order << ")\n";
  os << "Places:";
  if (r.places.empty()) os << " (none beyond the unramified ones)";
  for (const auto& p : r.places) os << " " << p.label << ";";
  os << "\n\n";
  os << "- H^1: " << invariants_str(r.h1) << "\n";
  os << "- obstruction: " << invariants_str(r.obs) << "\n";
  os << "- Sha(T): " << invariants_str(r.sha) << "\n";
  os << "- A(T): " << invariants_str(r.at) << "\n";
  os << "- Hasse norm principle holds: " << (r.hnp_holds ? "yes" : "no") << "\n";
  os << "- Tamagawa number: " << r.tamagawa_num << "/" << r.tamagawa_den << "\n";
  if (r.has_ramified_only)
    os << "- obstruction from the listed places alone: " << invariants_str(r.obs_ramified_only)
       << "\n";
  return os.str();
}

std::vector<TableRow> make_table_rows(const FixtureSet& fs,
                                      const std::vector<std::vector<Int>>& h1_per_class) {
  std::vector<TableRow> rows;
  for (std::size_t i = 0; i < fs.classes.size(); ++i) {
    const FixtureClass& c = fs.classes[i];
    TableRow row;
    row.id = c.id;
    row.name = c.unique_name;
    // superscript form for repeated labels: S3(1) -> S3^(1)
    if (c.unique_name != c.label) {
      std::string suffix = c.unique_name.substr(c.label.size());  // "(k)"
      row.name = (c.label.find(' ') == std::string::npos ? c.label : "(" + c.label + ")") + "^" + suffix;
    }
    row.syl2 = c.syl2_label == "C2 x C2" ? "V4" : c.syl2_label;
    row.order = c.order;
    row.index = 7920 / c.order;
    row.h1_nontrivial = !h1_per_class[i].empty();
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string tables_to_markdown(const std::vector<TableRow>& rows) {
  std::ostringstream os;
  auto emit = [&](bool nontrivial, const char* title) {
    os << title << "\n\n";
    os << "| H | Syl2(H) | \\|H\\| | n = [G:H] | H^1 |\n";
    os << "|---|---------|-------:|----------:|-----|\n";
    for (const TableRow& r : rows)
      if (r.h1_nontrivial == nontrivial)
        os << "| " << r.name << " | " << r.syl2 << " | " << r.order << " | " << r.index << " | "
           << (nontrivial ? "Z/2Z" : "0") << " |\n";
    os << "\n";
  };
  emit(false, "Table 1: subgroups H < M11 with trivial H^1");
  emit(true, "Table 2: subgroups H < M11 with H^1 = Z/2Z");
  os << "Naming follows GAP (groups named by their order): D8, D10, D12 and QD16 are the\n"
        "dihedral groups of order 8, 10, 12 and the quasidihedral group of order 16; in\n"
        "index-based naming these are D4, D5, D6 and QD8. A6 . C2 is the Mathieu group M10.\n";
  return os.str();
}

std::string tables_to_json(const std::vector<TableRow>& rows) {
  ordered_json j;
  j["schema_version"] = "1";
  j["command"] = "tables";
  ordered_json t1 = ordered_json::array(), t2 = ordered_json::array();
  for (const TableRow& r : rows) {
    ordered_json row;
    row["class_id"] = r.id;
    row["H"] = r.name;
    row["syl2"] = r.syl2;
    row["order"] = r.order;
    row["index"] = r.index;
    row["h1"] = r.h1_nontrivial ? ordered_json::array({2}) : ordered_json::array();
    (r.h1_nontrivial ? t2 : t1).push_back(row);
  }
  j["table1"] = t1;
  j["table2"] = t2;
  return j.dump(2) + "\n";
}

}  // namespace hnp

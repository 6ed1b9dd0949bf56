#pragma once

#include <string>
#include <vector>

#include "hnp/fixtures.hpp"
#include "hnp/obstruction.hpp"

namespace hnp {

// Printable reports. All serialization is deterministic: fixed key order,
// integers only, no floating point. Schema version "1":
//   - invariant lists are integer arrays, [] meaning the trivial group,
//   - subgroups appear as { order, generators (cycle strings), label },
//   - the Tamagawa number is an exact { numerator, denominator } pair.
struct SubgroupInfo {
  int class_id = 0;  // 0 when not a fixture class
  std::string label;
  std::uint64_t order = 1;
  std::vector<std::string> generators;
};

struct ObstructionReport {
  std::uint64_t group_order = 1;
  int degree = 0;
  std::string group_label;
  SubgroupInfo subgroup;
  std::vector<std::int64_t> ker_psi1;
  std::vector<std::string> ker_witnesses;
  std::vector<std::int64_t> dnr;
  std::vector<std::int64_t> h1;
  struct Position {
    std::string rep;
    std::vector<std::int64_t> dr;
    bool covers = false;
  };
  struct ClassRow {
    int id = 0;
    std::string label;
    std::uint64_t order = 1;
    std::vector<Position> positions;
    bool verdict = false;
  };
  std::vector<ClassRow> classes;
  std::vector<int> minimal_true_ids;
  std::vector<std::string> minimal_true_labels;
};

struct ScenarioReport {
  std::uint64_t group_order = 1;
  std::string group_label;
  SubgroupInfo subgroup;
  std::vector<SubgroupInfo> places;
  std::vector<std::int64_t> h1, obs, sha, at;
  bool hnp_holds = true;
  std::int64_t tamagawa_num = 1, tamagawa_den = 1;
  bool has_ramified_only = false;
  std::vector<std::int64_t> obs_ramified_only;
};

std::vector<std::int64_t> to_int64(const std::vector<Int>& v);

ObstructionReport make_obstruction_report(const Subgroup& h, const SubgroupInfo& info,
                                          const std::string& group_label,
                                          const ObstructionResult& result);
ScenarioReport make_scenario_report(const Subgroup& h, const SubgroupInfo& info,
                                    const std::string& group_label,
                                    const std::vector<SubgroupInfo>& places,
                                    const ScenarioResult& result);

std::string to_json(const ObstructionReport& r);
std::string to_markdown(const ObstructionReport& r);
std::string to_json(const ScenarioReport& r);
std::string to_markdown(const ScenarioReport& r);

// The two built-in tables over the 38 fixture classes: classes with trivial
// obstruction group first (25 rows), then the classes with obstruction Z/2Z
// (13 rows). Row order follows the class ids. `h1` must hold the re-derived
// invariants per class id.
struct TableRow {
  int id = 0;
  std::string name;        // display name, superscripts for repeated labels
  std::string syl2;        // V4 for the Klein group, GAP names otherwise
  std::uint64_t order = 1;
  std::uint64_t index = 1;
  bool h1_nontrivial = false;
};
std::vector<TableRow> make_table_rows(const FixtureSet& fs,
                                      const std::vector<std::vector<Int>>& h1_per_class);
std::string tables_to_markdown(const std::vector<TableRow>& rows);
std::string tables_to_json(const std::vector<TableRow>& rows);

}  // namespace hnp

#pragma once

#include <string>
#include <vector>

#include "hnp/group.hpp"
#include "hnp/obstruction.hpp"

namespace hnp {

// One conjugacy class of proper subgroups of M11, with the expectations the
// verification pipeline re-checks: order, structure label, Sylow-2 label and
// the obstruction invariants the analysis must re-derive. Expected values are
// expectations, not inputs: nothing downstream consumes them as answers.
struct FixtureClass {
  int id = 0;                    // 1-based, in GAP's ConjugacyClassesSubgroups order
  std::string label;             // GAP StructureDescription
  std::string unique_name;       // label disambiguated, e.g. "S3(1)"
  std::uint64_t order = 1;
  std::string syl2_label;
  std::vector<std::string> generator_strings;
  std::vector<Int> expected_h1;  // [] or [2]
  Subgroup rep;
};

struct FixtureSet {
  GroupPtr m11;
  std::vector<FixtureClass> classes;  // the 38 proper classes
  SchurAssertion schur;
  std::string provenance;  // where the embedded data comes from

  // 39 labeled classes for classification sweeps: the 38 proper classes plus
  // the whole group as class 39.
  std::vector<LabeledClass> classification_classes() const;

  const FixtureClass* find(const std::string& name) const;       // unique_name or exact label
  std::vector<const FixtureClass*> find_all(const std::string& label) const;
};

// The Mathieu group M11 on 11 points, order 7920.
GroupPtr load_m11();

// Embedded subgroup table; built once and shared. Construction verifies
// nothing by itself -- run verify_fixtures for the full re-check.
const FixtureSet& load_subgroup_table();

struct VerificationIssue {
  int class_id;  // 0 for set-level issues
  std::string message;
};

// Re-checks the embedded data: the order list, pairwise non-conjugacy,
// structure and Sylow-2 labels, index [G:H], and the count of classes with
// nontrivial cyclic Sylow-2 (13). Returns the empty vector when all pass.
std::vector<VerificationIssue> verify_fixtures(const FixtureSet& fs);

}  // namespace hnp

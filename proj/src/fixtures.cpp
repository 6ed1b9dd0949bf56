#include "hnp/fixtures.hpp"

#include <algorithm>
#include <cstdint>

#include "hnp/fingerprint.hpp"

namespace hnp {

namespace {

// GAP: MathieuGroup(11)
constexpr const char* kM11Gen1 = "(1,2,3,4,5,6,7,8,9,10,11)";
constexpr const char* kM11Gen2 = "(3,7,11,8)(4,10,5,6)";

struct RawClass {
  int id;
  const char* label;
  std::uint64_t order;
  const char* syl2;
  int h1;  // 0 -> trivial, 2 -> Z/2Z
  std::vector<const char*> gens;
};

// Representatives of the 38 proper subgroup classes of M11, in GAP's
// ConjugacyClassesSubgroups order for MathieuGroup(11); generator strings
// verbatim from that listing.
const std::vector<RawClass>& raw_classes() {
  static const std::vector<RawClass> data = {
      {1, "1", 1, "1", 0, {}},
      {2, "C2", 2, "C2", 2, {"(2,8)(3,4)(5,6)(10,11)"}},
      {3, "C3", 3, "1", 0, {"(2,3,11)(4,8,10)(5,6,7)"}},
      {4, "C2 x C2", 4, "C2 x C2", 0, {"(1,2)(3,7)(4,5)(8,11)", "(3,11)(4,5)(6,10)(7,8)"}},
      {5, "C4", 4, "C4", 2, {"(2,5,3,8)(4,10,6,7)"}},
      {6, "C5", 5, "1", 0, {"(1,6,4,3,5)(2,8,10,7,11)"}},
      {7, "S3", 6, "C2", 2, {"(1,9)(2,3)(4,8)(5,6)", "(2,3,11)(4,8,10)(5,6,7)"}},
      {8, "S3", 6, "C2", 2, {"(2,8)(3,4)(5,6)(10,11)", "(2,3,11)(4,8,10)(5,6,7)"}},
      {9, "C6", 6, "C2", 2, {"(1,6,9)(2,11,7,10,4,5)(3,8)"}},
      {10, "Q8", 8, "Q8", 0, {"(2,4,3,6)(5,7,8,10)", "(2,5,3,8)(4,10,6,7)"}},
      {11, "C8", 8, "C8", 2, {"(1,3,11,6,7,10,4,5)(8,9)"}},
      {12, "D8", 8, "D8", 0, {"(1,10)(5,11)(6,9)(7,8)", "(1,4)(3,10)(5,8)(6,9)"}},
      {13, "C3 x C3", 9, "1", 0, {"(2,3,11)(4,8,10)(5,6,7)", "(2,7,8)(3,5,10)(4,11,6)"}},
      {14, "D10", 10, "C2", 2, {"(1,6)(2,10)(4,5)(7,11)", "(2,8)(3,4)(5,6)(10,11)"}},
      {15, "C11", 11, "1", 0, {"(1,8,7,9,3,4,5,10,6,2,11)"}},
      {16, "A4", 12, "C2 x C2", 0, {"(2,8)(3,4)(5,6)(10,11)", "(1,6,8)(2,7,5)(4,11,10)"}},
      {17, "D12", 12, "C2 x C2", 0, {"(1,6)(2,10)(4,5)(7,11)", "(1,9)(2,4)(3,8)(10,11)"}},
      {18, "QD16", 16, "QD16", 0, {"(1,2)(3,7)(4,5)(8,11)", "(3,10,11,6)(4,8,5,7)"}},
      {19, "(C3 x C3) : C2", 18, "C2", 2,
       {"(2,11)(4,7)(5,10)(6,8)", "(3,11)(4,5)(6,10)(7,8)", "(2,8)(3,4)(5,6)(10,11)"}},
      {20, "C3 x S3", 18, "C2", 2, {"(1,9)(2,3)(4,8)(5,6)", "(1,9)(2,5,4)(3,7,8,11,6,10)"}},
      {21, "C5 : C4", 20, "C4", 2, {"(1,6)(2,10)(4,5)(7,11)", "(2,10,8,11)(3,6,4,5)"}},
      {22, "SL(2,3)", 24, "Q8", 0,
       {"(1,6,4,2,5,10)(3,11,9)(7,8)", "(1,8,6,2,7,5)(3,11,9)(4,10)"}},
      {23, "S4", 24, "D8", 0, {"(2,4,3,6)(5,7,8,10)", "(1,8)(2,4)(5,11)(7,10)"}},
      {24, "(C3 x C3) : C4", 36, "C4", 2, {"(3,11)(4,5)(6,10)(7,8)", "(1,6,5,3)(7,11,10,8)"}},
      {25, "(C3 x C3) : C4", 36, "C4", 2, {"(2,11)(4,7)(5,10)(6,8)", "(2,10,8,11)(3,6,4,5)"}},
      {26, "S3 x S3", 36, "C2 x C2", 0,
       {"(1,9)(2,11,3)(4,7,8,5,10,6)", "(1,9)(2,5,4)(3,7,8,11,6,10)"}},
      {27, "GL(2,3)", 48, "QD16", 0, {"(1,9)(2,10,11,6,7,4,5,3)", "(1,8)(2,4)(5,11)(7,10)"}},
      {28, "C11 : C5", 55, "1", 0, {"(1,2,8,7,9)(3,11,10,6,4)", "(1,4,2,5,11)(3,6,10,7,9)"}},
      {29, "A5", 60, "C2 x C2", 0, {"(1,6)(2,10)(4,5)(7,11)", "(1,7,6,3,9)(2,10,8,4,5)"}},
      {30, "A5", 60, "C2 x C2", 0,
       {"(2,11)(4,7)(5,10)(6,8)", "(1,6)(2,10)(4,5)(7,11)", "(2,8)(3,4)(5,6)(10,11)"}},
      {31, "(C3 x C3) : Q8", 72, "Q8", 0,
       {"(2,11)(4,7)(5,10)(6,8)", "(2,5,8,6)(3,10,4,11)", "(2,10,8,11)(3,6,4,5)"}},
      {32, "(S3 x S3) : C2", 72, "D8", 0,
       {"(1,4)(2,9)(3,8)(6,7)", "(1,4,6,11,10,8)(2,9)(3,7,5)"}},
      {33, "(C3 x C3) : C8", 72, "C8", 2,
       {"(2,11)(4,7)(5,10)(6,8)", "(1,9)(2,5,3,11,8,6,4,10)"}},
      {34, "S5", 120, "D8", 0, {"(1,6)(2,10)(4,5)(7,11)", "(1,7,6,9,11,3)(2,5)(4,8,10)"}},
      {35, "(C3 x C3) : QD16", 144, "QD16", 0,
       {"(1,9)(2,11,3)(4,7,8,5,10,6)", "(2,6,8,5)(3,11,4,10)"}},
      {36, "A6", 360, "D8", 0, {"(1,7,8,5)(3,10,9,11)", "(1,2)(3,6)(5,9)(8,10)"}},
      {37, "PSL(2,11)", 660, "C2 x C2", 0,
       {"(1,2)(4,9)(6,7)(10,11)", "(1,8)(3,9)(5,7)(10,11)", "(2,11)(4,7)(5,10)(6,8)"}},
      {38, "A6 . C2", 720, "QD16", 0, {"(1,7,8,5)(3,10,9,11)", "(1,6,2,3)(5,8,9,10)"}},
  };
  return data;
}

}  // namespace

GroupPtr load_m11() {
  const int degree = 11;
  std::vector<Permutation> gens{parse_permutation(kM11Gen1, degree),
                                parse_permutation(kM11Gen2, degree)};
  return Group::generate(std::move(gens), degree);
}

const FixtureSet& load_subgroup_table() {
  static const FixtureSet fs = [] {
    FixtureSet out;
    out.m11 = load_m11();
    out.schur.provenance =
        "the Schur multiplier of M11 is trivial "
        "(GAP: AbelianInvariantsMultiplier(MathieuGroup(11)) = [ ])";
    out.provenance =
        "class representatives in GAP's ConjugacyClassesSubgroups(MathieuGroup(11)) order, "
        "generator strings verbatim; every expectation is re-checked by verify_fixtures";

    // count duplicate labels to assign (1)/(2) suffixes
    std::vector<std::string> labels;
    for (const RawClass& rc : raw_classes()) labels.push_back(rc.label);

    for (const RawClass& rc : raw_classes()) {
      FixtureClass c;
      c.id = rc.id;
      c.label = rc.label;
      c.order = rc.order;
      c.syl2_label = rc.syl2;
      if (rc.h1 == 2) c.expected_h1 = {Int(2)};
      for (const char* s : rc.gens) c.generator_strings.push_back(s);

      if (std::count(labels.begin(), labels.end(), c.label) > 1) {
        int nth = 1;
        for (const RawClass& prev : raw_classes()) {
          if (prev.id >= rc.id) break;
          if (c.label == prev.label) ++nth;
        }
        c.unique_name = c.label + "(" + std::to_string(nth) + ")";
      } else {
        c.unique_name = c.label;
      }

      std::vector<Permutation> gens;
      for (const std::string& s : c.generator_strings)
        gens.push_back(parse_permutation(s, out.m11->degree()));
      c.rep = subgroup_from_generators(out.m11, gens);
      out.classes.push_back(std::move(c));
    }
    return out;
  }();
  return fs;
}

std::vector<LabeledClass> FixtureSet::classification_classes() const {
  std::vector<LabeledClass> out;
  for (const FixtureClass& c : classes) out.push_back(LabeledClass{c.id, c.unique_name, c.rep});
  out.push_back(LabeledClass{static_cast<int>(classes.size()) + 1, "M11", whole_group(m11)});
  return out;
}

namespace {

std::string strip_spaces(const std::string& s) {
  std::string out;
  for (char c : s)
    if (c != ' ') out.push_back(c);
  return out;
}

// index-convention aliases accepted on input (GAP names are canonical)
std::string apply_alias(const std::string& s) {
  if (s == "V4") return "C2xC2";
  if (s == "D4") return "D8";
  if (s == "D5") return "D10";
  if (s == "D6") return "D12";
  if (s == "QD8") return "QD16";
  if (s == "M10") return "A6.C2";
  return s;
}

}  // namespace

const FixtureClass* FixtureSet::find(const std::string& name) const {
  const std::string wanted = apply_alias(strip_spaces(name));
  for (const FixtureClass& c : classes)
    if (strip_spaces(c.unique_name) == wanted) return &c;
  std::vector<const FixtureClass*> by_label;
  for (const FixtureClass& c : classes)
    if (strip_spaces(c.label) == wanted) by_label.push_back(&c);
  if (by_label.size() == 1) return by_label[0];
  return nullptr;
}

std::vector<const FixtureClass*> FixtureSet::find_all(const std::string& label) const {
  const std::string wanted = apply_alias(strip_spaces(label));
  std::vector<const FixtureClass*> out;
  for (const FixtureClass& c : classes)
    if (strip_spaces(c.label) == wanted || strip_spaces(c.unique_name) == wanted) out.push_back(&c);
  return out;
}

std::vector<VerificationIssue> verify_fixtures(const FixtureSet& fs) {
  std::vector<VerificationIssue> issues;
  auto fail = [&](int id, std::string msg) { issues.push_back({id, std::move(msg)}); };

  if (fs.m11->order() != 7920) fail(0, "M11 order is not 7920");
  if (fs.classes.size() != 38) fail(0, "expected 38 proper subgroup classes");

  // order list, structure labels, Sylow-2 labels, index in G
  std::size_t cyclic_syl2 = 0;
  for (const FixtureClass& c : fs.classes) {
    if (c.rep.order() != c.order)
      fail(c.id, "closure order " + std::to_string(c.rep.order()) + " != expected " +
                     std::to_string(c.order));
    if (7920 % c.order != 0) {
      fail(c.id, "order does not divide 7920");
    } else if (c.order * (7920 / c.order) != 7920) {
      fail(c.id, "index arithmetic inconsistent");
    }
    std::string lbl = structure_label(c.rep);
    if (lbl != c.label) fail(c.id, "structure label " + lbl + " != expected " + c.label);
    Subgroup syl2 = sylow_subgroup(c.rep, 2);
    std::string syl2lbl = structure_label(syl2);
    if (syl2lbl != c.syl2_label)
      fail(c.id, "Sylow-2 label " + syl2lbl + " != expected " + c.syl2_label);
    bool cyclic = syl2.order() > 1 && fingerprint(syl2).exponent == syl2.order();
    if (cyclic) ++cyclic_syl2;
    if (cyclic != (c.expected_h1.size() == 1))
      fail(c.id, "cyclic Sylow-2 flag does not match the expected obstruction column");
  }
  if (cyclic_syl2 != 13) fail(0, "expected 13 classes with nontrivial cyclic Sylow-2");

  // pairwise non-conjugacy
  for (std::size_t i = 0; i < fs.classes.size(); ++i)
    for (std::size_t j = i + 1; j < fs.classes.size(); ++j)
      if (conjugating_element(fs.classes[i].rep, fs.classes[j].rep))
        fail(fs.classes[i].id,
             "conjugate to class " + std::to_string(fs.classes[j].id));

  return issues;
}

}  // namespace hnp

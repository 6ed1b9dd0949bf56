#include <doctest.h>

#include <sstream>

#include "hnp/fingerprint.hpp"
#include "hnp/fixtures.hpp"
#include "hnp/genfile.hpp"

using namespace hnp;

TEST_CASE("M11 loads with the closure properties the analysis relies on") {
  GroupPtr m11 = load_m11();
  CHECK(m11->order() == 7920);
  CHECK(m11->degree() == 11);
  CHECK(derived_subgroup(whole_group(m11)).order() == 7920);
  CHECK(sylow_subgroup(whole_group(m11), 2).order() == 16);
}

TEST_CASE("subgroup table: counts, orders, verification") {
  const FixtureSet& fs = load_subgroup_table();
  CHECK(fs.classes.size() == 38);

  std::vector<std::uint64_t> orders;
  for (const FixtureClass& c : fs.classes) orders.push_back(c.rep.order());
  std::vector<std::uint64_t> expected{1,  2,  3,  4,  4,  5,  6,   6,   6,   8,  8,  8,  9,
                                      10, 11, 12, 12, 16, 18, 18,  20,  24,  24, 36, 36, 36,
                                      48, 55, 60, 60, 72, 72, 72,  120, 144, 360, 660, 720};
  CHECK(orders == expected);

  CHECK(verify_fixtures(fs).empty());

  // 13 classes with nontrivial cyclic Sylow-2, matching the expected column
  std::size_t cyclic = 0;
  for (const FixtureClass& c : fs.classes) {
    Subgroup syl2 = sylow_subgroup(c.rep, 2);
    if (syl2.order() > 1 && fingerprint(syl2).exponent == syl2.order()) ++cyclic;
  }
  CHECK(cyclic == 13);

  // index n = [G:H] spot rows
  CHECK(7920 / fs.classes[37].order == 11);   // the order-720 class
  CHECK(7920 / fs.classes[1].order == 3960);  // C2
}

TEST_CASE("class lookup by name") {
  const FixtureSet& fs = load_subgroup_table();
  CHECK(fs.find("C2")->id == 2);
  CHECK(fs.find("V4")->id == 4);          // alias for C2 x C2
  CHECK(fs.find("C2 x C2")->id == 4);
  CHECK(fs.find("QD8")->id == 18);        // index-name alias for QD16
  CHECK(fs.find("M10")->id == 38);
  CHECK(fs.find("S3") == nullptr);        // ambiguous
  CHECK(fs.find("S3(1)")->id == 7);
  CHECK(fs.find("S3(2)")->id == 8);
  CHECK(fs.find_all("S3").size() == 2);
  CHECK(fs.find("(C3 x C3) : C8")->id == 33);
  CHECK(fs.find("nonsense") == nullptr);
}

TEST_CASE("classification class list has 39 entries ending in the whole group") {
  const FixtureSet& fs = load_subgroup_table();
  std::vector<LabeledClass> cc = fs.classification_classes();
  REQUIRE(cc.size() == 39);
  CHECK(cc.back().label == "M11");
  CHECK(cc.back().rep.order() == 7920);
  for (std::size_t i = 0; i < 38; ++i) CHECK(cc[i].rep == fs.classes[i].rep);
}

TEST_CASE("verification catches corrupted data") {
  // build a deliberately wrong fixture set: swap one representative
  FixtureSet broken = load_subgroup_table();
  broken.classes[2].rep = broken.classes[1].rep;  // C3 slot now holds a C2
  std::vector<VerificationIssue> issues = verify_fixtures(broken);
  CHECK(!issues.empty());
}

TEST_CASE("fixtures round-trip through the generator file format") {
  const FixtureSet& fs = load_subgroup_table();
  std::ostringstream out;
  write_generator_file(out, fs.m11->degree(), fs.m11->generators());
  std::istringstream in(out.str());
  GeneratorFile f = parse_generator_file(in);
  CHECK(f.degree == 11);
  GroupPtr again = Group::generate(f.generators, f.degree);
  CHECK(again->order() == 7920);

  for (const FixtureClass& c : {fs.classes[17], fs.classes[36]}) {  // QD16, PSL(2,11)
    std::vector<Permutation> gens;
    for (const std::string& s : c.generator_strings) gens.push_back(parse_permutation(s, 11));
    std::ostringstream o2;
    write_generator_file(o2, 11, gens);
    std::istringstream i2(o2.str());
    GeneratorFile f2 = parse_generator_file(i2);
    Subgroup back = subgroup_from_generators(fs.m11, f2.generators);
    CHECK(back == c.rep);
  }
}

TEST_CASE("generator file parsing: comments, blank lines, degree inference") {
  std::istringstream in("# a comment\n\ndegree 5\n(1,2)   # trailing comment\n(1,2,3,4,5)\n");
  GeneratorFile f = parse_generator_file(in);
  CHECK(f.degree == 5);
  REQUIRE(f.generators.size() == 2);

  std::istringstream in2("(1,2)\n(3,7)\n");
  GeneratorFile f2 = parse_generator_file(in2);
  CHECK(f2.degree == 7);  // max point mentioned

  std::istringstream bad("degree x\n(1,2)\n");
  CHECK_THROWS_AS(parse_generator_file(bad), ParseError);
}

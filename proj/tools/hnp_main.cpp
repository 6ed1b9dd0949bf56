// Command-line front end: analyze a (G, H) pair, print the built-in M11
// tables, evaluate ramification scenarios, list minimal decomposition-group
// classes, or re-verify the embedded fixture data.
//
// Exit codes: 0 success, 1 usage, 2 parse error, 3 enumeration cap exceeded,
// 4 violated mathematical precondition.

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "hnp/fingerprint.hpp"
#include "hnp/fixtures.hpp"
#include "hnp/genfile.hpp"
#include "hnp/report.hpp"

namespace {

using namespace hnp;

// option combinations that cannot be resolved; maps to exit code 1
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string fixture;
  std::string group_path;
  std::string subgroup_path;
  std::string class_name;
  std::vector<std::string> places;
  std::string format = "json";
  std::string schur_text;
  std::string export_dir;
  std::size_t cap = kDefaultOrderCap;
  int threads = 1;
  bool ramified_only = false;
};

struct Inputs {
  GroupPtr group;
  std::string group_label;
  Subgroup subgroup;
  SubgroupInfo subgroup_info;
  std::vector<Subgroup> places;
  std::vector<SubgroupInfo> place_infos;
  std::vector<LabeledClass> classes;  // classification classes (fixture mode)
  std::optional<SchurAssertion> schur;
  const FixtureSet* fixtures = nullptr;
};

SubgroupInfo info_of(const Subgroup& s, const std::string& label, int class_id) {
  SubgroupInfo info;
  info.class_id = class_id;
  info.label = label;
  info.order = s.order();
  for (ElementIndex g : s.witness_generators())
    info.generators.push_back(s.parent()->element(g).cycle_string());
  return info;
}

Subgroup subgroup_from_file(const GroupPtr& g, const std::string& path) {
  GeneratorFile f = load_generator_file(path);
  if (f.degree > g->degree()) throw PreconditionError("subgroup degree exceeds group degree");
  std::vector<Permutation> gens;
  for (const Permutation& p : f.generators) {
    // pad to the group's degree
    std::vector<Point> img(static_cast<std::size_t>(g->degree()));
    for (std::size_t i = 0; i < img.size(); ++i)
      img[i] = i < p.images().size() ? p.images()[i] : static_cast<Point>(i);
    gens.push_back(Permutation(std::move(img)));
  }
  return subgroup_from_generators(g, gens);
}

Inputs resolve_inputs(const Options& opt, bool need_subgroup) {
  Inputs in;
  if (!opt.fixture.empty()) {
    if (opt.fixture != "m11" && opt.fixture != "M11")
      throw ParseError("unknown fixture '" + opt.fixture + "' (available: m11)");
    const FixtureSet& fs = load_subgroup_table();
    in.fixtures = &fs;
    in.group = fs.m11;
    in.group_label = "M11";
    in.schur = fs.schur;
    in.classes = fs.classification_classes();
    if (need_subgroup) {
      if (opt.class_name.empty()) throw UsageError("--class is required with --fixture");
      const FixtureClass* c = nullptr;
      try {
        int id = std::stoi(opt.class_name);
        for (const FixtureClass& fc : fs.classes)
          if (fc.id == id) c = &fc;
      } catch (...) {
        c = fs.find(opt.class_name);
        if (!c && fs.find_all(opt.class_name).size() > 1)
          throw ParseError("class label '" + opt.class_name +
                           "' is ambiguous; use e.g. '" + opt.class_name + "(1)'");
      }
      if (!c) throw ParseError("unknown fixture class '" + opt.class_name + "'");
      in.subgroup = c->rep;
      in.subgroup_info = info_of(c->rep, c->unique_name, c->id);
    }
    for (const std::string& pname : opt.places) {
      const FixtureClass* c = fs.find(pname);
      if (!c) {
        try {
          int id = std::stoi(pname);
          for (const FixtureClass& fc : fs.classes)
            if (fc.id == id) c = &fc;
        } catch (...) {
        }
      }
      if (c) {
        in.places.push_back(c->rep);
        in.place_infos.push_back(info_of(c->rep, c->unique_name, c->id));
      } else if (pname == "M11" || pname == "m11") {
        Subgroup whole = whole_group(fs.m11);
        in.places.push_back(whole);
        in.place_infos.push_back(info_of(whole, "M11", 39));
      } else {
        throw ParseError("unknown fixture class '" + pname + "' for --place");
      }
    }
  } else {
    if (opt.group_path.empty()) throw UsageError("either --fixture or --group is required");
    GeneratorFile gf = load_generator_file(opt.group_path);
    in.group = Group::generate(gf.generators, gf.degree, opt.cap);
    in.group_label = "G";
    if (need_subgroup) {
      if (opt.subgroup_path.empty()) throw UsageError("--subgroup is required with --group");
      in.subgroup = subgroup_from_file(in.group, opt.subgroup_path);
      in.subgroup_info = info_of(in.subgroup, structure_label(in.subgroup), 0);
    }
    int next_id = 1;
    for (const std::string& path : opt.places) {
      Subgroup p = subgroup_from_file(in.group, path);
      in.place_infos.push_back(info_of(p, structure_label(p), 0));
      in.classes.push_back(LabeledClass{next_id++, in.place_infos.back().label, p});
      in.places.push_back(std::move(p));
    }
    if (!opt.schur_text.empty()) in.schur = SchurAssertion{opt.schur_text};
  }
  return in;
}

int run_analyze(const Options& opt) {
  Inputs in = resolve_inputs(opt, true);
  ObstructionResult res =
      classify_decomposition_groups(in.subgroup, in.classes, in.schur, opt.threads);
  ObstructionReport rep = make_obstruction_report(in.subgroup, in.subgroup_info, in.group_label, res);
  std::cout << (opt.format == "md" ? to_markdown(rep) : to_json(rep));
  return 0;
}

int run_minimal(const Options& opt) {
  Inputs in = resolve_inputs(opt, true);
  ObstructionResult res =
      classify_decomposition_groups(in.subgroup, in.classes, in.schur, opt.threads);
  std::vector<std::pair<int, std::string>> minimal;
  for (int id : res.minimal_true)
    for (const ClassOutcome& c : res.classes)
      if (c.id == id) minimal.emplace_back(id, c.label);
  if (opt.format == "md") {
    std::cout << "Minimal decomposition-group classes with trivial obstruction for "
              << in.subgroup_info.label << ":";
    for (const auto& [id, label] : minimal) std::cout << " " << label << ";";
    std::cout << "\n";
  } else {
    nlohmann::ordered_json j;
    j["schema_version"] = "1";
    j["command"] = "minimal";
    j["subgroup"] = {{"class_id", in.subgroup_info.class_id},
                     {"label", in.subgroup_info.label},
                     {"order", in.subgroup_info.order}};
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& [id, label] : minimal) arr.push_back({{"class_id", id}, {"label", label}});
    j["minimal_true"] = arr;
    std::cout << j.dump(2) << "\n";
  }
  return 0;
}

int run_tables(const Options& opt) {
  const FixtureSet& fs = load_subgroup_table();
  std::vector<std::vector<Int>> h1;
  for (const FixtureClass& c : fs.classes) h1.push_back(h1_flabby_invariants(c.rep, fs.schur));
  std::vector<TableRow> rows = make_table_rows(fs, h1);
  std::cout << (opt.format == "json" ? tables_to_json(rows) : tables_to_markdown(rows));
  return 0;
}

int run_scenario(const Options& opt) {
  Inputs in = resolve_inputs(opt, true);
  ScenarioResult res = evaluate_scenario(in.subgroup, in.places, in.schur, opt.ramified_only);
  ScenarioReport rep =
      make_scenario_report(in.subgroup, in.subgroup_info, in.group_label, in.place_infos, res);
  std::cout << (opt.format == "md" ? to_markdown(rep) : to_json(rep));
  return 0;
}

int run_verify(const Options& opt) {
  const FixtureSet& fs = load_subgroup_table();
  std::vector<VerificationIssue> issues = verify_fixtures(fs);
  if (!opt.export_dir.empty()) {
    namespace fs2 = std::filesystem;
    fs2::create_directories(opt.export_dir);
    {
      std::ofstream out(fs2::path(opt.export_dir) / "m11.gens");
      write_generator_file(out, fs.m11->degree(), fs.m11->generators());
    }
    for (const FixtureClass& c : fs.classes) {
      std::string name = "class_" + std::string(c.id < 10 ? "0" : "") + std::to_string(c.id) + ".gens";
      std::ofstream out(fs2::path(opt.export_dir) / name);
      out << "# class " << c.id << ": " << c.label << " (order " << c.order << ")\n";
      std::vector<Permutation> gens;
      for (const std::string& s : c.generator_strings)
        gens.push_back(parse_permutation(s, fs.m11->degree()));
      write_generator_file(out, fs.m11->degree(), gens);
    }
  }
  if (issues.empty()) {
    std::cout << fs.classes.size() << "/" << fs.classes.size() << " ok\n";
    return 0;
  }
  for (const VerificationIssue& i : issues)
    std::cerr << "class " << i.class_id << ": " << i.message << "\n";
  throw PreconditionError("fixture verification failed");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"First obstruction to the Hasse norm principle via the Drakokhrust-Platonov method"};
  app.require_subcommand(1);

  Options opt;
  auto add_common = [&](CLI::App* cmd, bool with_inputs) {
    cmd->add_option("--format", opt.format, "Output format: json or md")
        ->check(CLI::IsMember({"json", "md"}));
    if (with_inputs) {
      cmd->add_option("--fixture", opt.fixture, "Built-in group (m11)");
      cmd->add_option("--group", opt.group_path, "Generator file for G");
      cmd->add_option("--subgroup", opt.subgroup_path, "Generator file for H");
      cmd->add_option("--class", opt.class_name, "Fixture class id or label");
      cmd->add_option("--cap", opt.cap, "Group enumeration cap (default 10000)");
      cmd->add_option("--threads", opt.threads, "Worker threads");
      cmd->add_option("--schur-trivial", opt.schur_text,
                      "Assert M(G) = 0, with a provenance note (file mode)");
    }
  };

  CLI::App* analyze = app.add_subcommand("analyze", "Kernel, unramified term, H^1 and classification");
  add_common(analyze, true);
  analyze->add_option("--place", opt.places, "Extra decomposition groups to classify (file mode)");

  CLI::App* tables = app.add_subcommand("tables", "The two built-in M11 tables");
  tables->add_option("--format", opt.format, "Output format: json or md")
      ->check(CLI::IsMember({"json", "md"}));

  CLI::App* scenario = app.add_subcommand("scenario", "Evaluate one ramification scenario");
  add_common(scenario, true);
  scenario->add_option("--place", opt.places, "Decomposition groups of the scenario");
  scenario->add_flag("--ramified-only", opt.ramified_only,
                     "Also report the diagnostic quotient without the unramified term");

  CLI::App* minimal = app.add_subcommand("minimal", "Minimal classes with trivial obstruction");
  add_common(minimal, true);

  CLI::App* verify = app.add_subcommand("verify-fixtures", "Re-check the embedded M11 data");
  verify->add_option("--export", opt.export_dir, "Write the fixtures as generator files");

  const std::string default_format_tables = "md";

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (analyze->parsed()) return run_analyze(opt);
    if (tables->parsed()) {
      if (tables->count("--format") == 0) opt.format = default_format_tables;
      return run_tables(opt);
    }
    if (scenario->parsed()) return run_scenario(opt);
    if (minimal->parsed()) return run_minimal(opt);
    if (verify->parsed()) return run_verify(opt);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 1;
  } catch (const hnp::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const hnp::CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return 3;
  } catch (const hnp::PreconditionError& e) {
    std::cerr << "precondition violated: " << e.what() << "\n";
    return 4;
  }
  return 1;
}

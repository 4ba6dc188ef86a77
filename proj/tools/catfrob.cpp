#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "catfrob/suite.hpp"

using namespace catfrob;

namespace {

constexpr int kMismatch = 1;
constexpr int kUsage = 2;

std::vector<std::string> split(const std::string& list) {
  std::vector<std::string> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

std::uint64_t default_seed() {
  const char* env = std::getenv("CATFROB_SEED");
  if (!env || !*env) return 42;
  try {
    return std::stoull(env);
  } catch (const std::exception&) {
    throw UsageError(std::string("CATFROB_SEED is not a number: ") + env);
  }
}

bool is_file_example(const std::string& name) {
  return name.size() > 5 && name.compare(name.size() - 5, 5, ".json") == 0;
}

std::vector<ExampleDescriptor> resolve_examples(const std::string& name) {
  if (name == "all") return example_registry();
  if (is_file_example(name)) return {example_from_file(name)};
  const auto* ex = find_example(name);
  if (!ex) throw UsageError("unknown example " + name + " (see `catfrob list`)");
  return {*ex};
}

int verify(const std::string& example, const std::string& suites, std::uint64_t seed, std::size_t budget,
           const std::string& json_path) {
  std::vector<SuiteReport> reports;
  for (const auto& ex : resolve_examples(example)) {
    auto names = suites == "all" ? ex.suites() : split(suites);
    if (names.empty()) throw UsageError("empty suite list");
    for (const auto& s : names) {
      auto r = run_suite(ex, s, seed, budget);
      std::cout << r.example << " " << r.suite << ": " << outcome(r.laws);
      if (r.expected) std::cout << " (expected " << r.expected->str() << ")";
      std::cout << (r.matched ? "" : " MISMATCH") << "\n";
      for (const auto& id : r.laws.failures()) {
        const auto* law = r.laws.find(id);
        std::cout << "  " << to_string(law->verdict) << " " << id;
        if (law->witness) std::cout << " at " << law->witness->context;
        if (!law->detail.empty()) std::cout << ": " << law->detail;
        std::cout << "\n";
      }
      std::cerr << std::fixed << std::setprecision(3) << "  [" << r.example << " " << r.suite << " "
                << r.wall_seconds << "s]\n";
      reports.push_back(std::move(r));
    }
  }
  if (!json_path.empty()) {
    std::ofstream out(json_path, std::ios::binary);
    if (!out) throw UsageError("cannot write " + json_path);
    out << reports_text(reports);
  }
  for (const auto& r : reports)
    if (!r.matched) return kMismatch;
  return 0;
}

int load(const std::string& path, bool check) {
  try {
    if (check) {
      AnyHopf h = load_structure_constants(path);
      std::visit([](const auto& x) { std::cout << "ok " << x.name << " " << x.cat.describe(x.carrier) << "\n"; }, h);
    } else {
      std::ifstream in(path);
      if (!in) throw LoadError("parse", "cannot open " + path);
      std::cout << compact_dump(any_hopf_to_json(parse_structure_constants(json::parse(in))));
    }
  } catch (const LoadError& e) {
    std::cerr << "load error (" << e.kind << "): " << e.what() << "\n";
    return kMismatch;
  } catch (const json::exception& e) {
    std::cerr << "load error (parse): " << e.what() << "\n";
    return kMismatch;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact checks of Hopf monads, Frobenius monads and linear distributivity"};
  app.require_subcommand(1);

  std::string example;
  std::string suites = "all";
  std::uint64_t seed = 0;
  std::size_t budget = 3;
  std::string json_path;
  auto* verify_cmd = app.add_subcommand("verify", "run suites on an example and compare with the expected outcomes");
  verify_cmd->add_option("--example", example, "registered example name, a structure-constant .json file, or all")
      ->required();
  verify_cmd->add_option("--suite", suites, "comma-separated suite names, or all")->capture_default_str();
  auto* seed_opt = verify_cmd->add_option("--seed", seed, "probe seed (default $CATFROB_SEED, else 42)");
  verify_cmd->add_option("--probe-budget", budget, "number of probe objects")->capture_default_str();
  verify_cmd->add_option("--json", json_path, "write the JSON report here");

  auto* list_cmd = app.add_subcommand("list", "list registered examples and suites");

  std::string file;
  bool check = false;
  auto* load_cmd = app.add_subcommand("load", "read a structure-constant file");
  load_cmd->add_option("FILE", file, "structure-constant JSON")->required();
  load_cmd->add_flag("--check", check, "verify the Hopf axioms instead of printing normalized constants");

  std::string export_name;
  auto* export_cmd = app.add_subcommand("export", "print the structure constants of a registered Hopf example");
  export_cmd->add_option("NAME", export_name, "registered example name")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (*verify_cmd) {
      if (seed_opt->count() == 0) seed = default_seed();
      return verify(example, suites, seed, budget, json_path);
    }
    if (*list_cmd) {
      for (const auto& line : list_examples()) std::cout << line << "\n";
      std::cout << "suites:";
      for (const auto& s : suite_names()) std::cout << " " << s;
      std::cout << "\n";
      return 0;
    }
    if (*load_cmd) return load(file, check);
    if (*export_cmd) {
      const auto* ex = find_example(export_name);
      if (!ex) throw UsageError("unknown example " + export_name);
      auto data = ex->make();
      std::visit(
          [&](const auto& x) {
            if constexpr (requires { x.s; }) std::cout << compact_dump(hopf_to_json(x));
            else throw UsageError(export_name + " is not a Hopf algebra");
          },
          data);
      return 0;
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const LoadError& e) {
    std::cerr << "load error (" << e.kind << "): " << e.what() << "\n";
    return kMismatch;
  }
  return kUsage;
}

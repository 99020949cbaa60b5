// Command-line workbench: build algebra files, verify axioms and theorems,
// and emit machine-readable reports.

#include <CLI11.hpp>
#include <iostream>
#include <set>
#include <string>

#include "cellab/report.hpp"
#include "cellab/serialize.hpp"

using namespace cellab;

namespace {

struct FieldChoice {
  bool rational = true;
  std::uint64_t p = 0;
};

FieldChoice parse_field(const std::string& s) {
  if (s.empty() || s == "rational") return {true, 0};
  if (s.rfind("gf(", 0) == 0 && s.back() == ')') {
    FieldChoice f;
    f.rational = false;
    f.p = std::stoull(s.substr(3, s.size() - 4));
    make_prime_field_one(f.p);  // validates
    return f;
  }
  throw std::invalid_argument("unknown field '" + s + "' (use rational or gf(p))");
}

template <class K>
Family<K> build_cell_family(const AlgebraSpec& spec, const K& one) {
  if (spec.family == "matrix") return build_matrix_algebra<K>(spec.n, one);
  if (spec.family == "quiver") return build_quiver_example<K>(one);
  if (spec.family == "tl") {
    if (spec.delta.size() != 1) throw std::invalid_argument("tl needs exactly one --delta");
    return build_tl<K>(spec.n, spec.delta[0], one);
  }
  if (spec.family == "bubble") return build_bubble<K>(spec.n, spec.m, spec.delta, one);
  throw std::invalid_argument("unknown family '" + spec.family + "'");
}

template <class K>
json build_document(const AlgebraSpec& spec, const K& one) {
  if (spec.family == "pnm")
    return partition_family_to_json(build_multicolour_partition<K>(spec.n, spec.m, spec.delta, one), spec);
  return family_to_json(build_cell_family(spec, one), spec);
}

int cmd_build(const AlgebraSpec& spec, const std::string& out_path) {
  json doc;
  if (spec.rational_field) {
    doc = build_document(spec, Rational(1));
  } else {
    doc = build_document(spec, make_prime_field_one(spec.p));
  }
  std::ifstream existing(out_path);
  if (existing) {
    try {
      json old;
      existing >> old;
      if (old == doc) {
        std::cout << "up to date: " << out_path << " (" << doc.at("content_hash").get<std::string>()
                  << ")\n";
        return 0;
      }
    } catch (...) {
      // unreadable existing file: overwrite
    }
  }
  write_json_file(out_path, doc);
  std::cout << "wrote " << out_path << " (" << doc.at("content_hash").get<std::string>() << ")\n";
  return 0;
}

void print_section_line(const std::string& name, const json& doc) {
  if (!doc.contains(name)) return;
  const json& sec = doc.at(name);
  std::cout << "  " << name << ": ";
  if (sec.is_string()) {
    std::cout << sec.get<std::string>() << "\n";
    return;
  }
  bool failed = sec.dump().find("\"fail\"") != std::string::npos;
  std::cout << (failed ? "FAIL" : "computed") << "\n";
}

template <class K>
int run_report(const json& algdoc, const AlgebraSpec& spec, const K& one,
               const std::set<std::string>& sections, const std::string& out_path,
               unsigned long seed) {
  ReportResult res;
  if (algdoc.at("kind") == "assoc_algebra") {
    res = build_partition_report(partition_family_from_json(algdoc, one), spec, sections);
  } else {
    res = build_cell_report(family_from_json(algdoc, one), spec, sections, seed);
  }
  if (!out_path.empty()) write_json_file(out_path, res.doc);
  for (const std::string& s :
       {"gram", "simples", "verify_assumptions", "verify_theorems", "blocks", "loewy", "oracle"})
    print_section_line(s, res.doc);
  std::cout << (res.checks_failed ? "FAIL" : "PASS") << "\n";
  return res.checks_failed ? 1 : 0;
}

int dispatch_report(const std::string& in_path, const std::set<std::string>& sections,
                    const std::string& out_path, unsigned long seed) {
  json algdoc = load_json_file(in_path);
  AlgebraSpec spec = spec_from_json(algdoc.at("spec"));
  if (spec.rational_field)
    return run_report(algdoc, spec, Rational(1), sections, out_path, seed);
  return run_report(algdoc, spec, make_prime_field_one(spec.p), sections, out_path, seed);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact workbench for cellular algebras and their idempotent localizations"};
  app.require_subcommand(1);

  AlgebraSpec spec;
  std::string field_str = "rational";
  std::string out_path, in_path, sections_csv;
  std::vector<std::string> delta_strs;
  unsigned long seed = 0x5eed;

  CLI::App* build = app.add_subcommand("build", "construct an algebra file");
  build->add_option("--family", spec.family, "matrix | quiver | tl | bubble | pnm")->required();
  build->add_option("--n", spec.n, "size parameter");
  build->add_option("--m", spec.m, "number of colours");
  build->add_option("--delta", delta_strs, "loop parameter (repeatable, exact rational)");
  build->add_option("--field", field_str, "rational (default) or gf(p)");
  build->add_option("--seed", seed, "seed for sampled validation order");
  build->add_option("--out", out_path, "output file")->required();

  CLI::App* report = app.add_subcommand("report", "run checks and write a report");
  report->add_option("file", in_path, "algebra file")->required();
  report->add_option("--sections", sections_csv,
                     "comma list: gram,simples,blocks,loewy,verify-assumptions,verify-theorems,oracle");
  report->add_option("--out", out_path, "report JSON output");
  report->add_option("--seed", seed, "seed for sampled validation order");

  CLI::App* verify = app.add_subcommand("verify", "validate axioms and idempotent assumptions");
  verify->add_option("file", in_path, "algebra file")->required();

  CLI::App* oracle = app.add_subcommand("oracle", "trace-form semisimplicity cross-check");
  oracle->add_option("file", in_path, "algebra file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (build->parsed()) {
      for (const auto& v : delta_strs) spec.delta.push_back(Rational::parse(v));
      FieldChoice f = parse_field(field_str);
      spec.rational_field = f.rational;
      spec.p = f.p;
      spec.seed = seed;
      return cmd_build(spec, out_path);
    }
    std::set<std::string> sections;
    if (report->parsed() && !sections_csv.empty()) {
      size_t pos = 0;
      while (pos <= sections_csv.size()) {
        size_t comma = sections_csv.find(',', pos);
        std::string tok =
            sections_csv.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        if (!all_report_sections().count(tok)) throw std::invalid_argument("unknown section '" + tok + "'");
        sections.insert(tok);
        if (comma == std::string::npos) break;
        pos = comma + 1;
      }
    }
    if (verify->parsed()) sections = {"verify-assumptions"};
    if (oracle->parsed()) sections = {"oracle", "simples"};
    return dispatch_report(in_path, sections, out_path, seed);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

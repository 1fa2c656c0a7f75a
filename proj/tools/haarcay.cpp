// Command-line front end for the haarcay library.
#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <regex>
#include <sstream>

#include "haarcay/automorphism.hpp"
#include "haarcay/catalog.hpp"
#include "haarcay/error.hpp"
#include "haarcay/serialize.hpp"
#include "haarcay/words.hpp"

using namespace haarcay;

namespace {

/// A group argument: a JSON file, inline JSON, or one of the shorthands
/// Z<n>, D<2n>, Q8, A4.
FamilySpec parse_group_arg(const std::string& arg) {
  std::smatch m;
  if (std::regex_match(arg, m, std::regex("Z([0-9]+)"))) return {CyclicSpec{std::stoi(m[1])}};
  if (std::regex_match(arg, m, std::regex("D([0-9]+)"))) {
    int k = std::stoi(m[1]);
    if (k % 2) throw PreconditionError("dihedral shorthand D<2n> needs an even order");
    return {DihedralSpec{k / 2}};
  }
  if (arg == "Q8") return {QuaternionSpec{}};
  if (arg == "A4") return {PresentedSpec{3, {"xx", "yy", "zzz", "XYxy", "Zxzy", "ZyzXY"}, "xyz"}};
  if (!arg.empty() && arg.front() == '{') return family_from_json(Json::parse(arg));
  std::ifstream in(arg);
  if (!in) throw PreconditionError("cannot open group spec '" + arg + "'");
  return family_from_json(Json::parse(in));
}

StatusOptions status_options() {
  StatusOptions o;
  if (const char* b = std::getenv("HAARCAY_BUDGET")) {
    std::uint64_t v = std::stoull(b);
    o.ir.node_budget = v;
    o.regular.budget = v;
  }
  return o;
}

Graph read_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot open edge list '" + path + "'");
  return read_edge_list(in);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Haar graph and bi-Cayley verification toolkit"};
  app.require_subcommand(1);
  int exit_code = 0;

  std::string group_arg, set_words, out_path, normal_words, qset_words, model_arg, edges_path, case_id;
  bool all_cases = false, list_cases = false, connected = false, dedupe = false;
  unsigned threads = 1;
  std::size_t max_order = 30;

  auto* build = app.add_subcommand("build-group", "Build a group table from a family spec");
  build->add_option("spec", group_arg, "JSON file, inline JSON, or Z<n>/D<2n>/Q8/A4")->required();

  auto* haar = app.add_subcommand("haar", "Write the edge list of H(H,S)");
  haar->add_option("group", group_arg)->required();
  haar->add_option("--set", set_words, "Comma-separated words, e.g. 1,a,a-1,b,ab")->required();
  haar->add_option("--out", out_path, "Edge list path (stdout if omitted)");

  auto* aut = app.add_subcommand("aut", "Automorphism group of a graph given as an edge list");
  aut->add_option("edges", edges_path)->required();

  auto* status = app.add_subcommand("status", "Cayley status of H(H,S) with a certificate");
  status->add_option("group", group_arg)->required();
  status->add_option("--set", set_words)->required();

  auto* obstruct = app.add_subcommand("obstruct", "Quotient obstruction check");
  obstruct->add_option("group", group_arg)->required();
  obstruct->add_option("--normal", normal_words, "Words generating N")->required();
  obstruct->add_option("--qset", qset_words, "S-bar as words in H/N (or in --model)")->required();
  obstruct->add_option("--model", model_arg, "Group in which --qset is written; carried to H/N by an isomorphism");

  auto* repro = app.add_subcommand("reproduce", "Run catalog cases and print JSONL reports");
  repro->add_option("case_id", case_id);
  repro->add_flag("--all", all_cases);
  repro->add_flag("--list", list_cases, "List case ids and claims");
  repro->add_option("--threads", threads);
  repro->add_option("--out", out_path, "Also write the JSONL to this file");

  auto* enumerate = app.add_subcommand("enumerate", "Classify every H(H,S) with 1 in S");
  enumerate->add_option("group", group_arg)->required();
  enumerate->add_flag("--connected", connected);
  enumerate->add_flag("--dedupe", dedupe, "One representative per equivalence class");

  auto* scan = app.add_subcommand("scan-inner-abelian", "Inner abelian groups in the constructor catalog");
  scan->add_option("--max-order", max_order)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    const StatusOptions opts = status_options();

    if (*build) {
      GroupTable h = build_family(parse_group_arg(group_arg));
      Json j = group_to_json(h);
      j["abelian"] = is_abelian(h);
      std::cout << j.dump() << "\n";
    } else if (*haar) {
      GroupTable h = build_family(parse_group_arg(group_arg));
      Graph g = haar_graph(h, parse_word_set(h, set_words)).graph;
      if (out_path.empty()) {
        write_edge_list(std::cout, g);
      } else {
        std::ofstream out(out_path);
        write_edge_list(out, g);
        std::cerr << g.n() << " vertices, " << g.edge_count() << " edges -> " << out_path << "\n";
      }
    } else if (*aut) {
      Graph g = read_graph(edges_path);
      auto r = automorphism_group(g, opts.ir);
      Json gens = Json::array();
      for (const auto& p : r.group.generators()) gens.push_back(perm_to_json(p));
      auto orbits = r.group.orbits();
      std::cout << Json{{"vertices", g.n()},
                        {"aut_order", r.group.order_string()},
                        {"vertex_transitive", orbits.size() <= 1},
                        {"orbits", orbits},
                        {"generators", gens},
                        {"nodes", r.nodes}}
                       .dump()
                << "\n";
    } else if (*status) {
      GroupTable h = build_family(parse_group_arg(group_arg));
      ElementSet s = parse_word_set(h, set_words);
      Graph g = haar_graph(h, s).graph;
      StatusHints hints;
      hints.haar = HaarHint{&h, s};
      Certificate c = cayley_status(g, hints, opts);
      bool ok = c.verdict != Verdict::Unknown && verify_certificate(g, c);
      Json j = certificate_to_json(c);
      j["verified"] = ok;
      std::cout << j.dump() << "\n";
      if (!ok) exit_code = 1;
    } else if (*obstruct) {
      GroupTable h = build_family(parse_group_arg(group_arg));
      ElementSet n = subgroup_generated(h, parse_word_set(h, normal_words));
      Quotient q = quotient(h, n);
      ElementSet sbar(q.group.order());
      if (model_arg.empty()) {
        sbar = parse_word_set(q.group, qset_words);
      } else {
        GroupTable model = build_family(parse_group_arg(model_arg));
        auto iso = find_isomorphism(model, q.group);
        if (!iso) throw PreconditionError("H/N is not isomorphic to the model group");
        for (Element x : parse_word_set(model, qset_words).elements()) sbar.insert((*iso)[x]);
      }
      ObstructionOptions oo;
      oo.status = opts;
      auto r = check_quotient_obstruction(h, n, sbar, oo);
      std::cout << obstruction_to_json(r).dump() << "\n";
      if (!r.obstructed()) exit_code = 1;
    } else if (*repro) {
      if (list_cases) {
        for (const auto& c : case_catalog()) std::cout << c.id << "\t" << c.expected << "\t" << c.claim << "\n";
        return 0;
      }
      if (all_cases == !case_id.empty()) throw PreconditionError("give exactly one of a case id or --all");
      ReproduceOptions ro;
      ro.status = opts;
      ro.obstruction.status = opts;
      ro.threads = threads;
      std::vector<CaseReport> reports;
      if (all_cases) reports = reproduce_all(ro);
      else reports.push_back(reproduce(find_case(case_id), ro));
      std::ofstream file;
      if (!out_path.empty()) file.open(out_path);
      for (const auto& r : reports) {
        std::string line = report_to_json(r).dump();
        std::cout << line << "\n";
        if (file) file << line << "\n";
        std::cerr << (r.pass ? "PASS " : "FAIL ") << r.case_id << " (" << r.verdict << ", " << static_cast<long>(r.millis)
                  << " ms)\n";
        if (!r.pass) exit_code = 1;
      }
    } else if (*enumerate) {
      GroupTable h = build_family(parse_group_arg(group_arg));
      EnumerateOptions eo;
      eo.connected_only = connected;
      eo.dedupe = dedupe;
      eo.status = opts;
      enumerate_haar(h, eo, [&](const EnumeratedHaar& e) {
        Json j{{"set", e.s.elements()}, {"class_size", e.class_size}, {"verified", e.verified},
               {"certificate", certificate_to_json(e.certificate)}};
        std::cout << j.dump() << "\n";
        if (!e.verified) exit_code = 1;
      });
    } else if (*scan) {
      for (const auto& e : inner_abelian_scan(max_order)) {
        if (e.inner_abelian != e.listed) {
          exit_code = 1;
          std::cerr << "MISMATCH " << e.name << ": inner_abelian=" << e.inner_abelian << " listed=" << e.listed << "\n";
        }
        if (e.inner_abelian) std::cout << Json{{"group", e.name}, {"order", e.order}, {"listed", e.listed}}.dump() << "\n";
      }
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return exit_code;
}

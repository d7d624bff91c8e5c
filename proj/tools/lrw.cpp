// lrw: command-line front end for rewriting systems, Cayley balls and the
// geodetic-graph verification suites.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "lrw/cayley.hpp"
#include "lrw/error.hpp"
#include "lrw/graph.hpp"
#include "lrw/presentations.hpp"
#include "lrw/rewriting.hpp"
#include "lrw/suites.hpp"
#include "lrw/verifiers.hpp"

namespace {

  using nlohmann::json;

  // Exit codes.
  constexpr int exit_ok           = 0;
  constexpr int exit_failed_check = 1;
  constexpr int exit_bad_input    = 2;

  struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
  };

  std::string read_input(std::string const& path) {
    if (path == "-") {
      return {std::istreambuf_iterator<char>(std::cin),
              std::istreambuf_iterator<char>()};
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw InputError(path + ": cannot open");
    }
    return {std::istreambuf_iterator<char>(in),
            std::istreambuf_iterator<char>()};
  }

  std::string source_name(std::string const& path) {
    return path == "-" ? "<stdin>" : path;
  }

  lrw::RewritingSystem load_system(std::string const& path) {
    auto text = read_input(path);
    try {
      return lrw::parse_system(text);
    } catch (lrw::ParseError const& e) {
      throw InputError(source_name(path) + ": " + e.what());
    }
  }

  std::size_t vertex_cap(std::size_t flag_value, bool flag_given) {
    if (flag_given) {
      return flag_value;
    }
    if (char const* env = std::getenv("LRW_VERTEX_CAP")) {
      try {
        auto cap = std::stoull(env);
        if (cap >= 1) {
          return static_cast<std::size_t>(cap);
        }
      } catch (std::exception const&) {
      }
      throw InputError("LRW_VERTEX_CAP must be a positive integer");
    }
    return lrw::default_vertex_cap;
  }

  void print_json(json const& j) {
    std::cout << j.dump(2) << '\n';
  }

  ////////////////////////////////////////////////////////////////////////
  // Subcommands
  ////////////////////////////////////////////////////////////////////////

  int run_check(std::string const& path, std::string const& format) {
    auto sys    = load_system(path);
    auto report = lrw::check_convergent(sys);
    if (format == "json") {
      print_json(lrw::to_json(sys, report));
    } else {
      std::vector<std::string> parts;
      if (report.length_reducing) {
        parts.push_back(report.convergent() ? "convergent" : "not confluent");
        parts.push_back("length-reducing");
      } else {
        parts.push_back("not length-reducing");
      }
      if (!report.inverse_closed) {
        parts.push_back("no inverses declared");
      } else if (report.convergent()) {
        parts.push_back(report.presents_group ? "presents group"
                                              : "does not present a group");
      }
      for (std::size_t i = 0; i < parts.size(); ++i) {
        std::cout << (i == 0 ? "" : ", ") << parts[i];
      }
      std::cout << '\n';
      std::cout << "max lhs length: " << sys.max_lhs_length() << '\n';
      auto const& a = sys.alphabet();
      for (auto const& u : report.unresolved_pairs) {
        std::cout << "unresolved critical pair "
                  << lrw::format_word(a, u.pair.superposition) << " -> {"
                  << lrw::format_word(a, u.left_normal) << ", "
                  << lrw::format_word(a, u.right_normal) << "}\n";
      }
    }
    return report.convergent() ? exit_ok : exit_failed_check;
  }

  int run_normalize(std::string const& path, std::string const& word) {
    auto sys = load_system(path);
    if (!lrw::is_length_reducing(sys)) {
      throw InputError(source_name(path) + ": system is not length-reducing");
    }
    lrw::Word w;
    try {
      w = lrw::parse_word(sys.alphabet(), word);
    } catch (lrw::ParseError const& e) {
      throw InputError(std::string("word: ") + e.what());
    }
    std::cout << lrw::format_word(sys.alphabet(), lrw::normalize(sys, w))
              << '\n';
    return exit_ok;
  }

  int run_gen_plain(std::string const&              factors,
                    std::vector<std::string> const& tables,
                    std::string const&              output) {
    lrw::PlainSpec spec;
    try {
      if (!factors.empty()) {
        spec = lrw::PlainSpec::parse(factors);
      }
      for (auto const& path : tables) {
        try {
          spec.factors.emplace_back(
              lrw::FiniteGroupTable::from_csv(read_input(path)));
        } catch (lrw::ParseError const& e) {
          throw InputError(source_name(path) + ": " + e.what());
        }
      }
    } catch (lrw::ParseError const& e) {
      throw InputError(std::string("--factors: ") + e.what());
    }
    auto text = lrw::to_rws(lrw::gen_plain(spec));
    if (output.empty() || output == "-") {
      std::cout << text;
    } else {
      std::ofstream out(output, std::ios::binary);
      if (!out) {
        throw InputError(output + ": cannot write");
      }
      out << text;
    }
    return exit_ok;
  }

  int run_ball(std::string const& path,
               std::uint32_t      radius,
               std::size_t        cap,
               std::string const& format) {
    auto sys  = load_system(path);
    auto ball = lrw::build_ball(sys, radius, cap);
    if (format == "dot") {
      std::cout << lrw::ball_to_dot(ball);
    } else if (format == "json") {
      print_json(lrw::ball_to_json(ball));
    } else {
      std::cout << "vertices: " << ball.size()
                << "\nedges: " << ball.graph().num_edges() << "\nlevels:";
      for (auto n : ball.level_sizes()) {
        std::cout << ' ' << n;
      }
      std::cout << '\n';
    }
    return exit_ok;
  }

  int run_analyze(std::string const& path, std::string const& format) {
    auto text  = read_input(path);
    auto first = text.find_first_not_of(" \t\r\n");
    json out;
    lrw::SimpleGraph              graph;
    std::optional<lrw::LeveledGraph> ball;
    try {
      if (first != std::string::npos && text[first] == '{') {
        ball  = lrw::leveled_graph_from_json(json::parse(text));
        graph = ball->graph;
      } else {
        graph = lrw::parse_edge_list(text);
      }
    } catch (lrw::ParseError const& e) {
      throw InputError(source_name(path) + ": " + e.what());
    } catch (json::exception const& e) {
      throw InputError(source_name(path) + ": " + e.what());
    }
    if (!lrw::is_connected(graph)) {
      throw InputError(source_name(path) + ": graph is not connected");
    }

    out["vertices"] = graph.num_vertices();
    out["edges"]    = graph.num_edges();
    auto geo        = lrw::is_geodetic(graph);
    out["geodetic"] = geo.geodetic;
    if (geo.witness) {
      out["geodetic_witness"] = lrw::to_json(*geo.witness);
    }
    auto decomp = lrw::blocks(graph);
    auto tree   = lrw::block_cut_tree(decomp, graph.num_vertices());
    json blocks = json::array();
    auto diams  = lrw::block_diameters(decomp, lrw::all_pairs_distances(graph));
    for (std::size_t b = 0; b < decomp.blocks.size(); ++b) {
      blocks.push_back(
          {{"vertices", decomp.blocks[b]}, {"diameter", diams[b]}});
    }
    out["blocks"]       = std::move(blocks);
    out["cut_vertices"] = decomp.cut_vertices;
    out["block_cut_tree"]
        = {{"type_one_nodes", tree.num_type_one},
           {"type_two_nodes", tree.num_type_two},
           {"edges", tree.tree.edges()},
           {"is_tree", tree.is_tree()}};
    out["max_embedded_circuit_diameter"]
        = lrw::max_embedded_circuit_diameter(graph);
    if (geo.geodetic) {
      auto iecs    = lrw::enumerate_iecs(graph);
      json list    = json::array();
      std::size_t max_iec = 2;
      for (auto const& iec : iecs) {
        list.push_back(lrw::to_json(iec));
        max_iec = std::max(max_iec, iec.length());
      }
      out["iecs"]    = std::move(list);
      out["max_iec"] = max_iec;
      auto s         = lrw::broomlike_parameter(max_iec);
      auto broom     = lrw::to_json(lrw::is_s_broomlike(graph, s));
      broom["s"]     = s;
      out["broomlike"] = std::move(broom);
      out["stemple"]   = lrw::to_json(lrw::check_stemple_4circuits(graph));
    }
    if (ball) {
      auto geo_c = lrw::certified_geodecity(*ball);
      auto iecs  = lrw::certified_iecs(*ball, lrw::ApexScope::all);
      auto blk   = lrw::certified_blocks(*ball);
      std::size_t max_iec = 2;
      for (auto const& iec : iecs.iecs) {
        max_iec = std::max(max_iec, iec.length());
      }
      out["certified"] = {
          {"radius", ball->radius},
          {"geodetic", geo_c.geodetic},
          {"certified_pairs", geo_c.certified_pairs},
          {"max_iec", max_iec},
          {"iecs", iecs.iecs.size()},
          {"uncertified_iecs", iecs.uncertified},
          {"max_block_diameter", blk.max_certified_diameter},
          {"uncertified_blocks",
           std::count(blk.certified.begin(), blk.certified.end(), false)}};
    }

    if (format == "json") {
      print_json(out);
    } else {
      std::cout << "vertices: " << out["vertices"] << "\nedges: "
                << out["edges"] << "\ngeodetic: " << out["geodetic"]
                << "\nblocks: " << out["blocks"].size()
                << "\ncut vertices: " << out["cut_vertices"].size()
                << "\nmax embedded circuit diameter: "
                << out["max_embedded_circuit_diameter"] << '\n';
      if (geo.geodetic) {
        std::cout << "max IEC length: " << out["max_iec"]
                  << "\nbroomlike (s=" << out["broomlike"]["s"]
                  << "): " << out["broomlike"]["holds"]
                  << "\nembedded 4-circuits complete: "
                  << out["stemple"]["holds"] << '\n';
      }
    }
    return exit_ok;
  }

  int run_evidence(std::string const& path,
                   std::uint32_t      radius,
                   std::size_t        cap,
                   bool               expect_unit_blocks) {
    auto                  sys = load_system(path);
    lrw::PlainnessOptions options;
    options.vertex_cap         = cap;
    options.expect_unit_blocks = expect_unit_blocks;
    auto ev                    = lrw::plainness_evidence(sys, radius, options);
    print_json(lrw::to_json(ev));
    return ev.outcome() == lrw::Outcome::pass ? exit_ok : exit_failed_check;
  }

  int run_verify(std::string const& suite, lrw::SuiteOptions const& options) {
    auto results = lrw::run_suites(suite, options);
    json out     = json::object();
    bool ok      = true;
    for (auto& r : results) {
      out[r.name] = {{"status", r.passed ? "pass" : "fail"},
                     {"report", std::move(r.report)}};
      ok          = ok && r.passed;
      std::cerr << r.name << ": " << (r.passed ? "pass" : "fail") << '\n';
    }
    print_json(out);
    return ok ? exit_ok : exit_failed_check;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Length-reducing rewriting systems and geodetic Cayley graphs"};
  app.require_subcommand(1);

  std::string format = "text";
  std::string input;

  auto* check = app.add_subcommand("check", "Report convergence of a system");
  check->add_option("system", input, ".rws file or - for stdin")->required();
  check->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  std::string word;
  auto* norm = app.add_subcommand("normalize", "Normal form of a word");
  norm->add_option("system", input)->required();
  norm->add_option("-w,--word", word, "letter tokens, space separated")
      ->required();

  std::string              factors, output;
  std::vector<std::string> tables;
  auto* gen   = app.add_subcommand("gen", "Generate presentations");
  gen->require_subcommand(1);
  auto* plain = gen->add_subcommand("plain", "Plain group presentation");
  plain->add_option("--factors", factors, "e.g. C2,C3,Z");
  plain->add_option("--table", tables, "CSV multiplication table (repeatable)");
  plain->add_option("-o,--output", output);

  std::uint32_t radius   = 3;
  std::size_t   cap_flag = 0;
  auto* ball = app.add_subcommand("ball", "Build a Cayley ball");
  ball->add_option("system", input)->required();
  ball->add_option("-r,--radius", radius)->required();
  auto* ball_cap = ball->add_option("--cap", cap_flag, "vertex limit")
                       ->check(CLI::PositiveNumber);
  ball->add_option("--format", format)
      ->check(CLI::IsMember({"text", "json", "dot"}));

  auto* analyze = app.add_subcommand("analyze",
                                     "Analyse a ball JSON or edge-list graph");
  analyze->add_option("graph", input)->required();
  analyze->add_option("--format", format)
      ->check(CLI::IsMember({"text", "json"}));

  bool  unit_blocks = false;
  auto* evidence = app.add_subcommand("evidence",
                                      "Certified plainness evidence for a "
                                      "system");
  evidence->add_option("system", input)->required();
  evidence->add_option("-r,--radius", radius)->required();
  auto* evidence_cap = evidence->add_option("--cap", cap_flag)
                           ->check(CLI::PositiveNumber);
  evidence->add_flag("--unit-blocks", unit_blocks,
                     "require certified blocks of diameter 1");

  std::string       suite = "all";
  lrw::SuiteOptions suite_options;
  auto* verify = app.add_subcommand("verify", "Run verification suites");
  std::vector<std::string> suite_choices{"all"};
  for (auto const& n : lrw::suite_names()) {
    suite_choices.push_back(n);
  }
  verify->add_option("--suite", suite)->check(CLI::IsMember(suite_choices));
  verify->add_option("--corpus", suite_options.corpus)
      ->check(CLI::IsMember({"builtin", "full"}));
  verify->add_option("--seed", suite_options.seed);
  verify->add_option("-r,--radius", suite_options.lemma8_radius,
                     "ball radius for the lemma8 and plain suites");
  auto* verify_cap = verify->add_option("--cap", cap_flag)
                         ->check(CLI::PositiveNumber);

  CLI11_PARSE(app, argc, argv);

  try {
    if (check->parsed()) {
      return run_check(input, format);
    }
    if (norm->parsed()) {
      return run_normalize(input, word);
    }
    if (plain->parsed()) {
      return run_gen_plain(factors, tables, output);
    }
    if (ball->parsed()) {
      return run_ball(input, radius, vertex_cap(cap_flag, ball_cap->count() > 0), format);
    }
    if (analyze->parsed()) {
      return run_analyze(input, format);
    }
    if (evidence->parsed()) {
      return run_evidence(input,
                          radius,
                          vertex_cap(cap_flag, evidence_cap->count() > 0),
                          unit_blocks);
    }
    if (verify->parsed()) {
      suite_options.vertex_cap = vertex_cap(cap_flag, verify_cap->count() > 0);
      return run_verify(suite, suite_options);
    }
  } catch (InputError const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_bad_input;
  } catch (lrw::Error const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_bad_input;
  }
  return exit_ok;
}

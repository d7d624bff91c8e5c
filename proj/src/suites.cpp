#include "lrw/suites.hpp"

#include <algorithm>

#include "lrw/error.hpp"
#include "lrw/presentations.hpp"

namespace lrw {

  using nlohmann::json;

  namespace {
    json path_json(std::vector<vertex_t> const& p) {
      return json(p);
    }

    json rule_json(Alphabet const& a, Rule const& r) {
      return {{"lhs", to_json(a, r.lhs)}, {"rhs", to_json(a, r.rhs)}};
    }

    char const* scope_name(ApexScope s) {
      return s == ApexScope::all ? "all-apexes" : "origin";
    }

    std::vector<CorpusGraph> corpus_for(SuiteOptions const& o) {
      return geodetic_corpus(CorpusSpec::parse(o.corpus, o.seed));
    }

    json graph_header(CorpusGraph const& g) {
      return {{"name", g.name},
              {"provenance", to_string(g.provenance)},
              {"vertices", g.graph.num_vertices()},
              {"edges", g.graph.num_edges()}};
    }

    SuiteResult theorem_b_suite(SuiteOptions const& o) {
      SuiteResult result{"theoremB", true, json::object()};
      json        graphs = json::array(), unmet = json::array();
      for (auto const& g : corpus_for(o)) {
        auto r     = verify_theorem_b(g.graph);
        auto entry = graph_header(g);
        entry.update(to_json(r));
        if (r.outcome == Outcome::fail) {
          result.passed = false;
        } else if (r.outcome == Outcome::hypotheses_not_met) {
          unmet.push_back({{"name", g.name},
                           {"unmet", r.unmet_hypothesis},
                           {"max_circuit_diameter", r.max_circuit_diameter}});
        }
        graphs.push_back(std::move(entry));
      }
      result.report = {{"graphs", std::move(graphs)},
                       {"hypotheses_not_met", std::move(unmet)}};
      return result;
    }

    SuiteResult stemple_suite(SuiteOptions const& o) {
      SuiteResult result{"stemple", true, json::object()};
      json        graphs = json::array();
      for (auto const& g : corpus_for(o)) {
        auto r     = check_stemple_4circuits(g.graph);
        auto entry = graph_header(g);
        entry.update(to_json(r));
        result.passed = result.passed && r.holds();
        graphs.push_back(std::move(entry));
      }
      result.report = {{"graphs", std::move(graphs)}};
      return result;
    }

    SuiteResult broomlike_suite(SuiteOptions const& o) {
      SuiteResult result{"broomlike", true, json::object()};
      json        graphs = json::array();
      for (auto const& g : corpus_for(o)) {
        auto max_iec = max_iec_length(g.graph);
        auto s       = broomlike_parameter(max_iec);
        auto r       = is_s_broomlike(g.graph, s);
        auto entry   = graph_header(g);
        entry["max_iec"] = max_iec;
        entry["s"]       = s;
        entry.update(to_json(r));
        result.passed = result.passed && r.holds;
        graphs.push_back(std::move(entry));
      }
      result.report = {{"graphs", std::move(graphs)}};
      return result;
    }

    SuiteResult key_lemma_suite(SuiteOptions const& o) {
      SuiteResult result{"keylemma", true, json::object()};
      json        graphs = json::array();
      for (auto const& g : corpus_for(o)) {
        auto r     = verify_key_lemma(g.graph, o.seed);
        auto entry = graph_header(g);
        entry.update(to_json(r));
        result.passed = result.passed && r.outcome == Outcome::pass;
        graphs.push_back(std::move(entry));
      }
      result.report = {{"graphs", std::move(graphs)}};
      return result;
    }

    SuiteResult corpus_suite(SuiteOptions const& o) {
      SuiteResult result{"corpus", true, json::object()};
      json        graphs = json::array();
      for (auto const& g : corpus_for(o)) {
        auto entry           = graph_header(g);
        auto decomp          = blocks(g.graph);
        entry["geodetic"]    = is_geodetic(g.graph).geodetic;
        entry["max_iec"]     = max_iec_length(g.graph);
        entry["blocks"]      = decomp.blocks.size();
        entry["cut_vertices"] = decomp.cut_vertices;
        entry["block_diameters"]
            = block_diameters(decomp, all_pairs_distances(g.graph));
        result.passed = result.passed && entry["geodetic"].get<bool>();
        graphs.push_back(std::move(entry));
      }
      result.report = {{"graphs", std::move(graphs)},
                       {"seed", o.seed},
                       {"corpus", o.corpus}};
      return result;
    }

    SuiteResult lemma8_suite(SuiteOptions const& o) {
      SuiteResult result{"lemma8", true, json::object()};
      json        systems = json::array();
      for (auto const& factors : plain_suite_systems()) {
        auto sys   = gen_plain(PlainSpec::parse(factors));
        auto ball  = build_ball(sys, o.lemma8_radius, o.vertex_cap);
        auto r     = verify_lemma8(sys, ball);
        auto entry = to_json(sys, r);
        entry["factors"]  = factors;
        entry["radius"]   = o.lemma8_radius;
        entry["vertices"] = ball.size();
        result.passed     = result.passed && r.outcome == Outcome::pass;
        systems.push_back(std::move(entry));
      }
      result.report = {{"systems", std::move(systems)}};
      return result;
    }

    SuiteResult plain_suite(SuiteOptions const& o) {
      SuiteResult result{"plain", true, json::object()};
      json        systems = json::array();
      for (auto const& factors : plain_suite_systems()) {
        auto             sys = gen_plain(PlainSpec::parse(factors));
        PlainnessOptions po;
        po.vertex_cap         = o.vertex_cap;
        po.expect_unit_blocks = true;
        auto ev               = plainness_evidence(sys, o.lemma8_radius, po);
        auto entry            = to_json(ev);
        entry["factors"]      = factors;
        result.passed         = result.passed && ev.outcome() == Outcome::pass;
        systems.push_back(std::move(entry));
      }
      result.report = {{"systems", std::move(systems)}};
      return result;
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // JSON
  ////////////////////////////////////////////////////////////////////////

  json to_json(Alphabet const& alphabet, Word const& w) {
    json out = json::array();
    for (Letter x : w) {
      out.push_back(alphabet.name(x));
    }
    return out;
  }

  json to_json(RewritingSystem const& sys, ConvergenceReport const& r) {
    auto const& a          = sys.alphabet();
    json        unresolved = json::array();
    for (auto const& u : r.unresolved_pairs) {
      unresolved.push_back(
          {{"superposition", to_json(a, u.pair.superposition)},
           {"kind",
            u.pair.kind == CriticalPair::Kind::overlap ? "overlap"
                                                       : "containment"},
           {"rules", {u.pair.left_rule, u.pair.right_rule}},
           {"left_result", to_json(a, u.pair.left_result)},
           {"right_result", to_json(a, u.pair.right_result)},
           {"left_normal_form", to_json(a, u.left_normal)},
           {"right_normal_form", to_json(a, u.right_normal)}});
    }
    return {{"letters", a.size()},
            {"rules", sys.rules().size()},
            {"max_lhs_length", sys.max_lhs_length()},
            {"length_reducing", r.length_reducing},
            {"confluence_checked", r.confluence_checked},
            {"locally_confluent", r.locally_confluent},
            {"convergent", r.convergent()},
            {"critical_pairs", r.critical_pair_count},
            {"unresolved_pairs", std::move(unresolved)},
            {"inverse_closed", r.inverse_closed},
            {"presents_group", r.presents_group}};
  }

  json to_json(GeodeticWitness const& w) {
    return {{"u", w.u},
            {"v", w.v},
            {"first", path_json(w.first)},
            {"second", path_json(w.second)}};
  }

  json to_json(IecRecord const& iec) {
    return {{"apex", iec.apex},
            {"length", iec.length()},
            {"circuit", path_json(iec.circuit())}};
  }

  json to_json(BroomlikeReport const& r) {
    json out{{"holds", r.holds},
             {"max_divergence", r.max_divergence},
             {"configurations", r.configurations}};
    if (r.witness) {
      out["witness"] = {{"path", path_json(r.witness->path)},
                        {"b", r.witness->b},
                        {"b_path", path_json(r.witness->b_path)},
                        {"p", r.witness->divergence}};
    }
    return out;
  }

  json to_json(StempleReport const& r) {
    return {{"holds", r.holds()},
            {"circuits", r.circuits.size()},
            {"violations", r.violations}};
  }

  json to_json(TheoremBReport const& r) {
    json out{{"outcome", to_string(r.outcome)},
             {"geodetic", r.geodetic},
             {"max_circuit_diameter", r.max_circuit_diameter}};
    if (r.geodetic) {
      out["max_iec"] = r.max_iec;
    }
    if (!r.unmet_hypothesis.empty()) {
      out["unmet_hypothesis"] = r.unmet_hypothesis;
    }
    if (r.geodetic_witness) {
      out["geodetic_witness"] = to_json(*r.geodetic_witness);
    }
    return out;
  }

  json to_json(KeyLemmaReport const& r) {
    json failures = json::array();
    for (auto const& f : r.failures) {
      failures.push_back(to_json(f));
    }
    return {{"outcome", to_string(r.outcome)},
            {"qualifying", r.qualifying},
            {"checked", r.checked},
            {"sampled", r.sampled},
            {"seed", r.seed},
            {"failures", std::move(failures)}};
  }

  json to_json(RewritingSystem const& sys, Lemma8Report const& r) {
    auto const& a      = sys.alphabet();
    auto        render = [&a](Lemma8Match const& m) {
      json out{{"circuit", path_json(m.circuit)},
               {"labels", to_json(a, m.labels)},
               {"candidate", rule_json(a, m.candidate)}};
      if (m.rule_index) {
        out["rule_index"] = *m.rule_index;
      }
      return out;
    };
    json matches = json::array(), failures = json::array();
    for (auto const& m : r.matches) {
      matches.push_back(render(m));
    }
    for (auto const& m : r.failures) {
      failures.push_back(render(m));
    }
    json out{{"outcome", to_string(r.outcome)},
             {"geodetic_on_certified_pairs", r.geodecity.geodetic},
             {"certified_pairs", r.geodecity.certified_pairs},
             {"no_even_iecs", r.no_even_iecs},
             {"uncertified_iecs", r.uncertified_iecs},
             {"matches", std::move(matches)},
             {"failures", std::move(failures)}};
    if (r.geodecity.witness) {
      out["geodetic_witness"] = to_json(*r.geodecity.witness);
    }
    return out;
  }

  json to_json(PlainnessEvidence const& e) {
    json out{{"outcome", to_string(e.outcome())},
             {"radius", e.radius},
             {"vertices", e.vertices},
             {"iec_scope", scope_name(e.scope)},
             {"geodetic", e.geodetic},
             {"max_iec", e.max_iec},
             {"max_lhs", e.max_lhs},
             {"max_block_diameter", e.max_block_diameter},
             {"certified_blocks", e.certified_blocks},
             {"uncertified_blocks", e.uncertified_blocks},
             {"uncertified_iecs", e.uncertified_iecs},
             {"consistent_with_plain", e.consistent_with_plain},
             {"witnesses", e.witnesses}};
    if (e.unit_blocks_checked) {
      out["unit_blocks_hold"] = e.unit_blocks_hold;
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Suites
  ////////////////////////////////////////////////////////////////////////

  std::vector<std::string> const& suite_names() {
    static std::vector<std::string> const names{
        "theoremB", "lemma8", "stemple", "broomlike", "keylemma", "plain",
        "corpus"};
    return names;
  }

  std::vector<std::string> const& plain_suite_systems() {
    static std::vector<std::string> const systems{"C2,C3",
                                                  "C2,C2",
                                                  "C3,Z",
                                                  "C4,Z",
                                                  "C5,Z",
                                                  "C2,C3,Z",
                                                  "C2,C4",
                                                  "C3,C5",
                                                  "Z,Z",
                                                  "C4"};
    return systems;
  }

  std::vector<SuiteResult> run_suites(std::string const&  name,
                                      SuiteOptions const& options) {
    auto const& names = suite_names();
    if (name != "all"
        && std::find(names.begin(), names.end(), name) == names.end()) {
      throw PreconditionError("unknown suite \"" + name + "\"");
    }
    std::vector<SuiteResult> results;
    for (auto const& n : names) {
      if (name != "all" && name != n) {
        continue;
      }
      if (n == "theoremB") {
        results.push_back(theorem_b_suite(options));
      } else if (n == "lemma8") {
        results.push_back(lemma8_suite(options));
      } else if (n == "stemple") {
        results.push_back(stemple_suite(options));
      } else if (n == "broomlike") {
        results.push_back(broomlike_suite(options));
      } else if (n == "keylemma") {
        results.push_back(key_lemma_suite(options));
      } else if (n == "plain") {
        results.push_back(plain_suite(options));
      } else if (n == "corpus") {
        results.push_back(corpus_suite(options));
      }
    }
    return results;
  }

}  // namespace lrw

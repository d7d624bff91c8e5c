// Named verification suites and their JSON reports.

#ifndef LRW_SUITES_HPP_
#define LRW_SUITES_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "lrw/rewriting.hpp"
#include "lrw/verifiers.hpp"

namespace lrw {

  nlohmann::json to_json(Alphabet const& alphabet, Word const& w);
  nlohmann::json to_json(RewritingSystem const& sys, ConvergenceReport const& r);
  nlohmann::json to_json(GeodeticWitness const& w);
  nlohmann::json to_json(IecRecord const& iec);
  nlohmann::json to_json(BroomlikeReport const& r);
  nlohmann::json to_json(StempleReport const& r);
  nlohmann::json to_json(TheoremBReport const& r);
  nlohmann::json to_json(KeyLemmaReport const& r);
  nlohmann::json to_json(RewritingSystem const& sys, Lemma8Report const& r);
  nlohmann::json to_json(PlainnessEvidence const& e);

  struct SuiteOptions {
    std::string   corpus = "full";  // builtin | full
    std::uint64_t seed   = 1;
    std::uint32_t lemma8_radius = 5;
    std::size_t   vertex_cap    = default_vertex_cap;
  };

  struct SuiteResult {
    std::string    name;
    bool           passed = true;
    nlohmann::json report;
  };

  // theoremB, lemma8, stemple, broomlike, keylemma, plain, corpus.
  [[nodiscard]] std::vector<std::string> const& suite_names();

  // Factor lists used by the lemma8 and plain suites.
  [[nodiscard]] std::vector<std::string> const& plain_suite_systems();

  // `name` is one of suite_names() or "all". Throws PreconditionError for
  // unknown names.
  [[nodiscard]] std::vector<SuiteResult> run_suites(std::string const& name,
                                                    SuiteOptions const& options);

}  // namespace lrw

#endif  // LRW_SUITES_HPP_

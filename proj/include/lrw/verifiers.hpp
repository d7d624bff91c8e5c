// Theorem-level checks over finite graphs and Cayley balls.
//
// Every verifier returns one of three outcomes: the property holds, it fails
// with a witness, or the hypotheses of the statement are not met (so nothing
// is asserted). Analyses of Cayley balls only assert facts about certified
// substructures, see lrw::certified.

#ifndef LRW_VERIFIERS_HPP_
#define LRW_VERIFIERS_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lrw/cayley.hpp"
#include "lrw/graph.hpp"
#include "lrw/rewriting.hpp"

namespace lrw {

  enum class Outcome { pass, fail, hypotheses_not_met };

  [[nodiscard]] char const* to_string(Outcome o) noexcept;

  ////////////////////////////////////////////////////////////////////////
  // Plain graphs
  ////////////////////////////////////////////////////////////////////////

  struct TheoremBReport {
    Outcome       outcome  = Outcome::pass;
    bool          geodetic = false;
    std::size_t   max_iec  = 2;  // only meaningful when geodetic
    std::uint32_t max_circuit_diameter = 0;
    std::string   unmet_hypothesis;  // empty unless hypotheses_not_met
    std::optional<GeodeticWitness> geodetic_witness;
  };

  // Geodetic with IECs of length <= 5 implies every embedded circuit has
  // diameter <= 2. The circuit diameter is always reported, so graphs
  // outside the hypotheses still show how the conclusion behaves.
  [[nodiscard]] TheoremBReport verify_theorem_b(SimpleGraph const& g);

  struct KeyLemmaReport {
    Outcome                outcome       = Outcome::pass;
    std::size_t            qualifying    = 0;
    std::size_t            checked       = 0;
    bool                   sampled       = false;
    std::uint64_t          seed          = 0;
    std::vector<IecRecord> failures;
  };

  inline constexpr std::size_t key_lemma_exhaustive_limit = 2000;

  // For each apex and edge {x, y} at equal distance n >= 1 with distinct
  // first steps, re-checks that the closed path is isometric using distances
  // independent of the construction. Exhaustive up to `limit`
  // configurations, otherwise a seeded sample of `limit` of them. Throws
  // PreconditionError unless g is geodetic.
  [[nodiscard]] KeyLemmaReport
  verify_key_lemma(SimpleGraph const& g,
                   std::uint64_t      seed  = 0,
                   std::size_t        limit = key_lemma_exhaustive_limit);

  // ceil((max_iec - 1) / 2), at least 1.
  [[nodiscard]] std::uint32_t broomlike_parameter(std::size_t max_iec) noexcept;

  ////////////////////////////////////////////////////////////////////////
  // Certified analyses of balls
  ////////////////////////////////////////////////////////////////////////

  struct CertifiedGeodecity {
    bool                           geodetic = true;
    std::size_t                    certified_pairs = 0;
    std::optional<GeodeticWitness> witness;
  };

  // Every certified pair has a unique geodesic in the ball.
  [[nodiscard]] CertifiedGeodecity certified_geodecity(LeveledGraph const& ball);

  enum class ApexScope {
    origin,  // circuits through vertex 0; enough for vertex-transitive graphs
    all
  };

  struct CertifiedIecs {
    std::vector<IecRecord> iecs;         // certified, isometric, deduplicated
    std::size_t            uncertified = 0;  // candidates with an uncertified pair
    std::vector<IecRecord> non_isometric;    // certified but not isometric
  };

  // IECs built from geodesic pairs (as in enumerate_iecs) whose vertex pairs
  // are all certified. Candidates that are certified but fail the isometry
  // re-check are reported separately; in a geodetic graph there are none.
  [[nodiscard]] CertifiedIecs certified_iecs(LeveledGraph const& ball,
                                             ApexScope           scope);

  struct CertifiedBlocks {
    BlockDecomposition         decomposition;
    std::vector<bool>          certified;   // per block
    std::vector<std::uint32_t> diameter;    // per block, ball distances
    std::uint32_t              max_certified_diameter = 0;
  };

  // Blocks of the ball; a block is certified when all its vertex pairs are.
  [[nodiscard]] CertifiedBlocks certified_blocks(LeveledGraph const& ball);

  ////////////////////////////////////////////////////////////////////////
  // Cayley balls
  ////////////////////////////////////////////////////////////////////////

  struct Lemma8Match {
    std::vector<vertex_t> circuit;  // starting at the origin
    Word                  labels;   // x_1 .. x_m
    Rule                  candidate;
    std::optional<std::size_t> rule_index;  // index into T when present
  };

  struct Lemma8Report {
    Outcome            outcome = Outcome::pass;
    CertifiedGeodecity geodecity;
    // No vertex has two geodesics from the origin, so no even IEC of length
    // > 2 passes through it.
    bool                     no_even_iecs = true;
    std::vector<Lemma8Match> matches;
    std::vector<Lemma8Match> failures;
    std::size_t              uncertified_iecs = 0;
  };

  // For every certified IEC through the origin of length m = 2n + 1 with
  // labels x_1..x_m, (x_1..x_{n+1}, x_m^{-1}..x_{n+2}^{-1}) must be a rule
  // of the system for one of the two traversal directions.
  [[nodiscard]] Lemma8Report verify_lemma8(RewritingSystem const& sys,
                                           CayleyBall const&      ball);

  struct PlainnessOptions {
    // Check all apexes when the ball has at most this many vertices,
    // otherwise only circuits through the origin.
    std::size_t all_apex_limit = 3000;
    std::size_t vertex_cap     = default_vertex_cap;
    // Require every certified block to have diameter 1, as holds for the
    // presentations produced by gen_plain.
    bool expect_unit_blocks = false;
  };

  struct PlainnessEvidence {
    std::uint32_t radius             = 0;
    std::size_t   vertices           = 0;
    ApexScope     scope              = ApexScope::all;
    bool          geodetic           = false;
    std::size_t   max_iec            = 2;
    std::size_t   max_lhs            = 0;
    std::uint32_t max_block_diameter = 0;
    std::size_t   certified_blocks   = 0;
    std::size_t   uncertified_blocks = 0;
    std::size_t   uncertified_iecs   = 0;
    bool          consistent_with_plain = false;
    bool          unit_blocks_checked   = false;
    bool          unit_blocks_hold      = true;
    std::vector<std::string> witnesses;

    [[nodiscard]] Outcome outcome() const noexcept {
      return consistent_with_plain && unit_blocks_hold ? Outcome::pass
                                                       : Outcome::fail;
    }
  };

  // Gates on convergence, length reduction, inverses and the group check
  // (throwing PreconditionError before any graph work), then builds the
  // radius-R ball and collects certified evidence. consistent_with_plain is
  // geodetic && (max_iec == 2 || max_iec <= 2 max_lhs - 1) &&
  // max_block_diameter <= 2.
  [[nodiscard]] PlainnessEvidence
  plainness_evidence(RewritingSystem const& sys,
                     std::uint32_t          radius,
                     PlainnessOptions const& options = {});

  ////////////////////////////////////////////////////////////////////////
  // Corpus
  ////////////////////////////////////////////////////////////////////////

  struct CorpusGraph {
    enum class Provenance { builtin, glued, cayley_ball };

    std::string name;
    SimpleGraph graph;
    Provenance  provenance;
  };

  [[nodiscard]] char const* to_string(CorpusGraph::Provenance p) noexcept;

  struct CorpusSpec {
    bool          builtin      = true;
    std::size_t   gluings      = 24;
    std::uint64_t seed         = 1;
    bool          cayley_balls = true;

    // "builtin" or "full".
    static CorpusSpec parse(std::string const& name, std::uint64_t seed);
  };

  // Identify vertex `at_a` of `a` with vertex `at_b` of `b`. The result
  // numbers a's vertices first, then b's remaining vertices in order.
  [[nodiscard]] SimpleGraph glue(SimpleGraph const& a,
                                 vertex_t           at_a,
                                 SimpleGraph const& b,
                                 vertex_t           at_b);

  [[nodiscard]] SimpleGraph complete_graph(std::size_t n);
  [[nodiscard]] SimpleGraph cycle_graph(std::size_t n);
  [[nodiscard]] SimpleGraph path_graph(std::size_t n);
  [[nodiscard]] SimpleGraph star_graph(std::size_t leaves);
  [[nodiscard]] SimpleGraph petersen_graph();
  // Two triangles joined by a bridge.
  [[nodiscard]] SimpleGraph bridged_triangles();

  // Builtin geodetic graphs, seeded cut-vertex gluings, and Cayley balls of
  // plain presentations. Every graph is re-checked geodetic; a graph that
  // fails the check raises Error.
  [[nodiscard]] std::vector<CorpusGraph> geodetic_corpus(CorpusSpec const& spec);

}  // namespace lrw

#endif  // LRW_VERIFIERS_HPP_

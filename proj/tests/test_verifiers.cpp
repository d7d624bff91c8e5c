#include <algorithm>
#include <set>

#include "doctest.h"
#include "lrw/error.hpp"
#include "lrw/suites.hpp"
#include "lrw/verifiers.hpp"
#include "support/oracles.hpp"
#include "support/systems.hpp"

using lrw::vertex_t;

namespace {
  // Isometric simple cycles of a ball with every vertex pair certified,
  // found by exhaustive cycle search. Sorted vertex sets.
  std::set<std::vector<vertex_t>>
  brute_certified_iecs(lrw::LeveledGraph const& ball, bool through_origin) {
    auto d = oracle::floyd_warshall(ball.graph);
    std::set<std::vector<vertex_t>> out;
    for (auto c : oracle::simple_cycles(ball.graph)) {
      if (through_origin && c.front() != 0) {
        continue;
      }
      bool ok = true;
      for (auto u : c) {
        for (auto v : c) {
          ok = ok && std::min(ball.level[u], ball.level[v]) + d[u][v] <= ball.radius;
        }
      }
      if (ok && oracle::isometric(d, c)) {
        std::sort(c.begin(), c.end());
        out.insert(c);
      }
    }
    return out;
  }

  std::size_t brute_key_lemma_configurations(lrw::SimpleGraph const& g) {
    auto        d = oracle::floyd_warshall(g);
    std::size_t n = 0;
    auto first_step = [&](vertex_t w, vertex_t x) {
      for (auto f : g.neighbors(w)) {
        if (d[f][x] + 1 == d[w][x]) {
          return f;
        }
      }
      return w;
    };
    for (vertex_t w = 0; w < g.num_vertices(); ++w) {
      for (auto [x, y] : g.edges()) {
        if (d[w][x] == d[w][y] && d[w][x] >= 1
            && first_step(w, x) != first_step(w, y)) {
          ++n;
        }
      }
    }
    return n;
  }

  // Labels read around a circuit, computed by rewriting the vertex words.
  lrw::Word read_labels(lrw::CayleyBall const&      ball,
                        std::vector<vertex_t> const& c) {
    auto const&     sys = ball.system();
    oracle::Rules   t(sys);
    std::mt19937_64 rng(0);
    lrw::Word       labels;
    for (std::size_t i = 0; i < c.size(); ++i) {
      auto from = oracle::ids(ball.word(c[i]));
      auto to   = oracle::ids(ball.word(c[(i + 1) % c.size()]));
      for (std::uint32_t x = 0; x < sys.alphabet().size(); ++x) {
        auto w = from;
        w.push_back(x);
        if (oracle::rewrite(t, w, oracle::Strategy::rightmost, rng) == to) {
          labels.push_back(lrw::Letter{x});
          break;
        }
      }
    }
    return labels;
  }

  bool labels_give_rule(lrw::RewritingSystem const& sys, lrw::Word const& x) {
    auto const m = x.size();
    auto const n = (m - 1) / 2;
    lrw::Rule  candidate;
    candidate.lhs.assign(x.begin(), x.begin() + n + 1);
    for (std::size_t i = m; i > n + 1; --i) {
      candidate.rhs.push_back(sys.alphabet().inverse(x[i - 1]));
    }
    return std::find(sys.rules().begin(), sys.rules().end(), candidate)
           != sys.rules().end();
  }

  // Cycle through vertex 0 in both directions.
  std::vector<std::vector<vertex_t>> orientations(std::vector<vertex_t> c) {
    std::rotate(c.begin(), std::find(c.begin(), c.end(), 0), c.end());
    auto r = c;
    std::reverse(r.begin() + 1, r.end());
    return {c, r};
  }
}  // namespace

TEST_SUITE("circuit diameter bound") {
  TEST_CASE("basic cases") {
    auto pg = lrw::verify_theorem_b(lrw::petersen_graph());
    CHECK(pg.outcome == lrw::Outcome::pass);
    CHECK(pg.geodetic);
    CHECK(pg.max_iec == 5);
    CHECK(pg.max_circuit_diameter == 2);

    auto c7 = lrw::verify_theorem_b(lrw::cycle_graph(7));
    CHECK(c7.outcome == lrw::Outcome::hypotheses_not_met);
    CHECK(c7.max_iec == 7);
    CHECK(c7.max_circuit_diameter == 3);
    CHECK_FALSE(c7.unmet_hypothesis.empty());

    auto k5 = lrw::verify_theorem_b(lrw::complete_graph(5));
    CHECK(k5.outcome == lrw::Outcome::pass);
    CHECK(k5.max_iec == 3);
    CHECK(k5.max_circuit_diameter == 1);
  }

  TEST_CASE("non-geodetic input does not meet the hypotheses") {
    auto c4 = lrw::verify_theorem_b(lrw::cycle_graph(4));
    CHECK(c4.outcome == lrw::Outcome::hypotheses_not_met);
    CHECK_FALSE(c4.geodetic);
    CHECK(c4.geodetic_witness.has_value());
  }

  TEST_CASE("suite lists the long odd cycles") {
    lrw::SuiteOptions o;
    o.corpus = "builtin";
    auto r   = lrw::run_suites("theoremB", o);
    REQUIRE(r.size() == 1);
    CHECK(r[0].passed);
    std::map<std::string, std::uint32_t> unmet;
    for (auto const& e : r[0].report["hypotheses_not_met"]) {
      unmet[e["name"]] = e["max_circuit_diameter"];
    }
    CHECK(unmet == std::map<std::string, std::uint32_t>{{"C7", 3}, {"C9", 4}});
  }
}

TEST_SUITE("key lemma") {
  TEST_CASE("basic cases") {
    auto k3 = lrw::verify_key_lemma(lrw::complete_graph(3));
    CHECK(k3.outcome == lrw::Outcome::pass);
    CHECK(k3.qualifying == 3);

    auto pg = lrw::verify_key_lemma(lrw::petersen_graph());
    CHECK(pg.outcome == lrw::Outcome::pass);
    CHECK(pg.qualifying == 60);
    CHECK(pg.checked == 60);
    CHECK_FALSE(pg.sampled);

    auto tree = lrw::verify_key_lemma(lrw::path_graph(7));
    CHECK(tree.outcome == lrw::Outcome::pass);
    CHECK(tree.qualifying == 0);
  }

  TEST_CASE("configuration count matches brute force") {
    for (auto const& c : lrw::geodetic_corpus(lrw::CorpusSpec::parse("full", 3))) {
      if (c.graph.num_vertices() > 40) {
        continue;
      }
      CAPTURE(c.name);
      auto r = lrw::verify_key_lemma(c.graph);
      CHECK(r.qualifying == brute_key_lemma_configurations(c.graph));
      CHECK(r.outcome == lrw::Outcome::pass);
    }
  }

  TEST_CASE("sampling above the limit is seeded") {
    auto a = lrw::verify_key_lemma(lrw::petersen_graph(), 42, 10);
    auto b = lrw::verify_key_lemma(lrw::petersen_graph(), 42, 10);
    CHECK(a.sampled);
    CHECK(a.seed == 42);
    CHECK(a.checked == 10);
    CHECK(lrw::to_json(a).dump() == lrw::to_json(b).dump());
    CHECK(a.outcome == lrw::Outcome::pass);
  }

  TEST_CASE("non-geodetic input is an error") {
    CHECK_THROWS_AS((void) lrw::verify_key_lemma(lrw::cycle_graph(6)),
                    lrw::PreconditionError);
  }
}

TEST_SUITE("certified substructures") {
  TEST_CASE("certified circuits match exhaustive search") {
    for (auto const& [f, r] : std::vector<std::pair<char const*, std::uint32_t>>{
             {"C2,C3", 4}, {"C3,C4", 3}, {"C5", 1}, {"C4,Z", 2}, {"C2,C2,C3", 3}}) {
      CAPTURE(f);
      auto ball   = lrw::build_ball(fixtures::plain(f), r);
      auto origin = lrw::certified_iecs(ball.leveled(), lrw::ApexScope::origin);
      auto all    = lrw::certified_iecs(ball.leveled(), lrw::ApexScope::all);
      std::set<std::vector<vertex_t>> got_origin, got_all;
      for (auto const& c : origin.iecs) {
        got_origin.insert(c.vertex_set());
      }
      for (auto const& c : all.iecs) {
        got_all.insert(c.vertex_set());
      }
      CHECK(got_origin == brute_certified_iecs(ball.leveled(), true));
      CHECK(got_all == brute_certified_iecs(ball.leveled(), false));
      CHECK(origin.non_isometric.empty());
      CHECK(all.non_isometric.empty());
    }
  }

  TEST_CASE("certified geodecity of plain balls") {
    for (auto const& f : {"C2,C3", "C3,C5", "Z,Z", "C4,Z"}) {
      auto ball = lrw::build_ball(fixtures::plain(f), 4);
      auto g    = lrw::certified_geodecity(ball.leveled());
      CHECK(g.geodetic);
      CHECK(g.certified_pairs > 0);
    }
  }

  TEST_CASE("certified pair count matches brute force") {
    auto ball = lrw::build_ball(fixtures::plain("C2,C3"), 4);
    auto d    = oracle::floyd_warshall(ball.graph());
    std::size_t expected = 0;
    for (vertex_t u = 0; u < ball.size(); ++u) {
      for (vertex_t v = u + 1; v < ball.size(); ++v) {
        expected += std::min(ball.level(u), ball.level(v)) + d[u][v] <= 4;
      }
    }
    CHECK(lrw::certified_geodecity(ball.leveled()).certified_pairs == expected);
  }

  TEST_CASE("certified blocks of plain balls have diameter one") {
    auto ball = lrw::build_ball(fixtures::plain("C2,C3,C4"), 3);
    auto b    = lrw::certified_blocks(ball.leveled());
    CHECK(b.max_certified_diameter == 1);
    CHECK(std::count(b.certified.begin(), b.certified.end(), true) > 0);
  }
}

TEST_SUITE("circuit labels") {
  TEST_CASE("C2 * C3 triangle at the origin") {
    auto sys  = fixtures::plain("C2,C3");
    auto ball = lrw::build_ball(sys, 4);
    auto r    = lrw::verify_lemma8(sys, ball);
    CHECK(r.outcome == lrw::Outcome::pass);
    CHECK(r.failures.empty());
    bool found = false;
    for (auto const& m : r.matches) {
      if (fixtures::s(sys, m.labels) == "b b b") {
        found = fixtures::s(sys, m.candidate.lhs) == "b b"
                && fixtures::s(sys, m.candidate.rhs) == "B" && m.rule_index;
      }
    }
    CHECK(found);
  }

  TEST_CASE("infinite cyclic is vacuous") {
    auto sys = fixtures::z();
    auto r   = lrw::verify_lemma8(sys, lrw::build_ball(sys, 5));
    CHECK(r.outcome == lrw::Outcome::pass);
    CHECK(r.matches.empty());
  }

  TEST_CASE("C4 reads a rule of its table") {
    auto sys = fixtures::plain("C4");
    auto r   = lrw::verify_lemma8(sys, lrw::build_ball(sys, 2));
    CHECK(r.outcome == lrw::Outcome::pass);
    CHECK_FALSE(r.matches.empty());
    bool found = false;
    for (auto const& m : r.matches) {
      found = found
              || (fixtures::s(sys, m.labels) == "a a a2"
                  && fixtures::s(sys, m.candidate.lhs) == "a a"
                  && fixtures::s(sys, m.candidate.rhs) == "a2");
    }
    CHECK(found);
  }

  TEST_CASE("labels of every certified circuit give a rule") {
    for (auto const& f : {"C2,C3", "C4,Z", "C2,C5", "C3,C3", "C4,C2,Z"}) {
      CAPTURE(f);
      auto sys  = fixtures::plain(f);
      auto ball = lrw::build_ball(sys, 3);
      auto brute = brute_certified_iecs(ball.leveled(), true);
      auto r     = lrw::verify_lemma8(sys, ball);
      CHECK(r.outcome == lrw::Outcome::pass);
      CHECK(r.matches.size() == brute.size());
      for (auto const& c : oracle::simple_cycles(ball.graph())) {
        auto set = c;
        std::sort(set.begin(), set.end());
        if (!brute.count(set)) {
          continue;
        }
        CHECK(c.size() % 2 == 1);
        bool ok = false;
        for (auto const& o : orientations(c)) {
          ok = ok || labels_give_rule(sys, read_labels(ball, o));
        }
        CHECK(ok);
      }
    }
  }

  TEST_CASE("ball must come from the same system") {
    auto ball = lrw::build_ball(fixtures::plain("C2,C3"), 2);
    CHECK_THROWS_AS((void) lrw::verify_lemma8(fixtures::z(), ball),
                    lrw::PreconditionError);
  }
}

TEST_SUITE("plainness evidence") {
  TEST_CASE("C2 * C3 at radius 6") {
    auto e = lrw::plainness_evidence(fixtures::plain("C2,C3"), 6);
    CHECK(e.geodetic);
    CHECK(e.max_iec == 3);
    CHECK(e.max_lhs == 2);
    CHECK(e.max_block_diameter == 1);
    CHECK(e.consistent_with_plain);
    CHECK(e.outcome() == lrw::Outcome::pass);
  }

  TEST_CASE("Z at radius 6") {
    auto e = lrw::plainness_evidence(fixtures::z(), 6);
    CHECK(e.max_iec == 2);
    CHECK(e.max_block_diameter == 1);
    CHECK(e.consistent_with_plain);
  }

  TEST_CASE("unit blocks on request") {
    lrw::PlainnessOptions o;
    o.expect_unit_blocks = true;
    auto e = lrw::plainness_evidence(fixtures::plain("C3,C4,Z"), 3, o);
    CHECK(e.unit_blocks_checked);
    CHECK(e.unit_blocks_hold);
  }

  TEST_CASE("non-confluent input fails before building a ball") {
    lrw::PlainnessOptions o;
    o.vertex_cap = 1;
    auto sys = lrw::parse_system("letters: a b\ninverses: a=a b=b\n"
                                 "rule: a a ->\nrule: b b ->\nrule: a b -> b\n");
    CHECK_THROWS_AS((void) lrw::plainness_evidence(sys, 3, o),
                    lrw::PreconditionError);
  }

  TEST_CASE("vertex cap") {
    lrw::PlainnessOptions o;
    o.vertex_cap = 50;
    CHECK_THROWS_AS((void) lrw::plainness_evidence(fixtures::plain("Z,Z"), 6, o),
                    lrw::ResourceLimitError);
  }
}

TEST_SUITE("corpus") {
  TEST_CASE("builtin graphs") {
    auto c = lrw::geodetic_corpus(lrw::CorpusSpec::parse("builtin", 1));
    auto pg = std::find_if(c.begin(), c.end(),
                           [](auto const& g) { return g.name == "Petersen"; });
    REQUIRE(pg != c.end());
    CHECK(pg->graph.num_vertices() == 10);
    CHECK(pg->graph.num_edges() == 15);
    for (auto const& g : c) {
      CHECK(g.provenance == lrw::CorpusGraph::Provenance::builtin);
    }
  }

  TEST_CASE("fixed gluings") {
    auto bowtie = lrw::glue(lrw::complete_graph(3), 0, lrw::complete_graph(3), 0);
    CHECK(bowtie.num_vertices() == 5);
    CHECK(lrw::is_geodetic(bowtie).geodetic);
    CHECK(lrw::blocks(bowtie).blocks.size() == 2);

    auto c5k2 = lrw::glue(lrw::cycle_graph(5), 0, lrw::complete_graph(2), 0);
    CHECK(lrw::is_geodetic(c5k2).geodetic);
    CHECK(lrw::max_iec_length(c5k2) == 5);
    auto diams = lrw::block_diameters(lrw::blocks(c5k2),
                                      oracle::floyd_warshall(c5k2));
    CHECK(std::multiset<std::uint32_t>(diams.begin(), diams.end())
          == std::multiset<std::uint32_t>{1, 2});
  }

  TEST_CASE("seeded and reproducible") {
    auto names = [](std::uint64_t seed) {
      std::vector<std::string> out;
      for (auto const& g : lrw::geodetic_corpus(lrw::CorpusSpec::parse("full", seed))) {
        out.push_back(g.name);
      }
      return out;
    };
    CHECK(names(1) == names(1));
    CHECK(names(1) != names(2));
    auto        full  = lrw::geodetic_corpus(lrw::CorpusSpec::parse("full", 1));
    std::size_t glued = 0, balls = 0;
    for (auto const& g : full) {
      glued += g.provenance == lrw::CorpusGraph::Provenance::glued;
      balls += g.provenance == lrw::CorpusGraph::Provenance::cayley_ball;
      CHECK(lrw::is_connected(g.graph));
    }
    CHECK(glued >= 20);
    CHECK(balls >= 1);
  }

  TEST_CASE("gluing at a vertex keeps graphs geodetic") {
    std::mt19937_64 rng(8);
    auto pieces = lrw::geodetic_corpus(lrw::CorpusSpec::parse("builtin", 1));
    for (int i = 0; i < 30; ++i) {
      auto const& a = pieces[rng() % pieces.size()].graph;
      auto const& b = pieces[rng() % pieces.size()].graph;
      auto g = lrw::glue(a, static_cast<vertex_t>(rng() % a.num_vertices()),
                         b, static_cast<vertex_t>(rng() % b.num_vertices()));
      bool unique = true;
      if (g.num_vertices() <= 14) {
        for (vertex_t s = 0; s < g.num_vertices(); ++s) {
          for (vertex_t t = s + 1; t < g.num_vertices(); ++t) {
            unique = unique && oracle::shortest_path_count(g, s, t) == 1;
          }
        }
      }
      CHECK(unique);
      CHECK(lrw::is_geodetic(g).geodetic);
    }
  }
}

TEST_SUITE("suites") {
  TEST_CASE("unknown suite") {
    CHECK_THROWS_AS((void) lrw::run_suites("nope", {}), lrw::PreconditionError);
  }

  TEST_CASE("property suites pass on the builtin corpus") {
    lrw::SuiteOptions o;
    o.corpus = "builtin";
    for (auto const& name : {"stemple", "broomlike", "keylemma", "corpus"}) {
      auto r = lrw::run_suites(name, o);
      REQUIRE(r.size() == 1);
      CHECK(r[0].passed);
    }
  }

  TEST_CASE("reports are deterministic") {
    lrw::SuiteOptions o;
    o.corpus = "full";
    o.seed   = 5;
    auto a   = lrw::run_suites("broomlike", o);
    auto b   = lrw::run_suites("broomlike", o);
    CHECK(a[0].report.dump() == b[0].report.dump());
  }
}

// Geodetic graph corpus used by the property suites.

#include <random>
#include <string>
#include <utility>

#include "lrw/error.hpp"
#include "lrw/presentations.hpp"
#include "lrw/verifiers.hpp"

namespace lrw {

  char const* to_string(CorpusGraph::Provenance p) noexcept {
    switch (p) {
      case CorpusGraph::Provenance::builtin:
        return "builtin";
      case CorpusGraph::Provenance::glued:
        return "glued";
      case CorpusGraph::Provenance::cayley_ball:
        return "cayley-ball";
    }
    return "unknown";
  }

  CorpusSpec CorpusSpec::parse(std::string const& name, std::uint64_t seed) {
    CorpusSpec spec;
    spec.seed = seed;
    if (name == "builtin") {
      spec.gluings      = 0;
      spec.cayley_balls = false;
    } else if (name != "full") {
      throw PreconditionError("unknown corpus \"" + name
                              + "\" (expected builtin or full)");
    }
    return spec;
  }

  SimpleGraph glue(SimpleGraph const& a,
                   vertex_t           at_a,
                   SimpleGraph const& b,
                   vertex_t           at_b) {
    if (at_a >= a.num_vertices() || at_b >= b.num_vertices()) {
      throw PreconditionError("glue vertex out of range");
    }
    auto const  na = a.num_vertices();
    SimpleGraph g(na + b.num_vertices() - 1);
    for (auto [u, v] : a.edges()) {
      g.add_edge(u, v);
    }
    auto map = [&](vertex_t v) -> vertex_t {
      if (v == at_b) {
        return at_a;
      }
      return static_cast<vertex_t>(na + (v < at_b ? v : v - 1));
    };
    for (auto [u, v] : b.edges()) {
      g.add_edge(map(u), map(v));
    }
    return g;
  }

  SimpleGraph complete_graph(std::size_t n) {
    SimpleGraph g(n);
    for (vertex_t u = 0; u < n; ++u) {
      for (vertex_t v = u + 1; v < n; ++v) {
        g.add_edge(u, v);
      }
    }
    return g;
  }

  SimpleGraph cycle_graph(std::size_t n) {
    if (n < 3) {
      throw PreconditionError("cycle needs at least 3 vertices");
    }
    SimpleGraph g(n);
    for (vertex_t v = 0; v < n; ++v) {
      g.add_edge(v, static_cast<vertex_t>((v + 1) % n));
    }
    return g;
  }

  SimpleGraph path_graph(std::size_t n) {
    SimpleGraph g(n);
    for (vertex_t v = 0; v + 1 < n; ++v) {
      g.add_edge(v, v + 1);
    }
    return g;
  }

  SimpleGraph star_graph(std::size_t leaves) {
    SimpleGraph g(leaves + 1);
    for (vertex_t v = 1; v <= leaves; ++v) {
      g.add_edge(0, v);
    }
    return g;
  }

  SimpleGraph petersen_graph() {
    SimpleGraph g(10);
    for (vertex_t i = 0; i < 5; ++i) {
      g.add_edge(i, (i + 1) % 5);          // outer 5-cycle
      g.add_edge(i, i + 5);                // spokes
      g.add_edge(i + 5, (i + 2) % 5 + 5);  // inner pentagram
    }
    return g;
  }

  SimpleGraph bridged_triangles() {
    SimpleGraph g(6);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(0, 2);
    g.add_edge(3, 4);
    g.add_edge(4, 5);
    g.add_edge(3, 5);
    g.add_edge(0, 3);
    return g;
  }

  namespace {
    SimpleGraph binary_tree(std::size_t depth) {
      std::size_t n = (std::size_t{1} << (depth + 1)) - 1;
      SimpleGraph g(n);
      for (vertex_t v = 1; v < n; ++v) {
        g.add_edge((v - 1) / 2, v);
      }
      return g;
    }

    std::vector<CorpusGraph> builtins() {
      using P = CorpusGraph::Provenance;
      std::vector<CorpusGraph> result;
      for (std::size_t n = 1; n <= 6; ++n) {
        result.push_back({"K" + std::to_string(n), complete_graph(n), P::builtin});
      }
      for (std::size_t n : {5, 7, 9}) {
        result.push_back({"C" + std::to_string(n), cycle_graph(n), P::builtin});
      }
      result.push_back({"Petersen", petersen_graph(), P::builtin});
      result.push_back({"P6", path_graph(6), P::builtin});
      result.push_back({"K1,3", star_graph(3), P::builtin});
      result.push_back({"binary-tree-3", binary_tree(3), P::builtin});
      result.push_back({"bridged-triangles", bridged_triangles(), P::builtin});
      return result;
    }
  }  // namespace

  std::vector<CorpusGraph> geodetic_corpus(CorpusSpec const& spec) {
    using P = CorpusGraph::Provenance;
    std::vector<CorpusGraph> result;
    auto const               base = builtins();
    if (spec.builtin) {
      result = base;
    }

    if (spec.gluings > 0) {
      result.push_back(
          {"glue(K3@0,K3@0)", glue(complete_graph(3), 0, complete_graph(3), 0),
           P::glued});
      result.push_back(
          {"glue(C5@0,K2@0)", glue(cycle_graph(5), 0, complete_graph(2), 0),
           P::glued});
      // Pieces small enough that repeated gluing stays desk-sized.
      std::vector<CorpusGraph> pool;
      for (auto const& g : base) {
        if (g.graph.num_vertices() >= 2 && g.graph.num_vertices() <= 10) {
          pool.push_back(g);
        }
      }
      std::mt19937_64 rng(spec.seed);
      auto pick = [&rng](std::size_t n) {
        return static_cast<std::size_t>(rng() % n);
      };
      std::vector<CorpusGraph> glued;
      for (std::size_t i = 0; i < spec.gluings; ++i) {
        // Half the time extend an earlier gluing, to get chains and trees of
        // blocks rather than only pairs.
        CorpusGraph const* left = &pool[pick(pool.size())];
        if (!glued.empty() && pick(2) == 0) {
          auto const& prev = glued[pick(glued.size())];
          if (prev.graph.num_vertices() <= 30) {
            left = &prev;
          }
        }
        auto const& right = pool[pick(pool.size())];
        auto        at_a  = static_cast<vertex_t>(pick(left->graph.num_vertices()));
        auto        at_b  = static_cast<vertex_t>(pick(right.graph.num_vertices()));
        glued.push_back({"glue(" + left->name + "@" + std::to_string(at_a) + ","
                             + right.name + "@" + std::to_string(at_b) + ")",
                         glue(left->graph, at_a, right.graph, at_b),
                         P::glued});
      }
      result.insert(result.end(), glued.begin(), glued.end());
    }

    if (spec.cayley_balls) {
      std::vector<std::pair<std::string, std::uint32_t>> const systems{
          {"C2,C3", 5},
          {"C2,C2", 4},
          {"C3,Z", 3},
          {"C4,Z", 2},
          {"Z", 4},
          {"C2,C3,Z", 2},
          {"C5", 1},
          {"C3,C3", 3}};
      for (auto const& [factors, radius] : systems) {
        auto sys  = gen_plain(PlainSpec::parse(factors));
        auto ball = build_ball(sys, radius);
        result.push_back({"ball(" + factors + ",R=" + std::to_string(radius) + ")",
                          ball.graph(),
                          P::cayley_ball});
      }
    }

    for (auto const& g : result) {
      if (!is_geodetic(g.graph).geodetic) {
        throw Error("corpus graph " + g.name + " is not geodetic");
      }
    }
    return result;
  }

}  // namespace lrw

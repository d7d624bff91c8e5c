#include "lrw/verifiers.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "lrw/error.hpp"

namespace lrw {

  namespace {
    std::string describe(std::vector<vertex_t> const& path) {
      std::string out;
      for (std::size_t i = 0; i < path.size(); ++i) {
        out += (i == 0 ? "" : ",") + std::to_string(path[i]);
      }
      return out;
    }
  }  // namespace

  char const* to_string(Outcome o) noexcept {
    switch (o) {
      case Outcome::pass:
        return "pass";
      case Outcome::fail:
        return "fail";
      case Outcome::hypotheses_not_met:
        return "hypotheses-not-met";
    }
    return "unknown";
  }

  ////////////////////////////////////////////////////////////////////////
  // Plain graphs
  ////////////////////////////////////////////////////////////////////////

  TheoremBReport verify_theorem_b(SimpleGraph const& g) {
    TheoremBReport report;
    auto           geo     = is_geodetic(g);
    report.geodetic        = geo.geodetic;
    report.geodetic_witness = std::move(geo.witness);
    report.max_circuit_diameter = max_embedded_circuit_diameter(g);
    if (!report.geodetic) {
      report.outcome          = Outcome::hypotheses_not_met;
      report.unmet_hypothesis = "geodetic";
      return report;
    }
    report.max_iec = max_iec_length(g);
    if (report.max_iec > 5) {
      report.outcome          = Outcome::hypotheses_not_met;
      report.unmet_hypothesis = "every IEC has length at most 5";
      return report;
    }
    report.outcome = report.max_circuit_diameter <= 2 ? Outcome::pass
                                                      : Outcome::fail;
    return report;
  }

  KeyLemmaReport verify_key_lemma(SimpleGraph const& g,
                                  std::uint64_t      seed,
                                  std::size_t        limit) {
    if (!is_geodetic(g).geodetic) {
      throw PreconditionError("verify_key_lemma requires a geodetic graph");
    }
    KeyLemmaReport report;
    report.seed      = seed;
    auto const edges = g.edges();
    // (apex, edge index) pairs satisfying the hypotheses.
    std::vector<std::pair<vertex_t, std::size_t>> configs;
    for (vertex_t w = 0; w < g.num_vertices(); ++w) {
      auto r = bfs(g, w);
      for (std::size_t e = 0; e < edges.size(); ++e) {
        if (iec_from_apex(r, edges[e].first, edges[e].second)) {
          configs.emplace_back(w, e);
        }
      }
    }
    report.qualifying = configs.size();
    if (configs.size() > limit) {
      report.sampled = true;
      std::mt19937_64 rng(seed);
      for (std::size_t i = 0; i < limit; ++i) {
        std::size_t j = i + static_cast<std::size_t>(rng() % (configs.size() - i));
        std::swap(configs[i], configs[j]);
      }
      configs.resize(limit);
      std::sort(configs.begin(), configs.end());
    }
    std::optional<vertex_t> apex;
    BfsResult               r;
    for (auto [w, e] : configs) {
      if (apex != w) {
        r    = bfs(g, w);
        apex = w;
      }
      auto iec     = iec_from_apex(r, edges[e].first, edges[e].second);
      auto circuit = iec->circuit();
      ++report.checked;
      if (!is_isometric_circuit(g, circuit)) {
        report.failures.push_back(std::move(*iec));
      }
    }
    report.outcome = report.failures.empty() ? Outcome::pass : Outcome::fail;
    return report;
  }

  std::uint32_t broomlike_parameter(std::size_t max_iec) noexcept {
    return std::max<std::uint32_t>(1, static_cast<std::uint32_t>(max_iec / 2));
  }

  ////////////////////////////////////////////////////////////////////////
  // Certified analyses of balls
  ////////////////////////////////////////////////////////////////////////

  CertifiedGeodecity certified_geodecity(LeveledGraph const& ball) {
    // A pair is checked from its lower-level endpoint u, where the
    // certification bound is d <= R - level(u).
    CertifiedGeodecity result;
    auto const&        g = ball.graph;
    for (vertex_t u = 0; u < g.num_vertices(); ++u) {
      if (ball.level[u] > ball.radius) {
        continue;
      }
      auto const depth = ball.radius - ball.level[u];
      auto       r     = bfs(g, u, depth);
      for (vertex_t v = 0; v < g.num_vertices(); ++v) {
        if (r.distance[v] == unreachable || v == u
            || ball.level[v] < ball.level[u]
            || (ball.level[v] == ball.level[u] && v < u)) {
          continue;
        }
        ++result.certified_pairs;
        if (r.count[v] != 1 && result.geodetic) {
          result.geodetic = false;
          result.witness  = geodetic_witness(g, r, v);
        }
      }
    }
    return result;
  }

  CertifiedIecs certified_iecs(LeveledGraph const& ball, ApexScope scope) {
    CertifiedIecs                   result;
    auto const&                     g     = ball.graph;
    auto const                      edges = g.edges();
    std::set<std::vector<vertex_t>> seen;
    vertex_t const last = scope == ApexScope::origin
                              ? 1
                              : static_cast<vertex_t>(g.num_vertices());
    for (vertex_t w = 0; w < last; ++w) {
      auto r = bfs(g, w, ball.radius);
      for (auto [x, y] : edges) {
        auto iec = iec_from_apex(r, x, y);
        if (!iec || !seen.insert(iec->vertex_set()).second) {
          continue;
        }
        auto const        circuit   = iec->circuit();
        std::size_t const m         = circuit.size();
        bool              all_cert  = true;
        bool              isometric = true;
        for (std::size_t i = 0; i < m && all_cert; ++i) {
          auto d = distances_from(g, circuit[i]);
          for (std::size_t j = i + 1; j < m; ++j) {
            auto dij = d[circuit[j]];
            if (!certified(ball, circuit[i], circuit[j], dij)) {
              all_cert = false;
              break;
            }
            if (dij != std::min(j - i, m + i - j)) {
              isometric = false;
            }
          }
        }
        if (!all_cert) {
          ++result.uncertified;
        } else if (!isometric) {
          result.non_isometric.push_back(std::move(*iec));
        } else {
          result.iecs.push_back(std::move(*iec));
        }
      }
    }
    return result;
  }

  CertifiedBlocks certified_blocks(LeveledGraph const& ball) {
    CertifiedBlocks result;
    result.decomposition = blocks(ball.graph);
    for (auto const& block : result.decomposition.blocks) {
      bool          ok   = true;
      std::uint32_t diam = 0;
      for (std::size_t i = 0; i < block.size() && ok; ++i) {
        auto d = distances_from(ball.graph, block[i]);
        for (std::size_t j = i + 1; j < block.size(); ++j) {
          auto dij = d[block[j]];
          if (!certified(ball, block[i], block[j], dij)) {
            ok = false;
            break;
          }
          diam = std::max(diam, dij);
        }
      }
      result.certified.push_back(ok);
      result.diameter.push_back(diam);
      if (ok) {
        result.max_certified_diameter
            = std::max(result.max_certified_diameter, diam);
      }
    }
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // Cayley balls
  ////////////////////////////////////////////////////////////////////////

  Lemma8Report verify_lemma8(RewritingSystem const& sys,
                             CayleyBall const&      ball) {
    if (!(ball.system() == sys)) {
      throw PreconditionError("verify_lemma8: ball was built from a "
                              "different system");
    }
    Lemma8Report report;
    report.geodecity = certified_geodecity(ball.leveled());

    auto const from_origin = bfs(ball.graph(), 0, ball.radius());
    report.no_even_iecs = std::all_of(
        from_origin.count.begin(), from_origin.count.end(), [](auto c) {
          return c <= 1;
        });

    auto const& alphabet = sys.alphabet();
    auto const& rules    = sys.rules();
    auto        found    = certified_iecs(ball.leveled(), ApexScope::origin);
    report.uncertified_iecs = found.uncertified;

    auto read = [&](std::vector<vertex_t> const& circuit) {
      std::size_t const m = circuit.size();
      std::size_t const n = (m - 1) / 2;
      Lemma8Match       match;
      match.circuit = circuit;
      for (std::size_t i = 1; i <= m; ++i) {
        match.labels.push_back(ball.label(circuit[i - 1], circuit[i % m]));
      }
      match.candidate.lhs.assign(match.labels.begin(),
                                 match.labels.begin()
                                     + static_cast<std::ptrdiff_t>(n + 1));
      for (std::size_t i = m; i >= n + 2; --i) {
        match.candidate.rhs.push_back(alphabet.inverse(match.labels[i - 1]));
      }
      for (std::size_t k = 0; k < rules.size(); ++k) {
        if (rules[k] == match.candidate) {
          match.rule_index = k;
          break;
        }
      }
      return match;
    };

    for (auto const& iec : found.iecs) {
      auto forward = iec.circuit();
      auto match   = read(forward);
      if (!match.rule_index) {
        std::vector<vertex_t> backward{forward[0]};
        backward.insert(backward.end(), forward.rbegin(), forward.rend() - 1);
        auto other = read(backward);
        if (other.rule_index) {
          match = std::move(other);
        }
      }
      if (match.rule_index) {
        report.matches.push_back(std::move(match));
      } else {
        report.failures.push_back(std::move(match));
      }
    }
    for (auto const& iec : found.non_isometric) {
      report.failures.push_back(read(iec.circuit()));
    }
    bool const ok = report.geodecity.geodetic && report.no_even_iecs
                    && report.failures.empty();
    report.outcome = ok ? Outcome::pass : Outcome::fail;
    return report;
  }

  PlainnessEvidence plainness_evidence(RewritingSystem const&  sys,
                                       std::uint32_t           radius,
                                       PlainnessOptions const& options) {
    if (!is_length_reducing(sys)) {
      throw PreconditionError("plainness_evidence: system is not "
                              "length-reducing");
    }
    auto conv = check_convergent(sys);
    if (!conv.convergent()) {
      throw PreconditionError("plainness_evidence: system is not confluent ("
                              + std::to_string(conv.unresolved_pairs.size())
                              + " unresolved critical pairs)");
    }
    if (!sys.alphabet().has_involution()) {
      throw PreconditionError("plainness_evidence: alphabet is not closed "
                              "under inverses");
    }
    if (!conv.presents_group) {
      throw PreconditionError("plainness_evidence: system does not present "
                              "a group");
    }

    auto const        ball = build_ball(sys, radius, options.vertex_cap);
    PlainnessEvidence ev;
    ev.radius   = radius;
    ev.vertices = ball.size();
    ev.max_lhs  = sys.max_lhs_length();
    ev.scope    = ball.size() <= options.all_apex_limit ? ApexScope::all
                                                        : ApexScope::origin;

    auto geo    = certified_geodecity(ball.leveled());
    ev.geodetic = geo.geodetic;
    if (geo.witness) {
      ev.witnesses.push_back("two geodesics: " + describe(geo.witness->first)
                             + " / " + describe(geo.witness->second));
    }

    auto iecs           = certified_iecs(ball.leveled(), ev.scope);
    ev.uncertified_iecs = iecs.uncertified;
    for (auto const& iec : iecs.iecs) {
      ev.max_iec = std::max(ev.max_iec, iec.length());
    }
    for (auto const& iec : iecs.non_isometric) {
      ev.geodetic = false;
      ev.witnesses.push_back("non-isometric circuit from equal geodesics: "
                             + describe(iec.circuit()));
    }

    auto blk = certified_blocks(ball.leveled());
    for (std::size_t b = 0; b < blk.certified.size(); ++b) {
      if (!blk.certified[b]) {
        ++ev.uncertified_blocks;
        continue;
      }
      ++ev.certified_blocks;
      if (blk.diameter[b] > 2
          || (options.expect_unit_blocks && blk.diameter[b] > 1)) {
        ev.witnesses.push_back("block " + describe(blk.decomposition.blocks[b])
                               + " has diameter "
                               + std::to_string(blk.diameter[b]));
      }
    }
    ev.max_block_diameter = blk.max_certified_diameter;

    bool const iec_ok = ev.max_iec == 2 || ev.max_iec + 1 <= 2 * ev.max_lhs;
    ev.consistent_with_plain
        = ev.geodetic && iec_ok && ev.max_block_diameter <= 2;
    if (!iec_ok) {
      ev.witnesses.push_back("IEC of length " + std::to_string(ev.max_iec)
                             + " exceeds 2*max_lhs-1");
    }
    if (options.expect_unit_blocks) {
      ev.unit_blocks_checked = true;
      ev.unit_blocks_hold    = ev.max_block_diameter <= 1;
    }
    return ev;
  }

}  // namespace lrw

// Brute-force reference implementations used to check the library.
//
// Nothing here calls into the library's algorithms; only its plain data
// types (Word, Rule, SimpleGraph) are shared.

#ifndef LRW_TESTS_ORACLES_HPP_
#define LRW_TESTS_ORACLES_HPP_

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "lrw/graph.hpp"
#include "lrw/rewriting.hpp"

namespace oracle {

  using lrw::vertex_t;
  using Ids = std::vector<std::uint32_t>;

  inline Ids ids(lrw::Word const& w) {
    Ids out;
    for (auto x : w) {
      out.push_back(x.id);
    }
    return out;
  }

  inline lrw::Word word(Ids const& w) {
    lrw::Word out;
    for (auto x : w) {
      out.push_back(lrw::Letter{x});
    }
    return out;
  }

  struct Rules {
    std::vector<std::pair<Ids, Ids>> rules;

    explicit Rules(lrw::RewritingSystem const& sys) {
      for (auto const& r : sys.rules()) {
        rules.emplace_back(ids(r.lhs), ids(r.rhs));
      }
    }
  };

  struct Redex {
    std::size_t pos;
    std::size_t rule;
  };

  inline std::vector<Redex> redexes(Rules const& t, Ids const& w) {
    std::vector<Redex> out;
    for (std::size_t p = 0; p < w.size(); ++p) {
      for (std::size_t i = 0; i < t.rules.size(); ++i) {
        auto const& l = t.rules[i].first;
        if (p + l.size() <= w.size()
            && std::equal(l.begin(), l.end(), w.begin() + p)) {
          out.push_back({p, i});
        }
      }
    }
    return out;
  }

  inline Ids apply(Rules const& t, Ids const& w, Redex r) {
    auto const& [l, rhs] = t.rules[r.rule];
    Ids out(w.begin(), w.begin() + r.pos);
    out.insert(out.end(), rhs.begin(), rhs.end());
    out.insert(out.end(), w.begin() + r.pos + l.size(), w.end());
    return out;
  }

  inline std::vector<Ids> one_step(Rules const& t, Ids const& w) {
    std::vector<Ids> out;
    for (auto r : redexes(t, w)) {
      out.push_back(apply(t, w, r));
    }
    return out;
  }

  enum class Strategy { leftmost, rightmost, random };

  // Rewrites until irreducible. `steps` receives the number of rewrites.
  inline Ids rewrite(Rules const&     t,
                     Ids              w,
                     Strategy         s,
                     std::mt19937_64& rng,
                     std::size_t*     steps = nullptr) {
    std::size_t n = 0;
    for (;;) {
      auto rs = redexes(t, w);
      if (rs.empty()) {
        break;
      }
      Redex pick = rs.front();
      if (s == Strategy::rightmost) {
        pick = rs.back();
      } else if (s == Strategy::random) {
        pick = rs[rng() % rs.size()];
      }
      w = apply(t, w, pick);
      ++n;
    }
    if (steps != nullptr) {
      *steps = n;
    }
    return w;
  }

  // Every irreducible word reachable from w, and the longest rewrite
  // sequence seen. Exhaustive.
  struct Reachable {
    std::set<Ids> normal_forms;
    std::size_t   longest = 0;
  };

  inline Reachable all_normal_forms(Rules const& t, Ids const& w) {
    Reachable                               out;
    std::map<Ids, std::size_t>              depth;  // longest sequence from word
    std::function<std::size_t(Ids const&)> go = [&](Ids const& u) {
      if (auto it = depth.find(u); it != depth.end()) {
        return it->second;
      }
      auto next = one_step(t, u);
      std::size_t d = 0;
      if (next.empty()) {
        out.normal_forms.insert(u);
      }
      for (auto const& v : next) {
        d = std::max(d, 1 + go(v));
      }
      depth[u] = d;
      return d;
    };
    out.longest = go(w);
    return out;
  }

  inline std::vector<Ids> all_words(std::uint32_t letters, std::size_t max_len) {
    std::vector<Ids> out{{}};
    std::vector<Ids> frontier{{}};
    for (std::size_t len = 1; len <= max_len; ++len) {
      std::vector<Ids> next;
      for (auto const& w : frontier) {
        for (std::uint32_t x = 0; x < letters; ++x) {
          auto v = w;
          v.push_back(x);
          next.push_back(v);
        }
      }
      out.insert(out.end(), next.begin(), next.end());
      frontier = std::move(next);
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Cayley ball by enumeration of irreducible words
  ////////////////////////////////////////////////////////////////////////

  struct Ball {
    std::vector<Ids>                        vertices;  // sorted (shortlex)
    std::set<std::pair<std::size_t, std::size_t>> edges;  // index pairs, u < v
  };

  inline bool shortlex_less(Ids const& a, Ids const& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  }

  inline Ball ball(lrw::RewritingSystem const& sys, std::size_t radius) {
    Rules      t(sys);
    auto const n = static_cast<std::uint32_t>(sys.alphabet().size());
    Ball       b;
    for (auto const& w : all_words(n, radius)) {
      if (redexes(t, w).empty()) {
        b.vertices.push_back(w);
      }
    }
    std::sort(b.vertices.begin(), b.vertices.end(), shortlex_less);
    std::map<Ids, std::size_t> index;
    for (std::size_t i = 0; i < b.vertices.size(); ++i) {
      index[b.vertices[i]] = i;
    }
    std::mt19937_64 rng(0);
    for (std::size_t i = 0; i < b.vertices.size(); ++i) {
      for (std::uint32_t x = 0; x < n; ++x) {
        auto w = b.vertices[i];
        w.push_back(x);
        auto nf = rewrite(t, w, Strategy::leftmost, rng);
        auto it = index.find(nf);
        if (it != index.end() && it->second != i) {
          b.edges.emplace(std::min(i, it->second), std::max(i, it->second));
        }
      }
    }
    return b;
  }

  ////////////////////////////////////////////////////////////////////////
  // Graphs
  ////////////////////////////////////////////////////////////////////////

  inline constexpr std::uint32_t inf = 1u << 30;

  inline std::vector<std::vector<std::uint32_t>>
  floyd_warshall(lrw::SimpleGraph const& g) {
    auto const n = g.num_vertices();
    std::vector<std::vector<std::uint32_t>> d(n, std::vector<std::uint32_t>(n, inf));
    for (std::size_t u = 0; u < n; ++u) {
      d[u][u] = 0;
    }
    for (auto [u, v] : g.edges()) {
      d[u][v] = d[v][u] = 1;
    }
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
        }
      }
    }
    return d;
  }

  // Number of shortest s-t paths, by depth-first enumeration of simple paths.
  inline std::size_t shortest_path_count(lrw::SimpleGraph const& g,
                                         vertex_t                s,
                                         vertex_t                t) {
    std::size_t       best = SIZE_MAX, count = 0;
    std::vector<bool> on(g.num_vertices(), false);
    std::function<void(vertex_t, std::size_t)> go = [&](vertex_t u,
                                                        std::size_t len) {
      if (len > best) {
        return;
      }
      if (u == t) {
        if (len < best) {
          best  = len;
          count = 0;
        }
        ++count;
        return;
      }
      on[u] = true;
      for (auto v : g.neighbors(u)) {
        if (!on[v]) {
          go(v, len + 1);
        }
      }
      on[u] = false;
    };
    go(s, 0);
    return count;
  }

  // All simple cycles of length >= 3, each once, as vertex sequences starting
  // at their smallest vertex with second < last.
  inline std::vector<std::vector<vertex_t>>
  simple_cycles(lrw::SimpleGraph const& g, std::size_t max_len = SIZE_MAX) {
    std::vector<std::vector<vertex_t>> out;
    std::vector<vertex_t>              path;
    std::vector<bool>                  on(g.num_vertices(), false);
    for (vertex_t s = 0; s < g.num_vertices(); ++s) {
      std::function<void(vertex_t)> go = [&](vertex_t u) {
        for (auto v : g.neighbors(u)) {
          if (v == s && path.size() >= 3 && path[1] < path.back()) {
            out.push_back(path);
          }
          if (v > s && !on[v] && path.size() < max_len) {
            on[v] = true;
            path.push_back(v);
            go(v);
            path.pop_back();
            on[v] = false;
          }
        }
      };
      path = {s};
      on[s] = true;
      go(s);
      on[s] = false;
    }
    return out;
  }

  inline bool isometric(std::vector<std::vector<std::uint32_t>> const& d,
                        std::vector<vertex_t> const&                    c) {
    auto const m = c.size();
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = i + 1; j < m; ++j) {
        if (d[c[i]][c[j]] != std::min(j - i, m + i - j)) {
          return false;
        }
      }
    }
    return true;
  }

  // Sorted vertex sets of all isometric simple cycles of length >= 3.
  inline std::set<std::vector<vertex_t>>
  isometric_cycles(lrw::SimpleGraph const& g) {
    auto                            d = floyd_warshall(g);
    std::set<std::vector<vertex_t>> out;
    for (auto c : simple_cycles(g)) {
      if (isometric(d, c)) {
        std::sort(c.begin(), c.end());
        out.insert(c);
      }
    }
    return out;
  }

  inline bool on_common_cycle(std::vector<std::vector<vertex_t>> const& cycles,
                              vertex_t                                  u,
                              vertex_t                                  v) {
    for (auto const& c : cycles) {
      if (std::find(c.begin(), c.end(), u) != c.end()
          && std::find(c.begin(), c.end(), v) != c.end()) {
        return true;
      }
    }
    return false;
  }

  // Vertices whose removal disconnects the graph.
  inline std::vector<vertex_t> cut_vertices(lrw::SimpleGraph const& g) {
    std::vector<vertex_t> out;
    auto const            n = g.num_vertices();
    for (vertex_t x = 0; x < n; ++x) {
      if (n <= 2) {
        break;
      }
      vertex_t          start = x == 0 ? 1 : 0;
      std::vector<bool> seen(n, false);
      seen[x] = seen[start] = true;
      std::vector<vertex_t> stack{start};
      std::size_t           reached = 1;
      while (!stack.empty()) {
        auto u = stack.back();
        stack.pop_back();
        for (auto v : g.neighbors(u)) {
          if (!seen[v]) {
            seen[v] = true;
            ++reached;
            stack.push_back(v);
          }
        }
      }
      if (reached != n - 1) {
        out.push_back(x);
      }
    }
    return out;
  }

}  // namespace oracle

#endif  // LRW_TESTS_ORACLES_HPP_

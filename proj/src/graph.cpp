#include "lrw/graph.hpp"

#include <algorithm>
#include <deque>
#include <iterator>
#include <set>
#include <sstream>
#include <string>

#include "lrw/error.hpp"

namespace lrw {

  namespace {
    std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
      return a > std::numeric_limits<std::uint64_t>::max() - b
                 ? std::numeric_limits<std::uint64_t>::max()
                 : a + b;
    }

    void require_connected(SimpleGraph const& g, char const* what) {
      if (!is_connected(g)) {
        throw PreconditionError(std::string(what)
                                + " requires a connected graph");
      }
    }

    void require_geodetic(SimpleGraph const& g, char const* what) {
      if (!is_geodetic(g).geodetic) {
        throw PreconditionError(std::string(what)
                                + " requires a geodetic graph");
      }
    }

    // Some geodesic source..v, ending with `last`, chosen by smallest
    // predecessor.
    std::vector<vertex_t> geodesic_through(SimpleGraph const&                g,
                                           std::vector<std::uint32_t> const& d,
                                           vertex_t last,
                                           vertex_t v) {
      std::vector<vertex_t> path{v, last};
      vertex_t              cur = last;
      while (d[cur] != 0) {
        for (vertex_t w : g.neighbors(cur)) {
          if (d[w] + 1 == d[cur]) {
            cur = w;
            break;
          }
        }
        path.push_back(cur);
      }
      std::reverse(path.begin(), path.end());
      return path;
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // SimpleGraph
  ////////////////////////////////////////////////////////////////////////

  SimpleGraph::SimpleGraph(std::size_t n, std::span<Edge const> edges)
      : _adj(n) {
    for (auto [u, v] : edges) {
      add_edge(u, v);
    }
  }

  void SimpleGraph::add_edge(vertex_t u, vertex_t v) {
    if (u >= _adj.size() || v >= _adj.size()) {
      throw PreconditionError("edge endpoint out of range");
    }
    if (u == v) {
      throw PreconditionError("loop at vertex " + std::to_string(u));
    }
    auto it = std::lower_bound(_adj[u].begin(), _adj[u].end(), v);
    if (it != _adj[u].end() && *it == v) {
      throw PreconditionError("repeated edge " + std::to_string(u) + " "
                              + std::to_string(v));
    }
    _adj[u].insert(it, v);
    _adj[v].insert(std::lower_bound(_adj[v].begin(), _adj[v].end(), u), u);
    ++_num_edges;
  }

  bool SimpleGraph::adjacent(vertex_t u, vertex_t v) const {
    auto const& n = _adj.at(u);
    return std::binary_search(n.begin(), n.end(), v);
  }

  std::vector<SimpleGraph::Edge> SimpleGraph::edges() const {
    std::vector<Edge> result;
    result.reserve(_num_edges);
    for (vertex_t u = 0; u < _adj.size(); ++u) {
      for (vertex_t v : _adj[u]) {
        if (u < v) {
          result.emplace_back(u, v);
        }
      }
    }
    return result;
  }

  SimpleGraph parse_edge_list(std::string_view text) {
    std::vector<SimpleGraph::Edge> edges;
    std::size_t                    n      = 0;
    std::size_t                    number = 0;
    std::istringstream             in{std::string(text)};
    for (std::string line; std::getline(in, line);) {
      ++number;
      if (auto hash = line.find('#'); hash != std::string::npos) {
        line.erase(hash);
      }
      std::istringstream ls(line);
      long long          u = 0, v = 0;
      if (!(ls >> u)) {
        continue;
      }
      std::string extra;
      if (!(ls >> v) || (ls >> extra) || u < 0 || v < 0
          || u > std::numeric_limits<vertex_t>::max() - 1
          || v > std::numeric_limits<vertex_t>::max() - 1) {
        throw ParseError("expected two non-negative vertex ids", number);
      }
      edges.emplace_back(static_cast<vertex_t>(u), static_cast<vertex_t>(v));
      n = std::max({n,
                    static_cast<std::size_t>(u) + 1,
                    static_cast<std::size_t>(v) + 1});
    }
    if (n == 0) {
      throw ParseError("edge list has no edges", 0);
    }
    SimpleGraph g(n);
    for (std::size_t i = 0; i < edges.size(); ++i) {
      try {
        g.add_edge(edges[i].first, edges[i].second);
      } catch (PreconditionError const& e) {
        throw ParseError(e.what(), 0);
      }
    }
    return g;
  }

  bool is_connected(SimpleGraph const& g) {
    if (g.num_vertices() == 0) {
      return false;
    }
    auto d = distances_from(g, 0);
    return std::none_of(
        d.begin(), d.end(), [](auto x) { return x == unreachable; });
  }

  ////////////////////////////////////////////////////////////////////////
  // Shortest paths
  ////////////////////////////////////////////////////////////////////////

  std::vector<vertex_t> BfsResult::path_to(vertex_t v) const {
    if (count.at(v) != 1) {
      throw PreconditionError("path_to requires a unique geodesic");
    }
    std::vector<vertex_t> path{v};
    while (v != source) {
      v = *parent[v];
      path.push_back(v);
    }
    std::reverse(path.begin(), path.end());
    return path;
  }

  BfsResult bfs(SimpleGraph const& g, vertex_t source, std::uint32_t max_depth) {
    std::size_t const n = g.num_vertices();
    if (source >= n) {
      throw PreconditionError("bfs source out of range");
    }
    BfsResult r;
    r.source = source;
    r.distance.assign(n, unreachable);
    r.count.assign(n, 0);
    r.first_steps.assign(n, {});
    r.parent.assign(n, std::nullopt);

    std::vector<vertex_t> order{source};
    r.distance[source] = 0;
    r.count[source]    = 1;
    for (std::size_t head = 0; head < order.size(); ++head) {
      vertex_t u = order[head];
      if (r.distance[u] >= max_depth) {
        continue;
      }
      for (vertex_t v : g.neighbors(u)) {
        if (r.distance[v] == unreachable) {
          r.distance[v] = r.distance[u] + 1;
          order.push_back(v);
        }
        if (r.distance[v] == r.distance[u] + 1) {
          r.count[v] = saturating_add(r.count[v], r.count[u]);
          auto&                 fs = r.first_steps[v];
          std::vector<vertex_t> merged;
          if (u == source) {
            merged = fs;
            merged.insert(std::lower_bound(merged.begin(), merged.end(), v),
                          v);
          } else {
            auto const& from = r.first_steps[u];
            std::set_union(fs.begin(),
                           fs.end(),
                           from.begin(),
                           from.end(),
                           std::back_inserter(merged));
          }
          fs = std::move(merged);
          if (r.count[v] == 1) {
            r.parent[v] = u;
          } else {
            r.parent[v].reset();
          }
        }
      }
    }
    return r;
  }

  std::vector<std::uint32_t> distances_from(SimpleGraph const& g,
                                            vertex_t           source) {
    std::vector<std::uint32_t> d(g.num_vertices(), unreachable);
    std::deque<vertex_t>       queue{source};
    d.at(source) = 0;
    while (!queue.empty()) {
      vertex_t u = queue.front();
      queue.pop_front();
      for (vertex_t v : g.neighbors(u)) {
        if (d[v] == unreachable) {
          d[v] = d[u] + 1;
          queue.push_back(v);
        }
      }
    }
    return d;
  }

  std::vector<std::vector<std::uint32_t>>
  all_pairs_distances(SimpleGraph const& g) {
    std::vector<std::vector<std::uint32_t>> result;
    result.reserve(g.num_vertices());
    for (vertex_t v = 0; v < g.num_vertices(); ++v) {
      result.push_back(distances_from(g, v));
    }
    return result;
  }

  GeodeticWitness geodetic_witness(SimpleGraph const& g,
                                   BfsResult const&   r,
                                   vertex_t           v) {
    if (r.count.at(v) < 2) {
      throw PreconditionError("geodetic_witness requires two geodesics");
    }
    std::vector<vertex_t> preds;
    for (vertex_t w : g.neighbors(v)) {
      if (r.distance[w] + 1 == r.distance[v]) {
        preds.push_back(w);
      }
    }
    return {r.source,
            v,
            geodesic_through(g, r.distance, preds[0], v),
            geodesic_through(g, r.distance, preds[1], v)};
  }

  GeodeticReport is_geodetic(SimpleGraph const& g) {
    require_connected(g, "is_geodetic");
    for (vertex_t s = 0; s < g.num_vertices(); ++s) {
      auto r = bfs(g, s);
      for (vertex_t v = 0; v < g.num_vertices(); ++v) {
        if (r.count[v] >= 2) {
          return {false, geodetic_witness(g, r, v)};
        }
      }
    }
    return {};
  }

  ////////////////////////////////////////////////////////////////////////
  // Isometrically embedded circuits
  ////////////////////////////////////////////////////////////////////////

  std::vector<vertex_t> IecRecord::circuit() const {
    std::vector<vertex_t> result(branch_x);
    result.insert(result.end(), branch_y.rbegin(), branch_y.rend() - 1);
    return result;
  }

  std::vector<vertex_t> IecRecord::vertex_set() const {
    auto result = circuit();
    std::sort(result.begin(), result.end());
    return result;
  }

  std::optional<IecRecord>
  iec_from_apex(BfsResult const& r, vertex_t x, vertex_t y) {
    auto const n = r.distance.at(x);
    if (n == unreachable || n == 0 || r.distance.at(y) != n
        || r.count[x] != 1 || r.count[y] != 1
        || r.first_steps[x] == r.first_steps[y]) {
      return std::nullopt;
    }
    return IecRecord{r.source, x, y, n, r.path_to(x), r.path_to(y)};
  }

  bool is_isometric_circuit(SimpleGraph const&        g,
                            std::span<vertex_t const> circuit) {
    std::size_t const m = circuit.size();
    if (m < 2) {
      return false;
    }
    std::vector<vertex_t> sorted(circuit.begin(), circuit.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      return false;
    }
    for (std::size_t i = 0; i < m; ++i) {
      if (!g.adjacent(circuit[i], circuit[(i + 1) % m])) {
        return false;
      }
    }
    for (std::size_t i = 0; i < m; ++i) {
      auto d = distances_from(g, circuit[i]);
      for (std::size_t j = i + 1; j < m; ++j) {
        if (d[circuit[j]] != std::min(j - i, m + i - j)) {
          return false;
        }
      }
    }
    return true;
  }

  std::vector<IecRecord> enumerate_iecs(SimpleGraph const& g) {
    // Geodecity rules out even IECs of length > 2: the two halves of such a
    // circuit would be distinct geodesics between antipodal vertices.
    require_geodetic(g, "enumerate_iecs");
    auto const                       edges = g.edges();
    std::set<std::vector<vertex_t>>  seen;
    std::vector<IecRecord>           result;
    for (vertex_t w = 0; w < g.num_vertices(); ++w) {
      auto r = bfs(g, w);
      for (auto [x, y] : edges) {
        auto iec = iec_from_apex(r, x, y);
        if (iec && seen.insert(iec->vertex_set()).second) {
          result.push_back(std::move(*iec));
        }
      }
    }
    std::sort(result.begin(), result.end(), [](auto const& a, auto const& b) {
      if (a.length() != b.length()) {
        return a.length() < b.length();
      }
      return a.vertex_set() < b.vertex_set();
    });
    return result;
  }

  std::size_t max_iec_length(SimpleGraph const& g) {
    std::size_t result = 2;
    for (auto const& iec : enumerate_iecs(g)) {
      result = std::max(result, iec.length());
    }
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // Blocks
  ////////////////////////////////////////////////////////////////////////

  BlockDecomposition blocks(SimpleGraph const& g) {
    require_connected(g, "blocks");
    std::size_t const n     = g.num_vertices();
    auto const        edges = g.edges();
    auto edge_index = [&edges](vertex_t u, vertex_t v) {
      SimpleGraph::Edge e{std::min(u, v), std::max(u, v)};
      return static_cast<std::size_t>(
          std::lower_bound(edges.begin(), edges.end(), e) - edges.begin());
    };

    BlockDecomposition result;
    result.edge_block.assign(edges.size(), 0);
    if (n == 1) {
      result.blocks.push_back({0});
      return result;
    }

    std::vector<std::uint32_t> disc(n, unreachable), low(n, 0);
    std::vector<bool>          is_cut(n, false);
    std::vector<std::size_t>   edge_stack;
    struct Frame {
      vertex_t    v;
      vertex_t    parent;
      std::size_t next;
    };
    std::vector<Frame> stack;
    std::uint32_t      time          = 0;
    std::size_t        root_children = 0;
    std::vector<std::vector<std::size_t>> block_edges;

    disc[0] = low[0] = time++;
    stack.push_back({0, 0, 0});
    while (!stack.empty()) {
      Frame& f  = stack.back();
      auto const& nb = g.neighbors(f.v);
      if (f.next < nb.size()) {
        vertex_t w = nb[f.next++];
        if (disc[w] == unreachable) {
          edge_stack.push_back(edge_index(f.v, w));
          disc[w] = low[w] = time++;
          stack.push_back({w, f.v, 0});
        } else if (disc[w] < disc[f.v] && !(stack.size() > 1 && w == f.parent)) {
          edge_stack.push_back(edge_index(f.v, w));
          low[f.v] = std::min(low[f.v], disc[w]);
        }
        continue;
      }
      Frame done = f;
      stack.pop_back();
      if (stack.empty()) {
        break;
      }
      vertex_t u = done.parent;
      low[u]     = std::min(low[u], low[done.v]);
      if (low[done.v] >= disc[u]) {
        if (stack.size() == 1) {
          ++root_children;
        } else {
          is_cut[u] = true;
        }
        std::size_t const      tree_edge = edge_index(u, done.v);
        std::vector<std::size_t> component;
        while (true) {
          std::size_t e = edge_stack.back();
          edge_stack.pop_back();
          component.push_back(e);
          if (e == tree_edge) {
            break;
          }
        }
        block_edges.push_back(std::move(component));
      }
    }
    if (root_children > 1) {
      is_cut[0] = true;
    }

    std::vector<std::pair<std::vector<vertex_t>, std::vector<std::size_t>>>
        found;
    for (auto& be : block_edges) {
      std::vector<vertex_t> vs;
      for (auto e : be) {
        vs.push_back(edges[e].first);
        vs.push_back(edges[e].second);
      }
      std::sort(vs.begin(), vs.end());
      vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
      found.emplace_back(std::move(vs), std::move(be));
    }
    std::sort(found.begin(), found.end());
    for (std::size_t b = 0; b < found.size(); ++b) {
      for (auto e : found[b].second) {
        result.edge_block[e] = b;
      }
      result.blocks.push_back(std::move(found[b].first));
    }
    for (vertex_t v = 0; v < n; ++v) {
      if (is_cut[v]) {
        result.cut_vertices.push_back(v);
      }
    }
    return result;
  }

  bool BlockCutTree::is_tree() const {
    return is_connected(tree) && tree.num_edges() + 1 == tree.num_vertices();
  }

  BlockCutTree block_cut_tree(BlockDecomposition const& decomp,
                              std::size_t               num_vertices) {
    BlockCutTree t;
    t.num_type_one = num_vertices;
    t.num_type_two = decomp.blocks.size();
    t.tree         = SimpleGraph(num_vertices + decomp.blocks.size());
    for (std::size_t b = 0; b < decomp.blocks.size(); ++b) {
      for (vertex_t x : decomp.blocks[b]) {
        t.tree.add_edge(x, t.block_node(b));
      }
    }
    return t;
  }

  std::vector<std::uint32_t>
  block_diameters(BlockDecomposition const&                      decomp,
                  std::vector<std::vector<std::uint32_t>> const& dist) {
    std::vector<std::uint32_t> result;
    for (auto const& block : decomp.blocks) {
      std::uint32_t diam = 0;
      for (vertex_t u : block) {
        for (vertex_t v : block) {
          diam = std::max(diam, dist[u][v]);
        }
      }
      result.push_back(diam);
    }
    return result;
  }

  std::uint32_t max_embedded_circuit_diameter(SimpleGraph const& g) {
    auto const    decomp = blocks(g);
    auto const    diams  = block_diameters(decomp, all_pairs_distances(g));
    std::uint32_t result = 0;
    for (auto d : diams) {
      result = std::max(result, d);
    }
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // Broomlike property and embedded 4-circuits
  ////////////////////////////////////////////////////////////////////////

  BroomlikeReport is_s_broomlike(SimpleGraph const& g, std::uint32_t s) {
    if (s == 0) {
      throw PreconditionError("s-broomlike requires s >= 1");
    }
    require_geodetic(g, "is_s_broomlike");
    BroomlikeReport report;
    for (vertex_t a0 = 0; a0 < g.num_vertices(); ++a0) {
      auto r = bfs(g, a0);
      for (vertex_t b = 0; b < g.num_vertices(); ++b) {
        auto const n = r.distance[b];
        if (n == 0) {
          continue;
        }
        for (vertex_t an : g.neighbors(b)) {
          if (r.distance[an] != n) {
            continue;
          }
          ++report.configurations;
          auto          path   = r.path_to(an);
          auto          b_path = r.path_to(b);
          std::uint32_t shared = 0;
          while (path[shared + 1] == b_path[shared + 1]) {
            ++shared;
          }
          std::uint32_t p       = n - shared;
          report.max_divergence = std::max(report.max_divergence, p);
          if (p > s && report.holds) {
            report.holds   = false;
            report.witness = BroomlikeWitness{
                std::move(path), b, std::move(b_path), p};
          }
        }
      }
    }
    return report;
  }

  StempleReport check_stemple_4circuits(SimpleGraph const& g) {
    require_geodetic(g, "check_stemple_4circuits");
    std::set<std::array<vertex_t, 4>> found;
    std::size_t const                 n = g.num_vertices();
    for (vertex_t w0 = 0; w0 < n; ++w0) {
      for (vertex_t w2 = w0 + 1; w2 < n; ++w2) {
        std::vector<vertex_t> common;
        auto const&           a = g.neighbors(w0);
        auto const&           b = g.neighbors(w2);
        std::set_intersection(
            a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
        for (std::size_t i = 0; i < common.size(); ++i) {
          for (std::size_t j = i + 1; j < common.size(); ++j) {
            std::array<vertex_t, 4> c{w0, common[i], w2, common[j]};
            auto first = std::min_element(c.begin(), c.end());
            std::rotate(c.begin(), first, c.end());
            if (c[1] > c[3]) {
              std::swap(c[1], c[3]);
            }
            found.insert(c);
          }
        }
      }
    }
    StempleReport report;
    for (auto const& c : found) {
      report.circuits.push_back(c);
      if (!g.adjacent(c[0], c[2]) || !g.adjacent(c[1], c[3])) {
        report.violations.push_back(c);
      }
    }
    return report;
  }

}  // namespace lrw

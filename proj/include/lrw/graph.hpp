// Finite simple undirected graphs and the metric analyses used to study
// geodetic graphs: shortest-path counting, isometrically embedded circuits
// (IECs), blocks and block-cut trees, the s-broomlike property, and embedded
// 4-circuits.

#ifndef LRW_GRAPH_HPP_
#define LRW_GRAPH_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

namespace lrw {

  using vertex_t = std::uint32_t;

  inline constexpr std::uint32_t unreachable
      = std::numeric_limits<std::uint32_t>::max();

  class SimpleGraph {
   public:
    using Edge = std::pair<vertex_t, vertex_t>;

    SimpleGraph() = default;
    explicit SimpleGraph(std::size_t n) : _adj(n) {}
    // Throws PreconditionError on loops, repeated edges, or endpoints >= n.
    SimpleGraph(std::size_t n, std::span<Edge const> edges);

    void add_edge(vertex_t u, vertex_t v);

    [[nodiscard]] std::size_t num_vertices() const noexcept {
      return _adj.size();
    }
    [[nodiscard]] std::size_t num_edges() const noexcept {
      return _num_edges;
    }
    [[nodiscard]] std::vector<vertex_t> const&
    neighbors(vertex_t v) const {
      return _adj.at(v);
    }
    [[nodiscard]] bool adjacent(vertex_t u, vertex_t v) const;
    [[nodiscard]] std::size_t degree(vertex_t v) const {
      return _adj.at(v).size();
    }
    // Each edge once as (u, v) with u < v, in lexicographic order.
    [[nodiscard]] std::vector<Edge> edges() const;

    friend bool operator==(SimpleGraph const&, SimpleGraph const&) = default;

   private:
    std::vector<std::vector<vertex_t>> _adj;
    std::size_t                        _num_edges = 0;
  };

  // Lines "u v" with 0-based ids; '#' starts a comment. The vertex count is
  // one more than the largest id mentioned.
  [[nodiscard]] SimpleGraph parse_edge_list(std::string_view text);

  [[nodiscard]] bool is_connected(SimpleGraph const& g);

  ////////////////////////////////////////////////////////////////////////
  // Shortest paths
  ////////////////////////////////////////////////////////////////////////

  struct BfsResult {
    vertex_t                   source = 0;
    std::vector<std::uint32_t> distance;  // `unreachable` if not reached
    // Number of geodesics from source, saturating at uint64 max.
    std::vector<std::uint64_t> count;
    // Neighbours of the source that begin some geodesic to each vertex.
    std::vector<std::vector<vertex_t>> first_steps;
    // Predecessor on the unique geodesic when count == 1, else nullopt.
    std::vector<std::optional<vertex_t>> parent;

    // Vertex sequence source..v along the unique geodesic; requires
    // count[v] == 1.
    [[nodiscard]] std::vector<vertex_t> path_to(vertex_t v) const;
  };

  // Vertices farther than `max_depth` are left unreachable.
  [[nodiscard]] BfsResult
  bfs(SimpleGraph const& g,
      vertex_t           source,
      std::uint32_t      max_depth = std::numeric_limits<std::uint32_t>::max());

  // Plain distance-only BFS, kept separate from bfs() so that properties
  // derived from one can be re-checked with the other.
  [[nodiscard]] std::vector<std::uint32_t> distances_from(SimpleGraph const& g,
                                                          vertex_t source);

  [[nodiscard]] std::vector<std::vector<std::uint32_t>>
  all_pairs_distances(SimpleGraph const& g);

  struct GeodeticWitness {
    vertex_t              u;
    vertex_t              v;
    std::vector<vertex_t> first;
    std::vector<vertex_t> second;
  };

  struct GeodeticReport {
    bool                           geodetic = true;
    std::optional<GeodeticWitness> witness;
  };

  // Throws PreconditionError on disconnected input.
  [[nodiscard]] GeodeticReport is_geodetic(SimpleGraph const& g);

  // Two distinct geodesics source..v; requires r.count[v] >= 2.
  [[nodiscard]] GeodeticWitness geodetic_witness(SimpleGraph const& g,
                                                 BfsResult const&   r,
                                                 vertex_t           v);

  ////////////////////////////////////////////////////////////////////////
  // Isometrically embedded circuits
  ////////////////////////////////////////////////////////////////////////

  // The circuit apex, branch_x..., branch_y... back to apex, where
  // branch_x = apex..x and branch_y = apex..y are the unique geodesics and
  // x, y are adjacent.
  struct IecRecord {
    vertex_t              apex;
    vertex_t              x;
    vertex_t              y;
    std::uint32_t         half_length;  // n = d(apex, x) = d(apex, y)
    std::vector<vertex_t> branch_x;
    std::vector<vertex_t> branch_y;

    [[nodiscard]] std::size_t length() const noexcept {
      return 2 * static_cast<std::size_t>(half_length) + 1;
    }
    // v_0 = apex, ..., v_n = x, v_{n+1} = y, ..., v_{2n}.
    [[nodiscard]] std::vector<vertex_t> circuit() const;
    [[nodiscard]] std::vector<vertex_t> vertex_set() const;
  };

  // The closed path formed by two equal-length geodesics from a common apex
  // whose endpoints are adjacent, if the geodesics have distinct first steps.
  [[nodiscard]] std::optional<IecRecord>
  iec_from_apex(BfsResult const& from_apex, vertex_t x, vertex_t y);

  // Distances along `circuit` (cyclically) agree with graph distances and
  // the vertices are distinct.
  [[nodiscard]] bool is_isometric_circuit(SimpleGraph const&        g,
                                          std::span<vertex_t const> circuit);

  // Every IEC of length > 2, once per vertex set, sorted by (length, vertex
  // set). Throws PreconditionError unless g is connected and geodetic.
  [[nodiscard]] std::vector<IecRecord> enumerate_iecs(SimpleGraph const& g);

  // Maximum IEC length, 2 when only the trivial circuits u, v, u exist.
  [[nodiscard]] std::size_t max_iec_length(SimpleGraph const& g);

  ////////////////////////////////////////////////////////////////////////
  // Blocks
  ////////////////////////////////////////////////////////////////////////

  struct BlockDecomposition {
    std::vector<std::vector<vertex_t>> blocks;        // each sorted
    std::vector<vertex_t>              cut_vertices;  // sorted
    // edge_block[i] is the block of SimpleGraph::edges()[i].
    std::vector<std::size_t> edge_block;
  };

  // Biconnected components, blocks sorted by their vertex sets. A connected
  // graph with one vertex has the single block {0}. Throws on disconnected
  // input.
  [[nodiscard]] BlockDecomposition blocks(SimpleGraph const& g);

  // Node ids: type I nodes 0..n-1 (graph vertices), type II nodes
  // n..n+b-1 (blocks).
  struct BlockCutTree {
    std::size_t num_type_one = 0;
    std::size_t num_type_two = 0;
    SimpleGraph tree;

    [[nodiscard]] vertex_t block_node(std::size_t block) const noexcept {
      return static_cast<vertex_t>(num_type_one + block);
    }
    // Connected and acyclic.
    [[nodiscard]] bool is_tree() const;
  };

  [[nodiscard]] BlockCutTree block_cut_tree(BlockDecomposition const& decomp,
                                            std::size_t num_vertices);

  // Largest distance, measured in the whole graph, between two vertices of a
  // common block; equivalently the largest diameter of an embedded circuit.
  [[nodiscard]] std::uint32_t max_embedded_circuit_diameter(
      SimpleGraph const& g);

  // Whole-graph diameter of each block of `decomp`.
  [[nodiscard]] std::vector<std::uint32_t>
  block_diameters(BlockDecomposition const&                      decomp,
                  std::vector<std::vector<std::uint32_t>> const& dist);

  ////////////////////////////////////////////////////////////////////////
  // Broomlike property and embedded 4-circuits
  ////////////////////////////////////////////////////////////////////////

  struct BroomlikeWitness {
    std::vector<vertex_t> path;     // a_0 .. a_n, a geodesic
    vertex_t              b;        // neighbour of a_n with d(a_0, b) = n
    std::vector<vertex_t> b_path;   // the geodesic a_0 .. b
    std::uint32_t         divergence;  // p: geodesics share a_0..a_{n-p}
  };

  struct BroomlikeReport {
    bool                            holds = true;
    std::uint32_t                   max_divergence = 0;
    std::size_t                     configurations = 0;
    std::optional<BroomlikeWitness> witness;
  };

  // Checks every geodesic a_0..a_n and neighbour b of a_n with
  // d(a_0, b) = n. The first violation (p > s) in (a_0, b, a_n) order is
  // the witness. Throws PreconditionError unless g is geodetic and s >= 1.
  [[nodiscard]] BroomlikeReport is_s_broomlike(SimpleGraph const& g,
                                               std::uint32_t      s);

  struct StempleReport {
    // Each 4-circuit w0 w1 w2 w3 once, with w0 the smallest vertex and
    // w1 < w3.
    std::vector<std::array<vertex_t, 4>> circuits;
    std::vector<std::array<vertex_t, 4>> violations;

    [[nodiscard]] bool holds() const noexcept {
      return violations.empty();
    }
  };

  // Every embedded 4-circuit must induce a complete graph. Throws
  // PreconditionError unless g is geodetic.
  [[nodiscard]] StempleReport check_stemple_4circuits(SimpleGraph const& g);

}  // namespace lrw

#endif  // LRW_GRAPH_HPP_

// Balls in the undirected Cayley graph of a group presented by a finite
// convergent length-reducing rewriting system, with normal forms as vertices.

#ifndef LRW_CAYLEY_HPP_
#define LRW_CAYLEY_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "json.hpp"
#include "lrw/graph.hpp"
#include "lrw/rewriting.hpp"

namespace lrw {

  inline constexpr std::size_t default_vertex_cap = 200'000;

  // A graph whose vertices carry their distance from vertex 0 and which is
  // the radius-`radius` ball around vertex 0 of some larger graph.
  struct LeveledGraph {
    SimpleGraph                graph;
    std::vector<std::uint32_t> level;
    std::uint32_t              radius = 0;
  };

  // A pair is certified when min(level(u), level(v)) + d_ball(u, v) <= R:
  // every path of that length from the lower vertex stays in the ball, so
  // the ball holds all geodesics of the full graph between u and v.
  [[nodiscard]] inline bool certified(LeveledGraph const& ball,
                                      vertex_t            u,
                                      vertex_t            v,
                                      std::uint32_t       d_ball) noexcept {
    return d_ball != unreachable
           && static_cast<std::uint64_t>(
                  std::min(ball.level[u], ball.level[v]))
                      + d_ball
                  <= ball.radius;
  }

  class CayleyBall {
   public:
    [[nodiscard]] RewritingSystem const& system() const noexcept {
      return _system;
    }
    [[nodiscard]] std::uint32_t radius() const noexcept {
      return _leveled.radius;
    }
    [[nodiscard]] SimpleGraph const& graph() const noexcept {
      return _leveled.graph;
    }
    [[nodiscard]] LeveledGraph const& leveled() const noexcept {
      return _leveled;
    }
    [[nodiscard]] std::size_t size() const noexcept {
      return _words.size();
    }
    [[nodiscard]] Word const& word(vertex_t v) const {
      return _words.at(v);
    }
    [[nodiscard]] std::uint32_t level(vertex_t v) const {
      return _leveled.level.at(v);
    }
    [[nodiscard]] std::optional<vertex_t> find(Word const& w) const;

    // The lowest-index letter x with normalize(word(u) x) = word(v).
    [[nodiscard]] Letter label(vertex_t u, vertex_t v) const;

    // Number of vertices at each level 0..R.
    [[nodiscard]] std::vector<std::size_t> level_sizes() const;

    friend CayleyBall build_ball(RewritingSystem const& sys,
                                 std::uint32_t          radius,
                                 std::size_t            vertex_cap);

   private:
    RewritingSystem                                  _system;
    LeveledGraph                                     _leveled;
    std::vector<Word>                                _words;
    std::unordered_map<Word, vertex_t, WordHash>     _index;
    // _labels[u][k] labels the edge u -> graph().neighbors(u)[k].
    std::vector<std::vector<Letter>> _labels;
  };

  // Vertices are the normal forms of length <= radius in shortlex order
  // (vertex 0 is λ). Throws PreconditionError naming the first failed
  // requirement (length-reducing, inverse-closed, confluent, presents a
  // group) and ResourceLimitError when more than `vertex_cap` vertices are
  // needed.
  [[nodiscard]] CayleyBall build_ball(RewritingSystem const& sys,
                                      std::uint32_t          radius,
                                      std::size_t vertex_cap = default_vertex_cap);

  // d_ball computed by BFS in the ball.
  [[nodiscard]] bool certified(CayleyBall const& ball, vertex_t u, vertex_t v);

  [[nodiscard]] nlohmann::json ball_to_json(CayleyBall const& ball);
  [[nodiscard]] std::string    ball_to_dot(CayleyBall const& ball);

  // Reads the graph, levels and radius back from ball_to_json output.
  [[nodiscard]] LeveledGraph leveled_graph_from_json(nlohmann::json const& j);

}  // namespace lrw

#endif  // LRW_CAYLEY_HPP_

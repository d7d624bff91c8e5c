#include "lrw/cayley.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <utility>

#include "lrw/error.hpp"

namespace lrw {

  namespace {
    bool shortlex_less(Word const& a, Word const& b) {
      if (a.size() != b.size()) {
        return a.size() < b.size();
      }
      return a < b;
    }

    std::string dot_escape(std::string const& s) {
      std::string out;
      for (char c : s) {
        if (c == '"' || c == '\\') {
          out += '\\';
        }
        out += c;
      }
      return out;
    }
  }  // namespace

  std::optional<vertex_t> CayleyBall::find(Word const& w) const {
    auto it = _index.find(w);
    if (it == _index.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  Letter CayleyBall::label(vertex_t u, vertex_t v) const {
    auto const& nb = graph().neighbors(u);
    auto        it = std::lower_bound(nb.begin(), nb.end(), v);
    if (it == nb.end() || *it != v) {
      throw PreconditionError("label of a non-edge");
    }
    return _labels[u][static_cast<std::size_t>(it - nb.begin())];
  }

  std::vector<std::size_t> CayleyBall::level_sizes() const {
    std::vector<std::size_t> result(radius() + 1, 0);
    for (auto l : _leveled.level) {
      ++result[l];
    }
    return result;
  }

  CayleyBall build_ball(RewritingSystem const& sys,
                        std::uint32_t          radius,
                        std::size_t            vertex_cap) {
    if (!is_length_reducing(sys)) {
      throw PreconditionError("build_ball: system is not length-reducing");
    }
    if (!sys.alphabet().has_involution()) {
      throw PreconditionError("build_ball: alphabet is not closed under "
                              "inverses");
    }
    auto report = check_convergent(sys);
    if (!report.convergent()) {
      throw PreconditionError("build_ball: system is not confluent");
    }
    if (!report.presents_group) {
      throw PreconditionError("build_ball: system does not present a group");
    }
    if (vertex_cap == 0) {
      throw PreconditionError("build_ball: vertex cap must be positive");
    }

    // Discovery pass: BFS from λ under right multiplication by letters.
    std::vector<Word>                            words{Word{}};
    std::unordered_map<Word, vertex_t, WordHash> index{{Word{}, 0}};
    std::vector<std::vector<std::pair<vertex_t, Letter>>> arcs(1);
    auto const letters = sys.alphabet().letters();
    for (std::size_t head = 0; head < words.size(); ++head) {
      for (Letter x : letters) {
        Word w = normalize(sys, concat(words[head], Word{x}));
        if (w.size() > radius) {
          continue;
        }
        auto [it, inserted]
            = index.emplace(w, static_cast<vertex_t>(words.size()));
        if (inserted) {
          if (words.size() >= vertex_cap) {
            throw ResourceLimitError("build_ball: more than "
                                     + std::to_string(vertex_cap)
                                     + " vertices");
          }
          words.push_back(std::move(w));
          arcs.emplace_back();
        }
        vertex_t v = it->second;
        if (v == head) {
          continue;  // x represents the identity
        }
        auto& out = arcs[head];
        bool  dup = std::any_of(
            out.begin(), out.end(), [v](auto const& a) { return a.first == v; });
        if (!dup) {
          out.emplace_back(v, x);  // lowest-index letter wins
        }
      }
    }

    // Renumber in shortlex order.
    std::vector<vertex_t> order(words.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&words](vertex_t a, vertex_t b) {
      return shortlex_less(words[a], words[b]);
    });
    std::vector<vertex_t> rank(words.size());
    for (vertex_t i = 0; i < order.size(); ++i) {
      rank[order[i]] = i;
    }

    CayleyBall ball;
    ball._system          = sys;
    ball._leveled.radius  = radius;
    ball._leveled.graph   = SimpleGraph(words.size());
    ball._leveled.level.resize(words.size());
    ball._words.resize(words.size());
    for (vertex_t old = 0; old < words.size(); ++old) {
      ball._leveled.level[rank[old]] = static_cast<std::uint32_t>(
          words[old].size());
      ball._words[rank[old]] = words[old];
    }
    for (vertex_t v = 0; v < ball._words.size(); ++v) {
      ball._index.emplace(ball._words[v], v);
    }
    for (vertex_t old = 0; old < words.size(); ++old) {
      for (auto [to, x] : arcs[old]) {
        vertex_t u = rank[old], v = rank[to];
        if (!ball._leveled.graph.adjacent(u, v)) {
          ball._leveled.graph.add_edge(u, v);
        }
      }
    }
    ball._labels.resize(words.size());
    for (vertex_t old = 0; old < words.size(); ++old) {
      vertex_t    u  = rank[old];
      auto const& nb = ball.graph().neighbors(u);
      ball._labels[u].resize(nb.size());
      for (auto [to, x] : arcs[old]) {
        auto pos = std::lower_bound(nb.begin(), nb.end(), rank[to]) - nb.begin();
        ball._labels[u][static_cast<std::size_t>(pos)] = x;
      }
    }
    return ball;
  }

  bool certified(CayleyBall const& ball, vertex_t u, vertex_t v) {
    auto d = distances_from(ball.graph(), u);
    return certified(ball.leveled(), u, v, d.at(v));
  }

  nlohmann::json ball_to_json(CayleyBall const& ball) {
    auto const&    alphabet = ball.system().alphabet();
    nlohmann::json j;
    j["format"]  = "lrw-ball";
    j["version"] = 1;
    j["radius"]  = ball.radius();
    j["letters"] = alphabet.names();
    auto inverses = nlohmann::json::array();
    for (Letter x : alphabet.letters()) {
      inverses.push_back(alphabet.name(alphabet.inverse(x)));
    }
    j["inverses"] = std::move(inverses);
    auto vertices = nlohmann::json::array();
    for (vertex_t v = 0; v < ball.size(); ++v) {
      auto word = nlohmann::json::array();
      for (Letter x : ball.word(v)) {
        word.push_back(alphabet.name(x));
      }
      vertices.push_back({{"id", v}, {"word", word}, {"level", ball.level(v)}});
    }
    j["vertices"] = std::move(vertices);
    auto edges    = nlohmann::json::array();
    for (auto [u, v] : ball.graph().edges()) {
      edges.push_back({{"u", u},
                       {"v", v},
                       {"label", alphabet.name(ball.label(u, v))},
                       {"reverse_label", alphabet.name(ball.label(v, u))}});
    }
    j["edges"] = std::move(edges);
    return j;
  }

  std::string ball_to_dot(CayleyBall const& ball) {
    auto const&        alphabet = ball.system().alphabet();
    std::ostringstream out;
    out << "graph ball {\n";
    for (vertex_t v = 0; v < ball.size(); ++v) {
      out << "  " << v << " [label=\""
          << dot_escape(format_word(alphabet, ball.word(v))) << "\"];\n";
    }
    for (auto [u, v] : ball.graph().edges()) {
      out << "  " << u << " -- " << v << " [label=\""
          << dot_escape(alphabet.name(ball.label(u, v))) << "\"];\n";
    }
    out << "}\n";
    return out.str();
  }

  LeveledGraph leveled_graph_from_json(nlohmann::json const& j) {
    try {
      if (j.at("format") != "lrw-ball") {
        throw ParseError("not an lrw-ball document", 0);
      }
      LeveledGraph result;
      result.radius         = j.at("radius").get<std::uint32_t>();
      auto const& vertices  = j.at("vertices");
      result.graph          = SimpleGraph(vertices.size());
      result.level.resize(vertices.size());
      for (auto const& v : vertices) {
        auto id = v.at("id").get<std::size_t>();
        if (id >= vertices.size()) {
          throw ParseError("vertex id out of range", 0);
        }
        result.level[id] = v.at("level").get<std::uint32_t>();
      }
      for (auto const& e : j.at("edges")) {
        result.graph.add_edge(e.at("u").get<vertex_t>(),
                              e.at("v").get<vertex_t>());
      }
      return result;
    } catch (nlohmann::json::exception const& e) {
      throw ParseError(std::string("malformed ball JSON: ") + e.what(), 0);
    } catch (PreconditionError const& e) {
      throw ParseError(std::string("malformed ball JSON: ") + e.what(), 0);
    }
  }

}  // namespace lrw

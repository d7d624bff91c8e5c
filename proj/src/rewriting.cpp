#include "lrw/rewriting.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <utility>

#include "lrw/error.hpp"

namespace lrw {

  namespace {
    bool valid_name(std::string_view name) {
      if (name.empty() || name == "λ" || name == "->") {
        return false;
      }
      return std::none_of(name.begin(), name.end(), [](char c) {
        return std::isspace(static_cast<unsigned char>(c)) || c == '#'
               || c == '=';
      });
    }

    // True iff `pattern` occurs in `w` starting at `pos`.
    bool matches_at(Word const& w, std::size_t pos, Word const& pattern) {
      return pos + pattern.size() <= w.size()
             && std::equal(pattern.begin(), pattern.end(), w.begin() + pos);
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // Alphabet
  ////////////////////////////////////////////////////////////////////////

  Alphabet::Alphabet(std::vector<std::string> names) {
    for (auto& n : names) {
      add(std::move(n));
    }
  }

  Letter Alphabet::add(std::string name) {
    if (!valid_name(name)) {
      throw PreconditionError("invalid letter name \"" + name + "\"");
    }
    if (_index.contains(name)) {
      throw PreconditionError("duplicate letter name \"" + name + "\"");
    }
    if (_inverse) {
      throw PreconditionError("cannot add letters after the involution is set");
    }
    Letter x{static_cast<std::uint32_t>(_names.size())};
    _index.emplace(name, _names.size());
    _names.push_back(std::move(name));
    return x;
  }

  void Alphabet::set_involution(std::vector<Letter> inv) {
    if (inv.size() != _names.size()) {
      throw PreconditionError("involution must be defined on every letter");
    }
    for (std::size_t i = 0; i < inv.size(); ++i) {
      if (!contains(inv[i])) {
        throw PreconditionError("involution maps outside the alphabet");
      }
      if (inv[inv[i].id].id != i) {
        throw PreconditionError("inverse map is not an involution at letter \""
                                + _names[i] + "\"");
      }
    }
    _inverse = std::move(inv);
  }

  std::optional<Letter> Alphabet::find(std::string_view name) const {
    auto it = _index.find(std::string(name));
    if (it == _index.end()) {
      return std::nullopt;
    }
    return Letter{static_cast<std::uint32_t>(it->second)};
  }

  Letter Alphabet::inverse(Letter x) const {
    if (!_inverse) {
      throw PreconditionError("alphabet has no declared inverses");
    }
    return _inverse->at(x.id);
  }

  Word Alphabet::inverse(Word const& w) const {
    Word result;
    result.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
      result.push_back(inverse(*it));
    }
    return result;
  }

  bool Alphabet::single_char_names() const noexcept {
    return std::all_of(_names.begin(), _names.end(), [](auto const& n) {
      return n.size() == 1;
    });
  }

  std::vector<Letter> Alphabet::letters() const {
    std::vector<Letter> result(_names.size());
    for (std::size_t i = 0; i < result.size(); ++i) {
      result[i] = Letter{static_cast<std::uint32_t>(i)};
    }
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // RewritingSystem
  ////////////////////////////////////////////////////////////////////////

  RewritingSystem::RewritingSystem(Alphabet alphabet, std::vector<Rule> rules)
      : _alphabet(std::move(alphabet)), _rules(std::move(rules)) {
    for (auto const& rule : _rules) {
      if (rule.lhs.empty()) {
        throw PreconditionError("rule with empty left-hand side");
      }
      auto check = [this](Word const& w) {
        for (Letter x : w) {
          if (!_alphabet.contains(x)) {
            throw PreconditionError("rule uses letter id "
                                    + std::to_string(x.id)
                                    + " outside the alphabet");
          }
        }
      };
      check(rule.lhs);
      check(rule.rhs);
    }
  }

  std::size_t RewritingSystem::max_lhs_length() const noexcept {
    std::size_t result = 0;
    for (auto const& rule : _rules) {
      result = std::max(result, rule.lhs.size());
    }
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // Words
  ////////////////////////////////////////////////////////////////////////

  Word parse_word(Alphabet const& alphabet, std::string_view text) {
    std::istringstream       in{std::string(text)};
    std::vector<std::string> tokens;
    for (std::string tok; in >> tok;) {
      tokens.push_back(tok);
    }
    Word result;
    if (tokens.size() == 1 && tokens[0] == "λ") {
      return result;
    }
    if (tokens.size() == 1 && !alphabet.find(tokens[0])
        && alphabet.single_char_names()) {
      for (char c : tokens[0]) {
        auto x = alphabet.find(std::string_view(&c, 1));
        if (!x) {
          throw ParseError("unknown letter '" + std::string(1, c) + "'", 0);
        }
        result.push_back(*x);
      }
      return result;
    }
    for (auto const& tok : tokens) {
      auto x = alphabet.find(tok);
      if (!x) {
        throw ParseError("unknown letter \"" + tok + "\"", 0);
      }
      result.push_back(*x);
    }
    return result;
  }

  std::string format_word(Alphabet const& alphabet, Word const& w) {
    if (w.empty()) {
      return "λ";
    }
    std::string result;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i != 0) {
        result += ' ';
      }
      result += alphabet.name(w[i]);
    }
    return result;
  }

  Word concat(Word const& u, Word const& v) {
    Word result;
    result.reserve(u.size() + v.size());
    result.insert(result.end(), u.begin(), u.end());
    result.insert(result.end(), v.begin(), v.end());
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // Rewriting
  ////////////////////////////////////////////////////////////////////////

  bool is_length_reducing(RewritingSystem const& sys) noexcept {
    return std::all_of(sys.rules().begin(),
                       sys.rules().end(),
                       [](Rule const& r) { return r.length_reducing(); });
  }

  bool is_irreducible(RewritingSystem const& sys, Word const& w) {
    for (std::size_t pos = 0; pos < w.size(); ++pos) {
      for (auto const& rule : sys.rules()) {
        if (matches_at(w, pos, rule.lhs)) {
          return false;
        }
      }
    }
    return true;
  }

  Word normalize(RewritingSystem const& sys, Word w) {
    if (!is_length_reducing(sys)) {
      throw PreconditionError("normalize requires a length-reducing system");
    }
    auto const& rules   = sys.rules();
    std::size_t max_lhs = sys.max_lhs_length();
    std::size_t pos     = 0;
    // Every factor starting before `pos` is known not to be a redex.
    while (pos < w.size()) {
      bool rewrote = false;
      for (auto const& rule : rules) {
        if (matches_at(w, pos, rule.lhs)) {
          auto first = w.begin() + static_cast<std::ptrdiff_t>(pos);
          w.erase(first, first + static_cast<std::ptrdiff_t>(rule.lhs.size()));
          w.insert(w.begin() + static_cast<std::ptrdiff_t>(pos),
                   rule.rhs.begin(),
                   rule.rhs.end());
          pos     = pos >= max_lhs - 1 ? pos - (max_lhs - 1) : 0;
          rewrote = true;
          break;
        }
      }
      if (!rewrote) {
        ++pos;
      }
    }
    return w;
  }

  bool equal_in_group(RewritingSystem const& sys,
                      Word const&            w1,
                      Word const&            w2) {
    return normalize(sys, w1) == normalize(sys, w2);
  }

  ////////////////////////////////////////////////////////////////////////
  // Confluence
  ////////////////////////////////////////////////////////////////////////

  std::vector<CriticalPair> critical_pairs(RewritingSystem const& sys) {
    std::vector<CriticalPair> result;
    auto const&               rules = sys.rules();
    for (std::size_t i = 0; i < rules.size(); ++i) {
      Word const& l1 = rules[i].lhs;
      Word const& r1 = rules[i].rhs;
      for (std::size_t j = 0; j < rules.size(); ++j) {
        Word const& l2 = rules[j].lhs;
        Word const& r2 = rules[j].rhs;
        // Proper overlaps: suffix of l1 == prefix of l2, length k.
        std::size_t kmax = std::min(l1.size(), l2.size());
        for (std::size_t k = 1; k < kmax; ++k) {
          if (!std::equal(l1.end() - static_cast<std::ptrdiff_t>(k),
                          l1.end(),
                          l2.begin())) {
            continue;
          }
          Word tail(l2.begin() + static_cast<std::ptrdiff_t>(k), l2.end());
          Word head(l1.begin(), l1.end() - static_cast<std::ptrdiff_t>(k));
          result.push_back({concat(l1, tail),
                            concat(r1, tail),
                            concat(head, r2),
                            CriticalPair::Kind::overlap,
                            i,
                            j});
        }
        // Containments: l2 occurs inside l1.
        if (l2.size() > l1.size()) {
          continue;
        }
        for (std::size_t p = 0; p + l2.size() <= l1.size(); ++p) {
          if (i == j && p == 0) {
            continue;
          }
          if (!matches_at(l1, p, l2)) {
            continue;
          }
          Word right(l1.begin(), l1.begin() + static_cast<std::ptrdiff_t>(p));
          right.insert(right.end(), r2.begin(), r2.end());
          right.insert(right.end(),
                       l1.begin() + static_cast<std::ptrdiff_t>(p + l2.size()),
                       l1.end());
          result.push_back(
              {l1, r1, std::move(right), CriticalPair::Kind::containment, i, j});
        }
      }
    }
    return result;
  }

  ConvergenceReport check_convergent(RewritingSystem const& sys) {
    ConvergenceReport report;
    report.length_reducing = is_length_reducing(sys);
    report.inverse_closed  = sys.alphabet().has_involution();
    auto pairs             = critical_pairs(sys);
    report.critical_pair_count = pairs.size();
    if (!report.length_reducing) {
      return report;
    }
    report.confluence_checked = true;
    for (auto& cp : pairs) {
      Word left  = normalize(sys, cp.left_result);
      Word right = normalize(sys, cp.right_result);
      if (left != right) {
        report.unresolved_pairs.push_back(
            {std::move(cp), std::move(left), std::move(right)});
      }
    }
    report.locally_confluent = report.unresolved_pairs.empty();
    if (report.convergent() && report.inverse_closed) {
      report.presents_group = check_presents_group(sys);
    }
    return report;
  }

  bool check_presents_group(RewritingSystem const& sys) {
    auto const& alphabet = sys.alphabet();
    if (!alphabet.has_involution()) {
      throw PreconditionError(
          "group check requires declared inverses for every letter");
    }
    for (Letter x : alphabet.letters()) {
      Letter y = alphabet.inverse(x);
      if (!normalize(sys, Word{x, y}).empty()
          || !normalize(sys, Word{y, x}).empty()) {
        return false;
      }
    }
    return true;
  }

}  // namespace lrw

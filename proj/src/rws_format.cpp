// Reader and writer for the line-oriented .rws format:
//
//   # comment
//   letters: a A
//   inverses: a=A
//   rule: a A ->
//   rule: A a -> λ

#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "lrw/error.hpp"
#include "lrw/rewriting.hpp"

namespace lrw {

  namespace {
    std::string_view trim(std::string_view s) {
      auto const ws    = " \t\r\n";
      auto       first = s.find_first_not_of(ws);
      if (first == std::string_view::npos) {
        return {};
      }
      auto last = s.find_last_not_of(ws);
      return s.substr(first, last - first + 1);
    }

    std::vector<std::string> tokens(std::string_view s) {
      std::istringstream       in{std::string(s)};
      std::vector<std::string> result;
      for (std::string tok; in >> tok;) {
        result.push_back(tok);
      }
      return result;
    }

    struct Line {
      std::size_t      number;
      std::string      key;
      std::string_view body;
    };

    Word resolve(Alphabet const&                 alphabet,
                 std::vector<std::string> const& toks,
                 std::size_t                     line) {
      Word w;
      for (auto const& tok : toks) {
        if (tok == "λ") {
          if (toks.size() != 1) {
            throw ParseError("λ must stand alone", line);
          }
          continue;
        }
        auto x = alphabet.find(tok);
        if (!x) {
          throw ParseError("unknown letter \"" + tok + "\"", line);
        }
        w.push_back(*x);
      }
      return w;
    }
  }  // namespace

  RewritingSystem parse_system(std::string_view text) {
    std::vector<Line> lines;
    std::size_t       number = 0;
    while (!text.empty()) {
      ++number;
      auto             nl  = text.find('\n');
      std::string_view raw = text.substr(0, nl);
      text = nl == std::string_view::npos ? std::string_view{}
                                          : text.substr(nl + 1);
      if (auto hash = raw.find('#'); hash != std::string_view::npos) {
        raw = raw.substr(0, hash);
      }
      raw = trim(raw);
      if (raw.empty()) {
        continue;
      }
      auto colon = raw.find(':');
      if (colon == std::string_view::npos) {
        throw ParseError("expected \"letters:\", \"inverses:\" or \"rule:\"",
                         number);
      }
      std::string key(trim(raw.substr(0, colon)));
      if (key != "letters" && key != "inverses" && key != "rule") {
        throw ParseError("unknown directive \"" + key + "\"", number);
      }
      lines.push_back({number, std::move(key), raw.substr(colon + 1)});
    }

    Alphabet alphabet;
    for (auto const& line : lines) {
      if (line.key != "letters") {
        continue;
      }
      for (auto& tok : tokens(line.body)) {
        try {
          alphabet.add(tok);
        } catch (PreconditionError const& e) {
          throw ParseError(e.what(), line.number);
        }
      }
    }
    if (alphabet.size() == 0) {
      throw ParseError("no letters declared", 0);
    }

    std::vector<std::optional<Letter>> inverse(alphabet.size());
    bool                               saw_inverses = false;
    std::size_t                        inverse_line = 0;
    std::vector<Rule>                  rules;
    for (auto const& line : lines) {
      if (line.key == "inverses") {
        saw_inverses = true;
        inverse_line = line.number;
        for (auto const& tok : tokens(line.body)) {
          auto eq = tok.find('=');
          if (eq == std::string::npos || eq == 0 || eq + 1 == tok.size()) {
            throw ParseError("malformed inverse pair \"" + tok + "\"",
                             line.number);
          }
          auto x = alphabet.find(tok.substr(0, eq));
          auto y = alphabet.find(tok.substr(eq + 1));
          if (!x || !y) {
            throw ParseError("unknown letter in inverse pair \"" + tok + "\"",
                             line.number);
          }
          auto assign = [&](Letter from, Letter to) {
            if (inverse[from.id] && *inverse[from.id] != to) {
              throw ParseError("conflicting inverses for \""
                                   + alphabet.name(from) + "\"",
                               line.number);
            }
            inverse[from.id] = to;
          };
          assign(*x, *y);
          assign(*y, *x);
        }
      } else if (line.key == "rule") {
        auto arrow = line.body.find("->");
        if (arrow == std::string_view::npos
            || line.body.find("->", arrow + 2) != std::string_view::npos) {
          throw ParseError("rule needs exactly one \"->\"", line.number);
        }
        Word lhs = resolve(alphabet, tokens(line.body.substr(0, arrow)),
                           line.number);
        Word rhs = resolve(alphabet, tokens(line.body.substr(arrow + 2)),
                           line.number);
        if (lhs.empty()) {
          throw ParseError("rule with empty left-hand side", line.number);
        }
        rules.push_back({std::move(lhs), std::move(rhs)});
      }
    }

    if (saw_inverses) {
      std::vector<Letter> inv;
      for (std::size_t i = 0; i < inverse.size(); ++i) {
        if (!inverse[i]) {
          throw ParseError("letter \"" + alphabet.names()[i]
                               + "\" has no declared inverse",
                           inverse_line);
        }
        inv.push_back(*inverse[i]);
      }
      alphabet.set_involution(std::move(inv));
    }
    return RewritingSystem(std::move(alphabet), std::move(rules));
  }

  std::string to_rws(RewritingSystem const& sys) {
    auto const& alphabet = sys.alphabet();
    std::string out      = "letters:";
    for (auto const& name : alphabet.names()) {
      out += ' ' + name;
    }
    out += '\n';
    if (alphabet.has_involution()) {
      out += "inverses:";
      for (Letter x : alphabet.letters()) {
        Letter y = alphabet.inverse(x);
        if (x <= y) {
          out += ' ' + alphabet.name(x) + '=' + alphabet.name(y);
        }
      }
      out += '\n';
    }
    for (auto const& rule : sys.rules()) {
      out += "rule: " + format_word(alphabet, rule.lhs) + " -> ";
      out += rule.rhs.empty() ? std::string("λ")
                              : format_word(alphabet, rule.rhs);
      out += '\n';
    }
    return out;
  }

}  // namespace lrw

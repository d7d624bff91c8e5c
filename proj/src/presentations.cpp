#include "lrw/presentations.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>
#include <utility>

#include "lrw/error.hpp"

namespace lrw {

  namespace {
    std::string trim(std::string_view s) {
      auto const ws    = " \t\r\n";
      auto       first = s.find_first_not_of(ws);
      if (first == std::string_view::npos) {
        return {};
      }
      auto last = s.find_last_not_of(ws);
      return std::string(s.substr(first, last - first + 1));
    }

    std::vector<std::string> split(std::string_view s, char sep) {
      std::vector<std::string> result;
      std::size_t              start = 0;
      while (true) {
        auto pos = s.find(sep, start);
        result.push_back(trim(s.substr(start, pos - start)));
        if (pos == std::string_view::npos) {
          break;
        }
        start = pos + 1;
      }
      return result;
    }

    // Names for the nontrivial elements of C_n, generator g^1 first.
    std::vector<std::string> cyclic_names(char base, std::size_t n) {
      std::string lower(1, base);
      std::string upper(1, static_cast<char>(base - 'a' + 'A'));
      std::vector<std::string> names;
      for (std::size_t k = 1; k < n; ++k) {
        if (k == 1) {
          names.push_back(lower);
        } else if (k == n - 1) {
          names.push_back(upper);
        } else {
          names.push_back(lower + std::to_string(k));
        }
      }
      return names;
    }

    bool is_cyclic_table(FiniteGroupTable const& t) {
      // Generated tables satisfy g^i g^j = g^{(i+j) mod n} in index order.
      for (std::size_t i = 0; i < t.order(); ++i) {
        for (std::size_t j = 0; j < t.order(); ++j) {
          if (t.multiply(i, j) != (i + j) % t.order()) {
            return false;
          }
        }
      }
      return true;
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // FiniteGroupTable
  ////////////////////////////////////////////////////////////////////////

  FiniteGroupTable::FiniteGroupTable(
      std::vector<std::string>              names,
      std::vector<std::vector<std::size_t>> product)
      : _names(std::move(names)), _product(std::move(product)) {
    std::size_t const n = _names.size();
    if (n == 0) {
      throw PreconditionError("group table must have at least one element");
    }
    if (_product.size() != n) {
      throw PreconditionError("group table must be square");
    }
    for (auto const& row : _product) {
      if (row.size() != n) {
        throw PreconditionError("group table must be square");
      }
      for (auto k : row) {
        if (k >= n) {
          throw PreconditionError("group table entry out of range");
        }
      }
    }
    for (std::size_t g = 0; g < n; ++g) {
      if (_product[0][g] != g || _product[g][0] != g) {
        throw PreconditionError("element 0 is not the identity");
      }
    }
    // Latin square
    for (std::size_t g = 0; g < n; ++g) {
      std::vector<bool> row_seen(n), col_seen(n);
      for (std::size_t h = 0; h < n; ++h) {
        if (row_seen[_product[g][h]] || col_seen[_product[h][g]]) {
          throw PreconditionError(
              "group table is not a Latin square at element \"" + _names[g]
              + "\"");
        }
        row_seen[_product[g][h]] = true;
        col_seen[_product[h][g]] = true;
      }
    }
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        for (std::size_t c = 0; c < n; ++c) {
          if (_product[_product[a][b]][c] != _product[a][_product[b][c]]) {
            throw PreconditionError("group table is not associative");
          }
        }
      }
    }
    _inverse.resize(n);
    for (std::size_t g = 0; g < n; ++g) {
      _inverse[g] = static_cast<std::size_t>(
          std::find(_product[g].begin(), _product[g].end(), 0)
          - _product[g].begin());
    }
  }

  FiniteGroupTable FiniteGroupTable::cyclic(std::size_t n) {
    if (n == 0) {
      throw PreconditionError("C_n requires n >= 1");
    }
    std::vector<std::string>              names;
    std::vector<std::vector<std::size_t>> product(n,
                                                  std::vector<std::size_t>(n));
    for (std::size_t i = 0; i < n; ++i) {
      names.push_back(i == 0 ? "e" : "g" + std::to_string(i));
      for (std::size_t j = 0; j < n; ++j) {
        product[i][j] = (i + j) % n;
      }
    }
    return FiniteGroupTable(std::move(names), std::move(product));
  }

  FiniteGroupTable FiniteGroupTable::from_csv(std::string_view text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream                    in{std::string(text)};
    for (std::string line; std::getline(in, line);) {
      if (trim(line).empty()) {
        continue;
      }
      rows.push_back(split(line, ','));
    }
    if (rows.empty()) {
      throw ParseError("empty multiplication table", 0);
    }
    std::vector<std::string> names(rows[0].begin() + 1, rows[0].end());
    std::size_t const        n = names.size();
    if (n == 0 || rows.size() != n + 1) {
      throw ParseError("multiplication table must have one row per element",
                       0);
    }
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < n; ++i) {
      if (names[i].empty() || !index.emplace(names[i], i).second) {
        throw ParseError("empty or duplicate element name", 1);
      }
    }
    std::vector<std::vector<std::size_t>> product(n,
                                                  std::vector<std::size_t>(n));
    for (std::size_t r = 1; r <= n; ++r) {
      auto const& row = rows[r];
      if (row.size() != n + 1) {
        throw ParseError("wrong number of cells", r + 1);
      }
      auto g = index.find(row[0]);
      if (g == index.end()) {
        throw ParseError("unknown element \"" + row[0] + "\"", r + 1);
      }
      for (std::size_t c = 1; c <= n; ++c) {
        auto k = index.find(row[c]);
        if (k == index.end()) {
          throw ParseError("unknown element \"" + row[c] + "\"", r + 1);
        }
        product[g->second][c - 1] = k->second;
      }
    }
    try {
      return FiniteGroupTable(std::move(names), std::move(product));
    } catch (PreconditionError const& e) {
      throw ParseError(e.what(), 0);
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // PlainSpec
  ////////////////////////////////////////////////////////////////////////

  std::size_t PlainSpec::finite_count() const noexcept {
    return static_cast<std::size_t>(
        std::count_if(factors.begin(), factors.end(), [](auto const& f) {
          return std::holds_alternative<FiniteGroupTable>(f);
        }));
  }

  PlainSpec PlainSpec::parse(std::string_view text) {
    PlainSpec spec;
    for (auto const& tok : split(text, ',')) {
      if (tok == "Z") {
        spec.factors.emplace_back(InfiniteCyclic{});
        continue;
      }
      std::size_t n     = 0;
      auto        first = tok.data() + 1;
      auto        last  = tok.data() + tok.size();
      if (tok.size() < 2 || tok[0] != 'C'
          || std::from_chars(first, last, n).ptr != last || n < 2) {
        throw ParseError("unknown factor \"" + tok
                             + "\" (expected Z or C<n> with n >= 2)",
                         0);
      }
      spec.factors.emplace_back(FiniteGroupTable::cyclic(n));
    }
    return spec;
  }

  ////////////////////////////////////////////////////////////////////////
  // Generators
  ////////////////////////////////////////////////////////////////////////

  RewritingSystem gen_infinite_cyclic(std::string name,
                                      std::string inverse_name) {
    if (name == inverse_name) {
      throw PreconditionError("generator and inverse names must differ");
    }
    Alphabet alphabet;
    Letter   a = alphabet.add(std::move(name));
    Letter   A = alphabet.add(std::move(inverse_name));
    alphabet.set_involution({A, a});
    return RewritingSystem(std::move(alphabet),
                           {Rule{{a, A}, {}}, Rule{{A, a}, {}}});
  }

  RewritingSystem gen_finite_group(FiniteGroupTable const&         table,
                                   std::vector<std::string> const& names) {
    std::size_t const n = table.order();
    if (!names.empty() && names.size() != n - 1) {
      throw PreconditionError("need one name per nontrivial element");
    }
    Alphabet alphabet;
    for (std::size_t g = 1; g < n; ++g) {
      alphabet.add(names.empty() ? table.names()[g] : names[g - 1]);
    }
    auto letter = [](std::size_t g) {
      return Letter{static_cast<std::uint32_t>(g - 1)};
    };
    std::vector<Letter> inv;
    for (std::size_t g = 1; g < n; ++g) {
      inv.push_back(letter(table.inverse(g)));
    }
    alphabet.set_involution(std::move(inv));

    std::vector<Rule> rules;
    for (std::size_t g = 1; g < n; ++g) {
      for (std::size_t h = 1; h < n; ++h) {
        std::size_t k = table.multiply(g, h);
        rules.push_back(
            {{letter(g), letter(h)}, k == 0 ? Word{} : Word{letter(k)}});
      }
    }
    return RewritingSystem(std::move(alphabet), std::move(rules));
  }

  RewritingSystem free_product(std::vector<RewritingSystem> const& systems) {
    if (systems.empty()) {
      throw PreconditionError("free product of zero factors");
    }
    Alphabet            alphabet;
    std::vector<Letter> inv;
    std::vector<Rule>   rules;
    for (auto const& sys : systems) {
      if (!is_length_reducing(sys)) {
        throw PreconditionError("free product factor is not length-reducing");
      }
      auto const& a = sys.alphabet();
      if (!a.has_involution()) {
        throw PreconditionError("free product factor has no inverses");
      }
      auto const offset = static_cast<std::uint32_t>(alphabet.size());
      for (auto const& name : a.names()) {
        if (alphabet.find(name)) {
          throw PreconditionError("letter \"" + name
                                  + "\" occurs in two factors");
        }
        alphabet.add(name);
      }
      for (Letter x : a.letters()) {
        inv.push_back(Letter{a.inverse(x).id + offset});
      }
      auto shift = [offset](Word const& w) {
        Word result;
        for (Letter x : w) {
          result.push_back(Letter{x.id + offset});
        }
        return result;
      };
      for (auto const& rule : sys.rules()) {
        rules.push_back({shift(rule.lhs), shift(rule.rhs)});
      }
    }
    alphabet.set_involution(std::move(inv));
    return RewritingSystem(std::move(alphabet), std::move(rules));
  }

  RewritingSystem gen_plain(PlainSpec const& spec) {
    if (spec.factors.empty()) {
      throw PreconditionError("plain group needs at least one factor");
    }
    bool const                   aliases = spec.factors.size() <= 26;
    std::vector<RewritingSystem> parts;
    for (std::size_t i = 0; i < spec.factors.size(); ++i) {
      auto const& factor = spec.factors[i];
      char const  base   = static_cast<char>('a' + i);
      std::string tag    = std::to_string(i + 1);
      if (std::holds_alternative<PlainSpec::InfiniteCyclic>(factor)) {
        if (aliases) {
          parts.push_back(gen_infinite_cyclic(std::string(1, base),
                                              std::string(1, base - 'a' + 'A')));
        } else {
          parts.push_back(gen_infinite_cyclic("z" + tag, "z" + tag + "'"));
        }
        continue;
      }
      auto const&              table = std::get<FiniteGroupTable>(factor);
      std::vector<std::string> names;
      if (aliases && is_cyclic_table(table)) {
        names = cyclic_names(base, table.order());
      } else {
        for (std::size_t k = 1; k < table.order(); ++k) {
          names.push_back("g" + tag + "_" + std::to_string(k));
        }
      }
      if (table.order() == 1) {
        // The trivial group contributes no letters.
        continue;
      }
      parts.push_back(gen_finite_group(table, names));
    }
    if (parts.empty()) {
      throw PreconditionError("plain group with only trivial factors");
    }
    return free_product(parts);
  }

}  // namespace lrw

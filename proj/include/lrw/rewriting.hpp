// String rewriting systems over finite alphabets with a formal-inverse
// involution: normalization, critical pairs, and the convergence and group
// presentation checks.

#ifndef LRW_REWRITING_HPP_
#define LRW_REWRITING_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace lrw {

  struct Letter {
    std::uint32_t id = 0;

    friend auto operator<=>(Letter, Letter) = default;
  };

  // The empty vector is the empty word.
  using Word = std::vector<Letter>;

  struct WordHash {
    std::size_t operator()(Word const& w) const noexcept {
      std::size_t h = 0xcbf29ce484222325ULL;
      for (Letter x : w) {
        h ^= x.id + 1;
        h *= 0x100000001b3ULL;
      }
      return h;
    }
  };

  // Letters with dense ids, unique whitespace-free names, and an optional
  // total involution x -> x^{-1}.
  class Alphabet {
   public:
    Alphabet() = default;
    explicit Alphabet(std::vector<std::string> names);

    Letter add(std::string name);

    // `inv[i]` is the inverse of letter i; must be an involution on all
    // letters.
    void set_involution(std::vector<Letter> inv);
    void clear_involution() noexcept {
      _inverse.reset();
    }

    [[nodiscard]] std::size_t size() const noexcept {
      return _names.size();
    }
    [[nodiscard]] std::string const& name(Letter x) const {
      return _names.at(x.id);
    }
    [[nodiscard]] std::vector<std::string> const& names() const noexcept {
      return _names;
    }
    [[nodiscard]] std::optional<Letter> find(std::string_view name) const;
    [[nodiscard]] bool contains(Letter x) const noexcept {
      return x.id < _names.size();
    }

    // True iff the alphabet is declared closed under inverses.
    [[nodiscard]] bool has_involution() const noexcept {
      return _inverse.has_value();
    }
    // Throws PreconditionError when no involution is declared.
    [[nodiscard]] Letter inverse(Letter x) const;
    [[nodiscard]] Word inverse(Word const& w) const;

    // True iff every letter name is a single character.
    [[nodiscard]] bool single_char_names() const noexcept;

    [[nodiscard]] std::vector<Letter> letters() const;

    friend bool operator==(Alphabet const&, Alphabet const&) = default;

   private:
    std::vector<std::string>                     _names;
    std::unordered_map<std::string, std::size_t> _index;
    std::optional<std::vector<Letter>>           _inverse;
  };

  struct Rule {
    Word lhs;
    Word rhs;

    [[nodiscard]] bool length_reducing() const noexcept {
      return !lhs.empty() && lhs.size() > rhs.size();
    }

    friend bool operator==(Rule const&, Rule const&) = default;
  };

  class RewritingSystem {
   public:
    RewritingSystem() = default;
    // Throws PreconditionError if a rule mentions a letter outside the
    // alphabet or has an empty left-hand side.
    RewritingSystem(Alphabet alphabet, std::vector<Rule> rules);

    [[nodiscard]] Alphabet const& alphabet() const noexcept {
      return _alphabet;
    }
    [[nodiscard]] std::vector<Rule> const& rules() const noexcept {
      return _rules;
    }
    [[nodiscard]] std::size_t max_lhs_length() const noexcept;

    friend bool operator==(RewritingSystem const&,
                           RewritingSystem const&) = default;

   private:
    Alphabet          _alphabet;
    std::vector<Rule> _rules;
  };

  ////////////////////////////////////////////////////////////////////////
  // Words
  ////////////////////////////////////////////////////////////////////////

  // Parses whitespace-separated letter tokens. A single token that is not a
  // letter name is split into characters when every letter name is a single
  // character. "λ" and the empty string denote the empty word.
  [[nodiscard]] Word parse_word(Alphabet const& alphabet,
                                std::string_view text);

  // Tokens joined by single spaces, or "λ" for the empty word.
  [[nodiscard]] std::string format_word(Alphabet const& alphabet,
                                        Word const&     w);

  [[nodiscard]] Word concat(Word const& u, Word const& v);

  ////////////////////////////////////////////////////////////////////////
  // The .rws text format
  ////////////////////////////////////////////////////////////////////////

  // Rules whose left side is not longer than the right side are kept; they
  // make is_length_reducing() false.
  [[nodiscard]] RewritingSystem parse_system(std::string_view text);
  [[nodiscard]] std::string     to_rws(RewritingSystem const& sys);

  ////////////////////////////////////////////////////////////////////////
  // Rewriting
  ////////////////////////////////////////////////////////////////////////

  [[nodiscard]] bool is_length_reducing(RewritingSystem const& sys) noexcept;

  [[nodiscard]] bool is_irreducible(RewritingSystem const& sys, Word const& w);

  // Rewrites leftmost redex first, lowest rule index among redexes at the
  // same position, until irreducible. Throws PreconditionError unless the
  // system is length-reducing.
  [[nodiscard]] Word normalize(RewritingSystem const& sys, Word w);

  // normalize(w1) == normalize(w2); meaningful for convergent systems.
  [[nodiscard]] bool equal_in_group(RewritingSystem const& sys,
                                    Word const&            w1,
                                    Word const&            w2);

  ////////////////////////////////////////////////////////////////////////
  // Confluence
  ////////////////////////////////////////////////////////////////////////

  struct CriticalPair {
    enum class Kind { overlap, containment };

    Word        superposition;
    Word        left_result;
    Word        right_result;
    Kind        kind;
    std::size_t left_rule;
    std::size_t right_rule;

    friend bool operator==(CriticalPair const&, CriticalPair const&) = default;
  };

  // All overlaps (lhs_i = ut, lhs_j = tv, t nonempty and proper) and all
  // containments (lhs_j a factor of lhs_i, excluding a rule inside itself),
  // in rule-index order.
  [[nodiscard]] std::vector<CriticalPair>
  critical_pairs(RewritingSystem const& sys);

  struct UnresolvedPair {
    CriticalPair pair;
    Word         left_normal;
    Word         right_normal;
  };

  struct ConvergenceReport {
    bool length_reducing = false;
    // Local confluence is only decided for length-reducing systems; for the
    // others normal forms are not guaranteed to exist.
    bool                        confluence_checked = false;
    bool                        locally_confluent  = false;
    std::vector<UnresolvedPair> unresolved_pairs;
    std::size_t                 critical_pair_count = 0;
    bool                        inverse_closed      = false;
    bool                        presents_group      = false;

    // Newman's lemma: terminating and locally confluent.
    [[nodiscard]] bool convergent() const noexcept {
      return length_reducing && locally_confluent;
    }
  };

  [[nodiscard]] ConvergenceReport check_convergent(RewritingSystem const& sys);

  // True iff x.inv(x) and inv(x).x normalize to the empty word for every
  // letter x. Throws PreconditionError if no involution is declared or the
  // system is not length-reducing.
  [[nodiscard]] bool check_presents_group(RewritingSystem const& sys);

}  // namespace lrw

#endif  // LRW_REWRITING_HPP_

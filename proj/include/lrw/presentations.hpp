// Constructors for the canonical length-reducing presentations of plain
// groups: infinite cyclic factors, finite groups from their multiplication
// tables, and free products of these.

#ifndef LRW_PRESENTATIONS_HPP_
#define LRW_PRESENTATIONS_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "lrw/rewriting.hpp"

namespace lrw {

  // Multiplication table of a finite group; element 0 is the identity.
  class FiniteGroupTable {
   public:
    // Throws PreconditionError unless the table is a group table with
    // element 0 as identity (Latin square, associative).
    FiniteGroupTable(std::vector<std::string>              names,
                     std::vector<std::vector<std::size_t>> product);

    // C_n with elements e, g, g^2, ...; names are placeholders.
    static FiniteGroupTable cyclic(std::size_t n);

    // First row: a corner cell followed by the element names; each further
    // row: an element name followed by the product names. The first listed
    // element must be the identity.
    static FiniteGroupTable from_csv(std::string_view text);

    [[nodiscard]] std::size_t order() const noexcept {
      return _names.size();
    }
    [[nodiscard]] std::vector<std::string> const& names() const noexcept {
      return _names;
    }
    [[nodiscard]] std::size_t multiply(std::size_t g, std::size_t h) const {
      return _product.at(g).at(h);
    }
    [[nodiscard]] std::size_t inverse(std::size_t g) const {
      return _inverse.at(g);
    }

   private:
    std::vector<std::string>              _names;
    std::vector<std::vector<std::size_t>> _product;
    std::vector<std::size_t>              _inverse;
  };

  // Factors of a plain group, in the order used for letter naming.
  struct PlainSpec {
    struct InfiniteCyclic {};
    using Factor = std::variant<FiniteGroupTable, InfiniteCyclic>;

    std::vector<Factor> factors;

    // Parses a comma-separated list such as "C2,C3,Z".
    static PlainSpec parse(std::string_view text);

    [[nodiscard]] std::size_t finite_count() const noexcept;
    [[nodiscard]] std::size_t infinite_cyclic_count() const noexcept {
      return factors.size() - finite_count();
    }
  };

  // ({a, A}, {(aA, λ), (Aa, λ)}).
  [[nodiscard]] RewritingSystem gen_infinite_cyclic(std::string name,
                                                    std::string inverse_name);

  // One letter per nontrivial element; rule gh -> k for every ordered pair of
  // nontrivial elements, with k = λ when h = g^{-1}. `names[i]` names
  // element i + 1; by default the table's own names are used.
  [[nodiscard]] RewritingSystem
  gen_finite_group(FiniteGroupTable const&         table,
                   std::vector<std::string> const& names = {});

  // Union of alphabets, involutions and rules. Throws PreconditionError on a
  // letter-name collision, a missing involution, or a non-length-reducing
  // input.
  [[nodiscard]] RewritingSystem
  free_product(std::vector<RewritingSystem> const& systems);

  // Free product of the factor presentations. Letter names: factor i uses
  // the i-th lowercase letter; C_2 -> a, C_n -> c, c2, ..., C (the
  // generator, its powers, and its inverse), Z -> c, C. Tables from CSV and
  // specs with more than 26 factors use g<i>_<k> and z<i>, z<i>'.
  [[nodiscard]] RewritingSystem gen_plain(PlainSpec const& spec);

}  // namespace lrw

#endif  // LRW_PRESENTATIONS_HPP_

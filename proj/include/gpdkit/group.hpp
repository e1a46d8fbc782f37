#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace gpdkit {

  // A finite group given by its full multiplication table. Element 0 is
  // always the identity; mul(a, b) is the product a*b.
  class FiniteGroup {
   public:
    // Throws PreconditionError if the table is not a group.
    FiniteGroup(std::string name,
                std::vector<std::string> elements,
                std::vector<std::size_t> table);

    std::string const& name() const noexcept {
      return _name;
    }
    std::size_t order() const noexcept {
      return _elements.size();
    }
    std::string const& element(std::size_t i) const {
      return _elements.at(i);
    }
    std::vector<std::string> const& elements() const noexcept {
      return _elements;
    }
    std::size_t mul(std::size_t a, std::size_t b) const {
      return _table[a * order() + b];
    }
    std::size_t inverse(std::size_t a) const {
      return _inverse[a];
    }

    // Number of conjugacy classes; equals the number of irreducible complex
    // representations.
    std::size_t class_count() const;

    bool operator==(FiniteGroup const&) const = default;

    static FiniteGroup trivial();
    static FiniteGroup cyclic(std::size_t n);
    // Order 2n.
    static FiniteGroup dihedral(std::size_t n);
    // Order 4n: <a, x | a^2n, x^2 = a^n, x a x^-1 = a^-1>. dicyclic(2) = Q8.
    static FiniteGroup dicyclic(std::size_t n);
    static FiniteGroup symmetric(std::size_t n);
    static FiniteGroup alternating(std::size_t n);
    static FiniteGroup direct_product(FiniteGroup const& g,
                                      FiniteGroup const& h);
    // Closure of a set of permutations of {0, ..., degree-1}.
    static FiniteGroup from_permutations(
        std::string name,
        std::size_t degree,
        std::vector<std::vector<std::size_t>> const& generators);

    // Every group of order at most 12, one per isomorphism class.
    static std::vector<FiniteGroup> all_small_groups(std::size_t max_order);

   private:
    std::string              _name;
    std::vector<std::string> _elements;
    std::vector<std::size_t> _table;
    std::vector<std::size_t> _inverse;
  };

}  // namespace gpdkit

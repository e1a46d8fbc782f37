#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "gpdkit/presentation.hpp"

namespace gpdkit {

  // Finitely presented group <generators | relators>. A relator word
  // [a1, ..., ak] asserts a1 * ... * ak = e.
  struct GroupPresentation {
    std::size_t       generators = 0;
    std::vector<Word> relators;
  };

  // Free and cyclic reduction of a relator.
  Word reduce_relator(Word w);
  Word inverse_word(Word const& w);

  // Result of Tietze elimination. `reduced` is over the surviving
  // generators, renumbered; survivor[g] is g's new index or -1. An
  // eliminated generator g equals substitution[g], a word over original
  // generator indices that only mentions generators eliminated later or
  // survivors.
  struct TietzeResult {
    GroupPresentation reduced;
    std::vector<int>  survivor;
    std::vector<Word> substitution;
  };

  // Repeatedly solves short relators for a generator that occurs in them
  // exactly once and substitutes it away.
  TietzeResult eliminate_generators(GroupPresentation const& p);

  // Complete coset table of the trivial subgroup, i.e. the right regular
  // action of the group. Column 2*g is generator g, 2*g+1 its inverse.
  // Coset 0 is the identity and cosets are numbered in breadth-first order.
  struct CosetTable {
    std::size_t      columns = 0;
    std::vector<int> table;  // cosets x columns
    // word[c] carries coset 0 to coset c (letters applied left to right)
    std::vector<Word> word;

    std::size_t size() const noexcept {
      return word.size();
    }
    int act(int coset, Letter l) const {
      return table[static_cast<std::size_t>(coset) * columns
                   + 2 * l.generator + (l.inverse ? 1 : 0)];
    }
    int act(int coset, Word const& w) const {
      for (auto l : w) {
        coset = act(coset, l);
      }
      return coset;
    }
  };

  // Hasselgrove-Leech-Trotter enumeration. Returns nullopt if more than
  // `max_cosets` cosets would have to be defined.
  std::optional<CosetTable> enumerate_cosets(GroupPresentation const& p,
                                             std::size_t max_cosets);

}  // namespace gpdkit

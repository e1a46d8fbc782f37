#pragma once

#include <cstddef>
#include <functional>
#include <limits>
#include <optional>
#include <vector>

#include "gpdkit/groupoid.hpp"

namespace gpdkit {

  struct FunctorSearchOptions {
    // Only object maps that are injective (cofibrations).
    bool injective_on_objects = false;
    // Bijective on objects and morphisms (isomorphisms).
    bool bijective = false;
  };

  // Calls `visit` for every functor A -> B, in a deterministic order (object
  // maps lexicographically, then morphism candidates in hom-set order).
  // Stops early when `visit` returns false.
  //
  // The search assigns a morphism, then propagates through composition and
  // inverses, so only a generating set is ever branched on.
  void for_each_functor(GroupoidPtr const&                            a,
                        GroupoidPtr const&                            b,
                        FunctorSearchOptions const&                   options,
                        std::function<bool(GroupoidFunctor const&)> const& visit);

  std::vector<GroupoidFunctor> enumerate_functors(
      GroupoidPtr const&          a,
      GroupoidPtr const&          b,
      FunctorSearchOptions const& options = {});

  std::optional<GroupoidFunctor> find_isomorphism(GroupoidPtr const& a,
                                                  GroupoidPtr const& b);

  // Isomorphism of finite groups given by multiplication tables (row-major,
  // n x n). Returns the element map, or nullopt.
  std::optional<std::vector<std::size_t>> find_group_isomorphism(
      std::vector<std::size_t> const& table_a,
      std::vector<std::size_t> const& table_b,
      std::size_t                     order);

}  // namespace gpdkit

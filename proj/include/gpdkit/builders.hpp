#pragma once

#include <string>
#include <vector>

#include "gpdkit/group.hpp"
#include "gpdkit/groupoid.hpp"

namespace gpdkit {

  // Standard finite groupoids. Object and morphism names are deterministic
  // and follow input order.

  // Objects x0..x{n-1}, identities only.
  ConcreteGroupoid discrete(std::size_t n);
  // Exactly one morphism between any two objects; morphism "xi->xj".
  ConcreteGroupoid codiscrete(std::size_t n);
  ConcreteGroupoid codiscrete(std::vector<std::string> const& object_names);
  // One object "*", morphisms the group elements.
  ConcreteGroupoid classifying(FiniteGroup const& g);
  // Objects and morphisms prefixed "0." and "1.".
  ConcreteGroupoid disjoint_union(ConcreteGroupoid const& a,
                                  ConcreteGroupoid const& b);
  // Objects "(x,y)", morphisms "(f,g)"; componentwise composition.
  ConcreteGroupoid product(ConcreteGroupoid const& a, ConcreteGroupoid const& b);
  // Same objects as `a`; morphisms "(f,g)" with g ranging over the group.
  ConcreteGroupoid product_with_group(ConcreteGroupoid const& a,
                                      FiniteGroup const&      g);

  // The interval groupoid: codiscrete on objects "0" and "1".
  ConcreteGroupoid interval();

  // Injections into a disjoint union and the codiagonal.
  GroupoidFunctor coproduct_inclusion(GroupoidPtr a,
                                      GroupoidPtr b,
                                      GroupoidPtr sum,
                                      int         side);
  // [F, G] : A + B -> T.
  GroupoidFunctor copair(GroupoidPtr            sum,
                         GroupoidFunctor const& F,
                         GroupoidFunctor const& G);
  // F + G : A + B -> A' + B'.
  GroupoidFunctor coproduct_map(GroupoidPtr            sum_source,
                                GroupoidPtr            sum_target,
                                GroupoidFunctor const& F,
                                GroupoidFunctor const& G);

  // The unique functor to B1.
  GroupoidFunctor to_terminal(GroupoidPtr g, GroupoidPtr terminal);

  // Named fixtures used by the CLI and the test suites:
  //   B1, BZn, BS3, BD4, BQ8, BA4, discrete-n, codiscrete-n,
  //   <group>xcodiscrete-n (e.g. Z2xcodiscrete-2), and "a+b" for disjoint
  //   unions of any of these. Throws PreconditionError on unknown names.
  ConcreteGroupoid fixture(std::string const& name);
  FiniteGroup      group_by_name(std::string const& name);

}  // namespace gpdkit

#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gpdkit/groupoid.hpp"
#include "gpdkit/presentation.hpp"

namespace gpdkit {

  // Outcome of a check that may need a concretization that was not
  // available.
  enum class Verdict { pass, fail, unverified };

  std::string_view to_string(Verdict v);
  Verdict          verdict(bool ok);

  struct Cylinder {
    GroupoidPtr     base;
    GroupoidPtr     total;
    GroupoidPtr     base_sum;  // base + base
    GroupoidFunctor i0;
    GroupoidFunctor i1;
    GroupoidFunctor ends;  // (i0, i1) : base + base -> total
    GroupoidFunctor projection;
  };

  // A cylinder functor: the cylinder of each groupoid together with the
  // action on functors, I(F) : IX -> IY.
  struct CylinderFunctor {
    std::string                                      name;
    std::function<Cylinder(GroupoidPtr)>             on_objects;
    std::function<GroupoidFunctor(GroupoidFunctor const&,
                                  Cylinder const&,
                                  Cylinder const&)>  on_functors;
  };

  // total = g x interval with objects "(x,0)", "(x,1)".
  Cylinder        cylinder(GroupoidPtr g);
  CylinderFunctor standard_cylinder();
  // IX = X with i0 = i1 = identity. Not a good cylinder; used to show the
  // check can fail.
  CylinderFunctor degenerate_cylinder();

  struct GoodCylinderReport {
    bool        pass = false;
    bool        cocone_commutes = false;
    std::size_t pushout_objects = 0;
    std::size_t target_objects  = 0;
    // Names of two pushout objects with the same image, if any.
    std::vector<std::string> witness;
  };

  // For a cofibration i : X -> Y, forms IX +_{X+X} (Y+Y) as a presentation
  // and checks that the induced map to IY is injective on objects.
  // Throws PreconditionError if i is not a cofibration.
  GoodCylinderReport good_cylinder_check(
      GroupoidFunctor const& i,
      CylinderFunctor const& cyl = standard_cylinder());

  struct Factorization {
    GroupoidFunctor original;
    // IA +_{A+A} (A+B); the "c:" part is A + B.
    Pushout          pushout;
    StructureMap     first_presented;   // A -> middle
    PresentedFunctor second_presented;  // middle -> B
    // Present when the middle concretized under the bound.
    std::optional<Concretization>  middle;
    std::optional<GroupoidFunctor> first;
    std::optional<GroupoidFunctor> second;

    Verdict first_cofibration  = Verdict::unverified;
    Verdict second_equivalence = Verdict::unverified;
    Verdict composite          = Verdict::unverified;

    bool verified() const noexcept {
      return middle.has_value();
    }
    bool ok() const noexcept {
      return first_cofibration == Verdict::pass
             && second_equivalence == Verdict::pass
             && composite == Verdict::pass;
    }
  };

  // Factors F : A -> B as A >-> IA +_{A+A} (A+B) -> B.
  Factorization mapping_cylinder_factorization(
      GroupoidFunctor const& F,
      std::size_t            bound = kDefaultConcretizationBound);

  // The map of middles induced by a commuting square
  //   A0 --F0--> B0
  //   |a         |b
  //   A1 --F1--> B1
  // Requires both middles concrete. Throws PreconditionError otherwise or
  // if the square does not commute.
  GroupoidFunctor factorization_map(Factorization const&   f0,
                                    Factorization const&   f1,
                                    GroupoidFunctor const& a,
                                    GroupoidFunctor const& b);

  // Morphism classes used as the "good" subcategory.
  enum class MorphismClass { all, cofibrations, equivalences };

  std::string_view to_string(MorphismClass c);
  bool             contains(MorphismClass c, GroupoidFunctor const& F);
  // Cofibrations are decided on objects; equivalences need the source
  // concretized.
  Verdict contains(MorphismClass          c,
                   PresentedFunctor const& F,
                   std::size_t             bound);

  struct AxiomReport {
    Verdict     verdict  = Verdict::pass;
    std::size_t checked  = 0;
    std::size_t unknown  = 0;
    std::string witness;
  };

  struct GoodSubcategoryReport {
    AxiomReport cofibrations_contained;
    AxiomReport pushout_stable;
    AxiomReport factorization_preserves;

    bool pass() const noexcept {
      return cofibrations_contained.verdict == Verdict::pass
             && pushout_stable.verdict == Verdict::pass
             && factorization_preserves.verdict == Verdict::pass;
    }
  };

  // Checks the three good-subcategory axioms for `cls` on all functors
  // between the sample groupoids. Instance-level only.
  GoodSubcategoryReport good_subcategory_check(
      std::vector<GroupoidPtr> const& sample,
      MorphismClass                   cls,
      std::size_t                     bound = kDefaultConcretizationBound);

  // A diagram G_0 -> G_1 -> ... -> G_k.
  struct ReedyDiagram {
    std::vector<GroupoidPtr>     objects;
    std::vector<GroupoidFunctor> arrows;  // arrows[i] : objects[i] -> objects[i+1]

    std::size_t length() const noexcept {
      return arrows.size();
    }
    // Throws PreconditionError if the arrows do not chain.
    void check() const;
  };

  // Levelwise functors t_i : A_i -> B_i commuting with the arrows.
  struct DiagramMorphism {
    ReedyDiagram                 source;
    ReedyDiagram                 target;
    std::vector<GroupoidFunctor> components;
  };

  // Mapping cylinder of a functor h : P -> B out of a presented groupoid.
  // Objects are Ob P followed by Ob B; generators are those of P, then the
  // morphisms of B, then one rung p -> h(p) per object of P. Relations are
  // those of P, the table of B and the squares r_q o g = h(g) o r_p.
  struct PresentedCylinder {
    PresentationPtr  middle;
    std::vector<int> first_on_objects;     // P object -> middle object
    std::vector<int> first_on_generators;  // P generator -> middle generator
    PresentedFunctor second;               // middle -> B
  };

  PresentedCylinder presented_mapping_cylinder(PresentedFunctor const& h);

  struct ReedyLevel {
    // Latching object: A_0 at level 0, A_i +_{A_{i-1}} B~_{i-1} above.
    // It may be infinite; only its presentation is formed.
    PresentationPtr latching_object;
    // B~_i as a presentation and, when it concretized, as a groupoid.
    PresentationPtr               middle;
    std::optional<Concretization> middle_concrete;
    // Latching map on objects (decidable without concretization).
    std::vector<int> latching_on_objects;

    std::optional<GroupoidFunctor> first;       // A_i -> B~_i
    std::optional<GroupoidFunctor> second;      // B~_i -> B_i
    std::optional<GroupoidFunctor> connecting;  // B~_{i-1} -> B~_i

    Verdict first_cofibration   = Verdict::unverified;
    Verdict latching_injective  = Verdict::unverified;
    Verdict second_equivalence  = Verdict::unverified;
    Verdict squares_commute     = Verdict::unverified;
  };

  struct ReedyFactorization {
    std::vector<ReedyLevel> levels;

    bool verified() const;
    bool ok() const;
  };

  // Standard Reedy factorization over [k], k <= 3. Level 0 is the mapping
  // cylinder factorization of t_0; level i+1 is the mapping cylinder of the
  // induced map A_{i+1} +_{A_i} B~_i -> B_{i+1}.
  ReedyFactorization reedy_factorization(
      DiagramMorphism const& t,
      std::size_t            bound = kDefaultConcretizationBound);

}  // namespace gpdkit

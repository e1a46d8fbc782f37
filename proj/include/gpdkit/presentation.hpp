#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gpdkit/groupoid.hpp"

namespace gpdkit {

  struct Letter {
    int  generator;
    bool inverse = false;

    bool operator==(Letter const&) const = default;
    auto operator<=>(Letter const&) const = default;
  };

  // Words compose right-to-left: {g, f} denotes g o f.
  using Word = std::vector<Letter>;

  struct Relation {
    Word lhs;
    Word rhs;
    // Endpoints of both sides; needed because either side may be empty.
    int src;
    int dst;
  };

  // A groupoid given by objects, generating arrows and relations between
  // parallel words. Its realization may be infinite.
  class PresentedGroupoid {
   public:
    std::vector<std::string> objects;
    std::vector<Morphism>    generators;
    std::vector<Relation>    relations;

    int letter_src(Letter l) const {
      auto const& g = generators[l.generator];
      return l.inverse ? g.dst : g.src;
    }
    int letter_dst(Letter l) const {
      auto const& g = generators[l.generator];
      return l.inverse ? g.src : g.dst;
    }
    // Source and target of a nonempty word, or nullopt if its letters do
    // not chain.
    std::optional<std::pair<int, int>> endpoints(Word const& w) const;

    // Empty when the invariants hold: generator endpoints reference declared
    // objects, relation sides chain and share endpoints.
    std::vector<std::string> validate() const;

    std::string word_to_string(Word const& w) const;

    // Generators = morphisms, relations = the composition table.
    static PresentedGroupoid from_concrete(ConcreteGroupoid const& g);
  };

  using PresentationPtr = std::shared_ptr<PresentedGroupoid const>;

  // Functor from a concrete groupoid into a presented one, sending each
  // morphism to a generator. The pushout structure maps have this shape.
  struct StructureMap {
    GroupoidPtr      source;
    PresentationPtr  target;
    std::vector<int> on_objects;
    std::vector<int> on_morphisms;  // generator indices
  };

  // Functor from a presented groupoid into a concrete one, given on
  // generators.
  struct PresentedFunctor {
    PresentationPtr  source;
    GroupoidPtr      target;
    std::vector<int> on_objects;
    std::vector<int> on_generators;

    bool injective_on_objects() const;
    // Empty when generator endpoints and all relations are respected.
    std::vector<std::string> validate() const;
  };

  // Evaluates a word of target-groupoid morphisms (letters index morphisms).
  int evaluate(ConcreteGroupoid const& g, Word const& w, int object_if_empty);

  struct Pushout {
    PresentationPtr presentation;
    StructureMap    from_b;  // B -> P
    StructureMap    from_c;  // C -> P
  };

  // Pushout of f : A -> C along a cofibration i : A >-> B. Objects are
  // (Ob B minus i(Ob A)) followed by Ob C, prefixed "b:" and "c:";
  // generators are all morphisms of B and C; relations are both composition
  // tables plus i(a) = f(a) for each morphism a of A.
  // Throws PreconditionError if i is not a cofibration or the sources differ.
  Pushout pushout_along_cofibration(GroupoidFunctor const& i,
                                    GroupoidFunctor const& f);

  // The map P -> T induced by a cocone u : B -> T, v : C -> T.
  PresentedFunctor induced_map(Pushout const&         p,
                               GroupoidFunctor const& u,
                               GroupoidFunctor const& v);

  struct Concretization {
    GroupoidPtr groupoid;
    // Concrete morphism for each generator.
    std::vector<int> generator_image;
    // Shortlex-least word (in generators) for each concrete morphism.
    std::vector<Word> normal_words;
  };

  inline constexpr std::size_t kDefaultConcretizationBound = 10000;

  // Computes the realization of `p` if it has at most `bound` morphisms;
  // nullopt means Unknown (never a wrong answer). Each component is reduced
  // to its vertex group along a spanning tree and that group is enumerated
  // by coset enumeration on the trivial subgroup. Objects keep their order.
  // Throws PreconditionError if bound == 0.
  std::optional<Concretization> concretize(PresentedGroupoid const& p,
                                           std::size_t              bound);

  // Composite of a structure map with a concretization.
  GroupoidFunctor concretize_map(StructureMap const&   m,
                                 Concretization const& c);

  // Concrete version of a presented functor whose source was concretized.
  GroupoidFunctor concretize_map(PresentedFunctor const& m,
                                 Concretization const&   c);

}  // namespace gpdkit

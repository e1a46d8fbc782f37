#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gpdkit {

  // Index sentinel for "absent" entries in composition/identity/inverse
  // tables.
  inline constexpr int kNone = -1;

  struct Morphism {
    std::string id;
    int         src;
    int         dst;

    bool operator==(Morphism const&) const = default;
  };

  // One named axiom failure with the morphisms (by id) that witness it.
  struct Violation {
    std::string              axiom;
    std::vector<std::string> morphisms;
  };

  struct ValidationReport {
    std::vector<Violation> violations;

    bool ok() const noexcept {
      return violations.empty();
    }
  };

  // A finite groupoid as objects, morphisms and a total composition table.
  //
  // Objects and morphisms are addressed by their position in input order;
  // identifiers are opaque strings. compose(g, f) is g o f, defined exactly
  // when target(f) == source(g). The tables may be incomplete or wrong when
  // the groupoid was read from external input; validate() reports that.
  class ConcreteGroupoid {
   public:
    struct MorphismSpec {
      std::string id;
      std::string src;
      std::string dst;
    };

    struct ComposeEntry {
      std::string g;
      std::string f;
      std::string gf;
    };

    ConcreteGroupoid() = default;

    // Index-level constructor used by builders. `compose` is row-major
    // M x M with kNone for non-composable pairs. Throws StructuralError on
    // duplicate identifiers or out-of-range indices.
    ConcreteGroupoid(std::vector<std::string> objects,
                     std::vector<Morphism>    morphisms,
                     std::vector<int>         compose,
                     std::vector<int>         identities,
                     std::vector<int>         inverses);

    // Identifier-level constructor for external input. Unknown or
    // duplicate identifiers and conflicting entries are structural errors
    // (thrown); missing or ill-typed entries are recorded and surface as
    // violations from validate().
    static ConcreteGroupoid from_tables(
        std::vector<std::string> const&              objects,
        std::vector<MorphismSpec> const&             morphisms,
        std::vector<ComposeEntry> const&             compose,
        std::map<std::string, std::string> const&    identities,
        std::map<std::string, std::string> const&    inverses);

    std::size_t num_objects() const noexcept {
      return _objects.size();
    }
    std::size_t num_morphisms() const noexcept {
      return _morphisms.size();
    }
    std::string const& object(int x) const {
      return _objects.at(x);
    }
    std::vector<std::string> const& objects() const noexcept {
      return _objects;
    }
    Morphism const& morphism(int f) const {
      return _morphisms.at(f);
    }
    std::vector<Morphism> const& morphisms() const noexcept {
      return _morphisms;
    }
    int src(int f) const {
      return _morphisms[f].src;
    }
    int dst(int f) const {
      return _morphisms[f].dst;
    }
    int compose(int g, int f) const {
      return _compose[static_cast<std::size_t>(g) * num_morphisms() + f];
    }
    int identity(int x) const {
      return _identities[x];
    }
    int inverse(int f) const {
      return _inverses[f];
    }
    std::span<int const> hom(int x, int y) const {
      return _hom[static_cast<std::size_t>(x) * num_objects() + y];
    }
    bool is_identity(int f) const {
      return src(f) == dst(f) && identity(src(f)) == f;
    }

    std::optional<int> find_object(std::string_view id) const;
    std::optional<int> find_morphism(std::string_view id) const;

    ValidationReport validate() const;

    bool operator==(ConcreteGroupoid const& that) const {
      return _objects == that._objects && _morphisms == that._morphisms
             && _compose == that._compose && _identities == that._identities
             && _inverses == that._inverses;
    }

   private:
    void index();

    std::vector<std::string>      _objects;
    std::vector<Morphism>         _morphisms;
    std::vector<int>              _compose;
    std::vector<int>              _identities;
    std::vector<int>              _inverses;
    std::vector<std::vector<int>> _hom;
    // Axiom-level anomalies found while reading external tables.
    std::vector<Violation> _input_anomalies;
  };

  using GroupoidPtr = std::shared_ptr<ConcreteGroupoid const>;

  inline GroupoidPtr share(ConcreteGroupoid g) {
    return std::make_shared<ConcreteGroupoid const>(std::move(g));
  }

  // Object map plus morphism map between concrete groupoids.
  struct GroupoidFunctor {
    GroupoidPtr      source;
    GroupoidPtr      target;
    std::vector<int> on_objects;
    std::vector<int> on_morphisms;

    // On-the-nose equality: same groupoids (by value) and same maps.
    bool operator==(GroupoidFunctor const& that) const;
  };

  // Checks that F preserves sources, targets, identities and composition.
  ValidationReport validate_functor(GroupoidFunctor const& F);

  GroupoidFunctor identity_functor(GroupoidPtr g);
  // G o F. Throws PreconditionError unless F.target == G.source.
  GroupoidFunctor compose(GroupoidFunctor const& G, GroupoidFunctor const& F);

  struct ConnectedComponents {
    // component[x] = index of x's class; classes numbered by first object.
    std::vector<int>              component;
    std::vector<std::vector<int>> classes;
    // Least object (input order) of each class.
    std::vector<int> base;

    std::size_t count() const noexcept {
      return classes.size();
    }
  };

  ConnectedComponents connected_components(ConcreteGroupoid const& g);

  struct VertexGroup {
    int              base_object;
    std::vector<int> elements;  // loop morphisms at base_object
    // table[i * n + j] = index (into elements) of elements[i] o elements[j]
    std::vector<std::size_t> table;

    std::size_t order() const noexcept {
      return elements.size();
    }
  };

  // Throws PreconditionError for an unknown object.
  VertexGroup vertex_group(ConcreteGroupoid const& g, int x);
  VertexGroup vertex_group(ConcreteGroupoid const& g, std::string_view x);

  bool is_cofibration(GroupoidFunctor const& F);

  struct EquivalenceReport {
    bool full                  = true;
    bool faithful              = true;
    bool essentially_surjective = true;
    // Human-readable description of the first failure of each kind.
    std::vector<std::string> witnesses;

    bool equivalence() const noexcept {
      return full && faithful && essentially_surjective;
    }
  };

  EquivalenceReport equivalence_report(GroupoidFunctor const& F);

  inline bool is_equivalence(GroupoidFunctor const& F) {
    return equivalence_report(F).equivalence();
  }

  // Full subgroupoid on the given objects (input order preserved).
  ConcreteGroupoid full_subgroupoid(ConcreteGroupoid const& g,
                                    std::vector<int> const&  objects);

  GroupoidFunctor inclusion_of_full_subgroupoid(GroupoidPtr             g,
                                                std::vector<int> const& objects);

}  // namespace gpdkit

#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gpdkit/groupoid.hpp"
#include "gpdkit/model_structure.hpp"

namespace gpdkit {

  // A finite category by its arrows; composition is supplied as a function
  // so that large categories need not store a full table.
  struct FiniteCategory {
    std::size_t                  num_objects = 0;
    std::vector<int>             src;
    std::vector<int>             dst;
    std::vector<int>             identity;  // per object
    std::function<int(int, int)> compose;   // compose(g, f) = g o f

    std::size_t num_arrows() const noexcept {
      return src.size();
    }
  };

  struct SampleArrow {
    int             src;
    int             dst;
    GroupoidFunctor functor;
    bool            w;  // equivalence
    bool            c;  // cofibration
    bool            g;  // in the chosen good subcategory
  };

  inline constexpr std::size_t kSampleMaxObjects   = 4;
  inline constexpr std::size_t kSampleMaxMorphisms = 24;
  inline constexpr std::size_t kSampleMaxFunctors  = 5000;

  // The full subcategory of groupoids on a few fixtures with every functor
  // between them. Not a cofibration category; every check on it is
  // instance-level.
  class FiniteSampleCategory {
   public:
    FiniteSampleCategory(std::vector<std::string> names,
                         std::vector<GroupoidPtr> groupoids,
                         MorphismClass            good = MorphismClass::all);

    std::vector<std::string> const& names() const noexcept {
      return _names;
    }
    std::vector<GroupoidPtr> const& objects() const noexcept {
      return _objects;
    }
    std::vector<SampleArrow> const& arrows() const noexcept {
      return _arrows;
    }
    MorphismClass good() const noexcept {
      return _good;
    }
    int identity(int x) const {
      return _identity.at(x);
    }
    int compose(int g, int f) const;
    // Arrows from a to b.
    std::vector<int> hom(int a, int b) const;

    FiniteCategory category() const;

   private:
    std::vector<std::string>  _names;
    std::vector<GroupoidPtr>  _objects;
    std::vector<SampleArrow>  _arrows;
    std::vector<int>          _identity;
    std::vector<int>          _compose;  // row-major, kNone if not composable
    MorphismClass             _good;
  };

  // Throws PreconditionError when a groupoid exceeds the size bounds and
  // BudgetExceeded when a pair has too many functors (naming the pair).
  FiniteSampleCategory enumerate_sample(std::vector<std::string> const& fixture_names,
                                        MorphismClass good = MorphismClass::all);

  // Marked subcategories of a sample.
  enum class Marking { all, w, c, wc, wg };

  std::string_view   to_string(Marking m);
  std::vector<bool>  marked(FiniteSampleCategory const& s, Marking m);

  // A simplex is the tuple of its arrows; a 0-simplex is {object}.
  using Simplex = std::vector<int>;

  struct SimplicialIdentityReport {
    std::size_t              checked = 0;
    std::vector<std::string> failures;
    bool ok() const noexcept {
      return failures.empty();
    }
  };

  struct TruncatedSimplicialSet {
    std::size_t                       cutoff = 0;
    std::vector<std::vector<Simplex>> simplices;  // per level, sorted
    // face[k][i][s] : level k -> k-1, for k >= 1 and 0 <= i <= k
    std::vector<std::vector<std::vector<int>>> face;
    // degeneracy[k][i][s] : level k -> k+1, for k < cutoff and 0 <= i <= k
    std::vector<std::vector<std::vector<int>>> degeneracy;
    std::vector<std::map<Simplex, int>>        index;

    std::size_t count(std::size_t k) const {
      return simplices.at(k).size();
    }
    // degenerate_flags[k][s]: s is in the image of a degeneracy
    std::vector<std::vector<char>> degenerate_flags;

    int  find(std::size_t k, Simplex const& s) const;
    bool degenerate(std::size_t k, int s) const {
      return degenerate_flags.at(k).at(s) != 0;
    }
    std::size_t nondegenerate_count(std::size_t k) const;

    SimplicialIdentityReport check_identities() const;
  };

  inline constexpr std::size_t kDefaultTruncation = 3;
  inline constexpr std::size_t kDefaultBudget     = 2'000'000;

  // Nerve of the subcategory of `cat` on all objects and the arrows with
  // mask[a] set (identities are always included). Throws BudgetExceeded
  // when a level would exceed `budget` simplices.
  TruncatedSimplicialSet nerve(FiniteCategory const&    cat,
                               std::vector<bool> const& mask,
                               std::size_t              d,
                               std::size_t              budget = kDefaultBudget);
  // Full on the objects with object_mask set, then as above.
  TruncatedSimplicialSet nerve(FiniteCategory const&    cat,
                               std::vector<bool> const& object_mask,
                               std::vector<bool> const& mask,
                               std::size_t              d,
                               std::size_t              budget);
  TruncatedSimplicialSet nerve(FiniteCategory const& cat,
                               std::size_t           d,
                               std::size_t           budget = kDefaultBudget);
  TruncatedSimplicialSet nerve(FiniteSampleCategory const& s,
                               Marking                     m,
                               std::size_t                 d = kDefaultTruncation);
  // A groupoid as a one-category-many-objects nerve.
  TruncatedSimplicialSet nerve(ConcreteGroupoid const& g, std::size_t d);

  // Levelwise map of simplices; map[k][s] = image index at level k.
  struct SimplicialMap {
    std::vector<std::vector<int>> map;
  };

  // Whether the map commutes with all faces and degeneracies.
  bool is_simplicial(SimplicialMap const&           f,
                     TruncatedSimplicialSet const& x,
                     TruncatedSimplicialSet const& y);
  SimplicialMap compose(SimplicialMap const& g, SimplicialMap const& f);
  bool          is_identity(SimplicialMap const& f);
  bool          is_injective(SimplicialMap const& f);

  // The inclusion of x into y when every simplex of x is a simplex of y.
  // Throws PreconditionError otherwise.
  SimplicialMap inclusion_map(TruncatedSimplicialSet const& x,
                              TruncatedSimplicialSet const& y);

  // An m x n grid: objects G(i, j) for 0 <= i <= m, 0 <= j <= n, horizontal
  // arrows G(i, j) -> G(i+1, j) and vertical arrows G(i, j) -> G(i, j+1),
  // all squares commuting.
  struct Grid {
    std::size_t      m = 0;
    std::size_t      n = 0;
    std::vector<int> objects;     // (i, j) at i * (n + 1) + j
    std::vector<int> horizontal;  // (i, j) at i * (n + 1) + j, i < m
    std::vector<int> vertical;    // (i, j) at i * n + j, j < n

    int object(std::size_t i, std::size_t j) const {
      return objects[i * (n + 1) + j];
    }
    int h(std::size_t i, std::size_t j) const {
      return horizontal[i * (n + 1) + j];
    }
    int v(std::size_t i, std::size_t j) const {
      return vertical[i * n + j];
    }
    // Horizontal arrows row-major, then vertical arrows; {object} when
    // m = n = 0. A grid with m = 0 has the key of its vertical chain and one
    // with n = 0 the key of its horizontal chain.
    Simplex key() const;
  };

  struct TruncatedBisimplicialSet {
    std::size_t                    cutoff_h = 0;
    std::size_t                    cutoff_v = 0;
    std::vector<std::vector<std::vector<Grid>>> grids;  // [m][n], sorted by key

    std::size_t count(std::size_t m, std::size_t n) const {
      return grids.at(m).at(n).size();
    }
    int find(std::size_t m, std::size_t n, Simplex const& key) const;

    // Row n = 0 / column m = 0 as simplicial sets with the horizontal or
    // vertical operators.
    TruncatedSimplicialSet row(std::size_t m) const;     // X_{m, *}
    TruncatedSimplicialSet column(std::size_t n) const;  // X_{*, n}

    SimplicialIdentityReport check_identities() const;

    // Composition in the underlying sample, for faces.
    std::function<int(int, int)> compose;
    std::vector<int>             identity;

    Grid face_h(Grid const& g, std::size_t i) const;
    Grid face_v(Grid const& g, std::size_t j) const;
    Grid degeneracy_h(Grid const& g, std::size_t i) const;
    Grid degeneracy_v(Grid const& g, std::size_t j) const;

    std::vector<std::vector<std::map<Simplex, int>>> index;
  };

  // Grids with horizontal acyclic cofibrations and vertical arrows in w and
  // the sample's good subcategory, up to (d, d).
  TruncatedBisimplicialSet double_nerve_W(FiniteSampleCategory const& s,
                                          std::size_t                 d      = kDefaultTruncation,
                                          std::size_t                 budget = kDefaultBudget);

  struct DiagonalComparison {
    TruncatedSimplicialSet diagonal;
    TruncatedSimplicialSet wg;  // N wg = row 0 of W
    TruncatedSimplicialSet wc;  // N wc = column 0 of W
    SimplicialMap row0_to_diag;  // vertical chain, constant across
    SimplicialMap col0_to_diag;  // horizontal chain, constant down
    // The staircase G(0,0) -> G(1,1) -> ... with arrows v o h. Present only
    // when every staircase arrow lies in wg.
    std::optional<SimplicialMap> diag_to_wg;
    std::string                  diag_to_wg_failure;
  };

  // Requires a square truncation.
  DiagonalComparison diagonal(TruncatedBisimplicialSet const& W,
                              FiniteSampleCategory const&     s);

  struct HomologyGroup {
    std::size_t              rank = 0;
    std::vector<long long>   torsion;  // invariant factors > 1, ascending

    bool operator==(HomologyGroup const&) const = default;
    std::string to_string() const;
  };

  struct HomologyProfile {
    std::vector<HomologyGroup> groups;  // degrees 0 .. cutoff - 1
    bool operator==(HomologyProfile const&) const = default;
  };

  // Integral homology of normalized chains via Smith normal form. Throws
  // Error on int64 overflow during elimination.
  HomologyProfile homology(TruncatedSimplicialSet const& x);

  // Boundary of normalized chains C_k -> C_{k-1} in the bases of
  // nondegenerate simplices (rows: level k-1).
  std::vector<std::vector<long long>> boundary_matrix(TruncatedSimplicialSet const& x,
                                                      std::size_t                   k);

  // Smith normal form diagonal (nonzero entries) of an integer matrix.
  std::vector<long long> smith_diagonal(std::vector<std::vector<long long>> m);

  struct ClassificationLevel {
    std::size_t            k = 0;
    std::size_t            objects = 0;  // chains of length k
    TruncatedSimplicialSet nerve;        // N w(D^[k])
    // The same for chains of cofibrations with levelwise acyclic
    // cofibrations, and its inclusion into `nerve`.
    TruncatedSimplicialSet cofibrant_nerve;
    SimplicialMap          comparison;
  };

  // Level k of the classification diagram of the sample, k <= 2. Throws
  // BudgetExceeded with an estimate when a level is too large.
  ClassificationLevel classification_level(FiniteSampleCategory const& s,
                                           std::size_t                 k,
                                           std::size_t                 d = kDefaultTruncation,
                                           std::size_t                 budget = kDefaultBudget);

  struct ZigZag {
    Factorization   factorization;
    GroupoidFunctor from_source;  // A -> Cyl(F)
    GroupoidFunctor from_target;  // B -> Cyl(F)
    bool            source_leg_acyclic = false;
    bool            target_leg_acyclic = false;

    bool ok() const noexcept {
      return source_leg_acyclic && target_leg_acyclic;
    }
  };

  // A >-> Cyl(F) <-< B for an equivalence F. Throws PreconditionError when F
  // is not an equivalence; nullopt when the cylinder does not concretize.
  std::optional<ZigZag> zigzag_witness(GroupoidFunctor const& F,
                                       std::size_t bound = kDefaultConcretizationBound);

}  // namespace gpdkit

#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "gpdkit/groupoid.hpp"

namespace gpdkit {

  using Rational = boost::multiprecision::cpp_rational;
  using Integer  = boost::multiprecision::cpp_int;

  using ExactVector   = std::vector<Rational>;
  using ComplexVector = std::vector<std::complex<double>>;

  // The complex groupoid algebra: basis the morphisms, b_f * b_g = b_{f o g}
  // when composable and 0 otherwise, b_f^* = b_{f^-1}. All structure
  // constants are 0 or 1.
  class StructureConstantAlgebra {
   public:
    explicit StructureConstantAlgebra(GroupoidPtr g);

    GroupoidPtr const& groupoid() const noexcept {
      return _g;
    }
    std::size_t dimension() const noexcept {
      return _g->num_morphisms();
    }
    std::string const& basis(int i) const {
      return _g->morphism(i).id;
    }
    // Basis index of b_i * b_j, or kNone for zero.
    int product(int i, int j) const {
      return _g->compose(i, j);
    }
    int star(int i) const {
      return _g->inverse(i);
    }
    ExactVector unit() const;
    ExactVector basis_vector(int i) const;

    ExactVector   multiply(ExactVector const& a, ExactVector const& b) const;
    ComplexVector multiply(ComplexVector const& a, ComplexVector const& b) const;
    ExactVector   adjoint(ExactVector const& a) const;
    ComplexVector adjoint(ComplexVector const& a) const;

    // Trace of left multiplication by x.
    Rational             trace_left(ExactVector const& x) const;
    std::complex<double> trace_left(ComplexVector const& x) const;

   private:
    GroupoidPtr                      _g;
    std::vector<std::pair<int, int>> _composable;  // (i, j) with b_i b_j != 0
  };

  StructureConstantAlgebra groupoid_algebra(GroupoidPtr g);

  struct AlgebraAxiomReport {
    std::vector<std::string> failures;
    bool ok() const noexcept {
      return failures.empty();
    }
  };

  // Exact checks: associativity on all basis triples, two-sided unit,
  // star involutive and anti-multiplicative.
  AlgebraAxiomReport check_axioms(StructureConstantAlgebra const& a);

  struct Block {
    int           component;          // connected component of the groupoid
    std::size_t   size;               // matrix size of the block
    std::size_t   component_objects;  // n_c
    std::size_t   irrep_degree;       // size / n_c
    ComplexVector idempotent;         // minimal central idempotent
  };

  struct BlockDecomposition {
    std::vector<Block> blocks;
    double             residual = 0;  // max idempotent-relation violation
    double             tol      = 0;
    std::uint64_t      seed     = 0;
    std::size_t        center_dimension = 0;
  };

  inline constexpr double kDefaultTolerance = 1e-9;

  // Artin-Wedderburn blocks. The center is computed exactly; it is split
  // numerically along the eigenspaces of a random self-adjoint central
  // element drawn from `seed`. Throws ResolutionFailure when eigenvalues
  // cannot be separated at `tol`.
  BlockDecomposition block_decomposition(StructureConstantAlgebra const& a,
                                         double        tol  = kDefaultTolerance,
                                         std::uint64_t seed = 0);

  // Exact basis of the center.
  std::vector<ExactVector> center_basis(StructureConstantAlgebra const& a);

  // Basis-to-basis *-homomorphism induced by a cofibration.
  struct AlgebraHomomorphism {
    StructureConstantAlgebra source;
    StructureConstantAlgebra target;
    std::vector<int>         on_basis;

    ComplexVector apply(ComplexVector const& x) const;
    ExactVector   apply(ExactVector const& x) const;
  };

  // Throws PreconditionError for a functor that is not a cofibration, naming
  // a non-composable pair whose images compose.
  AlgebraHomomorphism induced_map(GroupoidFunctor const& F);

  struct CornerAlgebra {
    // p is a sum of identities; then pAp has a sub-basis of morphisms.
    bool identity_supported = false;
    // The sub-basis case: basis indices of A spanning pAp, and pAp as an
    // algebra (the full subgroupoid on the supporting objects).
    std::vector<int>                        basis_in_parent;
    std::optional<StructureConstantAlgebra> algebra;
    // Otherwise: an exact basis of the subspace pAp.
    std::vector<ExactVector> subspace;
    std::size_t              dimension = 0;
  };

  // Throws PreconditionError unless p*p = p and p^* = p exactly.
  CornerAlgebra corner_algebra(StructureConstantAlgebra const& a, ExactVector const& p);

  // Whether span{a p b} is all of A (exact rank).
  bool is_full_projection(StructureConstantAlgebra const& a, ExactVector const& p);

  // Sum of the identities at the given objects.
  ExactVector identity_projection(StructureConstantAlgebra const& a,
                                  std::vector<int> const&         objects);

  // A bijection of bases carrying structure constants and star onto each
  // other, if one exists.
  std::optional<std::vector<int>> structure_isomorphism(
      StructureConstantAlgebra const& a,
      StructureConstantAlgebra const& b);

  struct K0Map {
    std::size_t                                 domain_rank   = 0;
    std::size_t                                 codomain_rank = 0;
    std::vector<std::vector<long long>>         matrix;  // codomain x domain
    double                                      max_rounding_defect = 0;
  };

  inline constexpr double kRoundingDefectLimit = 0.01;

  // Multiplicity of each source block in each target block, from ranks of
  // images of minimal central idempotents. Throws Error if a multiplicity
  // is further than kRoundingDefectLimit from an integer.
  K0Map k0_map(AlgebraHomomorphism const& phi,
               double                     tol  = kDefaultTolerance,
               std::uint64_t              seed = 0);
  K0Map k0_map(AlgebraHomomorphism const& phi,
               BlockDecomposition const&  source,
               BlockDecomposition const&  target);

  Integer determinant(std::vector<std::vector<long long>> const& m);

  struct FullCornerWitness {
    std::string object;
    bool        full;
    std::size_t corner_dimension;
    std::size_t vertex_group_order;
    bool        corner_matches_vertex_group;
  };

  struct MoritaReport {
    bool                           cofibration         = false;
    bool                           equivalence         = false;
    bool                           acyclic_cofibration = false;
    K0Map                          k0;
    bool                           k0_iso = false;
    std::vector<FullCornerWitness> full_corner_witnesses;
  };

  // Throws PreconditionError for non-cofibrations (via induced_map).
  MoritaReport morita_check(GroupoidFunctor const& F,
                            double                 tol  = kDefaultTolerance,
                            std::uint64_t          seed = 0);

}  // namespace gpdkit

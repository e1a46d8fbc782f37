#include "gpdkit/star_algebra.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "gpdkit/builders.hpp"
#include "gpdkit/errors.hpp"
#include "exact_rref.hpp"

namespace gpdkit {

  using detail::RowReducer;
  using detail::SparseRow;

  StructureConstantAlgebra::StructureConstantAlgebra(GroupoidPtr g) : _g(std::move(g)) {
    if (!_g) {
      throw PreconditionError("groupoid algebra of a null groupoid");
    }
    int const n = static_cast<int>(dimension());
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (product(i, j) != kNone) {
          _composable.emplace_back(i, j);
        }
      }
    }
  }

  StructureConstantAlgebra groupoid_algebra(GroupoidPtr g) {
    if (g && !g->validate().ok()) {
      throw PreconditionError("groupoid algebra of an invalid groupoid");
    }
    return StructureConstantAlgebra(std::move(g));
  }

  ExactVector StructureConstantAlgebra::unit() const {
    ExactVector u(dimension());
    for (std::size_t x = 0; x < _g->num_objects(); ++x) {
      u[_g->identity(static_cast<int>(x))] = 1;
    }
    return u;
  }

  ExactVector StructureConstantAlgebra::basis_vector(int i) const {
    ExactVector v(dimension());
    v.at(i) = 1;
    return v;
  }

  namespace {

    template <typename V>
    V multiply_impl(std::vector<std::pair<int, int>> const& pairs,
                    ConcreteGroupoid const&                 g,
                    V const&                                a,
                    V const&                                b) {
      V out(a.size());
      for (auto const& [i, j] : pairs) {
        if (a[i] != typename V::value_type(0) && b[j] != typename V::value_type(0)) {
          out[g.compose(i, j)] += a[i] * b[j];
        }
      }
      return out;
    }

    std::size_t morphisms_into(ConcreteGroupoid const& g, int y) {
      std::size_t k = 0;
      for (std::size_t x = 0; x < g.num_objects(); ++x) {
        k += g.hom(static_cast<int>(x), y).size();
      }
      return k;
    }

  }  // namespace

  ExactVector StructureConstantAlgebra::multiply(ExactVector const& a,
                                                 ExactVector const& b) const {
    return multiply_impl(_composable, *_g, a, b);
  }

  ComplexVector StructureConstantAlgebra::multiply(ComplexVector const& a,
                                                   ComplexVector const& b) const {
    return multiply_impl(_composable, *_g, a, b);
  }

  ExactVector StructureConstantAlgebra::adjoint(ExactVector const& a) const {
    ExactVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      out[star(static_cast<int>(i))] = a[i];
    }
    return out;
  }

  ComplexVector StructureConstantAlgebra::adjoint(ComplexVector const& a) const {
    ComplexVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      out[star(static_cast<int>(i))] = std::conj(a[i]);
    }
    return out;
  }

  Rational StructureConstantAlgebra::trace_left(ExactVector const& x) const {
    Rational t = 0;
    for (std::size_t y = 0; y < _g->num_objects(); ++y) {
      t += x[_g->identity(static_cast<int>(y))] * morphisms_into(*_g, static_cast<int>(y));
    }
    return t;
  }

  std::complex<double> StructureConstantAlgebra::trace_left(ComplexVector const& x) const {
    std::complex<double> t = 0;
    for (std::size_t y = 0; y < _g->num_objects(); ++y) {
      t += x[_g->identity(static_cast<int>(y))]
           * static_cast<double>(morphisms_into(*_g, static_cast<int>(y)));
    }
    return t;
  }

  AlgebraAxiomReport check_axioms(StructureConstantAlgebra const& a) {
    AlgebraAxiomReport r;
    int const n = static_cast<int>(a.dimension());
    // Structure constants are 0/1 on a basis, so checking basis elements is
    // exact; products are also checked as rational vectors for the unit.
    for (int i = 0; i < n && r.failures.size() < 10; ++i) {
      for (int j = 0; j < n; ++j) {
        int const ij = a.product(i, j);
        for (int k = 0; k < n; ++k) {
          int const jk    = a.product(j, k);
          int const left  = ij == kNone ? kNone : a.product(ij, k);
          int const right = jk == kNone ? kNone : a.product(i, jk);
          if (left != right) {
            r.failures.push_back("associativity fails on (" + a.basis(i) + ", " + a.basis(j)
                                 + ", " + a.basis(k) + ")");
            break;
          }
        }
        int const s = ij == kNone ? kNone : a.star(ij);
        int const t = a.product(a.star(j), a.star(i));
        if (s != t) {
          r.failures.push_back("star is not anti-multiplicative on (" + a.basis(i) + ", "
                               + a.basis(j) + ")");
        }
      }
      if (a.star(a.star(i)) != i) {
        r.failures.push_back("star is not an involution at " + a.basis(i));
      }
    }
    auto const u = a.unit();
    for (int i = 0; i < n; ++i) {
      auto const e = a.basis_vector(i);
      if (a.multiply(u, e) != e || a.multiply(e, u) != e) {
        r.failures.push_back("unit fails at " + a.basis(i));
      }
    }
    return r;
  }

  namespace {

    // Exact center of the subalgebra spanned by the morphisms with indices
    // `idx` (a union of components), in those local coordinates.
    std::vector<ExactVector> center_on(StructureConstantAlgebra const& a,
                                       std::vector<int> const&         idx) {
      std::size_t const       m = idx.size();
      std::map<int, int>      local;
      for (std::size_t k = 0; k < m; ++k) {
        local[idx[k]] = static_cast<int>(k);
      }
      RowReducer rr(m);
      // x commutes with every basis element g: for every output k,
      // sum over i with i o g = k minus sum over i with g o i = k vanishes.
      for (int g : idx) {
        std::map<int, SparseRow> rows;
        for (int i : idx) {
          if (int const k = a.product(i, g); k != kNone) {
            rows[k].emplace_back(local[i], Rational(1));
          }
          if (int const k = a.product(g, i); k != kNone) {
            rows[k].emplace_back(local[i], Rational(-1));
          }
        }
        for (auto& [k, row] : rows) {
          std::map<int, Rational> merged;
          for (auto const& [c, v] : row) {
            merged[c] += v;
          }
          SparseRow s;
          for (auto const& [c, v] : merged) {
            if (v != 0) {
              s.emplace_back(c, v);
            }
          }
          if (!s.empty()) {
            rr.add(std::move(s));
          }
        }
      }
      return rr.kernel();
    }

    std::vector<std::vector<int>> component_morphisms(ConcreteGroupoid const& g,
                                                      ConnectedComponents const& cc) {
      std::vector<std::vector<int>> out(cc.count());
      for (std::size_t f = 0; f < g.num_morphisms(); ++f) {
        out[cc.component[g.src(static_cast<int>(f))]].push_back(static_cast<int>(f));
      }
      return out;
    }

    double max_abs(ComplexVector const& v) {
      double m = 0;
      for (auto const& z : v) {
        m = std::max(m, std::abs(z));
      }
      return m;
    }

    ComplexVector sub(ComplexVector a, ComplexVector const& b) {
      for (std::size_t i = 0; i < a.size(); ++i) {
        a[i] -= b[i];
      }
      return a;
    }

    ComplexVector to_complex(ExactVector const& v) {
      ComplexVector out(v.size());
      for (std::size_t i = 0; i < v.size(); ++i) {
        out[i] = v[i].convert_to<double>();
      }
      return out;
    }

    [[noreturn]] void resolution_failure(std::string const& detail) {
      throw ResolutionFailure("resolution failure, decrease tol or reseed (" + detail + ")");
    }

  }  // namespace

  std::vector<ExactVector> center_basis(StructureConstantAlgebra const& a) {
    auto const& g  = *a.groupoid();
    auto const  cc = connected_components(g);
    std::vector<ExactVector> out;
    for (auto const& idx : component_morphisms(g, cc)) {
      for (auto const& z : center_on(a, idx)) {
        ExactVector v(a.dimension());
        for (std::size_t k = 0; k < idx.size(); ++k) {
          v[idx[k]] = z[k];
        }
        out.push_back(std::move(v));
      }
    }
    return out;
  }

  BlockDecomposition block_decomposition(StructureConstantAlgebra const& a,
                                         double                          tol,
                                         std::uint64_t                   seed) {
    if (!(tol > 0)) {
      throw PreconditionError("block decomposition needs tol > 0");
    }
    auto const&        g  = *a.groupoid();
    auto const         cc = connected_components(g);
    std::size_t const  n  = a.dimension();
    std::mt19937_64    rng(seed);
    std::uniform_real_distribution<double> coef(-1.0, 1.0);
    double const       gap_threshold = std::sqrt(tol);

    BlockDecomposition out;
    out.tol  = tol;
    out.seed = seed;

    auto const comps = component_morphisms(g, cc);
    for (std::size_t c = 0; c < comps.size(); ++c) {
      auto const& idx = comps[c];
      auto const  z   = center_on(a, idx);
      std::size_t const m = z.size();
      out.center_dimension += m;

      // center vectors in global coordinates; coordinates of a central
      // element are its values at the free columns of the kernel basis
      std::vector<ComplexVector> zc;
      std::vector<int>           free_col;
      for (auto const& v : z) {
        ComplexVector w(n);
        for (std::size_t k = 0; k < idx.size(); ++k) {
          w[idx[k]] = v[k].convert_to<double>();
        }
        for (std::size_t k = 0; k < idx.size(); ++k) {
          if (v[k] == 1) {
            bool is_free = true;
            for (auto const& u : z) {
              if (&u != &v && u[k] != 0) {
                is_free = false;
                break;
              }
            }
            if (is_free) {
              free_col.push_back(idx[k]);
              break;
            }
          }
        }
        zc.push_back(std::move(w));
      }

      std::vector<ComplexVector> idempotents;
      if (m == 1) {
        idempotents.push_back(zc[0]);
      } else {
        // h = sum c_k z_k + conj(c_k) z_k^*, self-adjoint and central
        ComplexVector h(n);
        for (std::size_t k = 0; k < m; ++k) {
          std::complex<double> const ck(coef(rng), coef(rng));
          auto const                 zs = a.adjoint(zc[k]);
          for (std::size_t i = 0; i < n; ++i) {
            h[i] += ck * zc[k][i] + std::conj(ck) * zs[i];
          }
        }
        Eigen::MatrixXcd L(m, m);
        for (std::size_t j = 0; j < m; ++j) {
          auto const hz = a.multiply(h, zc[j]);
          for (std::size_t k = 0; k < m; ++k) {
            L(k, j) = hz[free_col[k]];
          }
        }
        Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(L);
        if (es.info() != Eigen::Success) {
          resolution_failure("eigensolver did not converge");
        }
        auto const& ev    = es.eigenvalues();
        double      scale = 1;
        for (Eigen::Index k = 0; k < ev.size(); ++k) {
          scale = std::max(scale, std::abs(ev(k)));
        }
        for (Eigen::Index k = 0; k < ev.size(); ++k) {
          for (Eigen::Index l = k + 1; l < ev.size(); ++l) {
            if (std::abs(ev(k) - ev(l)) < gap_threshold * scale) {
              resolution_failure("eigenvalues " + std::to_string(ev(k).real()) + " and "
                                 + std::to_string(ev(l).real()) + " cluster");
            }
          }
        }
        for (Eigen::Index k = 0; k < ev.size(); ++k) {
          ComplexVector w(n);
          for (std::size_t j = 0; j < m; ++j) {
            auto const vj = es.eigenvectors()(static_cast<Eigen::Index>(j), k);
            for (std::size_t i = 0; i < n; ++i) {
              w[i] += vj * zc[j][i];
            }
          }
          // w^2 = mu w for a multiple of a minimal idempotent
          auto const           w2 = a.multiply(w, w);
          std::complex<double> num = 0, den = 0;
          for (std::size_t i = 0; i < n; ++i) {
            num += std::conj(w[i]) * w2[i];
            den += std::conj(w[i]) * w[i];
          }
          auto const mu = num / den;
          if (std::abs(mu) < gap_threshold) {
            resolution_failure("degenerate eigenvector");
          }
          for (auto& x : w) {
            x /= mu;
          }
          idempotents.push_back(std::move(w));
        }
      }

      for (auto& e : idempotents) {
        for (int it = 0; it < 4; ++it) {
          auto const e2 = a.multiply(e, e);
          auto const e3 = a.multiply(e2, e);
          for (std::size_t i = 0; i < n; ++i) {
            e[i] = 3.0 * e2[i] - 2.0 * e3[i];
          }
        }
        double const t = a.trace_left(e).real();
        long const   d = std::lround(std::sqrt(std::max(t, 0.0)));
        if (d <= 0 || std::abs(t - static_cast<double>(d * d)) > gap_threshold * std::max(1.0, t)) {
          resolution_failure("block trace " + std::to_string(t) + " is not a square");
        }
        std::size_t const nc = cc.classes[c].size();
        if (static_cast<std::size_t>(d) % nc != 0) {
          resolution_failure("block size not divisible by component size");
        }
        out.blocks.push_back(
            {static_cast<int>(c), static_cast<std::size_t>(d), nc, d / nc, std::move(e)});
      }
    }

    // order independent of the random element
    auto key = [](Block const& b) {
      std::vector<long long> k{b.component, static_cast<long long>(b.size)};
      for (auto const& z : b.idempotent) {
        k.push_back(std::llround(z.real() * 1e6));
        k.push_back(std::llround(z.imag() * 1e6));
      }
      return k;
    };
    std::sort(out.blocks.begin(), out.blocks.end(),
              [&](Block const& x, Block const& y) { return key(x) < key(y); });

    ComplexVector sum(n);
    for (std::size_t i = 0; i < out.blocks.size(); ++i) {
      auto const& ei = out.blocks[i].idempotent;
      for (std::size_t k = 0; k < n; ++k) {
        sum[k] += ei[k];
      }
      for (std::size_t j = 0; j < out.blocks.size(); ++j) {
        if (out.blocks[i].component != out.blocks[j].component) {
          continue;  // disjoint supports multiply to exactly 0
        }
        auto p = a.multiply(ei, out.blocks[j].idempotent);
        if (i == j) {
          p = sub(p, ei);
        }
        out.residual = std::max(out.residual, max_abs(p));
      }
    }
    out.residual = std::max(out.residual, max_abs(sub(sum, to_complex(a.unit()))));
    if (out.residual > gap_threshold) {
      resolution_failure("residual " + std::to_string(out.residual));
    }
    return out;
  }

  ComplexVector AlgebraHomomorphism::apply(ComplexVector const& x) const {
    ComplexVector out(target.dimension());
    for (std::size_t i = 0; i < x.size(); ++i) {
      out[on_basis[i]] += x[i];
    }
    return out;
  }

  ExactVector AlgebraHomomorphism::apply(ExactVector const& x) const {
    ExactVector out(target.dimension());
    for (std::size_t i = 0; i < x.size(); ++i) {
      out[on_basis[i]] += x[i];
    }
    return out;
  }

  AlgebraHomomorphism induced_map(GroupoidFunctor const& F) {
    if (!validate_functor(F).ok()) {
      throw PreconditionError("induced map of an invalid functor");
    }
    auto const& A = *F.source;
    auto const& B = *F.target;
    int const   n = static_cast<int>(A.num_morphisms());
    // A non-composable pair whose images compose breaks multiplicativity:
    // 0 = phi(f g) != phi(f) phi(g).
    for (int f = 0; f < n; ++f) {
      for (int g = 0; g < n; ++g) {
        int const fg  = A.compose(f, g);
        int const img = B.compose(F.on_morphisms[f], F.on_morphisms[g]);
        bool const ok = fg == kNone ? img == kNone : img == F.on_morphisms[fg];
        if (!ok) {
          throw PreconditionError(
              "not a cofibration: the algebra map is not multiplicative on ("
              + A.morphism(f).id + ", " + A.morphism(g).id
              + "), which are not composable but whose images compose");
        }
      }
    }
    return {StructureConstantAlgebra(F.source), StructureConstantAlgebra(F.target),
            F.on_morphisms};
  }

  ExactVector identity_projection(StructureConstantAlgebra const& a,
                                  std::vector<int> const&         objects) {
    ExactVector p(a.dimension());
    for (int x : objects) {
      p[a.groupoid()->identity(x)] = 1;
    }
    return p;
  }

  namespace {

    void require_projection(StructureConstantAlgebra const& a, ExactVector const& p) {
      if (p.size() != a.dimension()) {
        throw PreconditionError("projection has the wrong length");
      }
      if (a.multiply(p, p) != p || a.adjoint(p) != p) {
        throw PreconditionError("not a projection: p*p = p and p^* = p must hold exactly");
      }
    }

    // Objects x when p is exactly a sum of identities id_x.
    std::optional<std::vector<int>> identity_support(StructureConstantAlgebra const& a,
                                                     ExactVector const&              p) {
      auto const&      g = *a.groupoid();
      std::vector<int> objs;
      for (std::size_t f = 0; f < p.size(); ++f) {
        if (p[f] == 0) {
          continue;
        }
        if (p[f] != 1 || !g.is_identity(static_cast<int>(f))) {
          return std::nullopt;
        }
        objs.push_back(g.src(static_cast<int>(f)));
      }
      std::sort(objs.begin(), objs.end());
      return objs;
    }

  }  // namespace

  CornerAlgebra corner_algebra(StructureConstantAlgebra const& a, ExactVector const& p) {
    require_projection(a, p);
    CornerAlgebra out;
    auto const&   g = *a.groupoid();
    if (auto objs = identity_support(a, p)) {
      out.identity_supported = true;
      std::vector<bool> in(g.num_objects(), false);
      for (int x : *objs) {
        in[x] = true;
      }
      for (std::size_t f = 0; f < g.num_morphisms(); ++f) {
        if (in[g.src(static_cast<int>(f))] && in[g.dst(static_cast<int>(f))]) {
          out.basis_in_parent.push_back(static_cast<int>(f));
        }
      }
      out.algebra.emplace(share(full_subgroupoid(g, *objs)));
      out.dimension = out.basis_in_parent.size();
      return out;
    }
    RowReducer rr(a.dimension());
    for (std::size_t i = 0; i < a.dimension(); ++i) {
      auto v = a.multiply(a.multiply(p, a.basis_vector(static_cast<int>(i))), p);
      if (rr.add(detail::sparse(v))) {
        out.subspace.push_back(std::move(v));
      }
    }
    out.dimension = out.subspace.size();
    return out;
  }

  bool is_full_projection(StructureConstantAlgebra const& a, ExactVector const& p) {
    require_projection(a, p);
    std::size_t const n = a.dimension();
    RowReducer        rr(n);
    for (std::size_t j = 0; j < n && rr.rank() < n; ++j) {
      auto const pb = a.multiply(p, a.basis_vector(static_cast<int>(j)));
      if (std::all_of(pb.begin(), pb.end(), [](Rational const& x) { return x == 0; })) {
        continue;
      }
      for (std::size_t i = 0; i < n && rr.rank() < n; ++i) {
        rr.add(detail::sparse(a.multiply(a.basis_vector(static_cast<int>(i)), pb)));
      }
    }
    return rr.rank() == n;
  }

  namespace {

    struct BasisInvariant {
      bool        idempotent;
      std::size_t left_nonzero;
      std::size_t right_nonzero;
      std::size_t power_order;
      bool        self_adjoint;

      auto operator<=>(BasisInvariant const&) const = default;
    };

    std::vector<BasisInvariant> invariants(StructureConstantAlgebra const& a) {
      int const                   n = static_cast<int>(a.dimension());
      std::vector<BasisInvariant> out;
      for (int i = 0; i < n; ++i) {
        BasisInvariant v{a.product(i, i) == i, 0, 0, 0, a.star(i) == i};
        for (int k = 0; k < n; ++k) {
          v.left_nonzero += a.product(i, k) != kNone;
          v.right_nonzero += a.product(k, i) != kNone;
        }
        int p = i;
        for (std::size_t k = 1; k <= static_cast<std::size_t>(n) + 1; ++k) {
          if (p == kNone || a.product(p, p) == p) {
            v.power_order = p == kNone ? 0 : k;
            break;
          }
          p = a.product(p, i);
        }
        out.push_back(v);
      }
      return out;
    }

  }  // namespace

  std::optional<std::vector<int>> structure_isomorphism(StructureConstantAlgebra const& a,
                                                        StructureConstantAlgebra const& b) {
    int const n = static_cast<int>(a.dimension());
    if (b.dimension() != a.dimension()) {
      return std::nullopt;
    }
    auto const ia = invariants(a);
    auto const ib = invariants(b);
    {
      auto sa = ia, sb = ib;
      std::sort(sa.begin(), sa.end());
      std::sort(sb.begin(), sb.end());
      if (sa != sb) {
        return std::nullopt;
      }
    }
    // pairs (u, v) with u v = k, per k
    std::vector<std::vector<std::pair<int, int>>> preimages(n);
    for (int u = 0; u < n; ++u) {
      for (int v = 0; v < n; ++v) {
        if (int const k = a.product(u, v); k != kNone) {
          preimages[k].emplace_back(u, v);
        }
      }
    }
    std::vector<int>  map(n, kNone);
    std::vector<bool> used(n, false);

    auto consistent = [&](int i) {
      auto check = [&](int u, int v) {
        if (map[u] == kNone || map[v] == kNone) {
          return true;
        }
        int const k  = a.product(u, v);
        int const kb = b.product(map[u], map[v]);
        if (k == kNone || kb == kNone) {
          return k == kNone && kb == kNone;
        }
        return map[k] == kNone ? !used[kb] : map[k] == kb;
      };
      for (int u = 0; u < n; ++u) {
        if (map[u] != kNone && (!check(i, u) || !check(u, i))) {
          return false;
        }
      }
      for (auto const& [u, v] : preimages[i]) {
        if (!check(u, v)) {
          return false;
        }
      }
      int const s = a.star(i);
      if (map[s] != kNone && b.star(map[i]) != map[s]) {
        return false;
      }
      return true;
    };

    std::function<bool(int)> extend = [&](int i) {
      if (i == n) {
        return true;
      }
      for (int j = 0; j < n; ++j) {
        if (used[j] || ib[j] != ia[i]) {
          continue;
        }
        map[i]  = j;
        used[j] = true;
        if (consistent(i) && extend(i + 1)) {
          return true;
        }
        map[i]  = kNone;
        used[j] = false;
      }
      return false;
    };
    if (!extend(0)) {
      return std::nullopt;
    }
    return map;
  }

  K0Map k0_map(AlgebraHomomorphism const& phi,
               BlockDecomposition const&  source,
               BlockDecomposition const&  target) {
    K0Map k;
    k.domain_rank   = source.blocks.size();
    k.codomain_rank = target.blocks.size();
    k.matrix.assign(k.codomain_rank, std::vector<long long>(k.domain_rank, 0));
    for (std::size_t i = 0; i < k.domain_rank; ++i) {
      auto const  img = phi.apply(source.blocks[i].idempotent);
      auto const  di  = static_cast<double>(source.blocks[i].size);
      for (std::size_t j = 0; j < k.codomain_rank; ++j) {
        auto const& ej = target.blocks[j];
        // trace of left multiplication on an n x n block by a rank r
        // projection is r n; the multiplicity is r / d_i
        double const t = phi.target.trace_left(phi.target.multiply(img, ej.idempotent)).real();
        double const m = t / (static_cast<double>(ej.size) * di);
        long long const r = std::llround(m);
        double const defect = std::abs(m - static_cast<double>(r));
        k.max_rounding_defect = std::max(k.max_rounding_defect, defect);
        if (defect > kRoundingDefectLimit) {
          std::ostringstream os;
          os << "K0 multiplicity " << m << " is not within " << kRoundingDefectLimit
             << " of an integer";
          throw Error(os.str());
        }
        k.matrix[j][i] = r;
      }
    }
    return k;
  }

  K0Map k0_map(AlgebraHomomorphism const& phi, double tol, std::uint64_t seed) {
    return k0_map(phi, block_decomposition(phi.source, tol, seed),
                  block_decomposition(phi.target, tol, seed));
  }

  Integer determinant(std::vector<std::vector<long long>> const& m) {
    std::size_t const n = m.size();
    for (auto const& row : m) {
      if (row.size() != n) {
        throw PreconditionError("determinant of a non-square matrix");
      }
    }
    if (n == 0) {
      return 1;
    }
    // Bareiss fraction-free elimination
    std::vector<std::vector<Integer>> a(n, std::vector<Integer>(n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        a[i][j] = m[i][j];
      }
    }
    Integer prev = 1;
    int     sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
      if (a[k][k] == 0) {
        std::size_t s = k + 1;
        while (s < n && a[s][k] == 0) {
          ++s;
        }
        if (s == n) {
          return 0;
        }
        std::swap(a[k], a[s]);
        sign = -sign;
      }
      for (std::size_t i = k + 1; i < n; ++i) {
        for (std::size_t j = k + 1; j < n; ++j) {
          a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        }
      }
      prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
  }

  MoritaReport morita_check(GroupoidFunctor const& F, double tol, std::uint64_t seed) {
    MoritaReport r;
    r.cofibration         = is_cofibration(F);
    auto const phi        = induced_map(F);
    r.equivalence         = is_equivalence(F);
    r.acyclic_cofibration = r.cofibration && r.equivalence;
    r.k0                  = k0_map(phi, tol, seed);
    if (r.k0.domain_rank == r.k0.codomain_rank) {
      auto const d = determinant(r.k0.matrix);
      r.k0_iso     = d == 1 || d == -1;
    }

    auto const& B  = F.target;
    auto const  cc = connected_components(*B);
    std::vector<int> chosen(cc.count(), kNone);
    for (int x : F.on_objects) {
      int& c = chosen[cc.component[x]];
      if (c == kNone || x < c) {
        c = x;
      }
    }
    for (std::size_t c = 0; c < cc.count(); ++c) {
      int const x = chosen[c];
      if (x == kNone) {
        continue;
      }
      auto const comp = share(full_subgroupoid(*B, cc.classes[c]));
      auto const alg  = StructureConstantAlgebra(comp);
      int const  lx   = static_cast<int>(std::find(cc.classes[c].begin(), cc.classes[c].end(), x)
                                       - cc.classes[c].begin());
      auto const p      = identity_projection(alg, {lx});
      auto const corner = corner_algebra(alg, p);
      auto const vg     = vertex_group(*comp, lx);
      std::vector<std::string> names;
      for (std::size_t k = 0; k < vg.order(); ++k) {
        names.push_back(std::to_string(k));
      }
      auto const group =
          share(classifying(FiniteGroup("End(" + B->object(x) + ")", names, vg.table)));
      r.full_corner_witnesses.push_back(
          {B->object(x), is_full_projection(alg, p), corner.dimension, vg.order(),
           structure_isomorphism(*corner.algebra, StructureConstantAlgebra(group))
               .has_value()});
    }
    return r;
  }

}  // namespace gpdkit

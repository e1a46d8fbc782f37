#pragma once

// Universal property of a concretized pushout against every cocone into a
// list of small target groupoids.

#include <string>
#include <vector>

#include "gpdkit/presentation.hpp"
#include "gpdkit/search.hpp"
#include "oracles.hpp"

namespace oracle {

  struct UniversalPropertyResult {
    std::size_t cocones   = 0;
    std::size_t failures  = 0;
    std::string first_failure;
  };

  inline std::vector<int> compose_maps(std::vector<int> const& g,
                                       std::vector<int> const& f) {
    std::vector<int> out;
    for (int x : f) {
      out.push_back(g[x]);
    }
    return out;
  }

  // For every pair u : B -> T, v : C -> T with u i = v f, exactly one functor
  // h : P -> T satisfies h jB = u and h jC = v, and it is the induced map.
  inline UniversalPropertyResult check_universal_property(
      gpdkit::GroupoidFunctor const&         i,
      gpdkit::GroupoidFunctor const&         f,
      std::vector<gpdkit::GroupoidPtr> const& targets,
      std::size_t                            bound) {
    using namespace gpdkit;
    UniversalPropertyResult out;
    auto const              p = pushout_along_cofibration(i, f);
    auto const              c = concretize(*p.presentation, bound);
    if (!c) {
      out.failures      = 1;
      out.first_failure = "pushout did not concretize";
      return out;
    }
    auto const jb = concretize_map(p.from_b, *c);
    auto const jc = concretize_map(p.from_c, *c);
    for (auto const& T : targets) {
      auto const from_p = enumerate_functors(c->groupoid, T);
      for (auto const& u : enumerate_functors(i.target, T)) {
        for (auto const& v : enumerate_functors(f.target, T)) {
          if (compose_maps(u.on_objects, i.on_objects)
                  != compose_maps(v.on_objects, f.on_objects)
              || compose_maps(u.on_morphisms, i.on_morphisms)
                     != compose_maps(v.on_morphisms, f.on_morphisms)) {
            continue;
          }
          ++out.cocones;
          std::size_t                  matches = 0;
          GroupoidFunctor const*       unique  = nullptr;
          for (auto const& h : from_p) {
            if (compose_maps(h.on_objects, jb.on_objects) == u.on_objects
                && compose_maps(h.on_morphisms, jb.on_morphisms) == u.on_morphisms
                && compose_maps(h.on_objects, jc.on_objects) == v.on_objects
                && compose_maps(h.on_morphisms, jc.on_morphisms)
                       == v.on_morphisms) {
              ++matches;
              unique = &h;
            }
          }
          bool ok = matches == 1;
          if (ok) {
            auto const induced = concretize_map(induced_map(p, u, v), *c);
            ok = induced.on_objects == unique->on_objects
                 && induced.on_morphisms == unique->on_morphisms
                 && is_functor(*c->groupoid, *T, induced.on_objects,
                               induced.on_morphisms);
          }
          if (!ok) {
            if (out.failures++ == 0) {
              out.first_failure = std::to_string(matches)
                                  + " mediating functors for a cocone into a "
                                  + std::to_string(T->num_morphisms())
                                  + "-morphism target";
            }
          }
        }
      }
    }
    return out;
  }

}  // namespace oracle

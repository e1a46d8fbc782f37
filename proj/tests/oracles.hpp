#pragma once

// Brute-force reference computations used to freeze expected values. They
// deliberately avoid the library's search and propagation code and only
// read the raw tables of a ConcreteGroupoid.

#include <cstddef>
#include <functional>
#include <set>
#include <vector>

#include "gpdkit/groupoid.hpp"

namespace oracle {

  using gpdkit::ConcreteGroupoid;
  using gpdkit::kNone;

  // Checks the functor laws on raw tables.
  inline bool is_functor(ConcreteGroupoid const& a,
                         ConcreteGroupoid const& b,
                         std::vector<int> const& obj,
                         std::vector<int> const& mor) {
    int const m = static_cast<int>(a.num_morphisms());
    for (int f = 0; f < m; ++f) {
      if (b.src(mor[f]) != obj[a.src(f)] || b.dst(mor[f]) != obj[a.dst(f)]) {
        return false;
      }
    }
    for (int x = 0; x < static_cast<int>(a.num_objects()); ++x) {
      if (mor[a.identity(x)] != b.identity(obj[x])) {
        return false;
      }
    }
    for (int g = 0; g < m; ++g) {
      for (int f = 0; f < m; ++f) {
        int const gf = a.compose(g, f);
        if (gf != kNone && mor[gf] != b.compose(mor[g], mor[f])) {
          return false;
        }
      }
    }
    return true;
  }

  // Every functor A -> B by trying every object map and every morphism map
  // (odometer over all |mor B|^|mor A| assignments).
  inline std::size_t count_functors(ConcreteGroupoid const& a,
                                    ConcreteGroupoid const& b) {
    std::size_t const na = a.num_objects(), nb = b.num_objects();
    std::size_t const ma = a.num_morphisms(), mb = b.num_morphisms();
    std::size_t       count = 0;
    std::vector<int>  obj(na, 0);
    while (true) {
      std::vector<int> mor(ma, 0);
      while (true) {
        if (is_functor(a, b, obj, mor)) {
          ++count;
        }
        std::size_t i = 0;
        while (i < ma && ++mor[i] == static_cast<int>(mb)) {
          mor[i++] = 0;
        }
        if (i == ma) {
          break;
        }
      }
      std::size_t i = 0;
      while (i < na && ++obj[i] == static_cast<int>(nb)) {
        obj[i++] = 0;
      }
      if (i == na) {
        break;
      }
    }
    return count;
  }

  inline std::size_t count_loops(ConcreteGroupoid const& g, int x) {
    std::size_t n = 0;
    for (auto const& f : g.morphisms()) {
      n += (f.src == x && f.dst == x) ? 1 : 0;
    }
    return n;
  }

  // Number of connected components by repeated flooding.
  inline std::size_t count_components(ConcreteGroupoid const& g) {
    std::vector<int> label(g.num_objects(), -1);
    std::size_t      classes = 0;
    for (std::size_t x = 0; x < g.num_objects(); ++x) {
      if (label[x] >= 0) {
        continue;
      }
      label[x]     = static_cast<int>(x);
      bool changed = true;
      while (changed) {
        changed = false;
        for (auto const& f : g.morphisms()) {
          if ((label[f.src] == static_cast<int>(x)) != (label[f.dst] == static_cast<int>(x))) {
            label[f.src] = label[f.dst] = static_cast<int>(x);
            changed                     = true;
          }
        }
      }
      ++classes;
    }
    return classes;
  }

  // Equivalence of categories by definition: hom-set maps bijective for
  // every pair of objects, and every target object isomorphic to an image.
  inline bool is_equivalence(ConcreteGroupoid const& a,
                             ConcreteGroupoid const& b,
                             std::vector<int> const& obj,
                             std::vector<int> const& mor) {
    for (std::size_t x = 0; x < a.num_objects(); ++x) {
      for (std::size_t y = 0; y < a.num_objects(); ++y) {
        std::set<int> image;
        std::size_t   dom = 0;
        for (std::size_t f = 0; f < a.num_morphisms(); ++f) {
          if (a.src(f) == static_cast<int>(x) && a.dst(f) == static_cast<int>(y)) {
            image.insert(mor[f]);
            ++dom;
          }
        }
        std::size_t cod = 0;
        for (std::size_t f = 0; f < b.num_morphisms(); ++f) {
          cod += (b.src(f) == obj[x] && b.dst(f) == obj[y]) ? 1 : 0;
        }
        if (image.size() != dom || dom != cod) {
          return false;
        }
      }
    }
    for (std::size_t z = 0; z < b.num_objects(); ++z) {
      bool hit = false;
      for (auto const& f : b.morphisms()) {
        for (int o : obj) {
          hit = hit || (f.src == o && f.dst == static_cast<int>(z));
        }
      }
      if (!hit) {
        return false;
      }
    }
    return true;
  }

}  // namespace oracle

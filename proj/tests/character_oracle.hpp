#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <set>
#include <vector>

#include "gpdkit/group.hpp"

namespace oracle {

  // Irreducible degrees of a finite group, derived only from |G|, the number
  // of conjugacy classes and |G/[G,G]|: the linear characters are counted
  // by the abelianization and the remaining degrees are >= 2, divide |G| and
  // have squares summing to the rest. Returns nothing when these facts do
  // not pin the degrees down.
  inline std::optional<std::vector<std::size_t>> irreducible_degrees(gpdkit::FiniteGroup const& G) {
    std::size_t const n = G.order();
    auto inv = [&](std::size_t a) {
      for (std::size_t b = 0; b < n; ++b) {
        if (G.mul(a, b) == 0) {
          return b;
        }
      }
      return n;
    };

    std::set<std::set<std::size_t>> classes;
    for (std::size_t a = 0; a < n; ++a) {
      std::set<std::size_t> cls;
      for (std::size_t g = 0; g < n; ++g) {
        cls.insert(G.mul(G.mul(g, a), inv(g)));
      }
      classes.insert(cls);
    }
    std::size_t const k = classes.size();

    std::set<std::size_t> comm{0};
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        comm.insert(G.mul(G.mul(a, b), G.mul(inv(a), inv(b))));
      }
    }
    for (bool grew = true; grew;) {
      grew = false;
      for (auto x : std::vector<std::size_t>(comm.begin(), comm.end())) {
        for (auto y : std::vector<std::size_t>(comm.begin(), comm.end())) {
          grew |= comm.insert(G.mul(x, y)).second;
        }
      }
    }
    std::size_t const linear = n / comm.size();

    std::vector<std::vector<std::size_t>> found;
    std::vector<std::size_t>              cur;
    std::function<void(std::size_t, std::size_t, std::size_t)> rec =
        [&](std::size_t left, std::size_t remaining, std::size_t max_d) {
          if (left == 0) {
            if (remaining == 0) {
              found.push_back(cur);
            }
            return;
          }
          for (std::size_t d = 2; d <= max_d && d * d <= remaining; ++d) {
            if (n % d != 0) {
              continue;
            }
            cur.push_back(d);
            rec(left - 1, remaining - d * d, d);
            cur.pop_back();
          }
        };
    if (k < linear) {
      return std::nullopt;
    }
    rec(k - linear, n - linear, n);
    if (found.size() != 1) {
      return std::nullopt;
    }
    std::vector<std::size_t> out(linear, 1);
    out.insert(out.end(), found[0].rbegin(), found[0].rend());
    return out;
  }

}  // namespace oracle

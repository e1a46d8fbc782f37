#include "gpdkit/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>

#include "gpdkit/errors.hpp"

namespace gpdkit {

  FiniteGroup::FiniteGroup(std::string              name,
                           std::vector<std::string> elements,
                           std::vector<std::size_t> table)
      : _name(std::move(name)),
        _elements(std::move(elements)),
        _table(std::move(table)) {
    std::size_t const n = _elements.size();
    if (n == 0) {
      throw PreconditionError("group '" + _name + "' has no elements");
    }
    if (_table.size() != n * n) {
      throw PreconditionError("group '" + _name
                              + "': multiplication table has wrong size");
    }
    for (auto v : _table) {
      if (v >= n) {
        throw PreconditionError("group '" + _name
                                + "': table entry out of range");
      }
    }
    for (std::size_t a = 0; a < n; ++a) {
      if (mul(0, a) != a || mul(a, 0) != a) {
        throw PreconditionError("group '" + _name
                                + "': element 0 is not an identity");
      }
    }
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        for (std::size_t c = 0; c < n; ++c) {
          if (mul(mul(a, b), c) != mul(a, mul(b, c))) {
            throw PreconditionError("group '" + _name
                                    + "': multiplication is not associative");
          }
        }
      }
    }
    _inverse.assign(n, n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        if (mul(a, b) == 0 && mul(b, a) == 0) {
          _inverse[a] = b;
          break;
        }
      }
      if (_inverse[a] == n) {
        throw PreconditionError("group '" + _name + "': element "
                                + _elements[a] + " has no inverse");
      }
    }
  }

  std::size_t FiniteGroup::class_count() const {
    std::size_t const  n = order();
    std::vector<bool>  seen(n, false);
    std::size_t        classes = 0;
    for (std::size_t a = 0; a < n; ++a) {
      if (seen[a]) {
        continue;
      }
      ++classes;
      for (std::size_t g = 0; g < n; ++g) {
        seen[mul(mul(g, a), inverse(g))] = true;
      }
    }
    return classes;
  }

  FiniteGroup FiniteGroup::trivial() {
    return FiniteGroup("1", {"e"}, {0});
  }

  FiniteGroup FiniteGroup::cyclic(std::size_t n) {
    if (n == 0) {
      throw PreconditionError("cyclic group of order 0");
    }
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) {
      names.push_back(i == 0 ? "e" : (i == 1 ? "a" : "a" + std::to_string(i)));
    }
    std::vector<std::size_t> table(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        table[i * n + j] = (i + j) % n;
      }
    }
    return FiniteGroup("Z" + std::to_string(n), names, table);
  }

  namespace {
    // Elements a^i x^j, 0 <= i < m, j in {0, 1}, stored as i + m*j.
    FiniteGroup metacyclic(std::string name,
                           std::size_t m,
                           std::size_t x_squared) {
      std::size_t const        n = 2 * m;
      std::vector<std::string> names;
      for (std::size_t j = 0; j < 2; ++j) {
        for (std::size_t i = 0; i < m; ++i) {
          std::string s;
          if (i != 0) {
            s += (i == 1 ? "a" : "a" + std::to_string(i));
          }
          if (j == 1) {
            s += "x";
          }
          names.push_back(s.empty() ? "e" : s);
        }
      }
      std::vector<std::size_t> table(n * n);
      for (std::size_t p = 0; p < n; ++p) {
        for (std::size_t q = 0; q < n; ++q) {
          std::size_t const i = p % m, j = p / m, k = q % m, l = q / m;
          // x a^k = a^-k x
          std::size_t r = (j == 1) ? (i + m - k) % m : (i + k) % m;
          if (j == 1 && l == 1) {
            r = (r + x_squared) % m;
          }
          table[p * n + q] = r + m * ((j + l) % 2);
        }
      }
      return FiniteGroup(std::move(name), names, table);
    }

    std::string cycle_name(std::vector<std::size_t> const& p) {
      std::vector<bool> seen(p.size(), false);
      std::string       out;
      for (std::size_t i = 0; i < p.size(); ++i) {
        if (seen[i] || p[i] == i) {
          continue;
        }
        out += "(";
        std::size_t j     = i;
        bool        first = true;
        while (!seen[j]) {
          seen[j] = true;
          if (!first) {
            out += " ";
          }
          out += std::to_string(j);
          first = false;
          j     = p[j];
        }
        out += ")";
      }
      return out.empty() ? "e" : out;
    }
  }  // namespace

  FiniteGroup FiniteGroup::dihedral(std::size_t n) {
    if (n < 1) {
      throw PreconditionError("dihedral group needs n >= 1");
    }
    return metacyclic("D" + std::to_string(n), n, 0);
  }

  FiniteGroup FiniteGroup::dicyclic(std::size_t n) {
    if (n < 1) {
      throw PreconditionError("dicyclic group needs n >= 1");
    }
    return metacyclic(n == 2 ? "Q8" : "Dic" + std::to_string(n), 2 * n, n);
  }

  FiniteGroup FiniteGroup::from_permutations(
      std::string                                  name,
      std::size_t                                  degree,
      std::vector<std::vector<std::size_t>> const& generators) {
    using Perm = std::vector<std::size_t>;
    Perm id(degree);
    std::iota(id.begin(), id.end(), 0);
    std::vector<Perm>              elems{id};
    std::map<Perm, std::size_t>    index{{id, 0}};
    // BFS closure; apply generator g after the element (g o p).
    for (std::size_t k = 0; k < elems.size(); ++k) {
      for (auto const& g : generators) {
        if (g.size() != degree) {
          throw PreconditionError("permutation of wrong degree");
        }
        Perm q(degree);
        for (std::size_t i = 0; i < degree; ++i) {
          q[i] = g[elems[k][i]];
        }
        if (index.emplace(q, elems.size()).second) {
          elems.push_back(q);
        }
      }
    }
    std::size_t const        n = elems.size();
    std::vector<std::size_t> table(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        // (a*b)(i) = a(b(i))
        Perm q(degree);
        for (std::size_t i = 0; i < degree; ++i) {
          q[i] = elems[a][elems[b][i]];
        }
        table[a * n + b] = index.at(q);
      }
    }
    std::vector<std::string> names;
    for (auto const& p : elems) {
      names.push_back(cycle_name(p));
    }
    return FiniteGroup(std::move(name), names, table);
  }

  FiniteGroup FiniteGroup::symmetric(std::size_t n) {
    if (n <= 1) {
      return trivial();
    }
    std::vector<std::size_t> swap(n), cycle(n);
    std::iota(swap.begin(), swap.end(), 0);
    std::swap(swap[0], swap[1]);
    for (std::size_t i = 0; i < n; ++i) {
      cycle[i] = (i + 1) % n;
    }
    return from_permutations("S" + std::to_string(n), n, {swap, cycle});
  }

  FiniteGroup FiniteGroup::alternating(std::size_t n) {
    if (n <= 2) {
      return trivial();
    }
    std::vector<std::vector<std::size_t>> gens;
    for (std::size_t k = 2; k < n; ++k) {
      std::vector<std::size_t> p(n);
      std::iota(p.begin(), p.end(), 0);
      p[0] = 1;
      p[1] = k;
      p[k] = 0;
      gens.push_back(p);
    }
    return from_permutations("A" + std::to_string(n), n, gens);
  }

  FiniteGroup FiniteGroup::direct_product(FiniteGroup const& g,
                                          FiniteGroup const& h) {
    std::size_t const        n = g.order() * h.order();
    std::vector<std::string> names;
    for (std::size_t a = 0; a < g.order(); ++a) {
      for (std::size_t b = 0; b < h.order(); ++b) {
        if (a == 0 && b == 0) {
          names.push_back("e");
        } else {
          names.push_back("(" + g.element(a) + "," + h.element(b) + ")");
        }
      }
    }
    std::vector<std::size_t> table(n * n);
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = 0; q < n; ++q) {
        std::size_t const a = g.mul(p / h.order(), q / h.order());
        std::size_t const b = h.mul(p % h.order(), q % h.order());
        table[p * n + q]    = a * h.order() + b;
      }
    }
    return FiniteGroup(g.name() + "x" + h.name(), names, table);
  }

  std::vector<FiniteGroup> FiniteGroup::all_small_groups(
      std::size_t max_order) {
    if (max_order > 12) {
      throw PreconditionError("small group catalogue stops at order 12");
    }
    auto const Z = [](std::size_t n) { return cyclic(n); };
    std::vector<FiniteGroup> all;
    for (std::size_t n = 1; n <= max_order; ++n) {
      all.push_back(n == 1 ? trivial() : Z(n));
      switch (n) {
        case 4:
          all.push_back(direct_product(Z(2), Z(2)));
          break;
        case 6:
          all.push_back(symmetric(3));
          break;
        case 8:
          all.push_back(direct_product(Z(4), Z(2)));
          all.push_back(direct_product(direct_product(Z(2), Z(2)), Z(2)));
          all.push_back(dihedral(4));
          all.push_back(dicyclic(2));
          break;
        case 9:
          all.push_back(direct_product(Z(3), Z(3)));
          break;
        case 10:
          all.push_back(dihedral(5));
          break;
        case 12:
          all.push_back(direct_product(Z(6), Z(2)));
          all.push_back(dihedral(6));
          all.push_back(alternating(4));
          all.push_back(dicyclic(3));
          break;
        default:
          break;
      }
    }
    return all;
  }

}  // namespace gpdkit

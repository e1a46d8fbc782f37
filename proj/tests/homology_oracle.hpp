#pragma once

// Homology of a truncated nerve recomputed from the simplex tuples alone:
// faces are rebuilt by composing arrows, degenerate simplices are those
// containing an identity, and boundary ranks are taken by plain row
// reduction modulo primes.

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "gpdkit/nerve.hpp"

namespace oracle {

  struct ChainData {
    // boundary[k] has one row per nondegenerate (k-1)-simplex and one
    // column per nondegenerate k-simplex.
    std::vector<std::vector<std::vector<long long>>> boundary;
    std::vector<std::size_t>                        dims;
  };

  struct ArrowOps {
    std::function<int(int, int)> compose;  // compose(g, f) = g o f
    std::function<bool(int)>     is_identity;
    std::function<int(int)>      source;
    std::function<int(int)>      target;
  };

  inline ChainData chains(gpdkit::TruncatedSimplicialSet const& x, ArrowOps const& ops) {
    using gpdkit::Simplex;
    std::size_t const d = x.cutoff;
    auto degenerate = [&](std::size_t k, Simplex const& s) {
      if (k == 0) {
        return false;
      }
      for (int a : s) {
        if (ops.is_identity(a)) {
          return true;
        }
      }
      return false;
    };
    std::vector<std::map<Simplex, int>> pos(d + 1);
    ChainData                           out;
    out.dims.assign(d + 1, 0);
    for (std::size_t k = 0; k <= d; ++k) {
      for (auto const& s : x.simplices[k]) {
        if (!degenerate(k, s)) {
          pos[k][s] = static_cast<int>(out.dims[k]++);
        }
      }
    }
    auto face = [&](std::size_t k, Simplex const& s, std::size_t i) {
      if (k == 1) {
        return Simplex{i == 0 ? ops.target(s[0]) : ops.source(s[0])};
      }
      if (i == 0) {
        return Simplex(s.begin() + 1, s.end());
      }
      if (i == k) {
        return Simplex(s.begin(), s.end() - 1);
      }
      Simplex f(s.begin(), s.begin() + static_cast<long>(i) - 1);
      f.push_back(ops.compose(s[i], s[i - 1]));
      f.insert(f.end(), s.begin() + static_cast<long>(i) + 1, s.end());
      return f;
    };
    out.boundary.resize(d + 1);
    for (std::size_t k = 1; k <= d; ++k) {
      auto& m = out.boundary[k];
      m.assign(out.dims[k - 1], std::vector<long long>(out.dims[k], 0));
      for (auto const& [s, col] : pos[k]) {
        for (std::size_t i = 0; i <= k; ++i) {
          auto it = pos[k - 1].find(face(k, s, i));
          if (it != pos[k - 1].end()) {
            m[it->second][col] += (i % 2 == 0) ? 1 : -1;
          }
        }
      }
    }
    return out;
  }

  inline std::int64_t mod_rank(std::vector<std::vector<long long>> m, std::int64_t p) {
    std::size_t const rows = m.size();
    std::size_t const cols = rows ? m[0].size() : 0;
    for (auto& r : m) {
      for (auto& v : r) {
        v %= p;
        if (v < 0) {
          v += p;
        }
      }
    }
    auto inverse = [p](std::int64_t a) {
      std::int64_t r = 1, e = p - 2;
      a %= p;
      while (e) {
        if (e & 1) {
          r = static_cast<std::int64_t>(static_cast<__int128>(r) * a % p);
        }
        a = static_cast<std::int64_t>(static_cast<__int128>(a) * a % p);
        e >>= 1;
      }
      return r;
    };
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
      std::size_t piv = rank;
      while (piv < rows && m[piv][c] == 0) {
        ++piv;
      }
      if (piv == rows) {
        continue;
      }
      std::swap(m[piv], m[rank]);
      std::int64_t const inv = inverse(m[rank][c]);
      for (std::size_t r = rank + 1; r < rows; ++r) {
        if (m[r][c] == 0) {
          continue;
        }
        std::int64_t const f =
          static_cast<std::int64_t>(static_cast<__int128>(m[r][c]) * inv % p);
        for (std::size_t j = c; j < cols; ++j) {
          m[r][j] = static_cast<std::int64_t>(
            ((m[r][j] - static_cast<__int128>(f) * m[rank][j]) % p + p) % p);
        }
      }
      ++rank;
    }
    return static_cast<std::int64_t>(rank);
  }

  inline constexpr std::int64_t kLargePrime = 1'000'000'007;

  // Betti numbers and, per small prime p, the number of invariant factors
  // divisible by p in each degree below the cutoff.
  struct Profile {
    std::vector<std::size_t>                        betti;
    std::map<std::int64_t, std::vector<std::size_t>> p_torsion;

    bool operator==(Profile const&) const = default;
  };

  inline Profile profile(ChainData const& c, std::vector<std::int64_t> const& primes) {
    std::size_t const d = c.dims.size() - 1;
    auto rank_of = [&](std::size_t k, std::int64_t p) -> std::size_t {
      if (k == 0 || k > d) {
        return 0;
      }
      return static_cast<std::size_t>(mod_rank(c.boundary[k], p));
    };
    Profile out;
    for (std::size_t q = 0; q < d; ++q) {
      out.betti.push_back(c.dims[q] - rank_of(q, kLargePrime) - rank_of(q + 1, kLargePrime));
    }
    for (auto p : primes) {
      for (std::size_t q = 0; q < d; ++q) {
        out.p_torsion[p].push_back(rank_of(q + 1, kLargePrime) - rank_of(q + 1, p));
      }
    }
    return out;
  }

  inline Profile profile(gpdkit::HomologyProfile const& h, std::vector<std::int64_t> const& primes) {
    Profile out;
    for (auto const& g : h.groups) {
      out.betti.push_back(g.rank);
    }
    for (auto p : primes) {
      for (auto const& g : h.groups) {
        std::size_t n = 0;
        for (auto t : g.torsion) {
          n += (t % p == 0) ? 1 : 0;
        }
        out.p_torsion[p].push_back(n);
      }
    }
    return out;
  }

}  // namespace oracle

#include "gpdkit/coset_enumeration.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace gpdkit {

  namespace {
    Letter invert(Letter l) {
      return {l.generator, !l.inverse};
    }
    bool cancels(Letter a, Letter b) {
      return a.generator == b.generator && a.inverse != b.inverse;
    }
    void free_reduce(Word& w) {
      Word out;
      out.reserve(w.size());
      for (auto l : w) {
        if (!out.empty() && cancels(out.back(), l)) {
          out.pop_back();
        } else {
          out.push_back(l);
        }
      }
      w = std::move(out);
    }
  }  // namespace

  Word inverse_word(Word const& w) {
    Word out;
    out.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
      out.push_back(invert(*it));
    }
    return out;
  }

  Word reduce_relator(Word w) {
    free_reduce(w);
    std::size_t lo = 0, hi = w.size();
    while (hi - lo >= 2 && cancels(w[lo], w[hi - 1])) {
      ++lo;
      --hi;
    }
    return Word(w.begin() + lo, w.begin() + hi);
  }

  TietzeResult eliminate_generators(GroupPresentation const& p) {
    std::size_t const              n = p.generators;
    std::vector<Word>              rels;
    std::set<Word>                 seen;
    for (auto const& r : p.relators) {
      auto w = reduce_relator(r);
      if (!w.empty() && seen.insert(w).second) {
        rels.push_back(std::move(w));
      }
    }
    std::vector<bool>             alive(rels.size(), true);
    std::vector<std::vector<int>> occ(n);
    for (std::size_t r = 0; r < rels.size(); ++r) {
      for (auto l : rels[r]) {
        occ[l.generator].push_back(static_cast<int>(r));
      }
    }
    std::vector<bool> eliminated(n, false);
    TietzeResult      out;
    out.substitution.assign(n, {});

    bool progress = true;
    while (progress) {
      progress = false;
      for (std::size_t r = 0; r < rels.size(); ++r) {
        if (!alive[r] || rels[r].size() > 3) {
          continue;
        }
        auto const& w = rels[r];
        // a generator with a single occurrence in w
        int pos = -1;
        for (std::size_t i = 0; i < w.size() && pos < 0; ++i) {
          auto const cnt = std::count_if(w.begin(), w.end(), [&](Letter l) {
            return l.generator == w[i].generator;
          });
          if (cnt == 1) {
            pos = static_cast<int>(i);
          }
        }
        if (pos < 0) {
          continue;
        }
        // rotate so the letter is first: x^e * rest = 1
        Word rot(w.begin() + pos, w.end());
        rot.insert(rot.end(), w.begin(), w.begin() + pos);
        Letter const x    = rot.front();
        Word const   rest(rot.begin() + 1, rot.end());
        // x^e = rest^-1, so x = rest^-1 (e = +1) or x = rest (e = -1)
        Word const value = x.inverse ? rest : inverse_word(rest);
        Word const value_inv = inverse_word(value);
        int const  g         = x.generator;

        alive[r]            = false;
        eliminated[g]       = true;
        out.substitution[g] = value;
        for (int s : occ[g]) {
          if (!alive[s]) {
            continue;
          }
          Word next;
          for (auto l : rels[s]) {
            if (l.generator == g) {
              auto const& rep = l.inverse ? value_inv : value;
              next.insert(next.end(), rep.begin(), rep.end());
            } else {
              next.push_back(l);
            }
          }
          next = reduce_relator(std::move(next));
          if (next.empty()) {
            alive[s] = false;
            continue;
          }
          for (auto l : next) {
            if (l.generator != g) {
              occ[l.generator].push_back(s);
            }
          }
          rels[s] = std::move(next);
        }
        occ[g].clear();
        progress = true;
      }
    }

    out.survivor.assign(n, -1);
    std::size_t k = 0;
    for (std::size_t g = 0; g < n; ++g) {
      if (!eliminated[g]) {
        out.survivor[g] = static_cast<int>(k++);
      }
    }
    out.reduced.generators = k;
    seen.clear();
    for (std::size_t r = 0; r < rels.size(); ++r) {
      if (!alive[r]) {
        continue;
      }
      Word w = rels[r];
      for (auto& l : w) {
        l.generator = out.survivor[l.generator];
      }
      if (seen.insert(w).second) {
        out.reduced.relators.push_back(std::move(w));
      }
    }
    return out;
  }

  namespace {

    class Hlt {
     public:
      Hlt(std::size_t columns, std::size_t max_cosets)
          : _cols(columns), _max(max_cosets) {}

      bool overflow() const noexcept {
        return _overflow;
      }

      int new_coset() {
        if (_parent.size() >= _max) {
          _overflow = true;
          return -1;
        }
        _parent.push_back(static_cast<int>(_parent.size()));
        _table.resize(_table.size() + _cols, -1);
        return _parent.back();
      }

      std::size_t allocated() const noexcept {
        return _parent.size();
      }

      bool live(int c) const {
        return _parent[c] == c;
      }

      int& at(int c, std::size_t x) {
        return _table[static_cast<std::size_t>(c) * _cols + x];
      }

      int define(int c, std::size_t x) {
        int const d = new_coset();
        if (d < 0) {
          return -1;
        }
        at(c, x)     = d;
        at(d, x ^ 1) = c;
        return d;
      }

      int rep(int c) {
        int r = c;
        while (_parent[r] != r) {
          r = _parent[r];
        }
        while (_parent[c] != r) {
          int const next = _parent[c];
          _parent[c]     = r;
          c              = next;
        }
        return r;
      }

      void merge(int k, int l) {
        k = rep(k);
        l = rep(l);
        if (k == l) {
          return;
        }
        if (k > l) {
          std::swap(k, l);
        }
        _parent[l] = k;
        _queue.push_back(l);
      }

      void coincidence(int a, int b) {
        _queue.clear();
        merge(a, b);
        for (std::size_t i = 0; i < _queue.size(); ++i) {
          int const g = _queue[i];
          for (std::size_t x = 0; x < _cols; ++x) {
            int const d = at(g, x);
            if (d < 0) {
              continue;
            }
            at(d, x ^ 1) = -1;
            int const mu = rep(g);
            int const nu = rep(d);
            if (at(mu, x) >= 0) {
              merge(nu, at(mu, x));
            } else if (at(nu, x ^ 1) >= 0) {
              merge(mu, at(nu, x ^ 1));
            } else {
              at(mu, x)     = nu;
              at(nu, x ^ 1) = mu;
            }
          }
        }
      }

      void scan_and_fill(int c, std::vector<std::size_t> const& w) {
        int         f = c, b = c;
        std::size_t i = 0;
        std::size_t j = w.size();  // exclusive end
        while (true) {
          while (i < j && at(f, w[i]) >= 0) {
            f = at(f, w[i]);
            ++i;
          }
          if (i >= j) {
            if (f != b) {
              coincidence(f, b);
            }
            return;
          }
          while (j > i && at(b, w[j - 1] ^ 1) >= 0) {
            b = at(b, w[j - 1] ^ 1);
            --j;
          }
          if (j <= i) {
            coincidence(f, b);
            return;
          }
          if (j == i + 1) {
            at(f, w[i])     = b;
            at(b, w[i] ^ 1) = f;
            return;
          }
          if (define(f, w[i]) < 0) {
            return;
          }
        }
      }

     private:
      std::size_t      _cols;
      std::size_t      _max;
      bool             _overflow = false;
      std::vector<int> _table;
      std::vector<int> _parent;
      std::vector<int> _queue;
    };

  }  // namespace

  std::optional<CosetTable> enumerate_cosets(GroupPresentation const& p,
                                             std::size_t max_cosets) {
    std::size_t const cols = 2 * p.generators;
    std::vector<std::vector<std::size_t>> rels;
    for (auto const& r : p.relators) {
      std::vector<std::size_t> w;
      for (auto l : r) {
        w.push_back(2 * static_cast<std::size_t>(l.generator)
                    + (l.inverse ? 1 : 0));
      }
      if (!w.empty()) {
        rels.push_back(std::move(w));
      }
    }
    Hlt hlt(cols, std::max<std::size_t>(max_cosets, 1));
    hlt.new_coset();
    for (int c = 0; static_cast<std::size_t>(c) < hlt.allocated(); ++c) {
      for (auto const& w : rels) {
        if (!hlt.live(c)) {
          break;
        }
        hlt.scan_and_fill(c, w);
        if (hlt.overflow()) {
          return std::nullopt;
        }
      }
      for (std::size_t x = 0; x < cols && hlt.live(c); ++x) {
        if (hlt.at(c, x) < 0 && hlt.define(c, x) < 0) {
          return std::nullopt;
        }
      }
    }

    // Standardize: breadth-first from coset 0, columns in order.
    CosetTable out;
    out.columns = cols;
    std::vector<int> number(hlt.allocated(), -1);
    std::vector<int> order{0};
    number[0] = 0;
    out.word.push_back({});
    for (std::size_t k = 0; k < order.size(); ++k) {
      int const c = order[k];
      for (std::size_t x = 0; x < cols; ++x) {
        if (hlt.at(c, x) < 0) {
          throw std::logic_error("coset table incomplete after enumeration");
        }
        int const d = hlt.rep(hlt.at(c, x));
        if (number[d] < 0) {
          number[d] = static_cast<int>(order.size());
          order.push_back(d);
          Word w = out.word[k];
          w.push_back(Letter{static_cast<int>(x / 2), (x % 2) == 1});
          out.word.push_back(std::move(w));
        }
      }
    }
    out.table.resize(order.size() * cols);
    for (std::size_t k = 0; k < order.size(); ++k) {
      for (std::size_t x = 0; x < cols; ++x) {
        out.table[k * cols + x] = number[hlt.rep(hlt.at(order[k], x))];
      }
    }
    return out;
  }

}  // namespace gpdkit

#pragma once

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

#include "gpdkit/star_algebra.hpp"

namespace gpdkit::detail {

  using SparseRow = std::vector<std::pair<int, Rational>>;  // sorted by column

  inline SparseRow sparse(ExactVector const& v) {
    SparseRow r;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (v[i] != 0) {
        r.emplace_back(static_cast<int>(i), v[i]);
      }
    }
    return r;
  }

  // Incremental reduced row echelon form over the rationals.
  class RowReducer {
   public:
    explicit RowReducer(std::size_t columns) : _columns(columns) {}

    std::size_t rank() const noexcept {
      return _pivot_row.size();
    }

    // Returns whether the row was independent of the rows added so far.
    bool add(SparseRow row) {
      reduce(row);
      if (row.empty()) {
        return false;
      }
      int const      pc  = row.front().first;
      Rational const inv = 1 / row.front().second;
      for (auto& [c, v] : row) {
        v *= inv;
      }
      // clear the new pivot column from earlier rows
      for (auto& r : _rows) {
        auto it = std::lower_bound(r.begin(), r.end(), pc,
                                   [](auto const& e, int c) { return e.first < c; });
        if (it != r.end() && it->first == pc) {
          r = axpy(r, -Rational(it->second), row);
        }
      }
      _pivot_row[pc] = _rows.size();
      _rows.push_back(std::move(row));
      return true;
    }

    // Basis of the null space of the rows added so far.
    std::vector<ExactVector> kernel() const {
      std::vector<ExactVector> out;
      for (std::size_t f = 0; f < _columns; ++f) {
        if (_pivot_row.count(static_cast<int>(f)) != 0) {
          continue;
        }
        ExactVector v(_columns);
        v[f] = 1;
        for (auto const& [pc, ri] : _pivot_row) {
          for (auto const& [c, x] : _rows[ri]) {
            if (c == static_cast<int>(f)) {
              v[pc] = -x;
            }
          }
        }
        out.push_back(std::move(v));
      }
      return out;
    }

   private:
    static SparseRow axpy(SparseRow const& a, Rational const& s, SparseRow const& b) {
      SparseRow out;
      out.reserve(a.size() + b.size());
      std::size_t i = 0, j = 0;
      while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
          out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
          out.emplace_back(b[j].first, s * b[j].second);
          ++j;
        } else {
          Rational v = a[i].second + s * b[j].second;
          if (v != 0) {
            out.emplace_back(a[i].first, std::move(v));
          }
          ++i;
          ++j;
        }
      }
      return out;
    }

    void reduce(SparseRow& row) const {
      // pivot rows are fully reduced, so one pass over pivot columns works
      std::vector<std::pair<std::size_t, Rational>> hits;
      for (auto const& [c, v] : row) {
        if (auto it = _pivot_row.find(c); it != _pivot_row.end()) {
          hits.emplace_back(it->second, v);
        }
      }
      for (auto const& [ri, v] : hits) {
        row = axpy(row, -v, _rows[ri]);
      }
    }

    std::size_t                  _columns;
    std::vector<SparseRow>       _rows;
    std::map<int, std::size_t>   _pivot_row;
  };

}  // namespace gpdkit::detail

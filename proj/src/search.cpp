#include "gpdkit/search.hpp"

#include <numeric>

#include "gpdkit/builders.hpp"

namespace gpdkit {

  namespace {

    class Assigner {
     public:
      Assigner(ConcreteGroupoid const& a,
               ConcreteGroupoid const& b,
               std::vector<int> const& objects,
               bool                    injective)
          : _a(a),
            _b(b),
            _obj(objects),
            _injective(injective),
            _map(a.num_morphisms(), kNone),
            _used(injective ? b.num_morphisms() : 0, false),
            _out(a.num_objects()),
            _in(a.num_objects()) {
        for (std::size_t f = 0; f < a.num_morphisms(); ++f) {
          _out[a.src(f)].push_back(static_cast<int>(f));
          _in[a.dst(f)].push_back(static_cast<int>(f));
        }
      }

      // Assigns f -> t and everything it forces. On conflict, undoes the
      // partial work and returns false.
      bool assign(int f, int t) {
        std::size_t const mark = _trail.size();
        _queue.clear();
        if (!set(f, t)) {
          undo(mark);
          return false;
        }
        for (std::size_t q = 0; q < _queue.size(); ++q) {
          int const x = _queue[q];
          int const y = _map[x];
          if (!set(_a.inverse(x), _b.inverse(y))) {
            undo(mark);
            return false;
          }
          // g o x for g out of dst(x)
          for (int g : _out[_a.dst(x)]) {
            if (_map[g] != kNone
                && !set(_a.compose(g, x), _b.compose(_map[g], y))) {
              undo(mark);
              return false;
            }
          }
          // x o g for g into src(x)
          for (int g : _in[_a.src(x)]) {
            if (_map[g] != kNone
                && !set(_a.compose(x, g), _b.compose(y, _map[g]))) {
              undo(mark);
              return false;
            }
          }
        }
        return true;
      }

      std::size_t mark() const noexcept {
        return _trail.size();
      }

      void undo(std::size_t mark) {
        while (_trail.size() > mark) {
          int const f = _trail.back();
          _trail.pop_back();
          if (_injective) {
            _used[_map[f]] = false;
          }
          _map[f] = kNone;
        }
      }

      std::vector<int> const& map() const noexcept {
        return _map;
      }

     private:
      bool set(int f, int t) {
        if (t == kNone) {
          return false;
        }
        if (_map[f] != kNone) {
          return _map[f] == t;
        }
        if (_b.src(t) != _obj[_a.src(f)] || _b.dst(t) != _obj[_a.dst(f)]) {
          return false;
        }
        if (_injective) {
          if (_used[t]) {
            return false;
          }
          _used[t] = true;
        }
        _map[f] = t;
        _trail.push_back(f);
        _queue.push_back(f);
        return true;
      }

      ConcreteGroupoid const&       _a;
      ConcreteGroupoid const&       _b;
      std::vector<int> const&       _obj;
      bool                          _injective;
      std::vector<int>              _map;
      std::vector<bool>             _used;
      std::vector<std::vector<int>> _out, _in;
      std::vector<int>              _trail;
      std::vector<int>              _queue;
    };

    // Returns false if the visitor asked to stop.
    bool search_morphisms(Assigner&                   s,
                          ConcreteGroupoid const&     a,
                          ConcreteGroupoid const&     b,
                          std::vector<int> const&     objects,
                          std::size_t                 start,
                          GroupoidPtr const&          pa,
                          GroupoidPtr const&          pb,
                          std::function<bool(GroupoidFunctor const&)> const& visit) {
      std::size_t f = start;
      while (f < a.num_morphisms() && s.map()[f] != kNone) {
        ++f;
      }
      if (f == a.num_morphisms()) {
        return visit(GroupoidFunctor{pa, pb, objects, s.map()});
      }
      for (int t : b.hom(objects[a.src(f)], objects[a.dst(f)])) {
        std::size_t const mark = s.mark();
        if (s.assign(static_cast<int>(f), t)) {
          if (!search_morphisms(s, a, b, objects, f + 1, pa, pb, visit)) {
            return false;
          }
          s.undo(mark);
        }
      }
      return true;
    }

  }  // namespace

  void for_each_functor(GroupoidPtr const&          pa,
                        GroupoidPtr const&          pb,
                        FunctorSearchOptions const& options,
                        std::function<bool(GroupoidFunctor const&)> const& visit) {
    auto const&       a          = *pa;
    auto const&       b          = *pb;
    std::size_t const na         = a.num_objects();
    std::size_t const nb         = b.num_objects();
    bool const        injective  = options.injective_on_objects || options.bijective;
    if (options.bijective
        && (na != nb || a.num_morphisms() != b.num_morphisms())) {
      return;
    }
    if (injective && na > nb) {
      return;
    }
    if (na > 0 && nb == 0) {
      return;
    }
    std::vector<int> objects(na, 0);
    while (true) {
      bool ok = true;
      if (injective) {
        std::vector<bool> hit(nb, false);
        for (int y : objects) {
          if (hit[y]) {
            ok = false;
            break;
          }
          hit[y] = true;
        }
      }
      if (ok) {
        Assigner s(a, b, objects, options.bijective);
        for (std::size_t x = 0; x < na && ok; ++x) {
          ok = s.assign(a.identity(static_cast<int>(x)), b.identity(objects[x]));
        }
        if (ok && !search_morphisms(s, a, b, objects, 0, pa, pb, visit)) {
          return;
        }
      }
      // next object map in lexicographic order
      std::size_t i = na;
      while (i > 0) {
        --i;
        if (++objects[i] < static_cast<int>(nb)) {
          break;
        }
        objects[i] = 0;
        if (i == 0) {
          return;
        }
      }
      if (na == 0) {
        return;
      }
    }
  }

  std::vector<GroupoidFunctor> enumerate_functors(
      GroupoidPtr const&          a,
      GroupoidPtr const&          b,
      FunctorSearchOptions const& options) {
    std::vector<GroupoidFunctor> out;
    for_each_functor(a, b, options, [&](GroupoidFunctor const& F) {
      out.push_back(F);
      return true;
    });
    return out;
  }

  std::optional<GroupoidFunctor> find_isomorphism(GroupoidPtr const& a,
                                                  GroupoidPtr const& b) {
    std::optional<GroupoidFunctor> found;
    for_each_functor(a, b, {.bijective = true}, [&](GroupoidFunctor const& F) {
      found = F;
      return false;
    });
    return found;
  }

  std::optional<std::vector<std::size_t>> find_group_isomorphism(
      std::vector<std::size_t> const& table_a,
      std::vector<std::size_t> const& table_b,
      std::size_t                     order) {
    auto to_groupoid = [order](std::vector<std::size_t> const& table) {
      std::vector<Morphism> mors;
      std::vector<int>      t(order * order), invs(order, kNone);
      for (std::size_t i = 0; i < order; ++i) {
        mors.push_back({std::to_string(i), 0, 0});
        for (std::size_t j = 0; j < order; ++j) {
          t[i * order + j] = static_cast<int>(table[i * order + j]);
          if (table[i * order + j] == 0) {
            invs[i] = static_cast<int>(j);
          }
        }
      }
      return share(ConcreteGroupoid({"*"}, mors, t, {0}, invs));
    };
    auto iso = find_isomorphism(to_groupoid(table_a), to_groupoid(table_b));
    if (!iso) {
      return std::nullopt;
    }
    return std::vector<std::size_t>(iso->on_morphisms.begin(),
                                    iso->on_morphisms.end());
  }

}  // namespace gpdkit

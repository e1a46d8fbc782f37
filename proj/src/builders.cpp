#include "gpdkit/builders.hpp"

#include <numeric>

#include "gpdkit/errors.hpp"

namespace gpdkit {

  namespace {
    ConcreteGroupoid product_named(
        ConcreteGroupoid const&                                       a,
        ConcreteGroupoid const&                                       b,
        std::function<std::string(std::string const&, std::string const&)>
            object_name,
        std::function<std::string(std::string const&, std::string const&)>
            morphism_name) {
      std::size_t const        na = a.num_objects(), nb = b.num_objects();
      std::size_t const        ma = a.num_morphisms(), mb = b.num_morphisms();
      std::vector<std::string> objects;
      for (std::size_t x = 0; x < na; ++x) {
        for (std::size_t y = 0; y < nb; ++y) {
          objects.push_back(object_name(a.object(x), b.object(y)));
        }
      }
      std::vector<Morphism> mors;
      for (std::size_t f = 0; f < ma; ++f) {
        for (std::size_t g = 0; g < mb; ++g) {
          mors.push_back(
              {morphism_name(a.morphism(f).id, b.morphism(g).id),
               static_cast<int>(a.src(f) * nb + b.src(g)),
               static_cast<int>(a.dst(f) * nb + b.dst(g))});
        }
      }
      std::size_t const m = ma * mb;
      std::vector<int>  table(m * m, kNone);
      for (std::size_t p = 0; p < m; ++p) {
        for (std::size_t q = 0; q < m; ++q) {
          int const f = a.compose(p / mb, q / mb);
          int const g = b.compose(p % mb, q % mb);
          if (f != kNone && g != kNone) {
            table[p * m + q] = static_cast<int>(f * mb + g);
          }
        }
      }
      std::vector<int> ids, invs;
      for (std::size_t x = 0; x < na; ++x) {
        for (std::size_t y = 0; y < nb; ++y) {
          ids.push_back(static_cast<int>(a.identity(x) * mb + b.identity(y)));
        }
      }
      for (std::size_t p = 0; p < m; ++p) {
        invs.push_back(
            static_cast<int>(a.inverse(p / mb) * mb + b.inverse(p % mb)));
      }
      return ConcreteGroupoid(objects, mors, table, ids, invs);
    }
  }  // namespace

  ConcreteGroupoid discrete(std::size_t n) {
    std::vector<std::string> objects;
    std::vector<Morphism>    mors;
    std::vector<int>         table(n * n, kNone), ids(n);
    for (std::size_t i = 0; i < n; ++i) {
      objects.push_back("x" + std::to_string(i));
      mors.push_back({"id_x" + std::to_string(i),
                      static_cast<int>(i),
                      static_cast<int>(i)});
      table[i * n + i] = static_cast<int>(i);
      ids[i]           = static_cast<int>(i);
    }
    return ConcreteGroupoid(objects, mors, table, ids, ids);
  }

  ConcreteGroupoid codiscrete(std::vector<std::string> const& names) {
    std::size_t const     n = names.size();
    std::vector<Morphism> mors;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        mors.push_back({names[i] + "->" + names[j],
                        static_cast<int>(i),
                        static_cast<int>(j)});
      }
    }
    // morphism i->j has index i*n + j
    std::size_t const m = n * n;
    std::vector<int>  table(m * m, kNone), ids(n), invs(m);
    for (std::size_t i = 0; i < n; ++i) {
      ids[i] = static_cast<int>(i * n + i);
      for (std::size_t j = 0; j < n; ++j) {
        invs[i * n + j] = static_cast<int>(j * n + i);
        for (std::size_t k = 0; k < n; ++k) {
          // (j->k) o (i->j) = i->k
          table[(j * n + k) * m + (i * n + j)] = static_cast<int>(i * n + k);
        }
      }
    }
    return ConcreteGroupoid(names, mors, table, ids, invs);
  }

  ConcreteGroupoid codiscrete(std::size_t n) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) {
      names.push_back("x" + std::to_string(i));
    }
    return codiscrete(names);
  }

  ConcreteGroupoid interval() {
    return codiscrete(std::vector<std::string>{"0", "1"});
  }

  ConcreteGroupoid classifying(FiniteGroup const& g) {
    std::size_t const     n = g.order();
    std::vector<Morphism> mors;
    for (auto const& e : g.elements()) {
      mors.push_back({e, 0, 0});
    }
    std::vector<int> table(n * n), invs(n);
    for (std::size_t a = 0; a < n; ++a) {
      invs[a] = static_cast<int>(g.inverse(a));
      for (std::size_t b = 0; b < n; ++b) {
        table[a * n + b] = static_cast<int>(g.mul(a, b));
      }
    }
    return ConcreteGroupoid({"*"}, mors, table, {0}, invs);
  }

  ConcreteGroupoid disjoint_union(ConcreteGroupoid const& a,
                                  ConcreteGroupoid const& b) {
    std::vector<std::string> objects;
    for (auto const& x : a.objects()) {
      objects.push_back("0." + x);
    }
    for (auto const& x : b.objects()) {
      objects.push_back("1." + x);
    }
    int const             na = static_cast<int>(a.num_objects());
    int const             ma = static_cast<int>(a.num_morphisms());
    std::vector<Morphism> mors;
    for (auto const& f : a.morphisms()) {
      mors.push_back({"0." + f.id, f.src, f.dst});
    }
    for (auto const& f : b.morphisms()) {
      mors.push_back({"1." + f.id, f.src + na, f.dst + na});
    }
    std::size_t const m = mors.size();
    std::vector<int>  table(m * m, kNone), ids, invs;
    for (int g = 0; g < ma; ++g) {
      for (int f = 0; f < ma; ++f) {
        table[g * m + f] = a.compose(g, f);
      }
    }
    for (std::size_t g = 0; g < b.num_morphisms(); ++g) {
      for (std::size_t f = 0; f < b.num_morphisms(); ++f) {
        int const gf = b.compose(g, f);
        if (gf != kNone) {
          table[(g + ma) * m + (f + ma)] = gf + ma;
        }
      }
    }
    for (std::size_t x = 0; x < a.num_objects(); ++x) {
      ids.push_back(a.identity(x));
    }
    for (std::size_t x = 0; x < b.num_objects(); ++x) {
      ids.push_back(b.identity(x) + ma);
    }
    for (std::size_t f = 0; f < a.num_morphisms(); ++f) {
      invs.push_back(a.inverse(f));
    }
    for (std::size_t f = 0; f < b.num_morphisms(); ++f) {
      invs.push_back(b.inverse(f) + ma);
    }
    return ConcreteGroupoid(objects, mors, table, ids, invs);
  }

  ConcreteGroupoid product(ConcreteGroupoid const& a,
                           ConcreteGroupoid const& b) {
    return product_named(
        a,
        b,
        [](auto const& x, auto const& y) { return "(" + x + "," + y + ")"; },
        [](auto const& f, auto const& g) { return "(" + f + "," + g + ")"; });
  }

  ConcreteGroupoid product_with_group(ConcreteGroupoid const& a,
                                      FiniteGroup const&      g) {
    return product_named(
        a,
        classifying(g),
        [](auto const& x, auto const&) { return x; },
        [](auto const& f, auto const& h) { return "(" + f + "," + h + ")"; });
  }

  GroupoidFunctor coproduct_inclusion(GroupoidPtr a,
                                      GroupoidPtr b,
                                      GroupoidPtr sum,
                                      int         side) {
    GroupoidPtr const& part = side == 0 ? a : b;
    int const          obj_shift = side == 0 ? 0 : static_cast<int>(a->num_objects());
    int const mor_shift = side == 0 ? 0 : static_cast<int>(a->num_morphisms());
    GroupoidFunctor F{part, std::move(sum), {}, {}};
    for (std::size_t x = 0; x < part->num_objects(); ++x) {
      F.on_objects.push_back(static_cast<int>(x) + obj_shift);
    }
    for (std::size_t f = 0; f < part->num_morphisms(); ++f) {
      F.on_morphisms.push_back(static_cast<int>(f) + mor_shift);
    }
    return F;
  }

  GroupoidFunctor copair(GroupoidPtr            sum,
                         GroupoidFunctor const& F,
                         GroupoidFunctor const& G) {
    GroupoidFunctor H{std::move(sum), F.target, F.on_objects, F.on_morphisms};
    H.on_objects.insert(
        H.on_objects.end(), G.on_objects.begin(), G.on_objects.end());
    H.on_morphisms.insert(
        H.on_morphisms.end(), G.on_morphisms.begin(), G.on_morphisms.end());
    return H;
  }

  GroupoidFunctor coproduct_map(GroupoidPtr            sum_source,
                                GroupoidPtr            sum_target,
                                GroupoidFunctor const& F,
                                GroupoidFunctor const& G) {
    int const obj_shift = static_cast<int>(F.target->num_objects());
    int const mor_shift = static_cast<int>(F.target->num_morphisms());
    GroupoidFunctor H{
        std::move(sum_source), std::move(sum_target), F.on_objects, F.on_morphisms};
    for (int y : G.on_objects) {
      H.on_objects.push_back(y + obj_shift);
    }
    for (int g : G.on_morphisms) {
      H.on_morphisms.push_back(g + mor_shift);
    }
    return H;
  }

  GroupoidFunctor to_terminal(GroupoidPtr g, GroupoidPtr terminal) {
    if (terminal->num_objects() != 1 || terminal->num_morphisms() != 1) {
      throw PreconditionError("to_terminal: target is not B1");
    }
    GroupoidFunctor F{g, terminal, {}, {}};
    F.on_objects.assign(g->num_objects(), 0);
    F.on_morphisms.assign(g->num_morphisms(), 0);
    return F;
  }

  FiniteGroup group_by_name(std::string const& name) {
    if (name == "1") {
      return FiniteGroup::trivial();
    }
    if (name.size() > 1 && name[0] == 'Z'
        && name.find_first_not_of("0123456789", 1) == std::string::npos) {
      return FiniteGroup::cyclic(std::stoul(name.substr(1)));
    }
    if (name.size() > 1 && name[0] == 'S'
        && name.find_first_not_of("0123456789", 1) == std::string::npos) {
      return FiniteGroup::symmetric(std::stoul(name.substr(1)));
    }
    if (name.size() > 1 && name[0] == 'A'
        && name.find_first_not_of("0123456789", 1) == std::string::npos) {
      return FiniteGroup::alternating(std::stoul(name.substr(1)));
    }
    if (name.size() > 1 && name[0] == 'D'
        && name.find_first_not_of("0123456789", 1) == std::string::npos) {
      return FiniteGroup::dihedral(std::stoul(name.substr(1)));
    }
    if (name == "Q8") {
      return FiniteGroup::dicyclic(2);
    }
    if (name.rfind("Dic", 0) == 0) {
      return FiniteGroup::dicyclic(std::stoul(name.substr(3)));
    }
    throw PreconditionError("unknown group '" + name + "'");
  }

  ConcreteGroupoid fixture(std::string const& name) {
    if (auto plus = name.find('+'); plus != std::string::npos) {
      return disjoint_union(fixture(name.substr(0, plus)),
                            fixture(name.substr(plus + 1)));
    }
    if (name == "B1") {
      return classifying(FiniteGroup::trivial());
    }
    auto number_after = [&](std::string const& prefix) -> std::size_t {
      auto const tail = name.substr(prefix.size());
      if (tail.empty()
          || tail.find_first_not_of("0123456789") != std::string::npos) {
        throw PreconditionError("unknown fixture '" + name + "'");
      }
      return std::stoul(tail);
    };
    if (name.rfind("discrete-", 0) == 0) {
      return discrete(number_after("discrete-"));
    }
    if (name.rfind("codiscrete-", 0) == 0) {
      return codiscrete(number_after("codiscrete-"));
    }
    if (auto x = name.find("xcodiscrete-"); x != std::string::npos) {
      auto const n = name.substr(x + 1);
      return product_with_group(fixture(n), group_by_name(name.substr(0, x)));
    }
    if (name.size() > 1 && name[0] == 'B') {
      return classifying(group_by_name(name.substr(1)));
    }
    throw PreconditionError("unknown fixture '" + name + "'");
  }

}  // namespace gpdkit

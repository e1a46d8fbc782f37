#include "gpdkit/json_io.hpp"

#include <cmath>
#include <map>

#include "gpdkit/builders.hpp"
#include "gpdkit/errors.hpp"

namespace gpdkit {

  namespace {

    Json const& field(Json const& j, char const* key) {
      if (!j.is_object() || !j.contains(key)) {
        throw StructuralError(std::string("missing field '") + key + "'");
      }
      return j.at(key);
    }

    std::string text(Json const& j, char const* what) {
      if (!j.is_string()) {
        throw StructuralError(std::string(what) + " must be a string");
      }
      return j.get<std::string>();
    }

    std::map<std::string, std::string> string_map(Json const& j, char const* what) {
      std::map<std::string, std::string> out;
      if (j.is_null()) {
        return out;
      }
      if (!j.is_object()) {
        throw StructuralError(std::string(what) + " must be an object");
      }
      for (auto const& [k, v] : j.items()) {
        out[k] = text(v, what);
      }
      return out;
    }

    GroupoidPtr groupoid_or_fixture(Json const& j) {
      if (j.is_string()) {
        try {
          return share(fixture(j.get<std::string>()));
        } catch (PreconditionError const& e) {
          throw StructuralError(e.what());
        }
      }
      return share(groupoid_from_json(j));
    }

    Json word_json(PresentedGroupoid const& p, Word const& w) {
      Json out = Json::array();
      for (auto const& l : w) {
        out.push_back(p.generators[l.generator].id + (l.inverse ? "^-1" : ""));
      }
      return out;
    }

    Word word_from_json(std::map<std::string, int> const& gens, Json const& j) {
      if (!j.is_array()) {
        throw StructuralError("a word must be an array of generator ids");
      }
      Word w;
      for (auto const& e : j) {
        std::string id  = text(e, "word letter");
        bool        inv = false;
        if (id.size() > 3 && id.ends_with("^-1")) {
          id.resize(id.size() - 3);
          inv = true;
        }
        auto it = gens.find(id);
        if (it == gens.end()) {
          throw StructuralError("unknown generator '" + id + "'");
        }
        w.push_back({it->second, inv});
      }
      return w;
    }

    Json optional_functor(std::optional<GroupoidFunctor> const& f) {
      return f ? to_json(*f) : Json(nullptr);
    }

  }  // namespace

  Json to_json(ConcreteGroupoid const& g) {
    Json j;
    j["objects"]   = g.objects();
    Json morphisms = Json::array();
    for (auto const& m : g.morphisms()) {
      morphisms.push_back({{"id", m.id}, {"src", g.object(m.src)}, {"dst", g.object(m.dst)}});
    }
    j["morphisms"] = std::move(morphisms);
    Json compose   = Json::array();
    for (std::size_t a = 0; a < g.num_morphisms(); ++a) {
      for (std::size_t b = 0; b < g.num_morphisms(); ++b) {
        int const ab = g.compose(static_cast<int>(a), static_cast<int>(b));
        if (ab != kNone) {
          compose.push_back({g.morphism(static_cast<int>(a)).id,
                             g.morphism(static_cast<int>(b)).id, g.morphism(ab).id});
        }
      }
    }
    j["compose"]    = std::move(compose);
    Json identities = Json::object();
    for (std::size_t x = 0; x < g.num_objects(); ++x) {
      int const e = g.identity(static_cast<int>(x));
      if (e != kNone) {
        identities[g.object(static_cast<int>(x))] = g.morphism(e).id;
      }
    }
    j["identities"] = std::move(identities);
    Json inverses   = Json::object();
    for (std::size_t f = 0; f < g.num_morphisms(); ++f) {
      int const i = g.inverse(static_cast<int>(f));
      if (i != kNone) {
        inverses[g.morphism(static_cast<int>(f)).id] = g.morphism(i).id;
      }
    }
    j["inverses"] = std::move(inverses);
    return j;
  }

  ConcreteGroupoid groupoid_from_json(Json const& j) {
    std::vector<std::string> objects;
    for (auto const& o : field(j, "objects")) {
      objects.push_back(text(o, "object id"));
    }
    std::vector<ConcreteGroupoid::MorphismSpec> morphisms;
    for (auto const& m : field(j, "morphisms")) {
      morphisms.push_back({text(field(m, "id"), "morphism id"), text(field(m, "src"), "src"),
                           text(field(m, "dst"), "dst")});
    }
    std::vector<ConcreteGroupoid::ComposeEntry> compose;
    if (j.contains("compose")) {
      for (auto const& e : j.at("compose")) {
        if (!e.is_array() || e.size() != 3) {
          throw StructuralError("compose entries must be [g, f, gf]");
        }
        compose.push_back({text(e[0], "compose entry"), text(e[1], "compose entry"),
                           text(e[2], "compose entry")});
      }
    }
    return ConcreteGroupoid::from_tables(
      objects, morphisms, compose,
      string_map(j.contains("identities") ? j.at("identities") : Json(nullptr), "identities"),
      string_map(j.contains("inverses") ? j.at("inverses") : Json(nullptr), "inverses"));
  }

  Json to_json(GroupoidFunctor const& F) {
    Json j;
    j["source"]    = to_json(*F.source);
    j["target"]    = to_json(*F.target);
    Json on_objects = Json::object();
    for (std::size_t x = 0; x < F.on_objects.size(); ++x) {
      on_objects[F.source->object(static_cast<int>(x))] = F.target->object(F.on_objects[x]);
    }
    j["onObjects"]    = std::move(on_objects);
    Json on_morphisms = Json::object();
    for (std::size_t f = 0; f < F.on_morphisms.size(); ++f) {
      on_morphisms[F.source->morphism(static_cast<int>(f)).id] =
        F.target->morphism(F.on_morphisms[f]).id;
    }
    j["onMorphisms"] = std::move(on_morphisms);
    return j;
  }

  GroupoidFunctor functor_from_json(Json const& j) {
    GroupoidFunctor F;
    F.source      = groupoid_or_fixture(field(j, "source"));
    F.target      = groupoid_or_fixture(field(j, "target"));
    auto const ob = string_map(field(j, "onObjects"), "onObjects");
    auto const mo = string_map(field(j, "onMorphisms"), "onMorphisms");
    for (auto const& x : F.source->objects()) {
      auto it = ob.find(x);
      if (it == ob.end()) {
        throw StructuralError("no image for object '" + x + "'");
      }
      auto y = F.target->find_object(it->second);
      if (!y) {
        throw StructuralError("unknown target object '" + it->second + "'");
      }
      F.on_objects.push_back(*y);
    }
    for (auto const& m : F.source->morphisms()) {
      auto it = mo.find(m.id);
      if (it == mo.end()) {
        throw StructuralError("no image for morphism '" + m.id + "'");
      }
      auto y = F.target->find_morphism(it->second);
      if (!y) {
        throw StructuralError("unknown target morphism '" + it->second + "'");
      }
      F.on_morphisms.push_back(*y);
    }
    if (ob.size() != F.on_objects.size() || mo.size() != F.on_morphisms.size()) {
      throw StructuralError("functor maps name identifiers outside the source");
    }
    return F;
  }

  Json to_json(PresentedGroupoid const& p) {
    Json j;
    j["objects"]    = p.objects;
    Json generators = Json::array();
    for (auto const& g : p.generators) {
      generators.push_back({{"id", g.id}, {"src", p.objects[g.src]}, {"dst", p.objects[g.dst]}});
    }
    j["generators"] = std::move(generators);
    Json relations  = Json::array();
    for (auto const& r : p.relations) {
      Json rel = {word_json(p, r.lhs), word_json(p, r.rhs)};
      if (r.lhs.empty() && r.rhs.empty()) {
        rel.push_back(p.objects[r.src]);
      }
      relations.push_back(std::move(rel));
    }
    j["relations"] = std::move(relations);
    return j;
  }

  PresentedGroupoid presented_from_json(Json const& j) {
    PresentedGroupoid          p;
    std::map<std::string, int> objects;
    for (auto const& o : field(j, "objects")) {
      auto id = text(o, "object id");
      if (!objects.emplace(id, static_cast<int>(p.objects.size())).second) {
        throw StructuralError("duplicate object '" + id + "'");
      }
      p.objects.push_back(id);
    }
    auto object = [&](Json const& v) {
      auto id = text(v, "object id");
      auto it = objects.find(id);
      if (it == objects.end()) {
        throw StructuralError("unknown object '" + id + "'");
      }
      return it->second;
    };
    std::map<std::string, int> gens;
    for (auto const& g : field(j, "generators")) {
      auto id = text(field(g, "id"), "generator id");
      if (!gens.emplace(id, static_cast<int>(p.generators.size())).second) {
        throw StructuralError("duplicate generator '" + id + "'");
      }
      p.generators.push_back({id, object(field(g, "src")), object(field(g, "dst"))});
    }
    if (j.contains("relations")) {
      for (auto const& r : j.at("relations")) {
        if (!r.is_array() || r.size() < 2) {
          throw StructuralError("relations must be [word, word]");
        }
        Relation rel{word_from_json(gens, r[0]), word_from_json(gens, r[1]), 0, 0};
        Word const& probe = rel.lhs.empty() ? rel.rhs : rel.lhs;
        if (!probe.empty()) {
          auto ends = p.endpoints(probe);
          if (!ends) {
            throw StructuralError("relation word does not chain");
          }
          rel.src = ends->first;
          rel.dst = ends->second;
        } else if (r.size() == 3) {
          rel.src = rel.dst = object(r[2]);
        }
        p.relations.push_back(std::move(rel));
      }
    }
    if (auto problems = p.validate(); !problems.empty()) {
      throw StructuralError(problems.front());
    }
    return p;
  }

  bool is_functor_json(Json const& j) {
    return j.is_object() && j.contains("onObjects");
  }

  Json to_json(ValidationReport const& r) {
    Json j;
    j["valid"]      = r.ok();
    Json violations = Json::array();
    for (auto const& v : r.violations) {
      violations.push_back({{"axiom", v.axiom}, {"morphisms", v.morphisms}});
    }
    j["violations"] = std::move(violations);
    return j;
  }

  Json to_json(Factorization const& f) {
    Json j;
    j["middle"] = f.middle ? to_json(*f.middle->groupoid) : Json(nullptr);
    j["first"]  = optional_functor(f.first);
    j["second"] = optional_functor(f.second);
    j["checks"] = {{"first_cofibration", to_string(f.first_cofibration)},
                   {"second_equivalence", to_string(f.second_equivalence)},
                   {"composite", to_string(f.composite)}};
    if (!f.middle) {
      j["presented_middle"] = to_json(*f.pushout.presentation);
      j["warning"] = "middle did not concretize under the bound; checks left unverified";
    }
    return j;
  }

  Json to_json(BlockDecomposition const& d) {
    Json blocks = Json::array();
    for (auto const& b : d.blocks) {
      blocks.push_back({{"component", b.component},
                        {"size", b.size},
                        {"component_objects", b.component_objects},
                        {"irrep_degree", b.irrep_degree}});
    }
    return {{"blocks", std::move(blocks)},
            {"center_dimension", d.center_dimension},
            {"residual_below_tolerance", d.residual < std::sqrt(d.tol)},
            {"tol", d.tol},
            {"seed", d.seed}};
  }

  Json to_json(K0Map const& k) {
    // the defect is reported as a pass flag so reports stay byte-stable
    return {{"domain_rank", k.domain_rank},
            {"codomain_rank", k.codomain_rank},
            {"matrix", k.matrix},
            {"rounding_ok", k.max_rounding_defect < kRoundingDefectLimit}};
  }

  Json to_json(MoritaReport const& r) {
    Json witnesses = Json::array();
    for (auto const& w : r.full_corner_witnesses) {
      witnesses.push_back({{"object", w.object},
                           {"full", w.full},
                           {"corner_dimension", w.corner_dimension},
                           {"vertex_group_order", w.vertex_group_order},
                           {"corner_matches_vertex_group", w.corner_matches_vertex_group}});
    }
    return {{"cofibration", r.cofibration},
            {"equivalence", r.equivalence},
            {"acyclic_cofibration", r.acyclic_cofibration},
            {"k0", to_json(r.k0)},
            {"k0_iso", r.k0_iso},
            {"full_corner_witnesses", std::move(witnesses)}};
  }

  Json to_json(HomologyProfile const& p) {
    Json out = Json::array();
    for (std::size_t q = 0; q < p.groups.size(); ++q) {
      out.push_back({{"degree", q},
                     {"rank", p.groups[q].rank},
                     {"torsion", p.groups[q].torsion},
                     {"group", p.groups[q].to_string()}});
    }
    return out;
  }

}  // namespace gpdkit

#pragma once

#include <json.hpp>

#include "gpdkit/groupoid.hpp"
#include "gpdkit/model_structure.hpp"
#include "gpdkit/nerve.hpp"
#include "gpdkit/presentation.hpp"
#include "gpdkit/star_algebra.hpp"

namespace gpdkit {

  using Json = nlohmann::ordered_json;

  // Groupoid files:
  //   {"objects": [..], "morphisms": [{"id", "src", "dst"}],
  //    "compose": [[g, f, gf]], "identities": {x: id}, "inverses": {id: id}}
  // Reading throws StructuralError on shape errors and unknown identifiers;
  // missing table entries are left for validate() to report.
  Json             to_json(ConcreteGroupoid const& g);
  ConcreteGroupoid groupoid_from_json(Json const& j);

  // Functor files: {"source", "target", "onObjects", "onMorphisms"}. The
  // source and target are either groupoid objects or fixture names.
  Json            to_json(GroupoidFunctor const& F);
  GroupoidFunctor functor_from_json(Json const& j);

  // Presented groupoids: "objects", "generators" (as morphisms) and
  // "relations": [[word, word]], words being lists of generator ids,
  // rightmost applied first, with "id^-1" for an inverse letter.
  Json              to_json(PresentedGroupoid const& p);
  PresentedGroupoid presented_from_json(Json const& j);

  // Whether j looks like a functor file rather than a groupoid file.
  bool is_functor_json(Json const& j);

  // Reports.
  Json to_json(ValidationReport const& r);
  Json to_json(Factorization const& f);
  Json to_json(BlockDecomposition const& d);
  Json to_json(K0Map const& k);
  Json to_json(MoritaReport const& r);
  Json to_json(HomologyProfile const& p);

}  // namespace gpdkit

#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "gpdkit/builders.hpp"
#include "gpdkit/errors.hpp"
#include "gpdkit/model_structure.hpp"
#include "gpdkit/nerve.hpp"
#include "gpdkit/star_algebra.hpp"

namespace gpdkit::cli {

  namespace {

    // Thrown for anything that should exit with kInputError.
    struct InputError : std::runtime_error {
      using std::runtime_error::runtime_error;
    };

    Json read_json(std::string const& path) {
      std::ifstream in(path);
      if (!in) {
        throw InputError("cannot read '" + path + "'");
      }
      try {
        return Json::parse(in);
      } catch (Json::parse_error const& e) {
        throw InputError(path + ": " + e.what());
      }
    }

    std::string const& single_input(RunConfig const& config) {
      if (config.inputs.size() != 1) {
        throw InputError(config.command + " takes exactly one input");
      }
      return config.inputs.front();
    }

    // A functor file, or a structural problem in one, as an input error.
    GroupoidFunctor load_functor(RunConfig const& config) {
      auto const j = read_json(single_input(config));
      try {
        return functor_from_json(j);
      } catch (StructuralError const& e) {
        throw InputError(e.what());
      } catch (Json::exception const& e) {
        throw InputError(e.what());
      }
    }

    Outcome with_config(RunConfig const& config, Outcome o) {
      Json report;
      report["config"] = config.to_json();
      for (auto const& [k, v] : o.report.items()) {
        report[k] = v;
      }
      o.report = std::move(report);
      return o;
    }

    std::string verdict_text(bool ok) {
      return ok ? "pass" : "fail";
    }

    bool same_simplices(TruncatedSimplicialSet const& a, TruncatedSimplicialSet const& b) {
      return a.cutoff == b.cutoff && a.simplices == b.simplices;
    }

    Json level_counts(TruncatedSimplicialSet const& x) {
      Json out = Json::array();
      for (std::size_t k = 0; k <= x.cutoff; ++k) {
        out.push_back(x.count(k));
      }
      return out;
    }

    // H0 and H1 agreement of two profiles (whatever degrees are present).
    Json low_degree_comparison(HomologyProfile const& a, HomologyProfile const& b, bool& ok) {
      Json out;
      for (std::size_t q = 0; q < 2 && q < a.groups.size() && q < b.groups.size(); ++q) {
        bool const same = a.groups[q] == b.groups[q];
        ok              = ok && same;
        out["H" + std::to_string(q)] = verdict_text(same);
      }
      return out;
    }

  }  // namespace

  Json RunConfig::to_json() const {
    return {{"command", command}, {"inputs", inputs}, {"seed", seed},   {"tol", tol},
            {"bound", bound},     {"dim", dim},       {"budget", budget}, {"out", out}};
  }

  Outcome cmd_validate(RunConfig const& config) {
    auto const j = read_json(single_input(config));
    Outcome    o;
    try {
      if (is_functor_json(j)) {
        auto const F          = functor_from_json(j);
        o.report["kind"]      = "functor";
        auto const source     = F.source->validate();
        auto const target     = F.target->validate();
        auto const functor    = validate_functor(F);
        o.report["source"]    = to_json(source);
        o.report["target"]    = to_json(target);
        o.report["functor"]   = to_json(functor);
        o.code = source.ok() && target.ok() && functor.ok() ? kSuccess : kCheckFailed;
      } else {
        auto const g       = groupoid_from_json(j);
        auto const report  = g.validate();
        o.report["kind"]   = "groupoid";
        o.report["report"] = to_json(report);
        o.code             = report.ok() ? kSuccess : kCheckFailed;
      }
    } catch (StructuralError const& e) {
      throw InputError(e.what());
    } catch (Json::exception const& e) {
      throw InputError(e.what());
    }
    return with_config(config, std::move(o));
  }

  Outcome cmd_factor(RunConfig const& config) {
    auto const F = load_functor(config);
    if (!validate_functor(F).ok() || !F.source->validate().ok() || !F.target->validate().ok()) {
      Outcome o{kCheckFailed, {{"error", "input is not a valid functor between groupoids"}}};
      return with_config(config, std::move(o));
    }
    auto const f = mapping_cylinder_factorization(F, config.bound);
    Outcome    o;
    o.report["factorization"] = to_json(f);
    // unverified checks are reported, not failed
    bool const failed = f.first_cofibration == Verdict::fail
                        || f.second_equivalence == Verdict::fail
                        || f.composite == Verdict::fail;
    o.code = failed ? kCheckFailed : kSuccess;
    return with_config(config, std::move(o));
  }

  Outcome cmd_morita(RunConfig const& config) {
    auto const F = load_functor(config);
    Outcome    o;
    if (!validate_functor(F).ok()) {
      o.code            = kCheckFailed;
      o.report["error"] = "functoriality error: " + to_json(validate_functor(F)).dump();
      return with_config(config, std::move(o));
    }
    try {
      auto const r      = morita_check(F, config.tol, config.seed);
      o.report["morita"] = to_json(r);
      o.code            = r.k0_iso ? kSuccess : kCheckFailed;
    } catch (PreconditionError const& e) {
      o.code            = kCheckFailed;
      o.report["error"] = e.what();
    } catch (ResolutionFailure const& e) {
      o.code            = kCheckFailed;
      o.report["error"] = e.what();
    }
    return with_config(config, std::move(o));
  }

  Outcome cmd_nerve_suite(RunConfig const& config) {
    if (config.inputs.empty()) {
      throw InputError("nerve-suite needs at least one fixture name");
    }
    if (config.dim < 2 || config.dim > 3) {
      throw InputError("nerve-suite needs --dim 2 or 3");
    }
    auto names = config.inputs;
    std::sort(names.begin(), names.end());
    Outcome o;
    bool    ok = true;
    try {
      FiniteSampleCategory s = [&] {
        try {
          return enumerate_sample(names);
        } catch (PreconditionError const& e) {
          throw InputError(e.what());
        }
      }();
      o.report["sample"] = {{"fixtures", names},
                            {"arrows", s.arrows().size()},
                            {"scope", "instance-level"}};

      auto const w   = nerve(s, Marking::w, config.dim);
      auto const wc  = nerve(s, Marking::wc, config.dim);
      auto const hw  = homology(w);
      auto const hwc = homology(wc);
      o.report["nerves"] = {
        {"w", {{"counts", level_counts(w)}, {"homology", to_json(hw)}}},
        {"wc", {{"counts", level_counts(wc)}, {"homology", to_json(hwc)}}},
        {"comparison", low_degree_comparison(hwc, hw, ok)}};

      std::size_t const wd = std::min<std::size_t>(config.dim, 2);
      auto const        W  = double_nerve_W(s, wd, config.budget);
      auto const        D  = diagonal(W, s);
      bool const ids   = W.check_identities().ok();
      bool const row   = same_simplices(W.row(0), nerve(s, Marking::wg, wd));
      bool const col   = same_simplices(W.column(0), nerve(s, Marking::wc, wd));
      bool const retr  = D.diag_to_wg && is_identity(compose(*D.diag_to_wg, D.row0_to_diag));
      ok = ok && ids && row && col && retr;
      Json dn;
      dn["truncation"]          = {wd, wd};
      dn["bisimplicial_identities"] = verdict_text(ids);
      dn["row0_is_N_wg"]        = verdict_text(row);
      dn["column0_is_N_wc"]     = verdict_text(col);
      dn["retraction_identity"] = verdict_text(retr);
      if (!D.diag_to_wg) {
        dn["retraction_failure"] = D.diag_to_wg_failure;
      }
      dn["diagonal_homology"] = to_json(homology(D.diagonal));
      o.report["double_nerve"] = std::move(dn);

      Json levels = Json::array();
      for (std::size_t k = 0; k <= 1; ++k) {
        auto const L   = classification_level(s, k, config.dim, config.budget);
        auto const hl  = homology(L.nerve);
        auto const hcl = homology(L.cofibrant_nerve);
        levels.push_back({{"k", k},
                          {"objects", L.objects},
                          {"w_counts", level_counts(L.nerve)},
                          {"wc_counts", level_counts(L.cofibrant_nerve)},
                          {"w_homology", to_json(hl)},
                          {"wc_homology", to_json(hcl)},
                          {"comparison_injective", verdict_text(is_injective(L.comparison))},
                          {"comparison", low_degree_comparison(hcl, hl, ok)}});
      }
      o.report["levels"] = std::move(levels);
    } catch (BudgetExceeded const& e) {
      o.report["error"]         = e.what();
      o.report["size_estimate"] = e.estimate();
      ok                        = false;
    }
    o.report["verdict"] = verdict_text(ok);
    o.code              = ok ? kSuccess : kCheckFailed;
    return with_config(config, std::move(o));
  }

  Outcome cmd_fixture(RunConfig const& config) {
    try {
      return {kSuccess, to_json(fixture(single_input(config)))};
    } catch (PreconditionError const& e) {
      throw InputError(e.what());
    }
  }

  int run(int argc, char const* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Finite groupoids: model structure, groupoid algebras and nerves"};
    app.require_subcommand(1);
    RunConfig config;
    app.add_option("--seed", config.seed, "seed for randomized steps");
    app.add_option("--tol", config.tol, "numerical tolerance")->check(CLI::PositiveNumber);
    app.add_option("--bound", config.bound, "concretization bound (morphisms)")
      ->check(CLI::PositiveNumber);
    app.add_option("--dim", config.dim, "simplicial truncation")->check(CLI::Range(1, 4));
    app.add_option("--budget", config.budget, "simplex/grid budget")->check(CLI::PositiveNumber);
    app.add_option("--out", config.out, "write the report here instead of stdout");
    app.fallthrough();

    struct Verb {
      char const* name;
      char const* help;
      Outcome (*fn)(RunConfig const&);
    };
    Verb const verbs[] = {
      {"validate", "check a groupoid or functor file", cmd_validate},
      {"factor", "mapping cylinder factorization of a functor file", cmd_factor},
      {"morita", "groupoid algebra and K0 comparison for a functor file", cmd_morita},
      {"nerve-suite", "nerve comparisons for a sample of fixtures", cmd_nerve_suite},
      {"fixture", "print a named fixture as a groupoid file", cmd_fixture},
    };
    Outcome (*chosen)(RunConfig const&) = nullptr;
    for (auto const& v : verbs) {
      auto* sub = app.add_subcommand(v.name, v.help);
      sub->add_option("inputs", config.inputs, "input files or fixture names")->required();
      sub->callback([&config, &chosen, v] {
        config.command = v.name;
        chosen         = v.fn;
      });
    }

    try {
      app.parse(argc, argv);
    } catch (CLI::CallForHelp const& e) {
      out << app.help();
      return kSuccess;
    } catch (CLI::ParseError const& e) {
      err << e.what() << "\n";
      return kInputError;
    }

    Outcome outcome;
    try {
      outcome = chosen(config);
    } catch (InputError const& e) {
      err << "input error: " << e.what() << "\n";
      return kInputError;
    } catch (Error const& e) {
      err << "error: " << e.what() << "\n";
      return kCheckFailed;
    }

    std::string const text = outcome.report.dump(2) + "\n";
    if (config.out.empty()) {
      out << text;
    } else {
      std::ofstream file(config.out);
      if (!file) {
        err << "cannot write '" << config.out << "'\n";
        return kInputError;
      }
      file << text;
    }
    return outcome.code;
  }

}  // namespace gpdkit::cli

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <unistd.h>

#include "cli.hpp"
#include "gpdkit/builders.hpp"

using namespace gpdkit;
namespace fs = std::filesystem;

namespace {

  struct Run {
    int         code;
    std::string out;
    std::string err;
  };

  Run gpdkit_run(std::vector<std::string> args) {
    args.insert(args.begin(), "gpdkit");
    std::vector<char const*> argv;
    for (auto const& a : args) {
      argv.push_back(a.c_str());
    }
    std::ostringstream out, err;
    int const code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
  }

  fs::path scratch_dir() {
    static fs::path const dir = [] {
      auto d = fs::temp_directory_path() / ("gpdkit-cli-" + std::to_string(::getpid()));
      fs::create_directories(d);
      return d;
    }();
    return dir;
  }

  std::string write_file(std::string const& name, std::string const& text) {
    auto const p = scratch_dir() / name;
    std::ofstream(p) << text;
    return p.string();
  }

  Json parse(std::string const& s) {
    return Json::parse(s);
  }

}  // namespace

TEST_CASE("validate") {
  auto const cod2 = write_file("cod2.json", to_json(fixture("codiscrete-2")).dump());
  auto       r    = gpdkit_run({"validate", cod2});
  CHECK(r.code == 0);
  CHECK(parse(r.out)["report"]["valid"] == true);

  auto broken = to_json(fixture("codiscrete-2"));
  broken["inverses"].erase("x0->x1");
  r = gpdkit_run({"validate", write_file("broken.json", broken.dump())});
  CHECK(r.code == 1);
  CHECK(r.out.find("x0->x1") != std::string::npos);

  r = gpdkit_run({"validate", write_file("bad.json", "{\"objects\": [")});
  CHECK(r.code == 2);
  r = gpdkit_run({"validate", (scratch_dir() / "absent.json").string()});
  CHECK(r.code == 2);
  r = gpdkit_run({"validate", write_file("unknown.json",
                                         R"j({"objects": ["a"], "morphisms": [{"id": "f", "src": "a", "dst": "b"}]})j")});
  CHECK(r.code == 2);
}

TEST_CASE("validate functors") {
  auto const ok = write_file("ok.json", R"j({"source": "BZ2", "target": "B1",
      "onObjects": {"*": "*"}, "onMorphisms": {"e": "e", "a": "e"}})j");
  CHECK(gpdkit_run({"validate", ok}).code == 0);
  auto const bad = write_file("notfun.json", R"j({"source": "B1", "target": "BZ2",
      "onObjects": {"*": "*"}, "onMorphisms": {"e": "a"}})j");
  CHECK(gpdkit_run({"validate", bad}).code == 1);
}

TEST_CASE("factor") {
  auto const in = write_file("collapse.json", R"j({"source": "BZ2", "target": "B1",
      "onObjects": {"*": "*"}, "onMorphisms": {"e": "e", "a": "e"}})j");
  auto r = gpdkit_run({"factor", in});
  REQUIRE(r.code == 0);
  auto const j = parse(r.out)["factorization"];
  CHECK(j["middle"]["objects"].size() == 2);
  CHECK(j["checks"]["first_cofibration"] == "pass");
  CHECK(j["checks"]["second_equivalence"] == "pass");
  CHECK(j["checks"]["composite"] == "pass");

  auto const id = write_file("id.json", R"j({"source": "B1", "target": "B1",
      "onObjects": {"*": "*"}, "onMorphisms": {"e": "e"}})j");
  r = gpdkit_run({"factor", id});
  REQUIRE(r.code == 0);
  CHECK(parse(r.out)["factorization"]["middle"]["morphisms"].size() == 4);

  r = gpdkit_run({"factor", in, "--bound", "1"});
  CHECK(r.code == 0);
  auto const u = parse(r.out)["factorization"];
  CHECK(u["checks"]["second_equivalence"] == "unverified");
  CHECK(u.contains("warning"));
  CHECK(u["middle"].is_null());
}

TEST_CASE("morita") {
  auto const acyclic = write_file("acyclic.json", R"j({"source": "BZ2", "target": "Z2xcodiscrete-2",
      "onObjects": {"*": "x0"}, "onMorphisms": {"e": "(x0->x0,e)", "a": "(x0->x0,a)"}})j");
  auto r = gpdkit_run({"morita", acyclic});
  CHECK(r.code == 0);
  CHECK(parse(r.out)["morita"]["k0_iso"] == true);

  auto const plain = write_file("plain.json", R"j({"source": "discrete-2", "target": "codiscrete-2",
      "onObjects": {"x0": "x0", "x1": "x1"}, "onMorphisms": {"id_x0": "x0->x0", "id_x1": "x1->x1"}})j");
  r = gpdkit_run({"morita", plain});
  CHECK(r.code == 1);
  CHECK(parse(r.out)["morita"]["k0_iso"] == false);
  CHECK(parse(r.out)["morita"]["k0"]["matrix"] == Json::parse("[[1, 1]]"));

  auto const collapse = write_file("cod-collapse.json", R"j({"source": "codiscrete-2", "target": "B1",
      "onObjects": {"x0": "*", "x1": "*"},
      "onMorphisms": {"x0->x0": "e", "x0->x1": "e", "x1->x0": "e", "x1->x1": "e"}})j");
  r = gpdkit_run({"morita", collapse});
  CHECK(r.code == 1);
  CHECK(parse(r.out).contains("error"));
}

TEST_CASE("nerve suite") {
  auto r = gpdkit_run({"nerve-suite", "B1"});
  CHECK(r.code == 0);
  auto j = parse(r.out);
  CHECK(j["verdict"] == "pass");
  CHECK(j["levels"].size() == 2);

  r = gpdkit_run({"nerve-suite", "BZ2", "B1", "codiscrete-2", "--dim", "2"});
  j = parse(r.out);
  CHECK(j["sample"]["fixtures"] == Json::parse(R"j(["B1", "BZ2", "codiscrete-2"])j"));
  CHECK(j["double_nerve"]["row0_is_N_wg"] == "pass");
  CHECK(j["double_nerve"]["column0_is_N_wc"] == "pass");
  CHECK(j["double_nerve"]["retraction_identity"] == "pass");
  CHECK(j["levels"][0]["comparison"]["H0"] == "pass");
  // the wc nerve of this sample sees Z/2 in degree one, the w nerve does not
  CHECK(j["levels"][0]["comparison"]["H1"] == "fail");
  CHECK(r.code == 1);

  r = gpdkit_run({"nerve-suite", "B1", "codiscrete-2", "--budget", "1000"});
  CHECK(r.code == 1);
  CHECK(parse(r.out)["size_estimate"] == 6619);

  CHECK(gpdkit_run({"nerve-suite", "nosuch"}).code == 2);
}

TEST_CASE("fixture and usage") {
  auto r = gpdkit_run({"fixture", "BS3"});
  CHECK(r.code == 0);
  CHECK(parse(r.out)["morphisms"].size() == 6);
  CHECK(gpdkit_run({"fixture", "nosuch"}).code == 2);
  CHECK(gpdkit_run({}).code == 2);
  CHECK(gpdkit_run({"validate"}).code == 2);
  CHECK(gpdkit_run({"morita", "x.json", "--tol", "-1"}).code == 2);
}

TEST_CASE("reports are deterministic and carry the configuration") {
  auto const in = write_file("acyclic2.json", R"j({"source": "BZ2", "target": "Z2xcodiscrete-2",
      "onObjects": {"*": "x0"}, "onMorphisms": {"e": "(x0->x0,e)", "a": "(x0->x0,a)"}})j");
  auto const a = gpdkit_run({"morita", in, "--seed", "7"});
  auto const b = gpdkit_run({"morita", in, "--seed", "7"});
  CHECK(a.out == b.out);
  CHECK(parse(a.out)["config"]["seed"] == 7);
  CHECK(parse(a.out)["config"]["command"] == "morita");

  auto const out = (scratch_dir() / "report.json").string();
  auto const c   = gpdkit_run({"morita", in, "--seed", "7", "--out", out});
  CHECK(c.out.empty());
  std::ifstream     file(out);
  std::stringstream text;
  text << file.rdbuf();
  CHECK(parse(text.str())["morita"] == parse(a.out)["morita"]);

  auto const n1 = gpdkit_run({"nerve-suite", "B1", "codiscrete-2"});
  auto const n2 = gpdkit_run({"nerve-suite", "codiscrete-2", "B1"});
  CHECK(parse(n1.out)["levels"] == parse(n2.out)["levels"]);
}

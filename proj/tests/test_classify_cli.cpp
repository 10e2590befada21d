#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "zsub/classify.hpp"
#include "zsub/errors.hpp"
#include "zsub/json_io.hpp"

using namespace zsub;
using fx::el;
using Json = json::Json;

namespace {

  struct Run {
    int         code;
    std::string out;
    std::string err;
  };

  Run run(std::vector<std::string> const& args) {
    std::ostringstream out, err;
    int                code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
  }

  std::string data(std::string const& file) {
    return std::string(ZSUB_DATA_DIR) + "/" + file;
  }

  std::filesystem::path scratch(std::string const& name) {
    auto dir = std::filesystem::temp_directory_path() / "zsub-tests";
    std::filesystem::create_directories(dir);
    return dir / name;
  }

}  // namespace

TEST_SUITE("classify_cli") {
  TEST_CASE("classification examples") {
    auto n = classify(fx::N2());
    CHECK_FALSE(n.regular);
    CHECK_FALSE(n.completely_regular);
    CHECK_FALSE(n.n_condition);
    CHECK(n.z_subdirect == Verdict::Uncountable);
    CHECK(n.z_subsemigroups == Verdict::Uncountable);
    CHECK(n.n_subdirect == Verdict::Uncountable);
    REQUIRE(n.lki.has_value());
    CHECK(n.lki->K == std::vector{ElementId{1}});

    auto y = classify(fx::Y2());
    CHECK((y.regular && y.completely_regular && y.n_condition));
    CHECK(y.z_subdirect == Verdict::Countable);
    CHECK(y.z_subsemigroups == Verdict::Countable);
    CHECK(y.n_subdirect == Verdict::Countable);
    CHECK_FALSE(y.lki.has_value());

    auto t = classify(fx::T3());
    CHECK(t.regular);
    CHECK_FALSE(t.completely_regular);
    CHECK(t.z_subdirect == Verdict::Countable);
    CHECK(t.z_subsemigroups == Verdict::Uncountable);
    CHECK(t.j_classes.size() == 3);
  }

  TEST_CASE("report invariants on the corpus") {
    for (auto const& [name, S] : corpus::standard()) {
      CAPTURE(name);
      auto r = classify(S);
      CHECK(r.order == S.order());
      CHECK((r.z_subdirect == Verdict::Countable) == r.regular);
      CHECK((r.z_subsemigroups == Verdict::Countable) == r.completely_regular);
      CHECK((r.n_subdirect == Verdict::Countable) == r.n_condition);
      CHECK(r.n_subsemigroups_consistent);
      CHECK(r.lki.has_value() == !r.regular);
      if (r.completely_regular) {
        CHECK(r.regular);
      }
      if (r.regular) {
        CHECK(r.n_condition);
      }
      std::size_t total = 0;
      for (auto const& c : r.j_classes) {
        total += c.elements.size();
      }
      CHECK(total == S.order());
      CHECK(r.j_classes[r.minimal_ideal].regular);
    }
  }

  TEST_CASE("corpus generator") {
    CHECK(corpus::null_semigroup(2) == fx::N2());
    auto m = corpus::monogenic(2, 1);
    CHECK(m.order() == 2);
    auto s = el(m, "s");
    CHECK(m.product(s, s, s) == m.product(s, s));
    CHECK_FALSE(is_regular_semigroup(m));
    auto band = corpus::rectangular_band(2, 2);
    CHECK(band.order() == 4);
    CHECK(is_regular_semigroup(band));
    CHECK(is_completely_regular(band));
    for (std::size_t i = 1; i <= 4; ++i) {
      for (std::size_t p = 1; p <= 3; ++p) {
        CHECK(is_regular_semigroup(corpus::monogenic(i, p)) == (i == 1));
        CHECK(corpus::monogenic(i, p).order() == i + p - 1);
      }
    }
    for (std::size_t n = 2; n <= 5; ++n) {
      CHECK_FALSE(is_regular_semigroup(corpus::null_semigroup(n)));
    }
    CHECK(corpus::cyclic_group(4).product(ElementId{2}, ElementId{4}) == ElementId{1});
    CHECK(corpus::full_transformation(3).order() == 27);
    CHECK(corpus::symmetric_group_3().order() == 6);
    CHECK_THROWS_AS(corpus::full_transformation(4), UnsupportedParams);
    CHECK_THROWS_AS(corpus::generate("null", {}), UnsupportedParams);
    CHECK_THROWS_AS(corpus::generate("nope", {1}), UnsupportedParams);
    CHECK_THROWS_AS(corpus::monogenic(0, 1), UnsupportedParams);

    auto all = corpus::standard();
    CHECK(all.size() >= 30);
    std::set<std::string> names;
    for (auto const& e : all) {
      CHECK(e.semigroup.order() <= 27);
      names.insert(e.name);
    }
    CHECK(names.size() == all.size());
    for (auto want : {"cyclic-2", "cyclic-6", "sym-3", "transformation-2",
                      "transformation-3", "semilattice-2", "rectangular-2-2",
                      "monogenic-4-3", "null-2"}) {
      CHECK(names.count(want) == 1);
    }
  }

  TEST_CASE("JSON round trips") {
    std::mt19937_64 rng(23);
    for (int i = 0; i < 200; ++i) {
      auto a = oracle::random_zset(rng);
      CHECK(json::zset_from_json(Json::parse(json::to_json(a).dump())) == a);
    }
    for (auto const& [name, S] : corpus::standard()) {
      CHECK(json::semigroup_from_json(json::to_json(S)) == S);
    }
    CHECK_THROWS_AS(json::zset_from_json(Json::parse("[1]")), ParseError);
    CHECK_THROWS_AS(json::zset_from_json(Json::parse(R"({"sporadic":[]})")), ParseError);
    CHECK_THROWS_AS(json::pm_invariant_from_json(Json::parse(R"({"kind":"x"})")), ParseError);
  }

  TEST_CASE("cli classify") {
    auto r = run({"classify", data("N2.cay")});
    REQUIRE(r.code == 0);
    auto j = Json::parse(r.out);
    CHECK(j["schema"] == 1);
    CHECK(j["regular"] == false);
    CHECK(j["verdicts"]["z_subdirect"]["value"] == "Uncountable");
    CHECK(j["verdicts"]["z_subdirect"]["decided_by"] == "regular");
    CHECK(j["lki"]["K"] == Json::array({"a"}));

    auto y = Json::parse(run({"classify", "--json", data("Y2.cay")}).out);
    CHECK(y["verdicts"]["z_subsemigroups"]["value"] == "Countable");
    CHECK(y["lki"].is_null());

    auto t = Json::parse(run({"classify", data("T3.cay")}).out);
    CHECK(t["regular"] == true);
    CHECK(t["completely_regular"] == false);

    auto many = run({"classify", data("N2.cay"), data("Y2.cay")});
    CHECK(Json::parse(many.out).size() == 2);

    auto text = run({"classify", "--text", data("N2.cay")});
    CHECK(text.code == 0);
    CHECK(text.out.find("Uncountable") != std::string::npos);
    CHECK(run({"classify", "--text", "--json", data("N2.cay")}).code == 2);
  }

  TEST_CASE("cli parse errors exit 2 and name the problem") {
    auto bad = scratch("bad.cay");
    std::ofstream(bad) << "2\n2 2\n2 7\n";
    auto r = run({"classify", bad.string()});
    CHECK(r.code == 2);
    CHECK(r.err.find("line 3") != std::string::npos);

    auto nonassoc = scratch("nonassoc.cay");
    std::ofstream(nonassoc) << "2\n1 1\n2 1\n";
    auto n = run({"classify", nonassoc.string()});
    CHECK(n.code == 2);
    CHECK(n.err.find("not associative") != std::string::npos);

    CHECK(run({"classify", scratch("missing.cay").string()}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"pm", "build", data("N2.cay"), "1,2"}).code == 2);
    CHECK(run({"fg", data("S2.cay"), "--gens", "(1,q)"}).code == 2);
    CHECK(run({"--help"}).code == 0);
  }

  TEST_CASE("cli pm") {
    auto b = run({"pm", "build", data("N2.cay"), "0,2,3"});
    REQUIRE(b.code == 0);
    auto j = Json::parse(b.out);
    CHECK(j["m"] == "0,2,3");
    CHECK(j["fibers"]["a"]["sporadic"] == Json::array({0, 2, 3}));
    CHECK(j["fibers"]["z"]["lines"][0]["d"] == 1);

    auto path = scratch("pm.json");
    std::ofstream(path) << b.out;
    auto inv = run({"pm", "invariant", path.string()});
    REQUIRE(inv.code == 0);
    CHECK(Json::parse(inv.out)["m"] == "0,2,3");

    auto c = run({"pm", "certify", data("N2.cay"), "0", "0,1"});
    REQUIRE(c.code == 0);
    auto cj = Json::parse(c.out);
    CHECK(cj["witness"] == 1);
    CHECK(cj["witness_in"] == "m2");

    auto same = Json::parse(run({"pm", "certify", data("N2.cay"), "0,5", "0,5"}).out);
    CHECK(same["kind"] == "same_m");

    auto reg = run({"pm", "build", data("Y2.cay"), "0"});
    CHECK(reg.code == 3);
    CHECK(reg.err.find("regular") != std::string::npos);
    CHECK(run({"pm", "certify", data("Y2.cay"), "0", "0,1"}).code == 3);

    // tampered fibers are rejected
    j["fibers"]["z"] = json::to_json(ZSet::singleton(1));
    std::ofstream(path) << j.dump();
    CHECK(run({"pm", "invariant", path.string()}).code == 2);
  }

  TEST_CASE("cli fg") {
    auto t = run({"fg", data("trivial.cay"), "--gens", "(1,e),(-1,e)"});
    REQUIRE(t.code == 0);
    auto tj = Json::parse(t.out);
    CHECK(tj["certified"] == true);
    CHECK(tj["generating_set"].size() <= 3);

    auto s = run({"fg", data("S2.cay"), "--gens", "(2,1),(-2,1),(1,g)", "-W", "200"});
    REQUIRE(s.code == 0);
    auto sj = Json::parse(s.out);
    CHECK(sj["certified"] == true);
    CHECK(sj["fibers"]["1"]["lines"][0] == Json({{"r", 0}, {"d", 2}}));
    CHECK(sj["fibers"]["g"]["lines"][0] == Json({{"r", 1}, {"d", 2}}));

    CHECK(run({"fg", data("N2.cay"), "--gens", "(1,z)"}).code == 3);
    CHECK(run({"fg", data("T3.cay"), "--gens", "(1,[1,2,3])"}).code == 3);

    auto u = run({"fg", data("Y2.cay"), "--gens", "(2,e),(3,e),(0,f)", "--max-rounds", "1"});
    CHECK(u.code == 4);
    CHECK(Json::parse(u.out)["status"] == "unstabilized");
  }

  TEST_CASE("cli corpus") {
    auto dir = scratch("corpus");
    std::filesystem::remove_all(dir);
    auto r = run({"corpus", "null", "2", "-o", dir.string()});
    REQUIRE(r.code == 0);
    CHECK(read_cayley_file((dir / "null-2.cay").string()) == fx::N2());
    CHECK(run({"corpus", "transformation", "4", "-o", dir.string()}).code == 2);
    auto all = run({"corpus", "standard", "-o", dir.string()});
    REQUIRE(all.code == 0);
    std::size_t files = 0;
    for (auto const& entry : std::filesystem::directory_iterator(dir)) {
      CHECK(read_cayley_file(entry.path().string()).order() <= 27);
      ++files;
    }
    CHECK(files >= 30);
  }

  TEST_CASE("cli output is deterministic") {
    std::vector<std::vector<std::string>> commands{
        {"classify", data("T3.cay"), data("N2.cay")},
        {"pm", "build", data("monogenic-2-1.cay"), "0,1,+4"},
        {"pm", "certify", data("N2.cay"), "0,3", "0,2,3"},
        {"fg", data("S2.cay"), "--gens", "(2,1),(-2,1),(1,g)"},
    };
    for (auto const& c : commands) {
      auto first = run(c);
      CHECK(first.code == 0);
      CHECK(run(c).out == first.out);
    }
  }
}

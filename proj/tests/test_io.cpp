#include "tlie/io.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <nlohmann/json.hpp>

#include "fixtures.hpp"

#include "tlie/reynolds.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>

using namespace tlie;
using nlohmann::json;

namespace {

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    path = std::filesystem::temp_directory_path() /
           ("tlie_io_test_" + std::to_string(::getpid()));
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
};

}  // namespace

TEST_CASE("algebra files round-trip exactly") {
  TempDir dir;
  ThreeLieAlgebra a = fix::dim4_semidirect();
  io::save(dir.path / "a.json", io::to_json(a));
  ThreeLieAlgebra b = io::load_algebra(dir.path / "a.json");
  REQUIRE(b.dim() == a.dim());
  for (std::size_t t = 0; t < triple_count(4); ++t)
    REQUIRE(a.canonical_slot(t) == b.canonical_slot(t));
}

TEST_CASE("representation files round-trip, inline or by reference") {
  TempDir dir;
  Representation ad = adjoint(fix::dim3());
  io::save(dir.path / "rep.json", io::to_json(ad));
  Representation back = io::load_representation(dir.path / "rep.json");
  REQUIRE(back.dim_v() == 3);
  for (std::size_t p = 0; p < 3; ++p) REQUIRE(back.rho_slot(p) == ad.rho_slot(p));

  // Carrier by relative path.
  io::save(dir.path / "alg.json", io::to_json(ad.carrier()));
  json rep_ref = io::to_json(ad);
  rep_ref["carrier"] = "alg.json";
  io::save(dir.path / "rep_ref.json", rep_ref);
  Representation by_ref = io::load_representation(dir.path / "rep_ref.json");
  REQUIRE(by_ref.rho_slot(0) == ad.rho_slot(0));
}

TEST_CASE("twisted operator files validate their context") {
  TempDir dir;
  ThreeLieAlgebra a = fix::dim3();
  TwistedRbo op = trbo_from_reynolds(a, fix::reynolds_dim3());
  io::save(dir.path / "op.json", io::to_json(op));
  TwistedRbo back = io::load_twisted_rbo(dir.path / "op.json");
  REQUIRE(back.t == op.t);
  REQUIRE(back.rep.verified());
  REQUIRE(back.phi.verified());
  REQUIRE_FALSE(back.verified);  // the operator identity itself is not pre-trusted

  // A context with a broken action is rejected. (On this 3-dim fixture any
  // alternating form is a 2-cocycle, so the damage goes into rho.)
  json bad = io::to_json(op);
  json flipped = json::array();
  for (const auto& row : bad["representation"]["rho"]["2,3"]) {
    json r = json::array();
    for (const auto& entry : row)
      r.push_back(to_string(-rational_from_string(entry.get<std::string>())));
    flipped.push_back(r);
  }
  bad["representation"]["rho"]["2,3"] = flipped;
  io::save(dir.path / "bad.json", bad);
  REQUIRE_THROWS_AS(io::load_twisted_rbo(dir.path / "bad.json"), Error);
}

TEST_CASE("NS files round-trip both products") {
  TempDir dir;
  NsThreeLie ns = ns_from_trbo(trbo_from_reynolds(fix::dim3(), fix::reynolds_dim3()));
  io::save(dir.path / "ns.json", io::to_json(ns));
  NsThreeLie back = io::load_ns(dir.path / "ns.json");
  for (std::size_t p = 0; p < pair_count(3); ++p)
    for (std::size_t k = 0; k < 3; ++k) {
      auto [i, j] = pair_at(3, p);
      REQUIRE(back.curly_basis(i, j, k) == ns.curly_basis(i, j, k));
    }
  REQUIRE(back.square_basis(0, 1, 2) == ns.square_basis(0, 1, 2));
}

TEST_CASE("malformed documents raise parse errors") {
  TempDir dir;
  REQUIRE_THROWS_AS(io::load_algebra(dir.path / "missing.json"), Error);

  std::ofstream(dir.path / "garbage.json") << "{ not json";
  REQUIRE_THROWS_AS(io::load_algebra(dir.path / "garbage.json"), Error);

  io::save(dir.path / "bad_key.json",
           json{{"type", "three_lie_algebra"},
                {"dim", 3},
                {"brackets", {{"2,1,3", json::array({"1", "0", "0"})}}}});
  REQUIRE_THROWS_AS(io::load_algebra(dir.path / "bad_key.json"), Error);

  io::save(dir.path / "bad_rat.json",
           json{{"type", "three_lie_algebra"},
                {"dim", 3},
                {"brackets", {{"1,2,3", json::array({"1/0", "0", "0"})}}}});
  REQUIRE_THROWS_AS(io::load_algebra(dir.path / "bad_rat.json"), Error);
}

TEST_CASE("reports serialize violations verbatim") {
  Report r = check_fundamental_identity(fix::broken4());
  json j = io::to_json(r);
  REQUIRE(j["outcome"] == "fail");
  REQUIRE_FALSE(j["violations"].empty());
  REQUIRE(j["violations"][0].contains("tuple"));
  REQUIRE(j["violations"][0].contains("lhs"));
  REQUIRE(j["violations"][0].contains("rhs"));
}

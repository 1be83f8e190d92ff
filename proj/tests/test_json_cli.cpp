#include <gtest/gtest.h>

#include <sstream>

#include "qtop/cli.hpp"
#include "qtop/error.hpp"
#include "qtop/json_io.hpp"

using namespace qtop;
using io::Json;

namespace {

std::string data(const std::string& name) { return std::string(QTOP_TEST_DATA) + "/" + name; }

struct Outcome {
  int status;
  std::string out;
  Json json() const { return Json::parse(out); }
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int status = cli::run(args, out, err);
  return {status, out.str()};
}

}  // namespace

TEST(Json, IntegersSwitchToStringsBeyond64Bits) {
  const Integer small = -42;
  const Integer big = Integer(1) << 80;
  EXPECT_EQ(io::to_json(small), Json(-42));
  EXPECT_EQ(io::to_json(big), Json(big.str()));
  EXPECT_EQ(io::parse_integer(io::to_json(big)), big);
  EXPECT_EQ(io::parse_rational(io::to_json(Rational(-3, 4))), Rational(-3, 4));
  EXPECT_THROW(io::parse_integer(Json("12a")), Error);
}

TEST(Json, CycleRoundTrip) {
  const auto k = io::parse_cycle(io::read_file(data("cycle_disk_family.json")));
  ASSERT_EQ(k.components.size(), 1u);
  EXPECT_EQ(k.components[0].family_step, Weight{1});
  EXPECT_EQ(k.enumeration_bound, 20);
  EXPECT_EQ(io::parse_cycle(io::to_json(k)), k);
}

TEST(Json, ModelRoundTrip) {
  const auto m = io::parse_linear_model(io::read_file(data("model_shifted.json")));
  const auto again = io::parse_linear_model(io::to_json(m));
  EXPECT_EQ(again.weights, m.weights);
  EXPECT_EQ(again.shift, m.shift);
  EXPECT_EQ(again.datum, m.datum);
}

TEST(Json, FormalCharacterRoundTrip) {
  const auto d = RootDatum::build(GroupKind::TypeA, 2);
  FormalCharacter f(d, 4);
  f.set(Weight{1, 1}, -3);
  f.set(Weight{2, 0}, Integer(1) << 70);
  f.set_certificate({Weight{1, 1}, -2});
  const auto g = io::parse_formal_character(io::to_json(f));
  EXPECT_EQ(g.window(), 4);
  EXPECT_EQ(g.nonzero(), f.nonzero());
  ASSERT_TRUE(g.certificate());
  EXPECT_EQ(g.certificate()->lower_bound, -2);
}

TEST(Json, SchemaViolations) {
  EXPECT_THROW(io::parse_linear_model(io::read_file(data("model_missing_rank.json"))), Error);
  EXPECT_THROW(io::parse_linear_model(io::read_file(data("model_wrong_arity.json"))), Error);
  EXPECT_THROW(io::read_file(data("malformed.json")), Error);
  EXPECT_THROW(io::read_file(data("does_not_exist.json")), Error);
  try {
    io::parse_cycle(io::read_file(data("cycle_unsupported_kind.json")));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::UnsupportedKind);
  }
}

TEST(Cli, IndexOfVanishingSphere) {
  const auto r = run({"index", data("cycle_fn_n1.json")});
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.json()["character"], "0");
  EXPECT_EQ(r.json()["mode"], "closed");
}

TEST(Cli, IndexOfLineBundleTable) {
  const auto r = run({"index", data("cycle_o3.json"), "--format", "table"});
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "1 + t^(1) + t^(2) + t^(3)\n");
}

TEST(Cli, IndexOfFamilyIsPolarized) {
  const auto r = run({"index", data("cycle_disk_family.json"), "--window", "5"});
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(r.json()["mode"], "polarized");
  const auto f = io::parse_formal_character(r.json()["index"]);
  for (std::int64_t n = -5; n <= 5; ++n) EXPECT_EQ(f.multiplicity(Weight{n}), n >= 0 ? 1 : 0);
}

TEST(Cli, IndexWithExplicitPolarization) {
  const auto r = run({"index", data("cycle_a1_orbit.json"), "--polarization", "-1/2", "--window", "5"});
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(r.json()["character"], "V(3)");
  const auto u = run({"index", data("cycle_family_unbounded.json")});
  EXPECT_EQ(u.status, 1);
  EXPECT_EQ(u.json()["error"], "EnumerationUnbounded");
}

TEST(Cli, VerifyQrSevenRows) {
  const auto r = run({"verify-qr", data("model_a.json"), "--window", "6"});
  ASSERT_EQ(r.status, 0);
  const auto report = io::parse_qr_report(r.json(), 1);
  EXPECT_TRUE(report.verdict);
  EXPECT_EQ(report.rows.size(), 7u);
  for (const auto& row : report.rows) EXPECT_TRUE(row.match);
}

TEST(Cli, VerifyQrMismatchExitsTwo) {
  const auto r = run({"verify-qr", data("model_a.json"), "--window", "4", "--polarization", "-1"});
  EXPECT_EQ(r.status, 2);
  EXPECT_FALSE(r.json()["verdict"].get<bool>());
}

TEST(Cli, VerifyQrRankThree) {
  const auto r = run({"verify-qr", data("model_random3.json"), "--window", "3"});
  EXPECT_EQ(r.status, 0);
}

TEST(Cli, QuantizeNotProper) {
  const auto r = run({"quantize", data("model_bad.json")});
  EXPECT_EQ(r.status, 1);
  EXPECT_EQ(r.json()["error"], "NotProper");
}

TEST(Cli, QuantizeAndReduce) {
  const auto q = run({"quantize", data("model_a.json"), "--window", "4"});
  ASSERT_EQ(q.status, 0);
  const auto f = io::parse_formal_character(q.json()["index"]);
  EXPECT_EQ(f.multiplicity(Weight{4}), 5);
  const auto r = run({"reduce", data("model_a.json"), "--gamma", "3"});
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(r.json()["multiplicity"], 4);
  EXPECT_TRUE(r.json()["regular"].get<bool>());
}

TEST(Cli, OrbitEmitsBothCharacters) {
  const auto r = run({"orbit", "--group", "A1", "--gamma", "2"});
  ASSERT_EQ(r.status, 0);
  const Json j = r.json();
  EXPECT_TRUE(j["match"].get<bool>());
  const auto d = io::parse_datum(j["cycle"]["datum"]);
  EXPECT_EQ(io::parse_weight_polynomial(j["index"], 1), weyl_character(d, Weight{2}));
  EXPECT_EQ(io::parse_component(j["cycle"]["component"], 1).fixed_points.size(), 2u);
  EXPECT_EQ(run({"orbit", "--group", "A2", "--gamma", "1,0"}).status, 1);
  EXPECT_EQ(run({"orbit", "--group", "A2", "--gamma", "2,1"}).status, 0);
}

TEST(Cli, MovesEmitCertificates) {
  for (const char* name : {"move_glue.json", "move_disk.json", "move_bundle.json", "move_union.json", "move_product.json"}) {
    const auto r = run({"moves", data(name), "--window", "10"});
    ASSERT_EQ(r.status, 0) << name << r.out;
    const auto cert = io::parse_certificate(r.json());
    EXPECT_TRUE(cert.verdict);
    EXPECT_TRUE(agree_on_shared_window(cert.before, cert.after));
  }
  const auto bad = run({"moves", data("move_bundle_bad_fiber.json")});
  EXPECT_EQ(bad.status, 1);
  EXPECT_EQ(bad.json()["error"], "FiberIndexNotUnit");
  EXPECT_EQ(run({"moves", data("move_unknown.json")}).status, 1);
}

TEST(Cli, VanishingTable) {
  const auto r = run({"vanishing", data("model_shifted.json"), "--format", "table"});
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(r.out,
            "support\tmu\tcompact\tdiameter^2\n"
            "{}\t(-1,-1)\tyes\t0\n"
            "{1}\t(0,-1)\tyes\t0\n"
            "{2}\t(-1,0)\tyes\t0\n"
            "{1,2}\t(0,0)\tyes\t0\n");
}

TEST(Cli, InputErrorsExitOne) {
  for (const char* name : {"malformed.json", "model_missing_rank.json", "model_wrong_arity.json", "model_zero_weight.json"}) {
    const auto r = run({"quantize", data(name)});
    EXPECT_EQ(r.status, 1) << name;
    EXPECT_TRUE(r.json().contains("error")) << name;
  }
  EXPECT_EQ(run({"quantize", data("missing.json")}).status, 1);
  EXPECT_EQ(run({"frobnicate"}).status, 1);
  EXPECT_EQ(run({"quantize", data("model_a.json"), "--window", "-3"}).status, 1);
  EXPECT_EQ(run({"quantize", data("model_a.json"), "--format", "xml"}).status, 1);
  EXPECT_EQ(run({"index", data("cycle_unsupported_kind.json")}).json()["error"], "UnsupportedKind");
}

TEST(Cli, OutputIsByteStable) {
  const auto a = run({"verify-qr", data("model_shifted.json"), "--window", "3"});
  const auto b = run({"verify-qr", data("model_shifted.json"), "--window", "3"});
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.json().dump(2) + "\n", a.out);
}

// Copyright 2026 The lbo Authors
// SPDX-License-Identifier: Apache-2.0
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <sstream>

#include <gtest/gtest.h>

#include "json_writer.hpp"
#include "lbo/cli.hpp"
#include "lbo/orbit.hpp"
#include "lbo/wedge.hpp"

namespace lbo::cli {
namespace {

struct Invocation
{
    int code = 0;
    std::string out;
    std::string err;

    std::vector<Json> records() const
    {
        std::vector<Json> rs;
        std::istringstream lines(out);
        for (std::string line; std::getline(lines, line);)
            rs.push_back(Json::parse(line));
        return rs;
    }
};

Invocation lbo(std::vector<std::string> const& args, std::string const& input = "")
{
    std::istringstream in(input);
    std::ostringstream out, err;
    Invocation r;
    r.code = run(args, in, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

std::string record_of(Bivector const& w)
{
    Json j{{"c", std::vector<double>(w.c.data(), w.c.data() + 6)}};
    return to_json_string(j);
}

std::string read_file(std::string const& path)
{
    std::ifstream f(path, std::ios::binary);
    std::ostringstream s;
    s << f.rdbuf();
    return s.str();
}

class ScopedEnv
{
  public:
    ScopedEnv(char const* name, char const* value) : name_(name)
    {
        ::setenv(name, value, 1);
    }
    ~ScopedEnv() { ::unsetenv(name_); }

  private:
    char const* name_;
};

TEST(JsonWriter, RealsAndKeys)
{
    EXPECT_EQ(format_real(1.0), "1.0");
    EXPECT_EQ(format_real(-0.0), "0.0");
    EXPECT_EQ(format_real(0.1), "0.10000000000000001");
    EXPECT_EQ(format_real(1e300), "1.0000000000000001e+300");
    EXPECT_EQ(format_real(NAN), "null");
    EXPECT_EQ(std::stod(format_real(std::numbers::pi)), std::numbers::pi);
    EXPECT_EQ(to_json_string(Json{{"b", 1}, {"a", 2.5}, {"c", nullptr}}),
              R"({"a":2.5,"b":1,"c":null})");
}

TEST(Cli, ClassifyExamples)
{
    Invocation const r = lbo({"classify"}, "{\"c\":[1,0,0,0,0,1]}\n"
                                    "{\"c\":[0,0,0,1,0,1]}\n"
                                    "{\"c\":[1,0,0,0,0,0]}\n");
    EXPECT_EQ(r.code, 0);
    auto const rs = r.records();
    ASSERT_EQ(rs.size(), 3u);
    EXPECT_EQ(rs[0]["class"]["kind"], "NeutralPlus");
    EXPECT_DOUBLE_EQ(rs[0]["class"]["r0"].get<double>(), 1.0);
    EXPECT_EQ(rs[0]["class"]["epsilon"], 1);
    EXPECT_DOUBLE_EQ(rs[0]["pfaffian"].get<double>(), 1.0);
    EXPECT_EQ(rs[1]["class"]["kind"], "Degenerate");
    EXPECT_DOUBLE_EQ(rs[1]["A"].get<double>(), 1.0);
    EXPECT_DOUBLE_EQ(rs[1]["B"].get<double>(), 1.0);
    EXPECT_EQ(rs[2]["in_light_cone"], false);
    EXPECT_TRUE(rs[2]["class"].is_null());
    EXPECT_TRUE(rs[2]["reason"].is_string());
    for (int i = 0; i < 3; ++i)
        EXPECT_EQ(rs[i]["index"], i);
}

TEST(Cli, WedgedInputAndId)
{
    Invocation const r = lbo({"classify"},
                      R"({"id":"w","x":[1,0,0,0],"y":[0,1,0,0]})");
    auto const rs = r.records();
    ASSERT_EQ(rs.size(), 1u);
    EXPECT_EQ(rs[0]["id"], "w");
    EXPECT_EQ(rs[0]["in_light_cone"], false);
    EXPECT_DOUBLE_EQ(rs[0]["A"].get<double>(), 1.0);
}

TEST(Cli, MalformedRecordsKeepOrder)
{
    Invocation const r = lbo({"classify"}, "{\"c\":[1,0,0,0,0,1]}\n"
                                    "{\"c\":[1,0,0]}\n"
                                    "{\"c\":[1,0,0,0,0,1],\"x\":[1,0,0,0],"
                                    "\"y\":[0,1,0,0]}\n"
                                    "{\"c\":[1,0,0,0,0,1],\"id\":3}\n"
                                    "garbage\n"
                                    "{\"c\":[0,0,0,1,0,1]}\n");
    EXPECT_EQ(r.code, 2);
    auto const rs = r.records();
    ASSERT_EQ(rs.size(), 6u);
    for (int i = 1; i <= 4; ++i)
    {
        EXPECT_EQ(rs[i]["index"], i);
        EXPECT_TRUE(rs[i]["error"].is_string());
    }
    EXPECT_EQ(rs[5]["class"]["kind"], "Degenerate");
}

TEST(Cli, NonFiniteEntriesAreRejected)
{
    Invocation const r = lbo({"classify"}, "{\"c\":[1e400,0,0,0,0,1]}\n");
    EXPECT_EQ(r.code, 2);
    EXPECT_TRUE(r.records().at(0)["error"].is_string());
}

TEST(Cli, MultiLineJson)
{
    Invocation const r = lbo({"classify"}, "{\n  \"id\": \"m\",\n  \"c\": [1, 0, 0,\n"
                                    "        0, 0, -1]\n}\n"
                                    "{\"c\":[1,0,0,0,0,1]}\n");
    EXPECT_EQ(r.code, 0);
    auto const rs = r.records();
    ASSERT_EQ(rs.size(), 2u);
    EXPECT_EQ(rs[0]["id"], "m");
    EXPECT_EQ(rs[0]["class"]["kind"], "NeutralMinus");
    EXPECT_EQ(rs[1]["index"], 1);
}

TEST(Cli, TruncatedRecordDoesNotSwallowTheNext)
{
    Invocation const r = lbo({"classify"}, "{\"c\":[1,0,0,\n"
                                    "{\"c\":[1,0,0,0,0,1]}\n");
    EXPECT_EQ(r.code, 2);
    auto const rs = r.records();
    ASSERT_EQ(rs.size(), 2u);
    EXPECT_TRUE(rs[0]["error"].is_string());
    EXPECT_EQ(rs[1]["class"]["kind"], "NeutralPlus");
}

TEST(Cli, CanonicalOfGenericPoint)
{
    Bivector const omega = reference_point(std::numbers::pi / 3);
    Invocation const r = lbo({"canonical"}, record_of(omega));
    EXPECT_EQ(r.code, 0);
    Json const rec = r.records().at(0);
    Json const rep = rec["representative"];
    EXPECT_NEAR(rep["r0"].get<double>(), 1.0, 1e-12);
    EXPECT_EQ(rep["epsilon"], 1);
    auto const point = rep["point"].get<std::vector<double>>();
    Bivector const expected(1, 0, 0, 0, 0, 1);
    for (int k = 0; k < 6; ++k)
        EXPECT_NEAR(point[k], expected.c[k], 1e-10);

    auto const w = rep["witness"].get<std::vector<double>>();
    ASSERT_EQ(w.size(), 16u);
    Mat4 P;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            P(i, j) = w[4 * i + j];
    Bivector const image = pushforward(P, omega, ToleranceConfig{});
    EXPECT_LE((image.c - expected.c).cwiseAbs().maxCoeff(), 1e-10);
    EXPECT_EQ(rec["canonical"]["witness"].size(), 16u);
}

TEST(Cli, CanonicalOfNormalFormIsItself)
{
    Invocation const r = lbo({"canonical"}, "{\"c\":[1,0,0,0,0,1]}");
    Json const rep = r.records().at(0)["representative"];
    EXPECT_EQ(rep["point"], Json::parse("[1.0,0.0,0.0,0.0,0.0,1.0]"));
    EXPECT_EQ(rep["witness"],
              Json::parse("[1,0,0,0,0,1,0,0,0,0,1,0,0,0,0,1]"));
}

TEST(Cli, CanonicalOfDegeneratePointIsNoteOnly)
{
    Invocation const r = lbo({"canonical"},
                      record_of(reference_point(std::numbers::pi / 2)));
    EXPECT_EQ(r.code, 0);
    Json const rec = r.records().at(0);
    EXPECT_TRUE(rec["representative"].is_null());
    EXPECT_TRUE(rec["note"].is_string());
    EXPECT_NEAR(rec["canonical"]["phi"].get<double>(), std::numbers::pi / 2,
                1e-12);
}

TEST(Cli, SliceExamples)
{
    std::string const normal = "{\"c\":[1,0,0,0,0,1]}";
    Invocation const one = lbo({"slice", "--r", "1"}, normal);
    EXPECT_EQ(one.code, 0);
    Json const s = one.records().at(0)["slice"];
    EXPECT_EQ(s["topology"], "Sphere2");
    EXPECT_EQ(s["r_queried"], 1.0);
    EXPECT_EQ(s["boundary"], true);

    Json const big = lbo({"slice", "--r", "2"}, normal).records().at(0);
    EXPECT_EQ(big["slice"]["topology"], "RP3");
    Json const small = lbo({"slice", "--r", "0.5"}, normal).records().at(0);
    EXPECT_EQ(small["slice"]["topology"], "Empty");

    EXPECT_EQ(lbo({"slice", "--r", "0"}, normal).code, 2);
    EXPECT_EQ(lbo({"slice", "--r", "-1"}, normal).code, 2);
    EXPECT_EQ(lbo({"slice"}, normal).code, 3);
}

TEST(Cli, SliceEmpiricalRadiusIsSeeded)
{
    std::string const input = record_of(normal_form(1.0, 0.4));
    Invocation const a = lbo({"--seed", "5", "--samples", "64", "slice", "--r", "1"},
                      input);
    Invocation const b = lbo({"--seed", "5", "--samples", "64", "slice", "--r", "1"},
                      input);
    EXPECT_EQ(a.out, b.out);
    Json const rec = a.records().at(0);
    double const r0 = rec["class"]["r0"];
    double const rmin = rec["slice"]["empirical_min_radius"];
    EXPECT_GE(rmin, r0 - 1e-9);
    EXPECT_LE(rmin, r0 * 1.02);
}

TEST(Cli, StabilizerOfDegeneratePoint)
{
    Invocation const r = lbo({"stabilizer"},
                      record_of(reference_point(std::numbers::pi / 2)));
    EXPECT_EQ(r.code, 0);
    Json const st = r.records().at(0)["stabilizer"];
    EXPECT_EQ(st["base"], "degenerate");
    ASSERT_EQ(st["families"].size(), 2u);
    EXPECT_EQ(st["families"][0]["family"], "U");
    EXPECT_EQ(st["families"][1]["family"], "V");
    for (auto const& f : st["families"])
        EXPECT_LE(f["max_fixing_residual"].get<double>(), 1e-10);
}

TEST(Cli, StabilizerOfTransportedNeutralPoint)
{
    Invocation const r = lbo({"stabilizer"}, record_of(normal_form(1.3, 2.2)));
    EXPECT_EQ(r.code, 0);
    Json const st = r.records().at(0)["stabilizer"];
    EXPECT_EQ(st["base"], "neutral");
    for (auto const& f : st["families"])
        EXPECT_LE(f["max_fixing_residual"].get<double>(), 1e-10);
}

TEST(Cli, Verify)
{
    Invocation const iso = lbo({"verify", "--suite", "isometry", "--seed", "7"});
    EXPECT_EQ(iso.code, 0) << iso.out;
    EXPECT_NE(iso.out.find("PASS"), std::string::npos);
    EXPECT_EQ(iso.out.find("FAIL"), std::string::npos);
    EXPECT_EQ(lbo({"verify", "--suite", "bogus"}).code, 3);
    Invocation const js = lbo({"--format", "ndjson", "verify", "--suite", "pfaffian"});
    EXPECT_EQ(js.code, 0);
    EXPECT_EQ(js.records().at(0)["passed"], true);
}

TEST(Cli, UsageErrors)
{
    EXPECT_EQ(lbo({}).code, 3);
    EXPECT_EQ(lbo({"frobnicate"}).code, 3);
    EXPECT_EQ(lbo({"--tol", "-1", "classify"}).code, 3);
    EXPECT_EQ(lbo({"--format", "xml", "classify"}).code, 3);
    EXPECT_EQ(lbo({"--help"}).code, 0);
    EXPECT_EQ(lbo({"classify", "--in", "/nonexistent/input.ndjson"}).code, 2);
}

TEST(Cli, FlagsBeatEnvironment)
{
    std::string const input = "{\"c\":[1,0,0,0,0,1]}";
    {
        ScopedEnv env("LBO_FORMAT", "table");
        EXPECT_EQ(lbo({"classify"}, input).out.rfind("index", 0), 0u);
        Invocation const r = lbo({"--format", "ndjson", "classify"}, input);
        EXPECT_EQ(r.records().size(), 1u);
    }
    {
        ScopedEnv env("LBO_R", "2");
        Json const rec = lbo({"slice"}, input).records().at(0);
        EXPECT_EQ(rec["slice"]["r_queried"], 2.0);
        Json const flag = lbo({"slice", "--r", "1"}, input).records().at(0);
        EXPECT_EQ(flag["slice"]["r_queried"], 1.0);
    }
    {
        ScopedEnv env("LBO_TOL", "not-a-number");
        EXPECT_EQ(lbo({"classify"}, input).code, 3);
        EXPECT_EQ(lbo({"verify", "--suite", "nope"}).code, 3);
        EXPECT_EQ(lbo({"--tol", "1e-9", "classify"}, input).code, 0);
    }
}

TEST(Cli, JsonArrayFormat)
{
    Invocation const r = lbo({"--format", "json", "classify"},
                      "{\"c\":[1,0,0,0,0,1]}\n{\"c\":[1,0,0,0,0,0]}\n");
    Json const all = Json::parse(r.out);
    ASSERT_TRUE(all.is_array());
    EXPECT_EQ(all.size(), 2u);
    EXPECT_EQ(Json::parse(lbo({"--format", "json", "classify"}, "").out),
              Json::array());
}

TEST(Cli, GoldenFixtureIsReproduced)
{
    std::string const dir = LBO_TEST_DATA_DIR;
    std::string const golden
        = read_file(dir + "/fixture50.canonical.golden.ndjson");
    ASSERT_FALSE(golden.empty());
    for (char const* threads : {"1", "1", "4", "16"})
    {
        Invocation const r = lbo({"--seed", "42", "--threads", threads, "canonical",
                           "--in", dir + "/fixture50.ndjson"});
        EXPECT_EQ(r.code, 2);
        EXPECT_EQ(r.out, golden) << "threads=" << threads;
    }
}

TEST(Cli, ChunkingAndThreadsDoNotChangeOutput)
{
    std::ostringstream input;
    for (int i = 0; i < 700; ++i)
        input << record_of(normal_form(0.5 + 0.001 * i, 0.004 * i)) << '\n';
    std::vector<std::string> base{"--seed", "3", "stabilizer"};
    Invocation const serial = lbo(base, input.str());
    base.insert(base.begin(), {"--threads", "7"});
    Invocation const parallel = lbo(base, input.str());
    EXPECT_EQ(serial.code, 0);
    EXPECT_EQ(serial.out, parallel.out);
    EXPECT_EQ(serial.records().size(), 700u);
}

}  // namespace
}  // namespace lbo::cli

#include "hypercube_app/commands.hpp"
#include "hypercube_app/reports.hpp"
#include "hypercube_app/store.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

using namespace hypercube;
using namespace hypercube::app;
namespace fs = std::filesystem;

namespace {

struct CliRun {
    int code;
    std::string out, err;
};

CliRun run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = dispatch(args, out, err);
    return {code, out.str(), err.str()};
}

fs::path scratch_dir(const std::string& name) {
    fs::path p = fs::temp_directory_path() / ("hypercube-test-" + name + "-" + std::to_string(std::random_device{}()));
    fs::remove_all(p);
    fs::create_directories(p);
    return p;
}

std::string slurp(const fs::path& p) {
    std::ifstream f(p, std::ios::binary);
    std::ostringstream s;
    s << f.rdbuf();
    return s.str();
}

}  // namespace

TEST(Cli, UsageErrorsExitWithTwo) {
    EXPECT_EQ(run({}).code, kExitUsage);
    EXPECT_EQ(run({"frobnicate"}).code, kExitUsage);
    EXPECT_EQ(run({"hyperdet", "build", "--format", "3x3"}).code, kExitUsage);
    EXPECT_EQ(run({"tri", "enumerate", "--n", "7"}).code, kExitUsage);
}

TEST(Cli, BuildsTheThreeCubeHyperdeterminant) {
    CliRun r = run({"hyperdet", "build", "--format", "2x2x2"});
    EXPECT_EQ(r.code, kExitOk) << r.err;
    EXPECT_NE(r.out.find("check reference: ok"), std::string::npos);
    EXPECT_NE(r.out.find("check terms: ok"), std::string::npos);
    EXPECT_NE(r.out.find("c000^2*c111^2"), std::string::npos);
}

TEST(Cli, ManifestRecordsDigestsOfEveryOutput) {
    fs::path dir = scratch_dir("manifest");
    CliRun r = run({"--out", dir.string(), "tri", "enumerate", "--n", "3"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    auto m = RunManifest::from_json(nlohmann::json::parse(slurp(dir / "manifest.json")));
    EXPECT_EQ(m.command, "tri enumerate");
    ASSERT_FALSE(m.outputs.empty());
    for (const auto& [name, digest] : m.outputs) EXPECT_EQ(sha256_hex(slurp(dir / name)), digest) << name;
    EXPECT_EQ(m.results["total"], 74);
    EXPECT_TRUE(m.checks.at("total"));
    for (const auto& e : fs::directory_iterator(dir)) EXPECT_NE(e.path().extension(), ".partial");
    fs::remove_all(dir);
}

TEST(Cli, OutputIsIndependentOfJobs) {
    CliRun a = run({"tri", "enumerate", "--n", "3", "--jobs", "1"});
    CliRun b = run({"tri", "enumerate", "--n", "3", "--jobs", "3"});
    ASSERT_EQ(a.code, kExitOk);
    EXPECT_EQ(a.out, b.out);
}

TEST(Cli, EmptyPrerequisiteFailsWithoutWritingFiles) {
    fs::path dir = scratch_dir("empty");
    fs::path orbits = dir / "orbits.tsv";
    std::ofstream(orbits) << "";
    fs::path out = dir / "out";
    CliRun r = run({"--out", out.string(), "report", "tables", "--orbits", orbits.string()});
    EXPECT_EQ(r.code, kExitCheckFailed);
    EXPECT_NE(r.err.find("error:"), std::string::npos);
    EXPECT_FALSE(fs::exists(out));
    fs::remove_all(dir);
}

TEST(Cli, FourCubeSecondaryFacetsNeedAnInequality) {
    CliRun r = run({"secondary", "facets", "--n", "4"});
    EXPECT_EQ(r.code, kExitCheckFailed);
    EXPECT_NE(r.err.find("error:"), std::string::npos);
    CliRun s = run({"secondary", "facets", "--n", "4", "--inequality", "x0000 + x0001 >= 0"});
    EXPECT_EQ(s.code, kExitOk) << s.err;
    EXPECT_NE(s.out.find("cells\t2"), std::string::npos);
}

TEST(Cli, SubdivideAndTightSpanFromWeightFiles) {
    fs::path dir = scratch_dir("weights");
    fs::path w = dir / "w.txt";
    std::ofstream(w) << "0 0 0 1 0 1 1 3\n";
    CliRun r = run({"tri", "subdivide", "--n", "3", "--weights", w.string()});
    EXPECT_EQ(r.code, kExitOk) << r.err;
    EXPECT_NE(r.out.find("check volume: ok"), std::string::npos);
    CliRun t = run({"tri", "tightspan", "--n", "3", "--weights", w.string()});
    EXPECT_EQ(t.code, kExitOk) << t.err;
    EXPECT_NE(t.out.find("fvector\t"), std::string::npos);
    CliRun d = run({"tri", "dequiv", "--n", "3", "--weights", w.string()});
    // Weights tied on the support are reported as an error, not a usage problem.
    EXPECT_NE(d.code, kExitUsage);
    fs::remove_all(dir);
}

TEST(Store, DetectsCorruptionAndRecomputes) {
    fs::path dir = scratch_dir("store");
    int computed = 0;
    auto compute = [&] {
        ++computed;
        return std::string("payload");
    };
    {
        ArtifactStore s(dir);
        EXPECT_EQ(s.fetch("entry.bin", compute), "payload");
        EXPECT_EQ(s.fetch("entry.bin", compute), "payload");
        EXPECT_EQ(computed, 1);
        EXPECT_EQ(*s.digest("entry.bin"), sha256_hex("payload"));
    }
    std::ofstream(dir / "entry.bin", std::ios::trunc) << "tampered";
    std::ostringstream log;
    ArtifactStore s(dir, &log);
    EXPECT_EQ(s.fetch("entry.bin", compute), "payload");
    EXPECT_EQ(computed, 2);
    ASSERT_EQ(s.repaired().size(), 1u);
    EXPECT_NE(log.str().find("failed verification"), std::string::npos);
    EXPECT_EQ(slurp(dir / "entry.bin"), "payload");
    // A decoder may reject bytes whose digest is intact.
    ArtifactStore t(dir);
    EXPECT_EQ(t.fetch("entry.bin", compute, [](const std::string&) { return false; }), "payload");
    EXPECT_EQ(computed, 3);
    fs::remove_all(dir);
}

TEST(Store, CacheDirectoryResolution) {
    ::setenv(kCacheEnv, "/tmp/from-env", 1);
    EXPECT_EQ(resolve_cache_dir(std::nullopt), fs::path("/tmp/from-env"));
    EXPECT_EQ(resolve_cache_dir(std::string("/tmp/from-flag")), fs::path("/tmp/from-flag"));
    ::unsetenv(kCacheEnv);
    EXPECT_FALSE(resolve_cache_dir(std::nullopt).has_value());
}

TEST(Store, Sha256KnownAnswer) {
    EXPECT_EQ(sha256_hex(""), "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
    EXPECT_EQ(sha256_hex("abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST(Reports, OrbitListingRoundTripsInBothFormats) {
    std::vector<TermOrbit> orbits;
    ExponentVector a{0, 0, 0, 2, 0, 2, 3, 5, 7, 1, 1, 1, 1, 1, 0, 0};
    ExponentVector b{1, 2, 2, 1, 2, 1, 1, 2, 2, 1, 1, 2, 1, 2, 2, 1};
    orbits.push_back({a, Integer(-2), 192, 3});
    orbits.push_back({b, Integer(112464), 2, 11});
    for (bool bracketed : {false, true}) {
        auto back = parse_orbit_listing(orbit_listing(orbits, bracketed));
        ASSERT_EQ(back.size(), 2u);
        for (std::size_t i = 0; i < 2; ++i) {
            EXPECT_EQ(back[i].representative, orbits[i].representative);
            EXPECT_EQ(back[i].coefficient, orbits[i].coefficient);
            EXPECT_EQ(back[i].size, orbits[i].size);
            EXPECT_EQ(back[i].face_dimension, orbits[i].face_dimension);
        }
    }
    EXPECT_EQ(paper_orbit_line(a, Integer(-2), 3, 192), "[[0, 0, 0, 2, 0, 2, 3, 5, 7, 1, 1, 1, 1, 1, 0, 0], -2, 3, 192]");
}

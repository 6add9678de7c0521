#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "fishburn/cache.hpp"
#include "fishburn/cli.hpp"
#include "fishburn/oeis.hpp"

using namespace fishburn;

namespace {

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string temp_file(const char* name) {
    return (std::filesystem::temp_directory_path() / name).string();
}

}  // namespace

TEST_CASE("count command") {
    const auto r = run_cli({"count", "--base", "fishburn", "--n", "8", "--no-cache",
                            "--no-timing"});
    CHECK(r.code == 0);
    CHECK(r.out.find("\"count\":\"5335\"") != std::string::npos);

    const auto csv = run_cli({"count", "--base", "all", "--avoid", "21", "--n-range", "0..3",
                              "--format", "csv", "--no-cache"});
    CHECK(csv.code == 0);
    CHECK(csv.out == "0,1\n1,1\n2,1\n3,1\n");
}

TEST_CASE("count output is reproducible") {
    const std::vector<std::string> args{"count", "--base",     "fishburn", "--avoid", "321,1423",
                                        "--n",   "7",          "--no-cache", "--no-timing"};
    const auto a = run_cli(args);
    const auto b = run_cli(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("poly command") {
    const auto r = run_cli({"poly", "--base", "fishburn", "--avoid", "123", "--n", "2", "--stats",
                            "inv,ltrmax,afterone", "--no-cache", "--no-timing"});
    CHECK(r.code == 0);
    // qt + t^2 r, exponents ascending lexicographically in (q,t,r)
    CHECK(r.out.find("{\"q\":0,\"t\":2,\"r\":1,\"coeff\":\"1\"}") != std::string::npos);
    CHECK(r.out.find("{\"q\":1,\"t\":1,\"r\":0,\"coeff\":\"1\"}") != std::string::npos);

    const auto split = run_cli({"poly", "--label-split", "--tree", "2143", "--n", "3", "--stats",
                                "inv,ltrmax", "--no-cache", "--no-timing"});
    CHECK(split.code == 0);
    CHECK(split.out.find("(1a)") != std::string::npos);
    CHECK(split.out.find("(1*)") != std::string::npos);
}

TEST_CASE("seqcount command") {
    const auto r = run_cli({"seqcount", "--kind", "ascent", "--avoid", "101", "--n", "6",
                            "--no-cache", "--no-timing"});
    CHECK(r.code == 0);
    CHECK(r.out.find("\"count\":\"132\"") != std::string::npos);
}

TEST_CASE("bijection commands") {
    const auto g = run_cli({"gmap", "--perm", "4157326"});
    CHECK(g.code == 0);
    CHECK(g.out.find("\"gmap\":\"0110132\"") != std::string::npos);

    const auto inv = run_cli({"gmap", "--inverse", "--seq", "0110132"});
    CHECK(inv.code == 0);
    CHECK(inv.out.find("\"perm\":\"4157326\"") != std::string::npos);

    const auto sites = run_cli({"activesites", "--perm", "415326"});
    CHECK(sites.code == 0);
    CHECK(sites.out.find("[0,2,3,5,6]") != std::string::npos);

    const auto label = run_cli({"label", "--tree", "1423", "--perm", "21"});
    CHECK(label.code == 0);
    CHECK(label.out.find("\"label\":\"(1)\"") != std::string::npos);

    // a non-Fishburn input is a computation error
    const auto bad = run_cli({"gmap", "--perm", "35142"});
    CHECK(bad.code == 2);
}

TEST_CASE("series command") {
    const auto r = run_cli({"series", "--gf", "Bn_beta", "--k", "1", "--order", "3",
                            "--no-timing"});
    CHECK(r.code == 0);
    CHECK(r.out.find("\"value\":\"1\"") != std::string::npos);

    const auto at = run_cli({"series", "--gf", "T_1423", "--order", "4", "--at", "q=1,t=1",
                             "--no-timing"});
    CHECK(at.code == 0);
    CHECK(at.out.find("\"value\":\"4\"") != std::string::npos);  // F_5 - 4 at n = 3

    const auto unknown = run_cli({"series", "--gf", "nope", "--order", "3"});
    CHECK(unknown.code == 1);
    CHECK(unknown.err.find("registry") != std::string::npos);
}

TEST_CASE("usage errors") {
    CHECK(run_cli({"count", "--base", "fishburn"}).code == 1);           // no --n
    CHECK(run_cli({"count", "--base", "what", "--n", "3"}).code == 1);   // bad base
    const auto badpat = run_cli({"count", "--avoid", "3x1", "--n", "3"});
    CHECK(badpat.code == 1);
    CHECK(badpat.err.find("3x1") != std::string::npos);
    const auto f_literal = run_cli({"count", "--avoid", "f", "--n", "3"});
    CHECK(f_literal.code == 1);
    CHECK(f_literal.err.find("--base fishburn") != std::string::npos);
    CHECK(run_cli({}).code == 1);
    CHECK(run_cli({"verify", "--check", "T_NOPE"}).code == 1);
}

TEST_CASE("verify command") {
    const auto r = run_cli({"verify", "--check", "T_TABLE1", "--n-max", "6", "--no-timing"});
    CHECK(r.code == 0);
    CHECK(r.out.find("T_TABLE1 theorem n=[0..6] AllEqual") != std::string::npos);
}

TEST_CASE("cache round trip, hits, and invalidation") {
    const std::string path = temp_file("fishburn_cache_test.json");
    std::filesystem::remove(path);
    const std::vector<std::string> args{"count", "--base", "fishburn", "--n",        "6",
                                        "--cache", path,   "--no-timing"};
    const auto first = run_cli(args);
    CHECK(first.code == 0);
    CHECK(first.err.find("cache:miss") != std::string::npos);
    const auto second = run_cli(args);
    CHECK(second.code == 0);
    CHECK(second.err.find("cache:hit") != std::string::npos);
    CHECK(first.out == second.out);

    // direct API: values survive a round trip exactly
    {
        ResultCache cache(path);
        CHECK(cache.load());
        CHECK(cache.get("count|fishburn", 6) == std::string("217"));
        cache.put("count|fishburn", 99, "123456789012345678");
        cache.save();
        ResultCache reread(path);
        CHECK(reread.load());
        CHECK(reread.get("count|fishburn", 99) == std::string("123456789012345678"));
    }

    // a version bump invalidates entries
    {
        ResultCache stale(path, "0.0.0-other");
        CHECK_FALSE(stale.load());
        CHECK_FALSE(stale.get("count|fishburn", 6).has_value());
    }

    // corrupt cache files are discarded, not fatal
    {
        std::ofstream corrupt(path);
        corrupt << "{ not json";
    }
    const auto after_corrupt = run_cli(args);
    CHECK(after_corrupt.code == 0);
    CHECK(after_corrupt.err.find("cache:miss") != std::string::npos);
    std::filesystem::remove(path);
}

TEST_CASE("offline OEIS lookup") {
    const std::string path = temp_file("fishburn_oeis_fixture_test.json");
    {
        std::ofstream f(path);
        f << R"({"A022493":[1,1,2,5,15,53,217,1014,5335,31240],
                "A000045":[1,1,2,3,5,8,13,21]})";
    }
    const auto hits = oeis_offline_lookup({2, 5, 15, 53}, path);
    CHECK(hits == std::vector<std::string>{"A022493"});
    const auto both = oeis_offline_lookup({1, 1, 2}, path);
    CHECK(both.size() == 2);
    CHECK(oeis_offline_lookup({9, 9, 9}, path).empty());
    CHECK_THROWS_AS(oeis_offline_lookup({}, path), std::invalid_argument);
    CHECK_THROWS_AS(oeis_offline_lookup({1, 2}, "/no/such/fixture.json"), std::runtime_error);

    const auto cli_hit = run_cli({"oeis", "--terms", "1,1,2,5,15,53,217,1014,5335", "--offline",
                                  path});
    CHECK(cli_hit.code == 0);
    CHECK(cli_hit.out.find("A022493") != std::string::npos);
    CHECK(run_cli({"oeis", "--offline", path}).code == 1);  // no terms
    std::filesystem::remove(path);
}

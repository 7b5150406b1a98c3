#include <doctest.h>
#include <json.hpp>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
};

Run run(const std::string& args) {
    std::string cmd = std::string(INNC_CLI_PATH) + " " + args + " 2>&1";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::string out;
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
    int status = pclose(p);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

struct ScratchDir {
    fs::path dir = fs::temp_directory_path() / ("innc_cli_test_" + std::to_string(::getpid()));
    ~ScratchDir() {
        std::error_code ec;
        fs::remove_all(dir, ec);
    }
};

fs::path scratch(const std::string& name) {
    static ScratchDir s;
    fs::create_directories(s.dir);
    return s.dir / name;
}

nlohmann::json read_fixture(const std::string& name) {
    std::ifstream in(fs::path(INNC_FIXTURE_DIR) / (name + ".json"));
    return nlohmann::json::parse(in);
}

}  // namespace

TEST_CASE("h1 output") {
    auto r = run("h1 --fixture config_8_4");
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["h1"]["free_rank"] == 7);
    CHECK(j["h1"]["torsion"].empty());
    auto t = run("--table h1 --fixture projective_degrees_2_4");
    CHECK(t.code == 0);
    CHECK(t.out.find("Z") != std::string::npos);
}

TEST_CASE("json output is byte-identical across runs") {
    for (const char* args : {"charvar --fixture config_8_4", "polytope global --fixture ordinary_point_r5",
                             "zeta hodge --fixture concurrent_lines_r4", "charvar --fixture generic_cone_r4_n2 --order-bound 3"}) {
        auto a = run(args), b = run(args);
        CHECK(a.code == 0);
        CHECK(a.out == b.out);
        CHECK_NOTHROW((void)nlohmann::json::parse(a.out));
    }
}

TEST_CASE("zeta limit values") {
    auto r = run("zeta limit --fixture concurrent_lines_r4 --chi 1/2,1/2,1/2,1/2");
    REQUIRE(r.code == 0);
    CHECK(nlohmann::json::parse(r.out)["limits"][0]["value"] == 2);
    CHECK(run("zeta limit --fixture concurrent_lines_r3 --chi 0,0,0").code == 1);
    CHECK(run("zeta limit --fixture concurrent_lines_r3 --chi 1/2,1/2").code == 1);
    CHECK(run("zeta limit --fixture concurrent_lines_r3 --chi abc").code != 0);
}

TEST_CASE("usage errors") {
    CHECK(run("h1").code == 2);
    CHECK(run("polytope nonsense --fixture ordinary_point_r3").code == 2);
    CHECK(run("h1 --fixture does_not_exist").code == 2);
    CHECK(run("h1 --fixture concurrent_lines_r3").code != 0);
}

TEST_CASE("malformed fixtures") {
    auto bad = scratch("broken.json");
    std::ofstream(bad) << "{ \"name\": ";
    CHECK(run("h1 --fixture " + bad.string()).code == 2);
    auto j = read_fixture("projective_degrees_1_2");
    j["kind"] = "no-such-kind";
    auto odd = scratch("odd_kind.json");
    std::ofstream(odd) << j.dump();
    CHECK(run("h1 --fixture " + odd.string()).code == 2);
    j = read_fixture("projective_degrees_1_2");
    j["payload"].erase("divisor");
    auto missing = scratch("missing.json");
    std::ofstream(missing) << j.dump();
    CHECK(run("h1 --fixture " + missing.string()).code == 2);
}

TEST_CASE("selftest") {
    auto r = run("selftest");
    CHECK(r.code == 0);
    CHECK(r.out.find("FAIL") == std::string::npos);
    CHECK(run("--selftest").code == 0);

    auto j = read_fixture("ordinary_point_r3");
    j["name"] = "corrupted";
    j["expected"]["faces"][0] = "x1 + x2 + x3 = 2";
    auto bad = scratch("corrupted.json");
    std::ofstream(bad) << j.dump();
    auto f = run("selftest " + bad.string());
    CHECK(f.code == 1);
    CHECK(f.out.find("FAIL") != std::string::npos);

    j.erase("expected");
    auto skip = scratch("no_expected.json");
    std::ofstream(skip) << j.dump();
    auto s = run("selftest " + skip.string());
    CHECK(s.code == 0);
    CHECK(s.out.find("SKIP") != std::string::npos);
}

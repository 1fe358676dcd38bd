#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sys/wait.h>

#include <catch2/catch.hpp>

#include <json.hpp>

#ifndef HDEG_CLI_PATH
#error "HDEG_CLI_PATH must point at the built command-line binary"
#endif

namespace {

namespace fs = std::filesystem;

struct Workspace {
    fs::path dir;
    Workspace() {
        dir = fs::temp_directory_path() / ("hdegcli." + std::to_string(::getpid()));
        fs::create_directories(dir);
    }
    ~Workspace() { fs::remove_all(dir); }

    fs::path write(const std::string& name, const std::string& text) const {
        fs::path p = dir / name;
        std::ofstream(p) << text;
        return p;
    }
};

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run_cli(const Workspace& ws, const std::string& args) {
    fs::path out = ws.dir / "out.txt";
    std::string cmd = std::string(HDEG_CLI_PATH) + " " + args + " > " + out.string() + " 2>&1";
    int status = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream in(out);
    r.output.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    return r;
}

const char* good_instance = R"(
ring S vars X, Y, Z;
ideal I = X*Y, X*Z;
module M = quotient(S, I);
paramideal Q = X + Y, Z;
)";

} // namespace

TEST_CASE("coeffs runs and prints a report", "[cli]") {
    Workspace ws;
    fs::path inst = ws.write("good.hdeg", good_instance);
    RunResult r = run_cli(ws, "coeffs " + inst.string());
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("command: coeffs") != std::string::npos);
    CHECK(r.output.find("e:") != std::string::npos);
}

TEST_CASE("json output is machine parseable", "[cli]") {
    Workspace ws;
    fs::path inst = ws.write("good.hdeg", good_instance);
    RunResult r = run_cli(ws, "coeffs --format json " + inst.string());
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.output);
    CHECK(j["command"] == "coeffs");
    CHECK(j["results"]["dim"] == 2);
    CHECK(j["results"]["e"][0] == "1");
    CHECK(j["provenance"]["degree_cap"] == 40);
}

TEST_CASE("missing and malformed input exit with code 3", "[cli]") {
    Workspace ws;
    RunResult missing = run_cli(ws, "coeffs " + (ws.dir / "nope.hdeg").string());
    CHECK(missing.exit_code == 3);
    fs::path empty = ws.write("empty.hdeg", "");
    CHECK(run_cli(ws, "coeffs " + empty.string()).exit_code == 3);
    fs::path bad = ws.write("bad.hdeg", "ring S vars X;\nnonsense keyword");
    CHECK(run_cli(ws, "coeffs " + bad.string()).exit_code == 3);
}

TEST_CASE("wrong parameter count exits with code 3", "[cli]") {
    Workspace ws;
    fs::path inst = ws.write("short.hdeg", R"(
ring S vars X, Y, Z;
ideal I = X*Y, X*Z;
module M = quotient(S, I);
paramideal Q = Z;
)");
    RunResult r = run_cli(ws, "coeffs " + inst.string());
    CHECK(r.exit_code == 3);
    CHECK(r.output.find("dimension") != std::string::npos);
}

TEST_CASE("theorem verdicts map to exit codes", "[cli]") {
    Workspace ws;
    fs::path dim2 = ws.write("cm.hdeg", R"(
ring S vars X, Y;
ideal I = 0;
module M = quotient(S, I);
paramideal Q = X, Y;
)");
    // holds -> 0
    CHECK(run_cli(ws, "check --theorem prop31 " + dim2.string()).exit_code == 0);
    // dim mismatch -> hypotheses-not-met -> 2
    CHECK(run_cli(ws, "check --theorem thm33 " + dim2.string()).exit_code == 2);
    // unknown theorem -> 3
    CHECK(run_cli(ws, "check --theorem thm99 " + dim2.string()).exit_code == 3);
}

TEST_CASE("degree cap exits with code 4", "[cli]") {
    Workspace ws;
    fs::path inst = ws.write("cap.hdeg", R"(
ring S vars X, Y, Z;
ideal I = X^3 - Y*Z^2, Y^3 - X*Z^2;
module M = quotient(S, I);
paramideal Q = Z;
)");
    RunResult r = run_cli(ws, "coeffs --degree-cap 2 " + inst.string());
    CHECK(r.exit_code == 4);
}

TEST_CASE("dseq and unmixed subcommands", "[cli]") {
    Workspace ws;
    fs::path inst = ws.write("good.hdeg", good_instance);
    CHECK(run_cli(ws, "dseq " + inst.string()).exit_code == 0);
    // the plane-plus-line module is mixed -> exit 1
    CHECK(run_cli(ws, "unmixed " + inst.string()).exit_code == 1);
    RunResult t = run_cli(ws, "torsion --i 1 " + inst.string());
    CHECK(t.exit_code == 0);
    CHECK(t.output.find("torsion") != std::string::npos);
}

TEST_CASE("cache directory is honored and reported", "[cli]") {
    Workspace ws;
    fs::path inst = ws.write("good.hdeg", good_instance);
    fs::path cachedir = ws.dir / "cache";
    RunResult cold =
        run_cli(ws, "coeffs --format json --cache " + cachedir.string() + " " + inst.string());
    REQUIRE(cold.exit_code == 0);
    auto jc = nlohmann::json::parse(cold.output);
    REQUIRE(jc.contains("cache"));
    CHECK(jc["cache"]["misses"].get<long>() > 0);

    RunResult warm =
        run_cli(ws, "coeffs --format json --cache " + cachedir.string() + " " + inst.string());
    REQUIRE(warm.exit_code == 0);
    auto jw = nlohmann::json::parse(warm.output);
    CHECK(jw["cache"]["hits"].get<long>() > 0);
    CHECK(jw["cache"]["misses"].get<long>() == 0);

    // reports agree with the uncached run except for cache stats and timings
    RunResult plain = run_cli(ws, "coeffs --format json " + inst.string());
    auto jp = nlohmann::json::parse(plain.output);
    for (auto* j : {&jc, &jw, &jp}) {
        j->erase("cache");
        j->erase("timings");
    }
    CHECK(jc == jp);
    CHECK(jw == jp);
}

TEST_CASE("identical invocations yield identical reports", "[cli]") {
    Workspace ws;
    fs::path inst = ws.write("good.hdeg", good_instance);
    auto a = nlohmann::json::parse(run_cli(ws, "hdeg --format json " + inst.string()).output);
    auto b = nlohmann::json::parse(run_cli(ws, "hdeg --format json " + inst.string()).output);
    a.erase("timings");
    b.erase("timings");
    CHECK(a == b);
}

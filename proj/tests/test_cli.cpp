#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"

namespace {

namespace fs = std::filesystem;

const fs::path& work_dir() {
    static const fs::path dir = [] {
        auto d = fs::temp_directory_path() / "asakit-cli-test";
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

fs::path write_file(const std::string& name, const std::string& text) {
    const fs::path path = work_dir() / name;
    std::ofstream out(path, std::ios::binary);
    out << text;
    return path;
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run_cli(const std::string& args) {
    const fs::path log = work_dir() / "stdout.txt";
    const std::string command =
        std::string(ASAKIT_CLI_PATH) + " " + args + " > " + log.string() + " 2>&1";
    const int status = std::system(command.c_str());
    RunResult result;
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    result.output = slurp(log);
    return result;
}

fs::path ball_spec() {
    static const fs::path p = write_file("ball.json", R"({"dim": 3, "kind": "ball"})");
    return p;
}

fs::path cube_spec() {
    static const fs::path p = write_file("cube.json", R"({"dim": 3, "kind": "polytope",
        "vertices": [[0.5,0.5,0.5],[0.5,0.5,-0.5],[0.5,-0.5,0.5],[0.5,-0.5,-0.5],
                     [-0.5,0.5,0.5],[-0.5,0.5,-0.5],[-0.5,-0.5,0.5],[-0.5,-0.5,-0.5]]})");
    return p;
}

}  // namespace

TEST_CASE("compute succeeds on a ball and reports agreement") {
    const auto r = run_cli("compute --body " + ball_spec().string() + " --p 2 --resolution 4");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("\"schema\": \"asa-kit/1\"") != std::string::npos);
    CHECK(r.output.find("\"pass\": true") != std::string::npos);
    CHECK(r.output.find("value_boundary") != std::string::npos);
}

TEST_CASE("compute is byte-identical across repeated runs") {
    const fs::path out1 = work_dir() / "rep1.json";
    const fs::path out2 = work_dir() / "rep2.json";
    const std::string base = "compute --body " + ball_spec().string() +
                             " --p 1 --resolution 4 --seed 11 --out ";
    CHECK(run_cli(base + out1.string()).exit_code == 0);
    CHECK(run_cli(base + out2.string()).exit_code == 0);
    const std::string a = slurp(out1), b = slurp(out2);
    CHECK(!a.empty());
    CHECK(a == b);
}

TEST_CASE("table formats") {
    const auto csv = run_cli("compute --body " + ball_spec().string() +
                             " --resolution 4 --format csv");
    CHECK(csv.exit_code == 0);
    CHECK(csv.output.rfind("value_boundary,value_sphere,", 0) == 0);

    const auto tsv = run_cli("verify --body " + cube_spec().string() +
                             " --resolution 2 --format tsv");
    CHECK(tsv.exit_code == 0);
    CHECK(tsv.output.rfind("name\tlhs\trhs\t", 0) == 0);
    CHECK(tsv.output.find("polytope_zero") != std::string::npos);
}

TEST_CASE("optimizer trace export") {
    const fs::path trace = work_dir() / "trace.csv";
    const auto r = run_cli("compute --body " + cube_spec().string() +
                           " --resolution 2 --trace-out " + trace.string());
    CHECK(r.exit_code == 0);
    const std::string text = slurp(trace);
    CHECK(text.rfind("iteration,value", 0) == 0);
    CHECK(text.find('\n') != std::string::npos);
}

TEST_CASE("tolerance overrides can flip a verdict") {
    const auto quartic = write_file("quartic.json", R"({"dim": 3, "kind": "quartic"})");
    const auto strict = run_cli("compute --body " + quartic.string() +
                                " --resolution 4 --tolerance agreement=1e-12");
    CHECK(strict.exit_code == 1);
    CHECK(strict.output.find("\"pass\": false") != std::string::npos);

    const auto loose = run_cli("verify --body " + ball_spec().string() +
                               " --resolution 4 --tolerance homogeneity_double=0.5");
    CHECK(loose.exit_code == 0);
}

TEST_CASE("spec and argument errors exit with 2") {
    CHECK(run_cli("compute --body " + ball_spec().string() + " --p 0").exit_code == 2);
    CHECK(run_cli("compute --body " + work_dir().string() + "/missing.json").exit_code == 2);
    CHECK(run_cli("compute").exit_code == 2);

    const auto bad_field =
        write_file("bad_field.json", R"({"dim": 3, "kind": "ball", "radiu": 2.0})");
    const auto r = run_cli("compute --body " + bad_field.string());
    CHECK(r.exit_code == 2);

    const auto bad_json = write_file("bad_json.json", "{\"dim\": 3,");
    CHECK(run_cli("compute --body " + bad_json.string()).exit_code == 2);

    CHECK(run_cli("coarea --body " + cube_spec().string()).exit_code == 2);
}

TEST_CASE("numerical domain errors exit with 3") {
    const auto off_center = write_file(
        "off_center.json", R"({"dim": 3, "kind": "ball", "center": [5.0, 0.0, 0.0]})");
    const auto r = run_cli("compute --body " + off_center.string() + " --p 2 --resolution 3");
    CHECK(r.exit_code == 3);
    CHECK(r.output.find("numerical error") != std::string::npos);
}

TEST_CASE("sweep contracts on a smooth body") {
    const auto r = run_cli("sweep --body " + ball_spec().string() + " --resolution 3");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("\"ladder\"") != std::string::npos);
    CHECK(r.output.find("\"pass\": true") != std::string::npos);
}

TEST_CASE("inscribed polytope demo") {
    const auto r = run_cli("demo-usc --body " + ball_spec().string() + " --resolution 4");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("\"asa_polytope\": 0.0") != std::string::npos);
    CHECK(r.output.find("\"pass\": true") != std::string::npos);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace {

std::string cli_path() {
    const char* path = std::getenv("HENON_CLI");
    REQUIRE_MESSAGE(path != nullptr, "HENON_CLI must point at the built binary");
    return path;
}

std::string scratch_dir() {
    static std::string dir = [] {
        char tmpl[] = "/tmp/henon_cli_test_XXXXXX";
        REQUIRE(mkdtemp(tmpl) != nullptr);
        return std::string(tmpl);
    }();
    return dir;
}

struct RunResult {
    int exit_code;
    std::string out;
    std::string err;
};

RunResult run_cli(const std::string& args) {
    std::string out_file = scratch_dir() + "/stdout.txt";
    std::string err_file = scratch_dir() + "/stderr.txt";
    std::string command = cli_path() + " " + args + " > " + out_file + " 2> " + err_file;
    int status = std::system(command.c_str());
    RunResult result;
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    auto slurp = [](const std::string& path) {
        std::ifstream in(path, std::ios::binary);
        std::stringstream ss;
        ss << in.rdbuf();
        return ss.str();
    };
    result.out = slurp(out_file);
    result.err = slurp(err_file);
    return result;
}

std::string write_file(const std::string& name, const std::string& contents) {
    std::string path = scratch_dir() + "/" + name;
    std::ofstream out(path, std::ios::binary);
    out << contents;
    return path;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

const char* kSingle = R"({"factors": [
  {"degree": 2, "coefficients": ["0", "0"], "delta": ["1/2", "0"]}]})";

const char* kTriple = R"({"factors": [
  {"degree": 2, "coefficients": ["0", "0"], "delta": ["1/2", "0"]},
  {"degree": 2, "coefficients": ["1/3", "0"], "delta": ["1/3", "0"]},
  {"degree": 2, "coefficients": ["-1/2", "0"], "delta": ["2/5", "0"]}]})";

}  // namespace

TEST_CASE("system command prints the collapsed single-factor system") {
    std::string comp = write_file("single.json", kSingle);
    auto result = run_cli("system -i " + comp);
    CHECK(result.exit_code == 0);
    CHECK(result.out.find("y1^2 - 3/2*y1") != std::string::npos);
}

TEST_CASE("validation failures exit with code 2") {
    std::string bad = write_file("bad.json", "{\"factors\": [ {\"degree\": 2,\n");
    auto malformed = run_cli("system -i " + bad);
    CHECK(malformed.exit_code == 2);
    CHECK(malformed.err.find("line") != std::string::npos);
    CHECK(malformed.err.find("column") != std::string::npos);

    std::string zero_delta = write_file(
        "zero_delta.json",
        R"({"factors": [{"degree": 2, "coefficients": ["0", "0"], "delta": ["0", "0"]}]})");
    auto zdelta = run_cli("system -i " + zero_delta);
    CHECK(zdelta.exit_code == 2);
    CHECK(zdelta.err.find("delta must be nonzero") != std::string::npos);

    auto missing = run_cli("system -i " + scratch_dir() + "/does_not_exist.json");
    CHECK(missing.exit_code == 2);

    std::string low_degree = write_file(
        "low_degree.json",
        R"({"factors": [{"degree": 1, "coefficients": ["0"], "delta": ["1", "0"]}]})");
    CHECK(run_cli("system -i " + low_degree).exit_code == 2);
}

TEST_CASE("certificate commands succeed on a three-factor composition") {
    std::string comp = write_file("triple.json", kTriple);

    auto groebner = run_cli("groebner -i " + comp);
    CHECK(groebner.exit_code == 0);
    CHECK(nlohmann::json::parse(groebner.out)["is_groebner"] == true);

    auto phi = run_cli("phi-check -i " + comp);
    CHECK(phi.exit_code == 0);
    auto phi_doc = nlohmann::json::parse(phi.out);
    CHECK(phi_doc["lambda"] == "8");  // defaults to the degree
    CHECK(phi_doc["result"]["is_member"] == false);

    auto shifted = run_cli("shifted-phi-check -i " + comp + " --alpha 1/3");
    CHECK(shifted.exit_code == 0);
    CHECK(nlohmann::json::parse(shifted.out)["result"]["is_member"] == false);

    auto lemma = run_cli("lemma52 -i " + comp + " --pivot 2 --alpha 1/5 --seed 99");
    CHECK(lemma.exit_code == 0);
    auto lemma_doc = nlohmann::json::parse(lemma.out);
    CHECK(lemma_doc["identity_ok"] == true);
    CHECK(lemma_doc["leading_match_ok"] == true);
    CHECK(lemma_doc["difference"] == "0");
}

TEST_CASE("rotation option cycles the factors before running") {
    std::string comp = write_file("triple3.json", kTriple);

    auto base = run_cli("system -i " + comp);
    auto rotated = run_cli("system -i " + comp + " --rotate 1");
    CHECK(rotated.exit_code == 0);
    auto base_doc = nlohmann::json::parse(base.out);
    auto rot_doc = nlohmann::json::parse(rotated.out);
    CHECK(rot_doc["rotation"] == 1);
    // conjugation invariants survive, the system itself differs
    CHECK(base_doc["degree"] == rot_doc["degree"]);
    CHECK(base_doc["jacobian"] == rot_doc["jacobian"]);
    CHECK(base_doc["system"] != rot_doc["system"]);
    // the rotated certificate still reports non-membership
    auto phi = run_cli("phi-check -i " + comp + " --rotate 2");
    CHECK(phi.exit_code == 0);
    CHECK(nlohmann::json::parse(phi.out)["result"]["is_member"] == false);

    CHECK(run_cli("system -i " + comp + " --rotate 3").exit_code == 2);
}

TEST_CASE("reports are byte-identical across reruns with the same seed") {
    std::string comp = write_file("triple2.json", kTriple);

    std::string fix1 = scratch_dir() + "/fix1.json";
    std::string fix2 = scratch_dir() + "/fix2.json";
    CHECK(run_cli("fixpoints -i " + comp + " --seed 42 -o " + fix1).exit_code == 0);
    CHECK(run_cli("fixpoints -i " + comp + " --seed 42 -o " + fix2).exit_code == 0);
    std::string first = slurp(fix1);
    CHECK_FALSE(first.empty());
    CHECK(first == slurp(fix2));

    std::string scan1 = scratch_dir() + "/scan1.json";
    std::string scan2 = scratch_dir() + "/scan2.json";
    CHECK(run_cli("prop51-scan --samples 4 --seed 7 -o " + scan1).exit_code == 0);
    CHECK(run_cli("prop51-scan --samples 4 --seed 7 -o " + scan2).exit_code == 0);
    CHECK(slurp(scan1) == slurp(scan2));

    std::string single = write_file("single2.json", kSingle);
    std::string args = " --origin 1.5,0,1.5,0 --extent -2,2,-2,2 --resolution 24x24";
    std::string pgm1 = scratch_dir() + "/r1.pgm";
    std::string pgm2 = scratch_dir() + "/r2.pgm";
    std::string csv1 = scratch_dir() + "/r1.csv";
    std::string csv2 = scratch_dir() + "/r2.csv";
    CHECK(run_cli("render -i " + single + " -o " + pgm1 + " --csv " + csv1 + args).exit_code == 0);
    CHECK(run_cli("render -i " + single + " -o " + pgm2 + " --csv " + csv2 + args + " --threads 4")
              .exit_code == 0);
    CHECK(slurp(pgm1) == slurp(pgm2));
    CHECK(slurp(csv1) == slurp(csv2));
    CHECK(slurp(pgm1).substr(0, 3) == "P5\n");
}

TEST_CASE("scan handles degenerate inputs") {
    auto empty = run_cli("prop51-scan --samples 0");
    CHECK(empty.exit_code == 0);
    auto empty_doc = nlohmann::json::parse(empty.out);
    CHECK(empty_doc["samples"] == 0);
    CHECK(empty_doc["violations"] == 0);

    // a single-factor input is iterated up to three factors, with a note
    std::string single = write_file("single3.json", kSingle);
    auto cubed = run_cli("prop51-scan -i " + single);
    CHECK(cubed.exit_code == 0);
    auto cubed_doc = nlohmann::json::parse(cubed.out);
    CHECK(cubed_doc.contains("note"));
    CHECK(cubed_doc["samples"] == 1);

    CHECK(run_cli("prop51-scan --delta-bound 2").exit_code == 2);
}

TEST_CASE("green command evaluates both potentials") {
    std::string comp = write_file("single4.json", kSingle);
    auto forward = run_cli("green -i " + comp + " --point 0,0,25,0");
    CHECK(forward.exit_code == 0);
    auto fdoc = nlohmann::json::parse(forward.out);
    CHECK(fdoc["escaped"] == true);
    CHECK(std::abs(fdoc["value"].get<double>() - std::log(25.0)) < 1e-6);

    auto bounded = run_cli("green -i " + comp + " --point 0,0,0,0");
    auto bdoc = nlohmann::json::parse(bounded.out);
    CHECK(bdoc["value"] == 0.0);
    CHECK(bdoc["escaped"] == false);

    auto backward = run_cli("green -i " + comp + " --minus --point 25,0,0,0");
    auto mdoc = nlohmann::json::parse(backward.out);
    CHECK(mdoc["operation"] == "green_minus");
    CHECK(mdoc["value"].get<double>() > 0.0);
}

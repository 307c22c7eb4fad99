#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <sys/wait.h>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct CliResult {
    int exit_code;
    std::string out;
};

CliResult run_cli(const std::string& args) {
    std::string cmd = std::string(CI610_CLI_PATH) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf{};
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    int status = pclose(pipe);
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {code, out};
}

std::string fixture(const std::string& name) {
    return std::string(CI610_FIXTURE_DIR) + "/" + name;
}

std::string read_golden(const std::string& name) {
    std::ifstream in(std::string(CI610_GOLDEN_DIR) + "/" + name);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void check_against_golden(const std::string& args, const std::string& golden_name,
                          int expected_code = 0) {
    auto res = run_cli(args);
    CHECK(res.exit_code == expected_code);
    CHECK(res.out == read_golden(golden_name));
}

} // namespace

TEST_CASE("golden: hilbert") {
    check_against_golden("hilbert --max-degree 10", "hilbert.json");
}

TEST_CASE("golden: validate") {
    check_against_golden("validate -i " + fixture("diagonal.txt"), "validate_diagonal.json");
    check_against_golden("validate -i " + fixture("invalid_no_z0sq.txt"),
                         "validate_invalid.json", 2);
}

TEST_CASE("golden: normalize") {
    check_against_golden("normalize -i " + fixture("mixed_terms.txt"), "normalize_mixed.json");
}

TEST_CASE("golden: base-locus") {
    check_against_golden("base-locus -i " + fixture("diagonal.txt"), "base_locus_diagonal.json");
    check_against_golden("base-locus -i " + fixture("twisted.txt"), "base_locus_twisted.json");
}

TEST_CASE("golden: canonical-image and map-degree") {
    check_against_golden("canonical-image -i " + fixture("twisted.txt"),
                         "canonical_image_twisted.json");
    check_against_golden("map-degree -i " + fixture("twisted.txt"), "map_degree_twisted.json");
    check_against_golden("map-degree -i " + fixture("cubic_image.txt"),
                         "map_degree_cubic.json");
}

TEST_CASE("golden: smooth-scan, identical for any worker count") {
    check_against_golden("smooth-scan -i " + fixture("diagonal.txt") + " -p 7",
                         "smooth_scan_diagonal_p7.json");
    auto r1 = run_cli("smooth-scan -i " + fixture("diagonal.txt") + " -p 7 --jobs 1");
    auto r8 = run_cli("smooth-scan -i " + fixture("diagonal.txt") + " -p 7 --jobs 8");
    CHECK(r1.out == r8.out);
    CHECK(r1.exit_code == 0);
    CHECK(r8.exit_code == 0);
}

TEST_CASE("golden: smooth-scan with several primes reports side by side") {
    check_against_golden("smooth-scan -i " + fixture("diagonal.txt") + " -p 7 -p 11 -p 13",
                         "smooth_scan_diagonal_multi.json");
}

TEST_CASE("golden: count-points") {
    check_against_golden("count-points -i " + fixture("diagonal.txt") + " -p 7",
                         "count_points_diagonal_p7.json");
}

TEST_CASE("the -o flag writes a copy of the report") {
    std::string path = "cli_test_output.json";
    auto res = run_cli("moduli-counts -o " + path);
    CHECK(res.exit_code == 0);
    std::ifstream in(path);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    CHECK(ss.str() == res.out);
    std::remove(path.c_str());
}

TEST_CASE("rule-out-pencil with 20 samples rules out every one") {
    auto res = run_cli("rule-out-pencil --samples 20 --seed 1");
    CHECK(res.exit_code == 0);
    CHECK(res.out.find("\"all_ruled_out\": true") != std::string::npos);
    std::size_t entries = 0, pos = 0;
    while ((pos = res.out.find("\"ruled_out\": true", pos)) != std::string::npos) {
        ++entries;
        pos += 1;
    }
    CHECK(entries == 20);
}

TEST_CASE("golden: rule-out-pencil") {
    check_against_golden("rule-out-pencil --samples 6 --seed 1", "rule_out_pencil_s6.json");
}

TEST_CASE("golden: splitting") {
    check_against_golden("splitting --case 2-2-2-2 --seed 3", "splitting_2222.json");
}

TEST_CASE("golden: moduli-counts") {
    check_against_golden("moduli-counts", "moduli_counts.json");
}

TEST_CASE("golden: orbit") {
    check_against_golden("orbit -i " + fixture("vprime_generic.json") + " -p 7",
                         "orbit_generic_p7.json");
}

TEST_CASE("golden: random-surface, deterministic in the seed") {
    check_against_golden("random-surface --seed 1", "random_surface_s1.json");
    auto a = run_cli("random-surface --seed 1");
    auto b = run_cli("random-surface --seed 1");
    CHECK(a.out == b.out);
    auto c = run_cli("random-surface --seed 2");
    CHECK(a.out != c.out);
}

TEST_CASE("golden: random-surface reduced mod 7 keeps its flags") {
    check_against_golden("random-surface --seed 1 -p 7", "random_surface_s1_p7.json");
    auto res = run_cli("random-surface --seed 1 -p 7");
    CHECK(res.out.find("\"base_locus_empty\": true") != std::string::npos);
    CHECK(res.out.find("\"regular_sequence\": true") != std::string::npos);
    CHECK(res.out.find("\"valid\": true") != std::string::npos);
}

TEST_CASE("errors: parse failure reports the position and exits 2") {
    auto res = run_cli("validate -i " + fixture("bad_syntax.txt"));
    CHECK(res.exit_code == 2);
    CHECK(res.out.find("parse error at position") != std::string::npos);
}

TEST_CASE("errors: bad prime exits 2") {
    auto res = run_cli("smooth-scan -i " + fixture("diagonal.txt") + " -p 6");
    CHECK(res.exit_code == 2);
    auto res5 = run_cli("smooth-scan -i " + fixture("diagonal.txt") + " -p 5");
    CHECK(res5.exit_code == 2);
    auto res11 = run_cli("orbit -i " + fixture("vprime_generic.json") + " -p 11");
    CHECK(res11.exit_code == 2); // 11 != 1 mod 3: no cube root of unity
}

TEST_CASE("errors: missing input exits 2") {
    auto res = run_cli("validate -i /nonexistent/nope.txt");
    CHECK(res.exit_code == 2);
}

TEST_CASE("errors: unknown case label and bad usage exit 2") {
    CHECK(run_cli("splitting --case 2-3-1 --seed 1").exit_code == 2);
    CHECK(run_cli("validate").exit_code == 2);       // missing required -i
    CHECK(run_cli("no-such-command").exit_code == 2);
    CHECK(run_cli("--help").exit_code == 0);
}

TEST_CASE("splitting accepts the case-1 label") {
    auto res = run_cli("splitting --case 1 --seed 2");
    CHECK(res.exit_code == 0);
    CHECK(res.out.find("\"case\": \"1\"") != std::string::npos);
    CHECK(res.out.find("\"cok_gamma\": [\n    5,\n    6,\n    6,\n    7,\n    8\n  ]") !=
          std::string::npos);
}

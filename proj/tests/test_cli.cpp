#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace {

struct RunResult {
    int code;
    std::string out;
};

RunResult run(const std::string& args) {
    const std::string cmd = std::string(MASSEY_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe);
    std::string out;
    std::array<char, 4096> buf;
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    const int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

// Drops the timing_ms line, the only nondeterministic part of a report.
std::string strip_timing(const std::string& s) {
    std::string out;
    size_t pos = 0;
    while (pos < s.size()) {
        size_t eol = s.find('\n', pos);
        if (eol == std::string::npos) eol = s.size();
        const std::string line = s.substr(pos, eol - pos);
        if (line.find("\"timing_ms\"") == std::string::npos) out += line + "\n";
        pos = eol + 1;
    }
    return out;
}

std::string group_file(const char* name) {
    return std::string(MASSEY_DATA_DIR) + "/groups/" + name;
}

}  // namespace

TEST_CASE("decide exit codes and verdict fields") {
    const auto big = run("decide 313 457 521 --no-certificate");
    CHECK(big.code == 0);
    CHECK(big.out.find("\"defined\": true") != std::string::npos);
    CHECK(big.out.find("\"vanishes\": true") != std::string::npos);

    const auto undef = run("decide -- -1 -1 3");
    CHECK(undef.code == 1);
    CHECK(undef.out.find("\"defined\": false") != std::string::npos);
    CHECK(undef.out.find("\"place\": \"inf\"") != std::string::npos);

    const auto cert = run("decide 2 7 2 --height 50");
    CHECK(cert.code == 0);
    CHECK(cert.out.find("\"x\": \"4\"") != std::string::npos);

    CHECK(run("decide 0 1 1").code == 2);
    CHECK(run("decide 2 7").code == 2);
    CHECK(run("decide 1/bad 1 1").code == 2);
}

TEST_CASE("decide accepts rationals and reduces square classes") {
    const auto r = run("decide 18 -8/9 50 --no-certificate");
    CHECK(r.out.find("\"a\": \"2\"") != std::string::npos);
    CHECK(r.out.find("\"b\": \"-2\"") != std::string::npos);
    CHECK(r.out.find("\"c\": \"2\"") != std::string::npos);
}

TEST_CASE("reports are byte-identical modulo timing") {
    for (const char* args : {"decide 2 7 2 --height 50", "decide -- -1 -1 3",
                             "ff-sweep 3", "verify-torsor"}) {
        const auto a = run(args), b = run(args);
        CHECK(strip_timing(a.out) == strip_timing(b.out));
        CHECK(a.code == b.code);
    }
}

TEST_CASE("local command") {
    CHECK(run("local --place inf -- -1 -1 3").code == 1);
    CHECK(run("local 2 7 2 --place 7").code == 0);
    CHECK(run("local 1 1 1 --place 2").code == 0);
    CHECK(run("local 1 1 1 --place 6").code == 2);
    CHECK(run("local 1 1 1 --place abc").code == 2);
}

TEST_CASE("ff-sweep command") {
    const auto q3 = run("ff-sweep 3");
    CHECK(q3.code == 0);
    CHECK(q3.out.find("\"pass\": true") != std::string::npos);
    CHECK(run("ff-sweep 5").code == 0);
    CHECK(run("ff-sweep 4").code == 2);
    CHECK(run("ff-sweep 17").code == 2);
}

TEST_CASE("massey-group command and exit codes") {
    const auto z4 = run("massey-group " + group_file("z4.grp") + " 0101 0101 0101 --dwyer");
    CHECK(z4.code == 0);
    CHECK(z4.out.find("\"status\": \"containsZero\"") != std::string::npos);
    CHECK(z4.out.find("\"lift_exists\": true") != std::string::npos);

    const auto z2 = run("massey-group " + group_file("z2.grp") + " 01 01 01");
    CHECK(z2.code == 1);
    CHECK(z2.out.find("\"status\": \"undefined\"") != std::string::npos);

    const auto d4 = run("massey-group " + group_file("d4.grp") +
                        " 01010101 01010101 01010101 --brute-force --dwyer");
    CHECK(d4.out.find("\"agrees\": true") != std::string::npos);

    CHECK(run("massey-group /nonexistent.grp 01 01 01").code == 2);
    CHECK(run("massey-group " + group_file("z4.grp") + " 01 01 01").code == 2);       // bad length
    CHECK(run("massey-group " + group_file("z4.grp") + " 0011 0101 0101").code == 2);  // not a hom
}

TEST_CASE("verify-torsor command") {
    const auto full = run("verify-torsor");
    CHECK(full.code == 0);
    CHECK(full.out.find("\"pass\": true") != std::string::npos);

    const auto mut = run("verify-torsor --mutate");
    CHECK(mut.code == 0);  // mutants failing is the expected outcome
    CHECK(mut.out.find("\"identity_holds\": false") != std::string::npos);
    CHECK(mut.out.find("\"identity_holds\": true") == std::string::npos);

    const auto only = run("verify-torsor --only quotient");
    CHECK(only.code == 0);
    CHECK(only.out.find("\"name\": \"quotient\"") != std::string::npos);
    CHECK(only.out.find("\"name\": \"eigen\"") == std::string::npos);

    CHECK(run("verify-torsor --only nonsense").code == 2);
}

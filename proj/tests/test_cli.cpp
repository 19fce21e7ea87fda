#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include "qnull/certificate_io.hpp"

using namespace qnull;

namespace {

#ifndef QNULL_CLI_PATH
#error "QNULL_CLI_PATH must point at the qnull binary"
#endif

struct CliResult {
    int exit_code = -1;
    std::string stdout_text;
};

CliResult run_cli(const std::string& args, const std::string& env = "") {
    const std::string out_path = "/tmp/qnull_cli_out.txt";
    const std::string cmd =
        env + " " + std::string(QNULL_CLI_PATH) + " " + args + " > " + out_path + " 2>&1";
    const int status = std::system(cmd.c_str());
    CliResult r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream in(out_path);
    std::string line;
    while (std::getline(in, line)) r.stdout_text += line + "\n";
    return r;
}

} // namespace

TEST_CASE("obstruct prints the winding and exits cleanly") {
    const CliResult r = run_cli("obstruct --n 2 --samples 256 --csv /tmp/qnull_cli_trace.csv");
    CHECK(r.exit_code == 0);
    CHECK(r.stdout_text.find("winding = 2") != std::string::npos);
    std::ifstream csv("/tmp/qnull_cli_trace.csv");
    std::string header;
    std::getline(csv, header);
    CHECK(header == "k,re,im,unwrapped_phase");
    std::remove("/tmp/qnull_cli_trace.csv");

    CHECK(run_cli("obstruct --n 1 --samples 64").stdout_text.find("winding = 1") !=
          std::string::npos);
}

TEST_CASE("obstruct refuses coarse meshes with a nonzero exit") {
    const CliResult r = run_cli("obstruct --n 3 --samples 8");
    CHECK(r.exit_code == 1);
    CHECK(r.stdout_text.find("phase step") != std::string::npos);
}

TEST_CASE("obstruct rejects bad dimensions with exit 2") {
    CHECK(run_cli("obstruct --n 9 --samples 64").exit_code == 2);
}

TEST_CASE("construct/verify/pushforward round trip through files") {
    const CliResult built = run_cli(
        "construct --space wedge --a-turns 1 --b-turns 1 --samples 256 --out /tmp/qnull_cli_w.json");
    CHECK(built.exit_code == 0);
    CHECK(built.stdout_text.find("abAB") != std::string::npos);

    const CliResult verified =
        run_cli("verify --cert /tmp/qnull_cli_w.json --report /tmp/qnull_cli_report.json");
    CHECK(verified.exit_code == 0);
    CHECK(verified.stdout_text.find("ACCEPT") != std::string::npos);
    std::ifstream rep("/tmp/qnull_cli_report.json");
    std::string rep_text((std::istreambuf_iterator<char>(rep)), std::istreambuf_iterator<char>());
    CHECK(rep_text.find("\"accepted\": true") != std::string::npos);

    const CliResult pushed = run_cli(
        "pushforward --cert /tmp/qnull_cli_w.json --map collapseB --out /tmp/qnull_cli_s1.json");
    CHECK(pushed.exit_code == 0);
    CHECK(run_cli("verify --cert /tmp/qnull_cli_s1.json").exit_code == 0);

    std::remove("/tmp/qnull_cli_w.json");
    std::remove("/tmp/qnull_cli_report.json");
    std::remove("/tmp/qnull_cli_s1.json");
}

TEST_CASE("rp2 construct with the generator shorthand") {
    const CliResult built =
        run_cli("construct --space rp2 --generator --samples 128 --out /tmp/qnull_cli_rp2.json");
    CHECK(built.exit_code == 0);
    CHECK(run_cli("verify --cert /tmp/qnull_cli_rp2.json").exit_code == 0);
    std::remove("/tmp/qnull_cli_rp2.json");
}

TEST_CASE("corrupted certificates verify with exit 1 and a named check") {
    Certificate cert = s1_retraction_certificate(1, 128);
    cert.grid.at(cert.grid.rings / 2, 7) = iota(SpacePoint::s1(Complex(-1.0, 0.0)));
    save_certificate(cert, "/tmp/qnull_cli_torn.json");
    const CliResult r = run_cli("verify --cert /tmp/qnull_cli_torn.json");
    CHECK(r.exit_code == 1);
    CHECK(r.stdout_text.find("REJECT") != std::string::npos);
    CHECK(r.stdout_text.find("continuity") != std::string::npos);
    std::remove("/tmp/qnull_cli_torn.json");
}

TEST_CASE("malformed files exit 2") {
    {
        std::ofstream bad("/tmp/qnull_cli_bad.json");
        bad << "{\"format\": \"qnull-certificate\", \"space\": \"rp2\"}";
    }
    CHECK(run_cli("verify --cert /tmp/qnull_cli_bad.json").exit_code == 2);
    CHECK(run_cli("construct --space rp2 --loop /tmp/qnull_cli_bad.json --out /tmp/x.json")
              .exit_code == 2);
    CHECK(run_cli("verify --cert /tmp/qnull_no_such_file.json").exit_code == 2);
    std::remove("/tmp/qnull_cli_bad.json");
}

TEST_CASE("QNULL_DEFAULT_TOL loosens the default verdict") {
    Certificate cert = s1_retraction_certificate(1, 128);
    std::rotate(cert.boundary_loop.samples.begin(), cert.boundary_loop.samples.begin() + 1,
                cert.boundary_loop.samples.end()); // boundary error ~ mesh, nothing else
    save_certificate(cert, "/tmp/qnull_cli_env.json");
    CHECK(run_cli("verify --cert /tmp/qnull_cli_env.json").exit_code == 1);
    CHECK(run_cli("verify --cert /tmp/qnull_cli_env.json", "QNULL_DEFAULT_TOL=0.5").exit_code ==
          0);
    // explicit --tol beats the environment
    CHECK(run_cli("verify --cert /tmp/qnull_cli_env.json --tol 1e-9",
                  "QNULL_DEFAULT_TOL=0.5")
              .exit_code == 1);
    std::remove("/tmp/qnull_cli_env.json");
}

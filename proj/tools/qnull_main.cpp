// qnull: construct and verify quantum-nullhomotopy certificates for loops
// in the model spaces, and compute the determinant-winding obstruction.

#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "qnull/certificate_io.hpp"
#include "qnull/constructor.hpp"
#include "qnull/obstruction.hpp"
#include "qnull/verifier.hpp"

namespace {

using namespace qnull;

double default_tol() {
    if (const char* env = std::getenv("QNULL_DEFAULT_TOL")) {
        try {
            const double v = std::stod(env);
            if (v > 0.0) return v;
        } catch (const std::exception&) {
            std::cerr << "warning: ignoring unparseable QNULL_DEFAULT_TOL\n";
        }
    }
    return kDefaultCertTol;
}

int run_obstruct(int n, int samples, const std::string& csv_path) {
    const std::vector<Complex> dets = canonical_det_trace(n, samples);
    const WindingResult w = winding_number(dets);
    std::cout << "winding = " << w.winding << "\n";
    const std::string csv = det_trace_csv(dets);
    if (csv_path.empty()) std::cout << csv;
    else write_text_file(csv_path, csv);
    return 0;
}

int run_construct(const std::string& space, bool generator, const std::string& loop_path,
                  int a_turns, int b_turns, int samples, const std::string& out_path) {
    BuildOptions opts;
    opts.samples = samples;
    Certificate cert;
    if (space == "rp2") {
        SampledLoop loop;
        if (generator) {
            loop = rp2_generator_loop(samples > 0 ? samples : 256);
        } else if (!loop_path.empty()) {
            loop = load_loop(loop_path);
            if (loop.space != Space::RP2) throw InputError("loop file is not an RP2 loop");
        } else {
            throw InputError("rp2 construction needs --generator or --loop");
        }
        cert = build_rp2_certificate(loop, opts);
    } else if (space == "wedge") {
        cert = build_wedge_commutator_certificate(a_turns, b_turns, opts);
        const std::string word = word_of_wedge_loop(cert.boundary_loop);
        if (word.empty())
            std::cout << "boundary word reduces to e (nullhomotopic classically)\n";
        else
            std::cout << "boundary word reduces to \"" << word
                      << "\" != e (not nullhomotopic classically)\n";
    } else {
        throw InputError("--space must be rp2 or wedge");
    }
    for (const std::string& line : cert.construction_log) std::cout << line << "\n";
    std::cout << "grid: " << cert.grid.rings << " rings x " << cert.grid.angles
              << " angles, measured mesh bound " << cert.tolerances.mesh_bound << "\n";
    save_certificate(cert, out_path);
    std::cout << "wrote " << out_path << "\n";
    return 0;
}

int run_verify(const std::string& cert_path, double tol, const std::string& loop_path,
               const std::string& report_path) {
    const Certificate cert = load_certificate(cert_path);
    VerificationReport report;
    if (loop_path.empty()) {
        report = verify(cert, tol);
    } else {
        const SampledLoop loop = load_loop(loop_path);
        if (loop.space != cert.space)
            throw InputError("loop space does not match the certificate");
        report = verify(cert, loop, tol);
    }
    std::cout << report.summary();
    if (!report_path.empty()) save_report(report, report_path);
    return report.accepted ? 0 : 1;
}

int run_pushforward(const std::string& cert_path, const std::string& map_name,
                    const std::string& out_path) {
    const Certificate cert = load_certificate(cert_path);
    const SpaceMap m = space_map_from_name(map_name);
    const Certificate image = pushforward_certificate(cert, m);
    save_certificate(image, out_path);
    std::cout << "wrote " << out_path << " (space " << space_name(image.space) << ")\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"quantum-nullhomotopy certificates for loops in model spaces"};
    app.require_subcommand(1);

    auto* obstruct = app.add_subcommand(
        "obstruct", "winding of det(eval_z) for the canonical loop s -> s I_n");
    int n = 2, obstruct_samples = 256;
    std::string csv_path;
    obstruct->add_option("--n", n, "matrix dimension (1..8)")->required();
    obstruct->add_option("--samples", obstruct_samples, "loop sample count");
    obstruct->add_option("--csv", csv_path, "write the phase trace CSV here (default: stdout)");

    auto* construct = app.add_subcommand("construct", "build a certificate");
    std::string space, loop_path, out_path;
    bool generator = false;
    int a_turns = 1, b_turns = 1, construct_samples = 0;
    construct->add_option("--space", space, "rp2 or wedge")->required();
    construct->add_flag("--generator", generator, "use the RP2 generator loop");
    construct->add_option("--loop", loop_path, "loop file (qnull-loop JSON)");
    construct->add_option("--a-turns", a_turns, "wedge commutator turns on branch A");
    construct->add_option("--b-turns", b_turns, "wedge commutator turns on branch B");
    construct->add_option("--samples", construct_samples, "angular sample count (0 = auto)");
    construct->add_option("--out", out_path, "output certificate file")->required();

    auto* verify_cmd = app.add_subcommand("verify", "verify a certificate file");
    std::string verify_cert, verify_loop, report_path;
    double tol = default_tol();
    verify_cmd->add_option("--cert", verify_cert, "certificate file")->required();
    verify_cmd->add_option("--tol", tol, "acceptance tolerance");
    verify_cmd->add_option("--loop", verify_loop, "verify against this loop file instead");
    verify_cmd->add_option("--report", report_path, "write the machine-readable report here");

    auto* push = app.add_subcommand("pushforward", "map a certificate along a wedge collapse");
    std::string push_cert, map_name, push_out;
    push->add_option("--cert", push_cert, "certificate file")->required();
    push->add_option("--map", map_name, "collapseA or collapseB")->required();
    push->add_option("--out", push_out, "output certificate file")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*obstruct) return run_obstruct(n, obstruct_samples, csv_path);
        if (*construct)
            return run_construct(space, generator, loop_path, a_turns, b_turns,
                                 construct_samples, out_path);
        if (*verify_cmd) return run_verify(verify_cert, tol, verify_loop, report_path);
        if (*push) return run_pushforward(push_cert, map_name, push_out);
    } catch (const qnull::InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const qnull::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

#include "qnull/certificate_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace qnull {

namespace {

using nlohmann::json;

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string escape(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 2);
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default: out += c;
        }
    }
    return out;
}

void emit_point(std::ostream& os, const SpacePoint& p) {
    switch (p.space) {
        case Space::S1:
            os << '[' << fmt_double(p.alpha.real()) << ',' << fmt_double(p.alpha.imag()) << ']';
            return;
        case Space::S2:
        case Space::RP2:
            os << '[' << fmt_double(p.alpha.real()) << ',' << fmt_double(p.alpha.imag()) << ','
               << fmt_double(p.t) << ']';
            return;
        case Space::Wedge:
            os << "[\"" << (p.branch == WedgeBranch::A ? 'A' : 'B') << "\","
               << fmt_double(p.angle) << ']';
            return;
    }
    throw InputError("bad space tag");
}

void emit_hom_param(std::ostream& os, const HomParam& p) {
    os << '[';
    emit_point(os, p.x);
    os << ',';
    emit_point(os, p.t1);
    os << ',';
    emit_point(os, p.t2);
    os << ']';
}

SpacePoint parse_point(const json& j, Space space) {
    if (!j.is_array()) throw InputError("point must be an array");
    switch (space) {
        case Space::S1:
            if (j.size() != 2 || !j[0].is_number() || !j[1].is_number())
                throw InputError("S1 point must be [re, im]");
            return SpacePoint::s1(Complex(j[0].get<double>(), j[1].get<double>()));
        case Space::S2:
        case Space::RP2: {
            if (j.size() != 3 || !j[0].is_number() || !j[1].is_number() || !j[2].is_number())
                throw InputError("sphere point must be [re, im, t]");
            const Complex alpha(j[0].get<double>(), j[1].get<double>());
            const double t = j[2].get<double>();
            return space == Space::S2 ? SpacePoint::s2(alpha, t) : SpacePoint::rp2(alpha, t);
        }
        case Space::Wedge: {
            if (j.size() != 2 || !j[0].is_string() || !j[1].is_number())
                throw InputError("wedge point must be [branch, angle]");
            const std::string b = j[0].get<std::string>();
            if (b != "A" && b != "B") throw InputError("wedge branch must be A or B");
            SpacePoint p;
            p.space = Space::Wedge;
            p.branch = b == "A" ? WedgeBranch::A : WedgeBranch::B;
            p.angle = j[1].get<double>();
            return p;
        }
    }
    throw InputError("bad space tag");
}

HomParam parse_hom_param(const json& j, Space space) {
    if (!j.is_array() || j.size() != 3) throw InputError("grid cell must be [x, t1, t2]");
    return HomParam{parse_point(j[0], Space::S2), parse_point(j[1], space),
                    parse_point(j[2], space)};
}

json parse_document(const std::string& text, const char* expected_format) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw InputError(std::string("JSON parse error: ") + e.what());
    }
    if (!j.is_object() || !j.contains("format") || j["format"] != expected_format)
        throw InputError(std::string("document is not a ") + expected_format);
    return j;
}

} // namespace

std::string certificate_to_json(const Certificate& cert) {
    std::ostringstream os;
    os << "{\n";
    os << "  \"format\": \"qnull-certificate\",\n";
    os << "  \"version\": 1,\n";
    os << "  \"space\": \"" << space_name(cert.space) << "\",\n";
    os << "  \"n\": 2,\n";
    os << "  \"tolerances\": {\"tol\": " << fmt_double(cert.tolerances.tol)
       << ", \"tol_point\": " << fmt_double(cert.tolerances.tol_point)
       << ", \"tol_unitary\": " << fmt_double(cert.tolerances.tol_unitary)
       << ", \"mesh_bound\": " << fmt_double(cert.tolerances.mesh_bound) << "},\n";
    os << "  \"boundary_loop\": [";
    for (size_t k = 0; k < cert.boundary_loop.samples.size(); ++k) {
        if (k) os << ',';
        emit_point(os, cert.boundary_loop.samples[k]);
    }
    os << "],\n";
    os << "  \"grid\": {\n";
    os << "    \"rings\": " << cert.grid.rings << ",\n";
    os << "    \"angles\": " << cert.grid.angles << ",\n";
    os << "    \"center\": ";
    emit_hom_param(os, cert.grid.center);
    os << ",\n";
    os << "    \"cells\": [\n";
    for (int i = 1; i <= cert.grid.rings; ++i) {
        os << "      [";
        for (int k = 0; k < cert.grid.angles; ++k) {
            if (k) os << ',';
            emit_hom_param(os, cert.grid.at(i, k));
        }
        os << (i == cert.grid.rings ? "]\n" : "],\n");
    }
    os << "    ]\n  },\n";
    os << "  \"construction_log\": [";
    for (size_t i = 0; i < cert.construction_log.size(); ++i) {
        if (i) os << ", ";
        os << '"' << escape(cert.construction_log[i]) << '"';
    }
    os << "]\n}\n";
    return os.str();
}

Certificate certificate_from_json(const std::string& text) {
    const json j = parse_document(text, "qnull-certificate");
    Certificate cert;
    try {
        cert.space = space_from_name(j.at("space").get<std::string>());
        if (j.at("n").get<int>() != 2)
            throw InputError("only n = 2 certificates are supported");
        const json& tols = j.at("tolerances");
        cert.tolerances.tol = tols.at("tol").get<double>();
        cert.tolerances.tol_point = tols.at("tol_point").get<double>();
        cert.tolerances.tol_unitary = tols.at("tol_unitary").get<double>();
        cert.tolerances.mesh_bound = tols.at("mesh_bound").get<double>();

        std::vector<SpacePoint> samples;
        for (const json& p : j.at("boundary_loop")) samples.push_back(parse_point(p, cert.space));
        cert.boundary_loop = make_loop(cert.space, std::move(samples));

        const json& grid = j.at("grid");
        cert.grid.rings = grid.at("rings").get<int>();
        cert.grid.angles = grid.at("angles").get<int>();
        cert.grid.center = parse_hom_param(grid.at("center"), cert.space);
        const json& cells = grid.at("cells");
        if (!cells.is_array() || cells.size() != static_cast<size_t>(cert.grid.rings))
            throw InputError("grid cell rows do not match the declared ring count");
        for (const json& row : cells) {
            if (!row.is_array() || row.size() != static_cast<size_t>(cert.grid.angles))
                throw InputError("grid ring has the wrong number of cells");
            std::vector<HomParam> cell_row;
            cell_row.reserve(row.size());
            for (const json& cell : row) cell_row.push_back(parse_hom_param(cell, cert.space));
            cert.grid.cells.push_back(std::move(cell_row));
        }
        if (j.contains("construction_log"))
            for (const json& line : j.at("construction_log"))
                cert.construction_log.push_back(line.get<std::string>());
    } catch (const json::exception& e) {
        throw InputError(std::string("certificate schema error: ") + e.what());
    }
    if (cert.boundary_loop.size() != cert.grid.angles)
        throw InputError("boundary loop sample count does not match the grid");
    return cert;
}

std::string loop_to_json(const SampledLoop& loop) {
    std::ostringstream os;
    os << "{\n  \"format\": \"qnull-loop\",\n  \"space\": \"" << space_name(loop.space)
       << "\",\n  \"samples\": [";
    for (size_t k = 0; k < loop.samples.size(); ++k) {
        if (k) os << ',';
        emit_point(os, loop.samples[k]);
    }
    os << "]\n}\n";
    return os.str();
}

SampledLoop loop_from_json(const std::string& text) {
    const json j = parse_document(text, "qnull-loop");
    try {
        const Space space = space_from_name(j.at("space").get<std::string>());
        std::vector<SpacePoint> samples;
        for (const json& p : j.at("samples")) samples.push_back(parse_point(p, space));
        return make_loop(space, std::move(samples));
    } catch (const json::exception& e) {
        throw InputError(std::string("loop schema error: ") + e.what());
    }
}

std::string report_to_json(const VerificationReport& report) {
    std::ostringstream os;
    os << "{\n  \"format\": \"qnull-report\",\n";
    os << "  \"accepted\": " << (report.accepted ? "true" : "false") << ",\n";
    os << "  \"tol\": " << fmt_double(report.tol) << ",\n";
    os << "  \"boundary_error\": " << fmt_double(report.boundary_error) << ",\n";
    os << "  \"continuity_modulus\": " << fmt_double(report.continuity_modulus) << ",\n";
    os << "  \"declared_mesh_bound\": " << fmt_double(report.declared_mesh_bound) << ",\n";
    os << "  \"basepoint_drift\": " << fmt_double(report.basepoint_drift) << ",\n";
    os << "  \"ring_windings\": ";
    if (!report.has_windings) {
        os << "null";
    } else {
        os << '[';
        for (size_t i = 0; i < report.ring_windings.size(); ++i) {
            if (i) os << ',';
            os << report.ring_windings[i];
        }
        os << ']';
    }
    os << ",\n  \"failures\": [";
    for (size_t i = 0; i < report.failures.size(); ++i) {
        if (i) os << ", ";
        os << '"' << escape(report.failures[i]) << '"';
    }
    os << "]\n}\n";
    return os.str();
}

std::string det_trace_csv(const std::vector<Complex>& dets) {
    std::ostringstream os;
    os << "k,re,im,unwrapped_phase\n";
    double phase = dets.empty() ? 0.0 : std::arg(dets.front());
    Complex prev = dets.empty() ? Complex(1.0, 0.0) : dets.front();
    for (size_t k = 0; k < dets.size(); ++k) {
        phase += std::arg(dets[k] * std::conj(prev));
        prev = dets[k];
        os << k << ',' << fmt_double(dets[k].real()) << ',' << fmt_double(dets[k].imag()) << ','
           << fmt_double(phase) << '\n';
    }
    return os.str();
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write file: " + path);
    out << text;
}

void save_certificate(const Certificate& cert, const std::string& path) {
    write_text_file(path, certificate_to_json(cert));
}

Certificate load_certificate(const std::string& path) {
    return certificate_from_json(read_text_file(path));
}

void save_loop(const SampledLoop& loop, const std::string& path) {
    write_text_file(path, loop_to_json(loop));
}

SampledLoop load_loop(const std::string& path) { return loop_from_json(read_text_file(path)); }

void save_report(const VerificationReport& report, const std::string& path) {
    write_text_file(path, report_to_json(report));
}

} // namespace qnull

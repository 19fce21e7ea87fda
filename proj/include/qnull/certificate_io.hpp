#ifndef QNULL_CERTIFICATE_IO_HPP
#define QNULL_CERTIFICATE_IO_HPP

#include <string>
#include <vector>

#include "qnull/constructor.hpp"
#include "qnull/verifier.hpp"

namespace qnull {

/// Certificates, loops, and reports travel as JSON documents. All reals
/// are written as 17-significant-digit decimals, so write -> read -> write
/// is byte-stable and parsing recovers every double exactly.

std::string certificate_to_json(const Certificate& cert);
Certificate certificate_from_json(const std::string& text);
void save_certificate(const Certificate& cert, const std::string& path);
Certificate load_certificate(const std::string& path);

std::string loop_to_json(const SampledLoop& loop);
SampledLoop loop_from_json(const std::string& text);
void save_loop(const SampledLoop& loop, const std::string& path);
SampledLoop load_loop(const std::string& path);

std::string report_to_json(const VerificationReport& report);
void save_report(const VerificationReport& report, const std::string& path);

/// CSV phase trace of a unit-circle determinant sequence: columns
/// k, re, im, unwrapped_phase.
std::string det_trace_csv(const std::vector<Complex>& dets);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

} // namespace qnull

#endif

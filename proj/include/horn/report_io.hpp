#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>

#include <json.hpp>

#include "horn/horn_polytopes.hpp"
#include "horn/spectral.hpp"

namespace horn {

/// One line per record:
///   OK|FAIL sigma=[..] split=[..]/[..] nu=[..] lhs=N rhs=N [note]
/// followed by a summary line "suite=<name> records=N failures=N complete=yes|no".
void write_report_text(std::ostream& os, const Report& report);
nlohmann::json report_to_json(const Report& report);
Report report_from_json(const nlohmann::json& j);

/// Whitespace-separated table with a header row:
///   seed index raw_1..raw_2p collapsed_1..collapsed_p pairing_defect
void write_samples_text(std::ostream& os, std::uint64_t seed, std::span<const SampleRecord> records);
nlohmann::json samples_to_json(std::uint64_t seed, SamplingMode mode, std::span<const double> sigma,
                               std::span<const SampleRecord> records);

void write_summary_text(std::ostream& os, const SampleSummary& summary);

}  // namespace horn

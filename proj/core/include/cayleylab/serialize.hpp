#pragma once

#include <string>
#include <vector>

#include "cayleylab/cayley.hpp"
#include "cayleylab/verifier.hpp"

namespace cayleylab::cli {

enum class Format : std::uint8_t { json, csv, text };

/// JSON layout per report:
///   {"tool-version", "claim", "instance": {"group", "gens"}, "pass",
///    "witnesses": {...}, "notes"}
/// Witness integers above 2^53 and all non-integer rationals are emitted as
/// decimal strings; output is byte-stable for equal inputs.
std::string serialize_reports(const std::vector<verifier::ClaimReport>& reports,
                              Format format);

std::string serialize_report(const verifier::ClaimReport& report, Format format);

/// CSV header: param,order,diameter,log_order,fit_exponent
std::string serialize_scaling(const verifier::ScalingTable& table, Format format);

std::string serialize_ball_profile(const std::string& group_id, const std::string& gens_label,
                                   const cayley::BallProfile& profile, Format format);

std::string serialize_power_profile(const std::string& group_id, const std::string& gens_label,
                                    const cayley::PowerProfile& profile, Format format);

}  // namespace cayleylab::cli

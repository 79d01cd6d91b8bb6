#pragma once

#include <string>

#include "acm5/family.hpp"
#include "acm5cli/coframe_file.hpp"

namespace acm5::cli {

/// Full classification pipeline: Levi-Civita forms, intrinsic torsion and
/// its class, predicates, then (for generalized quasi-Sasaki input) the
/// characteristic connection with torsion type, curvature and spinors.
Json classify_report(const CoframeData& c, bool float_mode);

Json identity_report_json(const FamilyParams& p, const IdentityReport& r);

/// Indented key/value rendering of a report; every leaf of the JSON shows up.
std::string render_text(const Json& j, bool color);

/// ACM5_COLOR set to anything but "", "0" or "never".
bool color_from_env();

}  // namespace acm5::cli

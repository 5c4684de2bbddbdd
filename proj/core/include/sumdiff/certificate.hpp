#pragma once
// certificate.hpp - reproducible JSON records binding parameters to their
// exact counts and the certified theta bound. Counts short enough to diff
// are embedded as exact decimal strings; larger ones carry a 10-digit
// scientific rounding, the exact digit count, and a SHA-256 digest of the
// full decimal expansion so independent runs can still be compared.

#include <optional>
#include <string>
#include <string_view>

#include "sumdiff/counts.hpp"

namespace sumdiff {

// Counts at or below this many decimal digits are embedded verbatim.
inline constexpr std::size_t kInlineDecimalDigitLimit = 4000;

struct Certificate {
    Params params;  // canonical
    SetCounts counts;
    std::optional<ThetaBound> theta;  // absent when the parameters are degenerate
    std::string tool_version;
    double elapsed_seconds = 0.0;
};

// Compute counts and theta for p, timing the computation.
Certificate make_certificate(Params p);

// Stable field order, two-space indent, trailing newline. The counts
// payload is bit-identical across runs on identical parameters.
std::string certificate_json(const Certificate& c);

std::string sha256_hex(std::string_view data);

}  // namespace sumdiff

#pragma once

#include <string>

namespace oam {

// Shortest decimal string that parses back to exactly the same double
// (std::to_chars round-trip form). Deterministic across runs.
std::string format_full(double value);

// Fixed three-decimal rendering for report displays; values that round
// to zero are normalized to "0.000" (no negative zero).
std::string format_fixed3(double value);

} // namespace oam

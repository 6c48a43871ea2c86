#pragma once

#include <string>
#include <vector>

#include "biharm/resolvent.hpp"

namespace biharm::app {

// Hand-transcribed A_1 .. A_6 (index = k - 1).
const std::vector<PoleExpansion>& reference_resolvent_table();

// Human-readable differences; empty when the two expansions are identical.
std::vector<std::string> diff_pole_expansions(const PoleExpansion& expected, const PoleExpansion& actual);

std::string to_string(const XiPolynomial& poly);

} // namespace biharm::app

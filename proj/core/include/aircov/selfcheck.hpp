#pragma once

#include <string>
#include <vector>

namespace aircov {

// Startup integrity check: built-in constant tables are compared against an
// independent reference copy, pushed through the config serializer and
// parsed back (must be bit-identical), and the analytic packing anchor is
// recomputed. Returns one message per failure; empty means healthy.
std::vector<std::string> self_check();

} // namespace aircov

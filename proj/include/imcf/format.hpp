#pragma once

#include <string>

namespace imcf {

// Locale-independent, byte-deterministic decimal formatting. format_shortest
// is the shortest round-trip form (report text, locations); format_full is
// fixed 17-significant-digit scientific (CSV columns).
std::string format_shortest(double x);
std::string format_full(double x);

} // namespace imcf

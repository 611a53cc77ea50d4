// Small output helpers shared by the reporting paths.

#pragma once

#include <string>

namespace stratwave {

// decimal formatting at 17 significant digits (round-trip safe for doubles)
std::string fmt17(double v);

}  // namespace stratwave

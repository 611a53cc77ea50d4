#include "stratwave/report_io.hpp"

#include <cstdio>

namespace stratwave {

std::string fmt17(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace stratwave

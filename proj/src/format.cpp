#include "imcf/format.hpp"

#include <charconv>
#include <system_error>

namespace imcf {

namespace {

std::string with_to_chars(double x, auto&&... spec) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), x, spec...);
    return std::string(buf, res.ptr);
}

} // namespace

std::string format_shortest(double x) { return with_to_chars(x); }

std::string format_full(double x) {
    return with_to_chars(x, std::chars_format::scientific, 16);
}

} // namespace imcf

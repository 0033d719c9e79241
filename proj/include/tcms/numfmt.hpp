#ifndef TCMS_NUMFMT_HPP
#define TCMS_NUMFMT_HPP

#include <string>
#include <string_view>

namespace tcms {

/// Shortest decimal that round-trips the exact double value.
std::string format_double(double value);

/// Strict full-string parse; returns false on trailing garbage or overflow.
bool parse_double(std::string_view text, double& out);
bool parse_int64(std::string_view text, long long& out);

} // namespace tcms

#endif // TCMS_NUMFMT_HPP

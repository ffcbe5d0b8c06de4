#ifndef HIDESEEK_CSV_HPP_
#define HIDESEEK_CSV_HPP_

#include <cstdint>
#include <cstdio>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace hideseek::csv {

/// Shortest round-trip-safe text for a double: 17 significant digits.
inline std::string format(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

inline std::string format(std::uint64_t x) { return std::to_string(x); }
inline std::string format(std::int64_t x) { return std::to_string(x); }
inline std::string format(int x) { return std::to_string(x); }
inline std::string format(std::string_view s) { return std::string(s); }
inline std::string format(const char* s) { return s; }

/// Comma separated, LF terminated.
inline void write_row(std::ostream& os, const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) os << ',';
    os << fields[i];
  }
  os << '\n';
}

template <typename... Ts>
void row(std::ostream& os, const Ts&... fields) {
  write_row(os, {format(fields)...});
}

inline std::vector<std::string> split(std::string_view line, char sep = ',') {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t pos = line.find(sep, start);
    out.emplace_back(line.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

}  // namespace hideseek::csv

#endif  // HIDESEEK_CSV_HPP_

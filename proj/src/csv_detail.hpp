#ifndef EPIGAME_CSV_DETAIL_HPP
#define EPIGAME_CSV_DETAIL_HPP

#include <cstdio>
#include <string>

namespace epigame::detail {

// 10 significant digits, '.' decimal separator, no locale surprises.
inline std::string format_value(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

}  // namespace epigame::detail

#endif  // EPIGAME_CSV_DETAIL_HPP

#include "valmat/caps.hpp"

#include <cstdlib>
#include <string>

#include "valmat/errors.hpp"

namespace valmat {

Caps parse_caps(const char* text) {
  Caps c;
  if (text == nullptr || *text == '\0') return c;
  std::string s(text);
  std::size_t pos = 0;
  while (pos < s.size()) {
    std::size_t end = s.find(',', pos);
    if (end == std::string::npos) end = s.size();
    std::string entry = s.substr(pos, end - pos);
    pos = end + 1;
    if (entry.empty()) continue;
    std::size_t eq = entry.find('=');
    if (eq == std::string::npos)
      throw parse_error("VALMAT_CAPS: missing '=' in \"" + entry + "\"");
    std::string name = entry.substr(0, eq);
    std::size_t value;
    try {
      value = static_cast<std::size_t>(std::stoull(entry.substr(eq + 1)));
    } catch (const std::exception&) {
      throw parse_error("VALMAT_CAPS: bad value in \"" + entry + "\"");
    }
    if (name == "flats")
      c.flats_ground = value;
    else if (name == "exhaustive")
      c.exhaustive = value;
    else if (name == "tw-ground")
      c.tw_ground = value;
    else if (name == "tw-rank")
      c.tw_rank = value;
    else if (name == "interval")
      c.interval_points = value;
    else if (name == "dot")
      c.dot_points = value;
    else
      throw parse_error("VALMAT_CAPS: unknown cap \"" + name + "\"");
  }
  return c;
}

const Caps& caps() {
  static const Caps c = parse_caps(std::getenv("VALMAT_CAPS"));
  return c;
}

}  // namespace valmat

// Shared basics: carrier index type, error categories, small text helpers.

#pragma once

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>

namespace nelson {

// Index into an algebra carrier 0..m-1.  16 bits keeps the m*m operation
// tables compact; every constructor enforces the implied size cap.
using elem = std::uint16_t;

inline constexpr std::uint32_t kMaxCarrier = 65535;

// Malformed external input: JSON schema violations, term syntax errors.
class format_error : public std::runtime_error {
 public:
  explicit format_error(const std::string& what) : std::runtime_error(what) {}
};

// A computation was refused because it would exceed an explicit budget
// (carrier size, point count, enumeration limit).
class resource_error : public std::runtime_error {
 public:
  explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

namespace detail {

inline void cat_into(std::ostringstream&) {}

template <class T, class... Ts>
void cat_into(std::ostringstream& os, T&& head, Ts&&... tail) {
  os << head;
  cat_into(os, std::forward<Ts>(tail)...);
}

}  // namespace detail

// cat(a, b, c, ...) -> string; the house replacement for std::format,
// which the toolchain here does not ship yet.
template <class... Ts>
std::string cat(Ts&&... parts) {
  std::ostringstream os;
  detail::cat_into(os, std::forward<Ts>(parts)...);
  return os.str();
}

}  // namespace nelson

#ifndef ECTO_VERSION_HPP
#define ECTO_VERSION_HPP

#include <string_view>

namespace ecto {

inline constexpr std::string_view kToolName = "ecto";
inline constexpr std::string_view kToolVersion = "0.1.0";

inline std::string_view tool_version_string() { return "ecto 0.1.0"; }

}  // namespace ecto

#endif  // ECTO_VERSION_HPP

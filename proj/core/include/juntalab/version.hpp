#pragma once

namespace juntalab {

inline constexpr const char kVersion[] = "0.1.0";

}  // namespace juntalab

#pragma once

namespace beccsim {

inline constexpr const char* kVersion = "0.1.0";

} // namespace beccsim

#pragma once

namespace ge {
inline constexpr const char* kVersion = "0.1.0";
}

#pragma once

namespace barneskit {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace barneskit

#pragma once

namespace patchfx {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace patchfx

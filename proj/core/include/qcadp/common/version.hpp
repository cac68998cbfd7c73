#pragma once

namespace qcadp {

inline constexpr const char* kVersion = "0.1.0";

} // namespace qcadp

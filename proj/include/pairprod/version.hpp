#pragma once

namespace pairprod {

inline constexpr const char* version = "0.1.0";

}  // namespace pairprod

#pragma once

#ifndef SVMASYM_VERSION
#define SVMASYM_VERSION "0.1.0"
#endif

namespace svmasym {

inline constexpr const char* kVersion = SVMASYM_VERSION;

}  // namespace svmasym

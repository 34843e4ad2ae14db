#ifndef MZL_VERSION_HPP
#define MZL_VERSION_HPP

namespace mzl {
inline constexpr const char* kVersion = "0.1.0";
inline constexpr int kSchemaVersion = 1;
}  // namespace mzl

#endif

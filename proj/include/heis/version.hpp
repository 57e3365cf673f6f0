#ifndef HEIS_VERSION_HPP
#define HEIS_VERSION_HPP

namespace heis {
inline constexpr const char* kVersion = "0.1.0";
inline constexpr const char* kToolName = "heis";
}  // namespace heis

#endif

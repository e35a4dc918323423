#ifndef PVALKIT_VERSION_HPP
#define PVALKIT_VERSION_HPP

namespace pvalkit {

inline constexpr const char* version = "0.1.0";

}  // namespace pvalkit

#endif  // PVALKIT_VERSION_HPP

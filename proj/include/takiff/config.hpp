#pragma once

#include <cstddef>

namespace takiff {

inline constexpr std::size_t kDefaultDimCap = 2000;
inline constexpr std::size_t kDefaultTensorCap = 20736;

/// Dimension cap for explicit module constructions. Reads TAKIFF_DIM_CAP
/// on every call so the CLI and tests can override it at runtime.
std::size_t dim_cap();
/// Cap on dim (C^{n|n})^{(x) r}; TAKIFF_TENSOR_CAP overrides.
std::size_t tensor_cap();

}  // namespace takiff

#pragma once

#include "rank2/dyck.hpp"

#include <optional>
#include <string>

namespace rank2::cli {

/// Static pictures of D_n: the rectangle, the diagonal, the path with its
/// distinguished vertices, and optionally one classified subpath.
std::string path_ascii(const DyckPath& path, const std::optional<ColoredSubpath>& overlay);
std::string path_svg(const DyckPath& path, const std::optional<ColoredSubpath>& overlay);
std::string path_tikz(const DyckPath& path, const std::optional<ColoredSubpath>& overlay);

}  // namespace rank2::cli

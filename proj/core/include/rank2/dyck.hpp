#pragma once

#include "rank2/limits.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace rank2 {

/// The integer sequence c_1 = 0, c_2 = 1, c_k = r c_{k-1} - c_{k-2}.
class CSequence {
public:
    CSequence() = default;
    CSequence(int r, std::vector<std::int64_t> values) : r_(r), values_(std::move(values)) {}

    int r() const noexcept { return r_; }
    /// Largest index k with c_k available.
    int upto() const noexcept { return static_cast<int>(values_.size()); }
    /// c_k for 1 <= k <= upto().
    std::int64_t operator()(int k) const { return values_.at(static_cast<std::size_t>(k - 1)); }
    std::span<const std::int64_t> values() const noexcept { return values_; }

private:
    int r_ = 0;
    std::vector<std::int64_t> values_;
};

/// c_1 .. c_upto. Throws Error(Overflow) once a value exceeds
/// limits.max_exponent, Error(InvalidArgument) unless r >= 2 and upto >= 2.
CSequence c_sequence(int r, int upto, const Limits& limits = {});

struct Point {
    std::int64_t x = 0;
    std::int64_t y = 0;

    friend bool operator==(const Point&, const Point&) = default;
};

/// Inclusive range of 1-based edge positions along the path.
struct EdgeSpan {
    std::int64_t first = 0;
    std::int64_t last = -1;

    std::int64_t size() const noexcept { return last >= first ? last - first + 1 : 0; }
    bool contains(std::int64_t position) const noexcept { return first <= position && position <= last; }
    bool intersects(const EdgeSpan& o) const noexcept { return first <= o.last && o.first <= last; }

    friend bool operator==(const EdgeSpan&, const EdgeSpan&) = default;
};

/// The maximal Dyck path D_n in the c_{n-2} x (c_{n-1} - c_{n-2}) rectangle.
///
/// Edges are numbered 1..c_{n-1}; edge p joins lattice points w_{p-1} and w_p.
/// The distinguished vertices are v_0 = w_0 and v_j = w at the top of the j-th
/// north step; v_index(j) is the edge position ending at v_j (0 for v_0).
class DyckPath {
public:
    int r() const noexcept { return r_; }
    int n() const noexcept { return n_; }
    const CSequence& c() const noexcept { return c_; }

    std::int64_t width() const noexcept { return width_; }
    std::int64_t height() const noexcept { return height_; }
    std::int64_t edge_count() const noexcept { return static_cast<std::int64_t>(word_.size()); }
    /// Index of the last distinguished vertex, c_{n-2}.
    std::int64_t top() const noexcept { return height_; }

    std::string_view word() const noexcept { return word_; }
    char step(std::int64_t position) const { return word_.at(static_cast<std::size_t>(position - 1)); }
    std::span<const Point> lattice_points() const noexcept { return points_; }
    std::span<const std::int64_t> v_indices() const noexcept { return v_index_; }

    std::int64_t v_index(std::int64_t j) const { return v_index_.at(static_cast<std::size_t>(j)); }
    Point v(std::int64_t j) const { return points_.at(static_cast<std::size_t>(v_index(j))); }

    /// y * width <= x * height.
    bool on_or_below_diagonal(Point p) const;

private:
    friend DyckPath build_path(int r, int n, const Limits& limits);

    int r_ = 0;
    int n_ = 0;
    CSequence c_;
    std::int64_t width_ = 0;
    std::int64_t height_ = 0;
    std::string word_;
    std::vector<Point> points_;
    std::vector<std::int64_t> v_index_;
};

/// Greedy construction: from (0,0) step north whenever the new point stays on
/// or below the diagonal, else east.
DyckPath build_path(int r, int n, const Limits& limits = {});

/// {"r":..,"n":..,"word":"EEN..","v_index":[..]}
std::string path_to_json(const DyckPath& path);

/// Parses path_to_json output, rebuilds the path and checks the word and
/// v_index agree. Throws Error(InvalidArgument) on mismatch.
DyckPath path_from_json(std::string_view text, const Limits& limits = {});

enum class SlopeOrder { LE, GT };

/// Compares the slope of v_a v_b against the diagonal by cross-multiplication.
SlopeOrder slope_exceeds(const DyckPath& path, std::int64_t a, std::int64_t b);

/// Smallest t > i with s_{i,t} > s, if any.
std::optional<std::int64_t> first_steep_vertex(const DyckPath& path, std::int64_t i);

enum class Color { Blue, Green, Red };

std::string_view to_string(Color color) noexcept;

struct GreenParams {
    int m = 0;
    std::int64_t w = 0;

    friend bool operator==(const GreenParams&, const GreenParams&) = default;
};

/// All (m, w) with 3 <= m <= n-2, 1 <= w <= r-2 and c_m - w c_{m-1} == offset,
/// in m-ascending then w-ascending order.
std::vector<GreenParams> green_matches(const DyckPath& path, std::int64_t offset);

/// A classified subpath alpha(i, k).
struct ColoredSubpath {
    std::int64_t i = 0;
    std::int64_t k = 0;
    Color color = Color::Blue;
    std::optional<GreenParams> green;
    EdgeSpan edges;
    /// Edges before v_i of which at least one must be covered (green only).
    std::optional<EdgeSpan> window;

    std::int64_t weight1() const noexcept { return k - i; }

    friend bool operator==(const ColoredSubpath&, const ColoredSubpath&) = default;
};

/// Throws Error(InvalidArgument) unless 0 <= i < k <= top(),
/// Error(AmbiguousGreen) if two (m, w) pairs match.
ColoredSubpath classify(const DyckPath& path, std::int64_t i, std::int64_t k);

/// Confirms no first-steep offset has the green form with m >= n-1.
/// Throws Error(LemmaViolation) otherwise.
void assert_no_late_greens(const DyckPath& path);

}  // namespace rank2

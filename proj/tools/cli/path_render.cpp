#include "path_render.hpp"

#include <sstream>
#include <vector>

namespace rank2::cli {

namespace {

enum class Mark { None, Path, Overlay, Window };

Mark edge_mark(std::int64_t position, const std::optional<ColoredSubpath>& overlay) {
    if (overlay) {
        if (overlay->edges.contains(position)) {
            return Mark::Overlay;
        }
        if (overlay->window && overlay->window->contains(position)) {
            return Mark::Window;
        }
    }
    return Mark::Path;
}

std::string describe(const ColoredSubpath& sub) {
    std::ostringstream out;
    out << "alpha(" << sub.i << "," << sub.k << ") " << to_string(sub.color);
    if (sub.green) {
        out << " (m=" << sub.green->m << ", w=" << sub.green->w << ")";
    }
    out << " edges " << sub.edges.first << ".." << sub.edges.last;
    if (sub.window) {
        out << " window " << sub.window->first << ".." << sub.window->last;
    }
    return out.str();
}

const char* stroke_color(Color color) {
    switch (color) {
        case Color::Blue: return "blue";
        case Color::Green: return "green";
        case Color::Red: return "red";
    }
    return "black";
}

}  // namespace

std::string path_ascii(const DyckPath& path, const std::optional<ColoredSubpath>& overlay) {
    const auto w = path.width();
    const auto h = path.height();
    constexpr std::int64_t kCell = 4;
    const auto cols = static_cast<std::size_t>(w * kCell + 1);
    const auto rows = static_cast<std::size_t>(h * 2 + 1);
    // Row 0 is y = h; points sit on even rows and multiples of kCell columns.
    std::vector<std::string> canvas(rows, std::string(cols, ' '));
    const auto put = [&](std::int64_t row, std::int64_t col, char ch) {
        canvas[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] = ch;
    };
    for (std::int64_t y = 0; y <= h; ++y) {
        for (std::int64_t x = 0; x <= w; ++x) {
            // Lattice points strictly above the diagonal are left blank.
            put((h - y) * 2, x * kCell, path.on_or_below_diagonal({x, y}) ? '.' : ' ');
        }
    }
    const auto points = path.lattice_points();
    for (std::int64_t p = 1; p <= path.edge_count(); ++p) {
        const auto from = points[static_cast<std::size_t>(p - 1)];
        const auto mark = edge_mark(p, overlay);
        if (path.step(p) == 'E') {
            const char ch = mark == Mark::Overlay ? '=' : mark == Mark::Window ? '~' : '-';
            for (std::int64_t c = 1; c < kCell; ++c) {
                put((h - from.y) * 2, from.x * kCell + c, ch);
            }
        } else {
            const char ch = mark == Mark::Overlay ? '#' : mark == Mark::Window ? '!' : '|';
            put((h - from.y) * 2 - 1, from.x * kCell, ch);
        }
    }
    for (const auto& pt : points) {
        put((h - pt.y) * 2, pt.x * kCell, '+');
    }
    for (std::int64_t j = 0; j <= path.top(); ++j) {
        const auto v = path.v(j);
        put((h - v.y) * 2, v.x * kCell, 'o');
    }

    std::ostringstream out;
    out << "D_" << path.n() << " r=" << path.r() << " rectangle " << w << "x" << h << " word " << path.word()
        << '\n';
    for (auto& line : canvas) {
        while (!line.empty() && line.back() == ' ') {
            line.pop_back();
        }
        out << line << '\n';
    }
    out << "o = v_j, + = path vertex, . = lattice point on or below the diagonal\n";
    if (overlay) {
        out << "overlay " << describe(*overlay) << " (=/# overlay, ~/! window)\n";
    }
    return out.str();
}

std::string path_svg(const DyckPath& path, const std::optional<ColoredSubpath>& overlay) {
    constexpr int kScale = 40;
    constexpr int kMargin = 30;
    const auto w = path.width();
    const auto h = path.height();
    const auto sx = [&](std::int64_t x) { return kMargin + x * kScale; };
    const auto sy = [&](std::int64_t y) { return kMargin + (h - y) * kScale; };

    std::ostringstream out;
    out << R"(<svg xmlns="http://www.w3.org/2000/svg" width=")" << w * kScale + 2 * kMargin << R"(" height=")"
        << h * kScale + 2 * kMargin << R"(">)" << '\n';
    out << "<title>D_" << path.n() << " r=" << path.r() << " word " << path.word() << "</title>\n";
    out << R"(<g stroke="#cccccc" stroke-width="1">)" << '\n';
    for (std::int64_t x = 0; x <= w; ++x) {
        out << R"(<line x1=")" << sx(x) << R"(" y1=")" << sy(0) << R"(" x2=")" << sx(x) << R"(" y2=")" << sy(h)
            << R"("/>)" << '\n';
    }
    for (std::int64_t y = 0; y <= h; ++y) {
        out << R"(<line x1=")" << sx(0) << R"(" y1=")" << sy(y) << R"(" x2=")" << sx(w) << R"(" y2=")" << sy(y)
            << R"("/>)" << '\n';
    }
    out << "</g>\n";
    out << R"(<line class="diagonal" x1=")" << sx(0) << R"(" y1=")" << sy(0) << R"(" x2=")" << sx(w)
        << R"(" y2=")" << sy(h) << R"(" stroke="black" stroke-width="1"/>)" << '\n';

    const auto points = path.lattice_points();
    for (std::int64_t p = 1; p <= path.edge_count(); ++p) {
        const auto a = points[static_cast<std::size_t>(p - 1)];
        const auto b = points[static_cast<std::size_t>(p)];
        const auto mark = edge_mark(p, overlay);
        const char* color = mark == Mark::Overlay ? stroke_color(overlay->color)
                            : mark == Mark::Window ? "orange"
                                                   : "black";
        const int width = mark == Mark::Path ? 4 : 6;
        out << R"(<line class="edge" data-edge=")" << p << R"(" x1=")" << sx(a.x) << R"(" y1=")" << sy(a.y)
            << R"(" x2=")" << sx(b.x) << R"(" y2=")" << sy(b.y) << R"(" stroke=")" << color
            << R"(" stroke-width=")" << width << '"' << (mark == Mark::Window ? R"( stroke-dasharray="6,3")" : "")
            << "/>\n";
    }
    for (std::int64_t j = 0; j <= path.top(); ++j) {
        const auto v = path.v(j);
        out << R"(<circle cx=")" << sx(v.x) << R"(" cy=")" << sy(v.y) << R"(" r="5" fill="black"/>)" << '\n';
        out << R"(<text x=")" << sx(v.x) + 6 << R"(" y=")" << sy(v.y) - 6 << R"(" font-size="12">v)" << j
            << "</text>\n";
    }
    if (overlay) {
        out << "<desc>" << describe(*overlay) << "</desc>\n";
    }
    out << "</svg>\n";
    return out.str();
}

std::string path_tikz(const DyckPath& path, const std::optional<ColoredSubpath>& overlay) {
    const auto w = path.width();
    const auto h = path.height();
    std::ostringstream out;
    out << "% D_" << path.n() << " r=" << path.r() << " word " << path.word() << '\n';
    out << "\\begin{tikzpicture}[scale=0.6]\n";
    out << "  \\draw[help lines] (0,0) grid (" << w << "," << h << ");\n";
    out << "  \\draw (0,0) -- (" << w << "," << h << ");\n";
    const auto points = path.lattice_points();
    for (std::int64_t p = 1; p <= path.edge_count(); ++p) {
        const auto a = points[static_cast<std::size_t>(p - 1)];
        const auto b = points[static_cast<std::size_t>(p)];
        const auto mark = edge_mark(p, overlay);
        out << "  \\draw[";
        if (mark == Mark::Overlay) {
            out << stroke_color(overlay->color) << ", line width=3pt";
        } else if (mark == Mark::Window) {
            out << "orange, dashed, line width=3pt";
        } else {
            out << "line width=2pt";
        }
        out << "] (" << a.x << "," << a.y << ") -- (" << b.x << "," << b.y << ");\n";
    }
    for (std::int64_t j = 0; j <= path.top(); ++j) {
        const auto v = path.v(j);
        out << "  \\fill (" << v.x << "," << v.y << ") circle (3pt) node[above left] {$v_{" << j << "}$};\n";
    }
    if (overlay) {
        out << "  % overlay " << describe(*overlay) << '\n';
    }
    out << "\\end{tikzpicture}\n";
    return out.str();
}

}  // namespace rank2::cli

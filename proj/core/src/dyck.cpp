#include "rank2/dyck.hpp"

#include "rank2/error.hpp"

#include <json.hpp>

#include <sstream>

namespace rank2 {

CSequence c_sequence(int r, int upto, const Limits& limits) {
    if (r < 2) {
        throw Error(ErrorKind::InvalidArgument, "c-sequence needs r >= 2, got " + std::to_string(r));
    }
    if (upto < 2) {
        throw Error(ErrorKind::InvalidArgument, "c-sequence needs upto >= 2, got " + std::to_string(upto));
    }
    std::vector<std::int64_t> values{0, 1};
    values.reserve(static_cast<std::size_t>(upto));
    while (static_cast<int>(values.size()) < upto) {
        const auto n = values.size();
        const std::int64_t next = checked_sub(checked_mul(r, values[n - 1]), values[n - 2]);
        if (next > limits.max_exponent) {
            throw Error(ErrorKind::Overflow, "c_" + std::to_string(n + 1) + " = " + std::to_string(next) +
                                                 " exceeds the exponent cap " +
                                                 std::to_string(limits.max_exponent));
        }
        values.push_back(next);
    }
    return CSequence(r, std::move(values));
}

bool DyckPath::on_or_below_diagonal(Point p) const {
    return checked_mul(p.y, width_) <= checked_mul(p.x, height_);
}

DyckPath build_path(int r, int n, const Limits& limits) {
    if (n < 4) {
        throw Error(ErrorKind::InvalidArgument, "maximal Dyck path needs n >= 4, got " + std::to_string(n));
    }
    DyckPath path;
    path.r_ = r;
    path.n_ = n;
    path.c_ = c_sequence(r, n - 1, limits);
    path.height_ = path.c_(n - 2);
    path.width_ = path.c_(n - 1) - path.c_(n - 2);

    const std::int64_t length = path.c_(n - 1);
    path.word_.reserve(static_cast<std::size_t>(length));
    path.points_.reserve(static_cast<std::size_t>(length + 1));
    path.v_index_.reserve(static_cast<std::size_t>(path.height_ + 1));

    Point at{0, 0};
    path.points_.push_back(at);
    path.v_index_.push_back(0);
    for (std::int64_t position = 1; position <= length; ++position) {
        const Point north{at.x, at.y + 1};
        if (at.y < path.height_ && path.on_or_below_diagonal(north)) {
            at = north;
            path.word_.push_back('N');
            path.v_index_.push_back(position);
        } else {
            at = {at.x + 1, at.y};
            path.word_.push_back('E');
        }
        path.points_.push_back(at);
    }
    if (at != Point{path.width_, path.height_}) {
        throw Error(ErrorKind::Internal, "greedy walk missed the north-east corner");
    }
    return path;
}

std::string path_to_json(const DyckPath& path) {
    std::ostringstream out;
    out << R"({"r":)" << path.r() << R"(,"n":)" << path.n() << R"(,"word":")" << path.word()
        << R"(","v_index":[)";
    const auto idx = path.v_indices();
    for (std::size_t j = 0; j < idx.size(); ++j) {
        out << (j ? "," : "") << idx[j];
    }
    out << "]}";
    return out.str();
}

DyckPath path_from_json(std::string_view text, const Limits& limits) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
        DyckPath path = build_path(doc.at("r").get<int>(), doc.at("n").get<int>(), limits);
        const auto word = doc.at("word").get<std::string>();
        const auto v_index = doc.at("v_index").get<std::vector<std::int64_t>>();
        const auto expected = path.v_indices();
        if (word != path.word() || !std::equal(v_index.begin(), v_index.end(), expected.begin(), expected.end())) {
            throw Error(ErrorKind::InvalidArgument, "path JSON does not describe the maximal Dyck path");
        }
        return path;
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::InvalidArgument, std::string("malformed path JSON: ") + e.what());
    }
}

SlopeOrder slope_exceeds(const DyckPath& path, std::int64_t a, std::int64_t b) {
    const Point va = path.v(a);
    const Point vb = path.v(b);
    const std::int64_t rise = checked_mul(vb.y - va.y, path.width());
    const std::int64_t run = checked_mul(vb.x - va.x, path.height());
    return rise > run ? SlopeOrder::GT : SlopeOrder::LE;
}

std::optional<std::int64_t> first_steep_vertex(const DyckPath& path, std::int64_t i) {
    for (std::int64_t t = i + 1; t <= path.top(); ++t) {
        if (slope_exceeds(path, i, t) == SlopeOrder::GT) {
            return t;
        }
    }
    return std::nullopt;
}

std::string_view to_string(Color color) noexcept {
    switch (color) {
        case Color::Blue: return "BLUE";
        case Color::Green: return "GREEN";
        case Color::Red: return "RED";
    }
    return "?";
}

std::vector<GreenParams> green_matches(const DyckPath& path, std::int64_t offset) {
    std::vector<GreenParams> found;
    const auto& c = path.c();
    for (int m = 3; m <= path.n() - 2; ++m) {
        for (std::int64_t w = 1; w <= path.r() - 2; ++w) {
            if (c(m) - w * c(m - 1) == offset) {
                found.push_back({m, w});
            }
        }
    }
    return found;
}

ColoredSubpath classify(const DyckPath& path, std::int64_t i, std::int64_t k) {
    if (i < 0 || i >= k || k > path.top()) {
        throw Error(ErrorKind::InvalidArgument, "alpha(" + std::to_string(i) + "," + std::to_string(k) +
                                                    ") needs 0 <= i < k <= " + std::to_string(path.top()));
    }
    ColoredSubpath sub;
    sub.i = i;
    sub.k = k;
    sub.edges = {path.v_index(i) + 1, path.v_index(k)};

    const auto steep = first_steep_vertex(path, i);
    if (!steep || *steep > k) {
        sub.color = Color::Blue;
        return sub;
    }
    if (i == 0) {
        throw Error(ErrorKind::Internal, "a subpath starting at v_0 rose above the diagonal");
    }
    const auto matches = green_matches(path, *steep - i);
    if (matches.size() > 1) {
        throw Error(ErrorKind::AmbiguousGreen, "alpha(" + std::to_string(i) + "," + std::to_string(k) +
                                                   ") matches " + std::to_string(matches.size()) +
                                                   " (m, w) pairs");
    }
    if (matches.empty()) {
        sub.color = Color::Red;
        sub.edges.first = path.v_index(i);
        return sub;
    }
    const auto [m, w] = matches.front();
    const auto& c = path.c();
    const std::int64_t length = c(m - 1) - w * c(m - 2);
    const EdgeSpan window{path.v_index(i) - length + 1, path.v_index(i)};
    if (window.first < 1) {
        throw Error(ErrorKind::Internal, "green window of alpha(" + std::to_string(i) + "," +
                                             std::to_string(k) + ") starts before the first edge");
    }
    sub.color = Color::Green;
    sub.green = matches.front();
    sub.window = window;
    return sub;
}

void assert_no_late_greens(const DyckPath& path) {
    // c_m - w c_{m-1} is smallest at w = r-2 and grows with m; once that
    // minimum passes c_{n-2} no offset can match.
    std::vector<std::int64_t> c(path.c().values().begin(), path.c().values().end());
    const std::int64_t r = path.r();
    const auto value = [&](int m) {
        while (static_cast<int>(c.size()) < m) {
            const auto s = c.size();
            c.push_back(checked_sub(checked_mul(r, c[s - 1]), c[s - 2]));
        }
        return c[static_cast<std::size_t>(m - 1)];
    };
    for (std::int64_t i = 0; i < path.top(); ++i) {
        const auto steep = first_steep_vertex(path, i);
        if (!steep) {
            continue;
        }
        const std::int64_t offset = *steep - i;
        for (int m = path.n() - 1;; ++m) {
            if (value(m) - (r - 2) * value(m - 1) > path.top()) {
                break;
            }
            for (std::int64_t w = 1; w <= r - 2; ++w) {
                if (value(m) - w * value(m - 1) == offset) {
                    throw Error(ErrorKind::LemmaViolation,
                                "vertex " + std::to_string(i) + " has a green offset with m = " +
                                    std::to_string(m) + " >= n-1");
                }
            }
        }
    }
}

}  // namespace rank2

#include "rank2/combinat.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <numeric>
#include <sstream>
#include <thread>
#include <unordered_map>

namespace rank2 {

SubpathFamily build_P(const DyckPath& path) {
    SubpathFamily family;
    family.edge_count = path.edge_count();
    family.top = path.top();
    const auto pairs = static_cast<std::size_t>(path.top() * (path.top() + 1) / 2);
    family.colored.reserve(pairs);
    for (std::int64_t i = 0; i < path.top(); ++i) {
        for (std::int64_t k = i + 1; k <= path.top(); ++k) {
            family.colored.push_back(classify(path, i, k));
        }
    }
    return family;
}

std::int64_t BetaSet::weight1() const {
    std::int64_t total = 0;
    for (const auto& sub : colored) {
        total += sub.weight1();
    }
    return total;
}

std::int64_t BetaSet::weight2() const {
    std::int64_t total = static_cast<std::int64_t>(singles.size());
    for (const auto& sub : colored) {
        total += sub.edges.size();
    }
    return total;
}

bool is_member(const DyckPath& path, const BetaSet& candidate) {
    // owner[p] = index of the element covering edge p; colored first, then singles.
    constexpr std::size_t kFree = static_cast<std::size_t>(-1);
    std::vector<std::size_t> owner(static_cast<std::size_t>(path.edge_count() + 1), kFree);
    std::size_t id = 0;
    const auto claim = [&](std::int64_t p) {
        if (p < 1 || p > path.edge_count() || owner[static_cast<std::size_t>(p)] != kFree) {
            return false;
        }
        owner[static_cast<std::size_t>(p)] = id;
        return true;
    };
    for (const auto& sub : candidate.colored) {
        for (std::int64_t p = sub.edges.first; p <= sub.edges.last; ++p) {
            if (!claim(p)) {
                return false;
            }
        }
        ++id;
    }
    for (const auto p : candidate.singles) {
        if (!claim(p)) {
            return false;
        }
        ++id;
    }
    const auto& colored = candidate.colored;
    for (std::size_t a = 0; a < colored.size(); ++a) {
        for (std::size_t b = 0; b < colored.size(); ++b) {
            if (a != b && colored[a].i == colored[b].k) {
                return false;
            }
        }
    }
    for (std::size_t a = 0; a < colored.size(); ++a) {
        if (!colored[a].window) {
            continue;
        }
        const auto& window = *colored[a].window;
        bool supported = false;
        for (std::int64_t p = window.first; p <= window.last && !supported; ++p) {
            const auto who = owner[static_cast<std::size_t>(p)];
            supported = who != kFree && who != a;
        }
        if (!supported) {
            return false;
        }
    }
    return true;
}

std::string beta_to_json(const BetaSet& beta) {
    std::ostringstream out;
    out << R"({"colored":[)";
    for (std::size_t j = 0; j < beta.colored.size(); ++j) {
        out << (j ? "," : "") << '[' << beta.colored[j].i << ',' << beta.colored[j].k << ']';
    }
    out << R"(],"singles":[)";
    for (std::size_t j = 0; j < beta.singles.size(); ++j) {
        out << (j ? "," : "") << beta.singles[j];
    }
    out << "]}";
    return out.str();
}

BetaSet materialize(const SubpathFamily& family, const BetaView& view) {
    BetaSet beta;
    beta.colored.reserve(view.colored.size());
    for (const auto e : view.colored) {
        beta.colored.push_back(family.colored[e]);
    }
    for (std::uint64_t s = view.singles; s; s &= s - 1) {
        beta.singles.push_back(std::countr_zero(s) + 1);
    }
    return beta;
}

namespace detail {

std::vector<MaskedElement> mask_family(const SubpathFamily& family, const Limits& limits) {
    if (family.edge_count > limits.bruteforce_edge_cap) {
        throw Error(ErrorKind::CapExceeded, "path has " + std::to_string(family.edge_count) +
                                                " edges, brute-force cap is " +
                                                std::to_string(limits.bruteforce_edge_cap));
    }
    if (family.edge_count > 64) {
        throw Error(ErrorKind::CapExceeded, "brute force supports at most 64 edges");
    }
    const auto bits = [](const EdgeSpan& span) {
        std::uint64_t mask = 0;
        for (std::int64_t p = span.first; p <= span.last; ++p) {
            mask |= std::uint64_t{1} << (p - 1);
        }
        return mask;
    };
    std::vector<MaskedElement> out;
    out.reserve(family.colored.size());
    for (const auto& sub : family.colored) {
        MaskedElement el;
        el.span = bits(sub.edges);
        el.window = sub.window ? bits(*sub.window) : 0;
        el.start_bit = std::uint64_t{1} << sub.i;
        el.end_bit = std::uint64_t{1} << sub.k;
        el.weight1 = sub.weight1();
        el.edges = static_cast<int>(sub.edges.size());
        out.push_back(el);
    }
    return out;
}

}  // namespace detail

std::uint64_t enumerate_bruteforce(const DyckPath& path, const std::function<void(const BetaSet&)>& sink,
                                   const Limits& limits) {
    const auto family = build_P(path);
    return for_each_beta(
        family, [&](const BetaView& view) { sink(materialize(family, view)); }, limits);
}

LaurentPoly2 bruteforce_poly(const DyckPath& path, const Limits& limits) {
    const auto family = build_P(path);
    const auto rows = static_cast<std::size_t>(family.top + 1);
    const auto cols = static_cast<std::size_t>(family.edge_count + 1);
    std::vector<std::uint64_t> counts(rows * cols, 0);
    for_each_beta(
        family,
        [&](const BetaView& view) {
            ++counts[static_cast<std::size_t>(view.weight1) * cols + static_cast<std::size_t>(view.weight2)];
        },
        limits);
    LaurentPoly2 poly;
    for (std::size_t w1 = 0; w1 < rows; ++w1) {
        for (std::size_t w2 = 0; w2 < cols; ++w2) {
            if (const auto n = counts[w1 * cols + w2]) {
                mpz_class c;
                mpz_import(c.get_mpz_t(), 1, 1, sizeof n, 0, 0, &n);
                poly.add_term({static_cast<std::int64_t>(w2), static_cast<std::int64_t>(w1)}, c);
            }
        }
    }
    return poly;
}

namespace {

class Bits {
public:
    Bits() = default;
    explicit Bits(std::size_t size) : words_((size + 63) / 64, 0) {}

    void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
    void reset(std::size_t i) { words_[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }
    bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }
    bool intersects(const Bits& o) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            if (words_[w] & o.words_[w]) {
                return true;
            }
        }
        return false;
    }
    void assign_and_not(const Bits& a, const Bits& b) {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            words_[w] = a.words_[w] & ~b.words_[w];
        }
    }
    void fill(std::size_t size) {
        for (std::size_t i = 0; i < size; ++i) {
            set(i);
        }
    }
    /// First set bit at or after `from`, or npos.
    std::size_t next(std::size_t from) const {
        std::size_t w = from / 64;
        if (w >= words_.size()) {
            return npos;
        }
        std::uint64_t word = words_[w] & (~std::uint64_t{0} << (from % 64));
        while (true) {
            if (word) {
                return w * 64 + static_cast<std::size_t>(std::countr_zero(word));
            }
            if (++w == words_.size()) {
                return npos;
            }
            word = words_[w];
        }
    }

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

private:
    std::vector<std::uint64_t> words_;
};

// Signed counts keyed by (edges covered, weight1, exponent of (1 + y1)).
class TermCounts {
public:
    TermCounts(std::int64_t edge_count, std::int64_t top)
        : edges_(edge_count + 1), weights_(top + 1) {
        const auto cells = static_cast<std::uint64_t>(edges_) * static_cast<std::uint64_t>(edges_) *
                           static_cast<std::uint64_t>(weights_);
        if (cells <= kDenseCells) {
            dense_.assign(cells, 0);
        }
    }

    void add(std::int64_t e, std::int64_t w, std::int64_t m, std::int64_t delta) {
        const auto key = static_cast<std::size_t>((e * weights_ + w) * edges_ + m);
        if (!dense_.empty()) {
            dense_[key] += delta;
        } else {
            sparse_[key] += delta;
        }
    }

    void merge(const TermCounts& o) {
        for (std::size_t i = 0; i < dense_.size(); ++i) {
            dense_[i] += o.dense_[i];
        }
        for (const auto& [key, v] : o.sparse_) {
            sparse_[key] += v;
        }
    }

    template <class Fn>
    void for_each(Fn&& fn) const {
        const auto decode = [&](std::size_t key, std::int64_t v) {
            const auto k = static_cast<std::int64_t>(key);
            fn(k / (weights_ * edges_), (k / edges_) % weights_, k % edges_, v);
        };
        for (std::size_t i = 0; i < dense_.size(); ++i) {
            if (dense_[i]) {
                decode(i, dense_[i]);
            }
        }
        std::vector<std::pair<std::size_t, std::int64_t>> sorted(sparse_.begin(), sparse_.end());
        std::sort(sorted.begin(), sorted.end());
        for (const auto& [key, v] : sorted) {
            if (v) {
                decode(key, v);
            }
        }
    }

private:
    static constexpr std::uint64_t kDenseCells = std::uint64_t{1} << 24;

    std::int64_t edges_;
    std::int64_t weights_;
    std::vector<std::int64_t> dense_;
    std::unordered_map<std::size_t, std::int64_t> sparse_;
};

// Adds y1^edges y2^weight1 * sum_{T subset of windows} (-1)^|T| (1+y1)^(free - |union T|).
void add_inclusion_exclusion(TermCounts& counts, std::int64_t edges, std::int64_t weight1,
                             std::int64_t free, std::span<const EdgeSpan> windows) {
    if (windows.empty()) {
        counts.add(edges, weight1, free, 1);
        return;
    }
    if (windows.size() > 30) {
        throw Error(ErrorKind::ConfigCap, "too many unsupported green windows in one configuration");
    }
    std::vector<EdgeSpan> picked;
    const std::uint32_t subsets = std::uint32_t{1} << windows.size();
    for (std::uint32_t t = 0; t < subsets; ++t) {
        picked.clear();
        for (std::size_t g = 0; g < windows.size(); ++g) {
            if ((t >> g) & 1U) {
                picked.push_back(windows[g]);
            }
        }
        std::sort(picked.begin(), picked.end(), [](const EdgeSpan& a, const EdgeSpan& b) { return a.first < b.first; });
        std::int64_t covered = 0;
        std::int64_t reach = 0;
        for (const auto& span : picked) {
            const std::int64_t from = std::max(span.first, reach + 1);
            if (span.last >= from) {
                covered += span.last - from + 1;
            }
            reach = std::max(reach, span.last);
        }
        counts.add(edges, weight1, free - covered, (std::popcount(t) & 1) ? -1 : 1);
    }
}

// Precomputed relations over the colored subpaths in visiting order.
struct Relations {
    std::vector<ColoredSubpath> elements;
    std::vector<Bits> conflicts;   // includes the element itself
    std::vector<Bits> satisfiers;  // elements whose span meets the window (greens only)
    std::int64_t edge_count = 0;
    std::int64_t top = 0;
};

Relations relate(const SubpathFamily& family, bool reverse) {
    Relations rel;
    rel.edge_count = family.edge_count;
    rel.top = family.top;
    rel.elements = family.colored;
    if (reverse) {
        std::reverse(rel.elements.begin(), rel.elements.end());
    }
    const auto n = rel.elements.size();
    rel.conflicts.assign(n, Bits(n));
    rel.satisfiers.assign(n, Bits(n));
    for (std::size_t a = 0; a < n; ++a) {
        const auto& x = rel.elements[a];
        for (std::size_t b = 0; b < n; ++b) {
            const auto& y = rel.elements[b];
            if (a == b || x.edges.intersects(y.edges) || x.i == y.k || y.i == x.k) {
                rel.conflicts[a].set(b);
            }
            if (x.window && x.window->intersects(y.edges)) {
                rel.satisfiers[a].set(b);
            }
        }
    }
    return rel;
}

class ConfigurationWalker {
public:
    ConfigurationWalker(const Relations& rel, TermCounts& counts, std::atomic<std::uint64_t>& visited,
                        std::uint64_t budget, const std::atomic<bool>& stop)
        : rel_(rel), counts_(counts), visited_(visited), budget_(budget), stop_(stop),
          chosen_(rel.elements.size()) {
        levels_.assign(rel.elements.size() + 2, Bits(rel.elements.size()));
    }

    void root_only() { visit_node(0, 0); }

    void walk_all() {
        levels_[0].fill(rel_.elements.size());
        descend(0, 0, 0, 0);
        flush();
    }

    /// The subtree whose smallest chosen element is `first`, excluding the root.
    void walk_from(std::size_t first) {
        levels_[0].fill(rel_.elements.size());
        enter(first, 0, 0, 0);
        flush();
    }

private:
    void descend(std::size_t from, std::size_t depth, std::int64_t edges, std::int64_t weight1) {
        visit_node(edges, weight1);
        for (std::size_t e = levels_[depth].next(from); e != Bits::npos; e = levels_[depth].next(e + 1)) {
            enter(e, depth, edges, weight1);
        }
    }

    void enter(std::size_t e, std::size_t depth, std::int64_t edges, std::int64_t weight1) {
        const auto& el = rel_.elements[e];
        levels_[depth + 1].assign_and_not(levels_[depth], rel_.conflicts[e]);
        chosen_.set(e);
        stack_.push_back(e);
        descend(e + 1, depth + 1, edges + el.edges.size(), weight1 + el.weight1());
        stack_.pop_back();
        chosen_.reset(e);
    }

    void visit_node(std::int64_t edges, std::int64_t weight1) {
        if (++local_ >= kFlushEvery) {
            flush();
        }
        windows_.clear();
        for (const auto e : stack_) {
            const auto& el = rel_.elements[e];
            if (el.window && !chosen_.intersects(rel_.satisfiers[e])) {
                windows_.push_back(*el.window);
            }
        }
        add_inclusion_exclusion(counts_, edges, weight1, rel_.edge_count - edges, windows_);
    }

    void flush() {
        const auto total = visited_.fetch_add(local_) + local_;
        local_ = 0;
        if (total > budget_) {
            throw Error(ErrorKind::ConfigCap, "configuration budget of " + std::to_string(budget_) +
                                                  " exceeded");
        }
        if (stop_.load(std::memory_order_relaxed)) {
            throw Error(ErrorKind::ConfigCap, "cancelled");
        }
    }

    static constexpr std::uint64_t kFlushEvery = 4096;

    const Relations& rel_;
    TermCounts& counts_;
    std::atomic<std::uint64_t>& visited_;
    std::uint64_t budget_;
    const std::atomic<bool>& stop_;
    Bits chosen_;
    std::vector<Bits> levels_;
    std::vector<std::size_t> stack_;
    std::vector<EdgeSpan> windows_;
    std::uint64_t local_ = 0;
};

LaurentPoly2 expand_counts(const TermCounts& counts, std::int64_t edge_count, std::int64_t top) {
    std::map<std::int64_t, std::vector<mpz_class>> binomials;
    const auto row = [&](std::int64_t m) -> const std::vector<mpz_class>& {
        auto [it, inserted] = binomials.try_emplace(m);
        if (inserted) {
            auto& r = it->second;
            r.resize(static_cast<std::size_t>(m + 1));
            r[0] = 1;
            for (std::int64_t j = 0; j < m; ++j) {
                r[static_cast<std::size_t>(j + 1)] = r[static_cast<std::size_t>(j)] * (m - j) / (j + 1);
            }
        }
        return it->second;
    };
    const auto cols = static_cast<std::size_t>(edge_count + 1);
    std::vector<mpz_class> coef(static_cast<std::size_t>(top + 1) * cols);
    counts.for_each([&](std::int64_t e, std::int64_t w, std::int64_t m, std::int64_t n) {
        const auto& binom = row(m);
        const auto base = static_cast<std::size_t>(w) * cols + static_cast<std::size_t>(e);
        for (std::size_t j = 0; j < binom.size(); ++j) {
            if (n > 0) {
                mpz_addmul_ui(coef[base + j].get_mpz_t(), binom[j].get_mpz_t(), static_cast<unsigned long>(n));
            } else {
                mpz_submul_ui(coef[base + j].get_mpz_t(), binom[j].get_mpz_t(), static_cast<unsigned long>(-n));
            }
        }
    });
    LaurentPoly2 poly;
    for (std::size_t w = 0; w <= static_cast<std::size_t>(top); ++w) {
        for (std::size_t a = 0; a < cols; ++a) {
            const auto& c = coef[w * cols + a];
            if (sgn(c) < 0) {
                throw Error(ErrorKind::Internal, "inclusion-exclusion produced a negative count");
            }
            poly.add_term({static_cast<std::int64_t>(a), static_cast<std::int64_t>(w)}, c);
        }
    }
    return poly;
}

}  // namespace

LaurentPoly2 generating_poly(const DyckPath& path, const GeneratingOptions& options, const Limits& limits) {
    const auto family = build_P(path);
    const auto rel = relate(family, options.reverse_order);
    std::atomic<std::uint64_t> visited{0};
    std::atomic<bool> stop{false};
    TermCounts total(rel.edge_count, rel.top);

    const unsigned threads = std::max(1U, limits.threads);
    if (threads == 1 || rel.elements.empty()) {
        ConfigurationWalker walker(rel, total, visited, limits.config_budget, stop);
        walker.walk_all();
        return expand_counts(total, rel.edge_count, rel.top);
    }

    ConfigurationWalker(rel, total, visited, limits.config_budget, stop).root_only();
    std::atomic<std::size_t> next{0};
    std::mutex merge_mutex;
    std::exception_ptr failure;
    const auto work = [&] {
        TermCounts local(rel.edge_count, rel.top);
        try {
            ConfigurationWalker walker(rel, local, visited, limits.config_budget, stop);
            for (std::size_t e = next++; e < rel.elements.size(); e = next++) {
                walker.walk_from(e);
            }
        } catch (...) {
            std::lock_guard lock(merge_mutex);
            if (!failure) {
                failure = std::current_exception();
            }
            stop = true;
            return;
        }
        std::lock_guard lock(merge_mutex);
        total.merge(local);
    };
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back(work);
    }
    pool.clear();
    if (failure) {
        std::rethrow_exception(failure);
    }
    return expand_counts(total, rel.edge_count, rel.top);
}

LaurentPoly2 configuration_term(const SubpathFamily& family, std::span<const std::size_t> chosen) {
    std::int64_t edges = 0;
    std::int64_t weight1 = 0;
    std::vector<EdgeSpan> windows;
    for (const auto a : chosen) {
        const auto& x = family.colored.at(a);
        for (const auto b : chosen) {
            const auto& y = family.colored.at(b);
            if (a != b && (x.edges.intersects(y.edges) || x.i == y.k)) {
                throw Error(ErrorKind::InvalidArgument, "configuration contains conflicting subpaths");
            }
        }
        edges += x.edges.size();
        weight1 += x.weight1();
    }
    for (const auto a : chosen) {
        const auto& x = family.colored[a];
        if (!x.window) {
            continue;
        }
        const bool supported = std::any_of(chosen.begin(), chosen.end(), [&](std::size_t b) {
            return x.window->intersects(family.colored[b].edges);
        });
        if (!supported) {
            windows.push_back(*x.window);
        }
    }
    TermCounts counts(family.edge_count, family.top);
    add_inclusion_exclusion(counts, edges, weight1, family.edge_count - edges, windows);
    return expand_counts(counts, family.edge_count, family.top);
}

Histogram histogram_from_poly(const LaurentPoly2& generating) {
    Histogram h;
    for (const auto& [e, c] : generating.terms()) {
        h.emplace(std::pair{e.e2, e.e1}, c);
    }
    return h;
}

Histogram stats_histogram(const DyckPath& path, const Limits& limits) {
    return histogram_from_poly(generating_poly(path, {}, limits));
}

std::string histogram_csv(const Histogram& histogram) {
    std::ostringstream out;
    out << "w1,w2,count\n";
    for (const auto& [key, count] : histogram) {
        out << key.first << ',' << key.second << ',' << count.get_str() << '\n';
    }
    return out.str();
}

}  // namespace rank2

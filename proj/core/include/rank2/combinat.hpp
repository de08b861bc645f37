#pragma once

#include "rank2/dyck.hpp"
#include "rank2/error.hpp"
#include "rank2/laurent.hpp"
#include "rank2/limits.hpp"

#include <gmpxx.h>

#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace rank2 {

/// P(D_n): every classified alpha(i, k), in (i, k) lexicographic order, plus
/// the single edges 1..edge_count.
struct SubpathFamily {
    std::vector<ColoredSubpath> colored;
    std::int64_t edge_count = 0;
    std::int64_t top = 0;
};

SubpathFamily build_P(const DyckPath& path);

/// One collection of colored subpaths and single edges.
struct BetaSet {
    std::vector<ColoredSubpath> colored;
    std::vector<std::int64_t> singles;

    /// |beta|_1: sum of k - i over the colored subpaths.
    std::int64_t weight1() const;
    /// |beta|_2: total number of edges.
    std::int64_t weight2() const;
};

/// True iff the elements are pairwise edge-disjoint, no two colored subpaths
/// share an endpoint index the forbidden way, and every green has a window
/// edge covered by some other element.
bool is_member(const DyckPath& path, const BetaSet& candidate);

/// {"colored":[[i,k],...],"singles":[...]}
std::string beta_to_json(const BetaSet& beta);

/// Lightweight view handed to brute-force visitors. `colored` indexes into
/// SubpathFamily::colored; bit p-1 of `singles` is edge p.
struct BetaView {
    std::span<const std::size_t> colored;
    std::uint64_t singles = 0;
    std::int64_t weight1 = 0;
    std::int64_t weight2 = 0;
};

BetaSet materialize(const SubpathFamily& family, const BetaView& view);

namespace detail {

struct MaskedElement {
    std::uint64_t span = 0;
    std::uint64_t window = 0;  // zero unless green
    std::uint64_t start_bit = 0;
    std::uint64_t end_bit = 0;
    std::int64_t weight1 = 0;
    int edges = 0;
};

std::vector<MaskedElement> mask_family(const SubpathFamily& family, const Limits& limits);

template <class Visitor>
class BruteForce {
public:
    BruteForce(const SubpathFamily& family, const std::vector<MaskedElement>& elements, Visitor& visit)
        : family_(family), elements_(elements), visit_(visit) {
        all_edges_ = family.edge_count == 64 ? ~std::uint64_t{0}
                                             : (std::uint64_t{1} << family.edge_count) - 1;
    }

    std::uint64_t run() {
        descend(0, 0, 0, 0, 0, 0);
        return members_;
    }

private:
    void descend(std::size_t from, std::uint64_t covered, std::uint64_t starts, std::uint64_t ends,
                 std::int64_t weight1, int edges) {
        emit_singles(covered, weight1, edges);
        for (std::size_t e = from; e < elements_.size(); ++e) {
            const auto& el = elements_[e];
            if ((el.span & covered) || (el.start_bit & ends) || (el.end_bit & starts)) {
                continue;
            }
            chosen_.push_back(e);
            descend(e + 1, covered | el.span, starts | el.start_bit, ends | el.end_bit,
                    weight1 + el.weight1, edges + el.edges);
            chosen_.pop_back();
        }
    }

    void emit_singles(std::uint64_t covered, std::int64_t weight1, int edges) {
        // Windows already touched by a colored span need nothing further.
        pending_.clear();
        for (const auto e : chosen_) {
            const auto window = elements_[e].window;
            if (window && !(window & covered)) {
                pending_.push_back(window);
            }
        }
        const std::uint64_t free = all_edges_ & ~covered;
        std::uint64_t s = free;
        while (true) {
            bool ok = true;
            for (const auto window : pending_) {
                if (!(window & s)) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                ++members_;
                visit_(BetaView{chosen_, s, weight1, edges + std::popcount(s)});
            }
            if (s == 0) {
                break;
            }
            s = (s - 1) & free;
        }
    }

    const SubpathFamily& family_;
    const std::vector<MaskedElement>& elements_;
    Visitor& visit_;
    std::uint64_t all_edges_ = 0;
    std::vector<std::size_t> chosen_;
    std::vector<std::uint64_t> pending_;
    std::uint64_t members_ = 0;
};

}  // namespace detail

/// Visits every member of F(D_n) exactly once by backtracking over the colored
/// subpaths and enumerating subsets of the uncovered single edges. Returns the
/// number of members. Throws Error(CapExceeded) when the path has more than
/// limits.bruteforce_edge_cap edges.
template <class Visitor>
std::uint64_t for_each_beta(const SubpathFamily& family, Visitor&& visit, const Limits& limits = {}) {
    const auto elements = detail::mask_family(family, limits);
    detail::BruteForce<std::remove_reference_t<Visitor>> walker(family, elements, visit);
    return walker.run();
}

/// Materializing variant of for_each_beta, for debugging and small paths.
std::uint64_t enumerate_bruteforce(const DyckPath& path, const std::function<void(const BetaSet&)>& sink,
                                   const Limits& limits = {});

/// Sum over brute-forced members of y1^|beta|_2 y2^|beta|_1.
LaurentPoly2 bruteforce_poly(const DyckPath& path, const Limits& limits = {});

struct GeneratingOptions {
    /// Visit colored subpaths in reverse (i, k) order; the result must not change.
    bool reverse_order = false;
};

/// Sum over F(D_n) of y1^|beta|_2 y2^|beta|_1, aggregated per configuration of
/// colored subpaths with inclusion-exclusion for green windows. Throws
/// Error(ConfigCap) past limits.config_budget configurations.
LaurentPoly2 generating_poly(const DyckPath& path, const GeneratingOptions& options = {},
                             const Limits& limits = {});

/// Contribution of a single configuration of pairwise compatible colored
/// subpaths (indices into family.colored) to generating_poly.
LaurentPoly2 configuration_term(const SubpathFamily& family, std::span<const std::size_t> chosen);

/// (|beta|_1, |beta|_2) -> number of members.
using Histogram = std::map<std::pair<std::int64_t, std::int64_t>, mpz_class>;

Histogram histogram_from_poly(const LaurentPoly2& generating);
Histogram stats_histogram(const DyckPath& path, const Limits& limits = {});

/// Rows "w1,w2,count" sorted by (w1, w2).
std::string histogram_csv(const Histogram& histogram);

}  // namespace rank2

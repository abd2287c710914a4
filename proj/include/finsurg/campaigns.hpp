#pragma once

#include "finsurg/casson_walker.hpp"
#include "finsurg/realize.hpp"
#include "finsurg/tables.hpp"

#include <json.hpp>

#include <atomic>
#include <chrono>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace finsurg {

struct CampaignOptions {
    unsigned threads = 0;  // 0 = hardware concurrency
    std::optional<long long> budget_ms;
};

/// Deterministic machine-readable sweep result; `hits` is a JSON array whose
/// element shape depends on the campaign.
struct SweepReport {
    std::string campaign;
    nlohmann::json parameters = nlohmann::json::object();
    nlohmann::json hits = nlohmann::json::array();
    long long runtime_ms = 0;
    bool complete = true;

    nlohmann::json to_json() const {
        return nlohmann::json{{"campaign", campaign},
                              {"parameters", parameters},
                              {"hits", hits},
                              {"runtime_ms", runtime_ms},
                              {"complete", complete}};
    }

    std::string summary() const {
        std::ostringstream out;
        out << "campaign " << campaign << ": " << hits.size() << " hit(s) in " << runtime_ms
            << " ms" << (complete ? "" : " [INCOMPLETE: budget exhausted]") << "\n";
        for (const auto& h : hits) out << "  " << h.dump() << "\n";
        return out.str();
    }
};

namespace detail {

using Clock = std::chrono::steady_clock;

struct Deadline {
    std::optional<Clock::time_point> at;
    bool expired() const { return at && Clock::now() >= *at; }
};

inline Deadline make_deadline(const CampaignOptions& opt) {
    Deadline d;
    if (opt.budget_ms) d.at = Clock::now() + std::chrono::milliseconds(*opt.budget_ms);
    return d;
}

// runs fn(shard) for shard in [0, n); shards claimed from a shared counter,
// skipped (and the sweep marked incomplete) once the deadline passes
template <typename Fn>
inline bool parallel_shards(std::size_t n, const CampaignOptions& opt, const Deadline& deadline,
                            Fn&& fn) {
    unsigned threads = opt.threads ? opt.threads : std::thread::hardware_concurrency();
    if (threads == 0) threads = 1;
    if (threads > n) threads = static_cast<unsigned>(n ? n : 1);
    std::atomic<std::size_t> next{0};
    std::atomic<bool> truncated{false};
    auto worker = [&]() {
        for (;;) {
            std::size_t shard = next.fetch_add(1);
            if (shard >= n) return;
            if (deadline.expired()) {
                truncated = true;
                return;
            }
            fn(shard);
        }
    };
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    return !truncated.load();
}

}  // namespace detail

/// Cache of lens-space realizability at integral slope: for each p, the
/// distinct nontrivial Alexander polynomials recovered from some L(p,q),
/// keyed by polynomial with the smallest witnessing q.
class LensPolyCache {
public:
    using PolySet = std::map<SymLaurentPoly, long long>;

    const PolySet& at(long long p) {
        {
            std::lock_guard<std::mutex> lock(mtx_);
            auto it = cache_.find(p);
            if (it != cache_.end()) return it->second;
        }
        PolySet set = compute(p);
        std::lock_guard<std::mutex> lock(mtx_);
        return cache_.emplace(p, std::move(set)).first->second;
    }

private:
    static PolySet compute(long long p) {
        PolySet set;
        for (long long q = 1; q < p || (p == 1 && q == 1); ++q) {
            if (gcd_ll(p, q) != 1) continue;
            for (const auto& sol : check_condition_corr(d_lens(p, q), 1))
                if (sol.genus >= 1 && !set.count(sol.poly)) set.emplace(sol.poly, q);
            if (p == 1) break;
        }
        return set;
    }

    std::map<long long, PolySet> cache_;
    std::mutex mtx_;
};

/// Process-wide cache shared by the sweeps below.
inline LensPolyCache& lens_poly_cache() {
    static LensPolyCache cache;
    return cache;
}

namespace detail {

inline nlohmann::json poly_json(const SymLaurentPoly& poly) {
    auto ci = classical_invariants(poly);
    return nlohmann::json{{"poly", poly.str()},
                          {"coeffs", poly.coeffs()},
                          {"genus", ci.genus},
                          {"det", ci.det},
                          {"ddelta", ci.ddelta}};
}

}  // namespace detail

/// Finds all p <= p_max such that some L(p,q1) and some L(p+1,q2) are both
/// realizable by surgery on one knot: the recovered nontrivial polynomial
/// sets of p and p+1 intersect. Each hit lists the common polynomials (the
/// expected count is one) with witnessing q1, q2.
inline SweepReport sweep_consecutive_lens(long long p_max, const CampaignOptions& opt = {}) {
    auto t0 = detail::Clock::now();
    auto deadline = detail::make_deadline(opt);
    SweepReport rep;
    rep.campaign = "consecutive-lens";
    rep.parameters = {{"p_max", p_max}};
    if (p_max < 2) throw std::invalid_argument("sweep_consecutive_lens: p_max must be >= 2");

    auto& cache = lens_poly_cache();
    // shard by p over [2, p_max+1]; the cache makes each p's solve happen once
    rep.complete = detail::parallel_shards(
        static_cast<std::size_t>(p_max), opt, deadline,
        [&](std::size_t shard) { cache.at(static_cast<long long>(shard) + 2); });

    if (rep.complete) {
        for (long long p = 2; p <= p_max; ++p) {
            const auto& a = cache.at(p);
            const auto& b = cache.at(p + 1);
            nlohmann::json common = nlohmann::json::array();
            for (const auto& [poly, q1] : a) {
                auto it = b.find(poly);
                if (it == b.end()) continue;
                auto j = detail::poly_json(poly);
                j["q1"] = q1;
                j["q2"] = it->second;
                common.push_back(std::move(j));
            }
            if (!common.empty())
                rep.hits.push_back(nlohmann::json{
                    {"p", p}, {"polynomials", common}, {"distinct_count", common.size()}});
        }
    }
    rep.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(detail::Clock::now() - t0)
                         .count();
    return rep;
}

namespace detail {

// the row's sample polynomial: constructible directly, or else the solver
// solution matching the row's (g, det, ddelta) columns
inline std::optional<SymLaurentPoly> sample_polynomial(const TableRow& row) {
    if (row.knot_poly) return row.knot_poly;
    if (!row.filling) return std::nullopt;
    for (const auto& sol : check_condition_corr(d_filling(*row.filling), row.slope_den)) {
        if (sol.genus != row.genus) continue;
        if (row.det && *row.det != sol.det) continue;
        if (row.ddelta && *row.ddelta != sol.ddelta) continue;
        return sol.poly;
    }
    return std::nullopt;
}

}  // namespace detail

/// For each integral slope alpha in Tables T and I, reports the lens orders
/// p = alpha +- 2 (p <= 223) where some L(p,q) is realizable with exactly
/// the row's sample polynomial; hits carry the knot and are grouped by it
/// downstream via the "knot" field.
inline SweepReport sweep_distance_two(const std::vector<TableRow>& rows,
                                      const CampaignOptions& opt = {}) {
    auto t0 = detail::Clock::now();
    auto deadline = detail::make_deadline(opt);
    SweepReport rep;
    rep.campaign = "distance-two";
    constexpr long long kLensMax = 223;
    rep.parameters = {{"lens_max", kLensMax}};

    std::vector<const TableRow*> work;
    for (const auto& row : rows)
        if ((row.table_id == TableId::T || row.table_id == TableId::I) && row.slope_den == 1)
            work.push_back(&row);

    auto& cache = lens_poly_cache();
    std::mutex mtx;
    std::vector<nlohmann::json> found(work.size());
    rep.complete = detail::parallel_shards(work.size(), opt, deadline, [&](std::size_t shard) {
        const TableRow& row = *work[shard];
        auto sample = detail::sample_polynomial(row);
        nlohmann::json row_hits = nlohmann::json::array();
        if (sample) {
            for (long long p : {row.slope_num - 2, row.slope_num + 2}) {
                if (p < 2 || p > kLensMax) continue;
                const auto& set = cache.at(p);
                auto it = set.find(*sample);
                if (it == set.end()) continue;
                auto j = detail::poly_json(*sample);
                j["alpha"] = row.slope_num;
                j["p"] = p;
                j["q"] = it->second;
                j["knot"] = row.knot_name;
                row_hits.push_back(std::move(j));
            }
        }
        std::lock_guard<std::mutex> lock(mtx);
        found[shard] = std::move(row_hits);
    });

    for (auto& row_hits : found)
        if (row_hits.is_array())
            for (auto& h : row_hits) rep.hits.push_back(std::move(h));
    rep.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(detail::Clock::now() - t0)
                         .count();
    return rep;
}

/// The O-table / D-type neighbor test: each O slope alpha = 4m+2 is tested
/// against the neighboring D slopes 4m and 4m+4 by comparing
/// |lambda(S^3_K(4m'))| with |lambda(-P(det, m'))|. Matches are grouped by
/// sample knot; each hit is the knot's first matching (alpha, dslope) pair.
inline SweepReport sweep_dtype_neighbors(const std::vector<TableRow>& rows,
                                         const CampaignOptions& opt = {}) {
    auto t0 = detail::Clock::now();
    SweepReport rep;
    rep.campaign = "dtype-neighbors";

    std::map<std::string, nlohmann::json> by_knot;
    std::vector<std::string> knot_order;
    for (const auto& row : rows) {
        if (row.table_id != TableId::O) continue;
        if (!row.ddelta || !row.det) continue;
        long long m = (row.slope_num - 2) / 4;
        for (long long mm : {m, m + 1}) {
            if (mm < 1 || gcd_ll(*row.det, mm) != 1) continue;
            if (!lambda_match(*row.ddelta, mm, *row.det)) continue;
            if (!by_knot.count(row.knot_name)) {
                by_knot[row.knot_name] = nlohmann::json{{"alpha", row.slope_num},
                                                        {"dslope", 4 * mm},
                                                        {"knot", row.knot_name},
                                                        {"n", *row.det},
                                                        {"ddelta", *row.ddelta}};
                knot_order.push_back(row.knot_name);
            }
        }
    }
    for (const auto& name : knot_order) rep.hits.push_back(by_knot[name]);
    (void)opt;
    rep.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(detail::Clock::now() - t0)
                         .count();
    return rep;
}

/// The I-table / D-type distance-3 test: an I slope alpha = 4m+3 or 4m-3
/// with det > 1 is tested against the D slope 4m via the same lambda
/// comparison. Hits grouped by sample knot, first witness kept.
inline SweepReport sweep_dtype_distance3(const std::vector<TableRow>& rows,
                                         const CampaignOptions& opt = {}) {
    auto t0 = detail::Clock::now();
    SweepReport rep;
    rep.campaign = "dtype-distance3";

    std::map<std::string, nlohmann::json> by_knot;
    std::vector<std::string> knot_order;
    for (const auto& row : rows) {
        if (row.table_id != TableId::I || row.slope_den != 1) continue;
        if (!row.ddelta || !row.det || *row.det <= 1) continue;  // det = 1 admits no D surgery
        long long a = row.slope_num;
        long long m = a % 4 == 3 ? (a - 3) / 4 : (a + 3) / 4;
        if (m < 1 || gcd_ll(*row.det, m) != 1) continue;
        if (!lambda_match(*row.ddelta, m, *row.det)) continue;
        if (!by_knot.count(row.knot_name)) {
            by_knot[row.knot_name] = nlohmann::json{{"alpha", a},
                                                    {"m", m},
                                                    {"dslope", 4 * m},
                                                    {"knot", row.knot_name},
                                                    {"n", *row.det}};
            knot_order.push_back(row.knot_name);
        }
    }
    for (const auto& name : knot_order) rep.hits.push_back(by_knot[name]);
    (void)opt;
    rep.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(detail::Clock::now() - t0)
                         .count();
    return rep;
}

/// Checks, for every m <= m_max, that the polynomial forced in the n = 4m+1
/// case (a_i = (-1)^i for |i| <= 2m) has ddelta = 4m^2 + 2m, that both
/// closed-form lambda expressions hold, and that the lambda comparison
/// fails — so no prism P(4m+1, m) arises this way. Hits are counterexamples
/// and must be empty.
inline SweepReport sweep_prism_det_bound(long long m_max, const CampaignOptions& opt = {}) {
    auto t0 = detail::Clock::now();
    SweepReport rep;
    rep.campaign = "prism-det-bound";
    rep.parameters = {{"m_max", m_max}};
    if (m_max < 1) throw std::invalid_argument("sweep_prism_det_bound: m_max must be >= 1");

    for (long long m = 1; m <= m_max; ++m) {
        std::vector<long long> half(static_cast<std::size_t>(2 * m + 1));
        half[0] = 1;
        for (long long i = 1; i <= 2 * m; ++i)
            half[static_cast<std::size_t>(i)] = i % 2 == 0 ? 1 : -1;
        SymLaurentPoly forced(half);
        long long dd = classical_invariants(forced).ddelta;
        bool ok = dd == 4 * m * m + 2 * m;
        ok = ok && lambda_surgery(dd, 4 * m, 1) ==
                       Rational(16 * m * m + 18 * m - 1, 24 * m);
        ok = ok && lambda_prism(PrismDesc(4 * m + 1, m)) ==
                       Rational(2 * m * m - 18 * m + 1, 24 * m);
        ok = ok && !lambda_match(dd, m, 4 * m + 1);
        if (!ok)
            rep.hits.push_back(nlohmann::json{{"m", m}, {"ddelta", dd}});
    }
    (void)opt;
    rep.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(detail::Clock::now() - t0)
                         .count();
    return rep;
}

}  // namespace finsurg

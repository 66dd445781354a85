#pragma once

// Independent brute-force ground truth: exact graded dimensions of
// power-of-linear-form ideals and symbolic powers of point ideals via rank
// computations over a prime field (default) or the rationals, plus point
// configuration sampling with verified position certificates.

#include "fatpoints/bigint.hpp"
#include "fatpoints/closed_forms.hpp"
#include "fatpoints/rank.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace fatpoints::oracle {

using closed_forms::ConfigClass;
using closed_forms::ConfigTag;

enum class FieldKind { Prime, Rational };

struct PointConfiguration {
    long n = 0;
    FieldKind field = FieldKind::Prime;
    std::uint64_t p = rank::kDefaultPrime;
    std::uint64_t seed = 0;
    std::vector<std::vector<long>> points;  // s rows of n+1 coordinates
    ConfigClass class_hint = ConfigClass::hyperplane(0);

    long num_points() const { return static_cast<long>(points.size()); }
};

namespace detail {

/// Degree-j exponent vectors in nvars variables, first exponent descending.
inline std::vector<std::vector<int>> monomials(int nvars, int degree) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(static_cast<std::size_t>(nvars), 0);
    std::function<void(int, int)> rec = [&](int var, int remaining) {
        if (var == nvars - 1) {
            cur[static_cast<std::size_t>(var)] = remaining;
            out.push_back(cur);
            return;
        }
        for (int e = remaining; e >= 0; --e) {
            cur[static_cast<std::size_t>(var)] = e;
            rec(var + 1, remaining - e);
        }
    };
    if (nvars >= 1 && degree >= 0) rec(0, degree);
    return out;
}

inline std::uint64_t pack(const std::vector<int>& exps) {
    std::uint64_t key = 0;
    for (int e : exps) key = (key << 8) | static_cast<std::uint64_t>(e & 0xff);
    return key;
}

struct MonomialIndex {
    std::vector<std::vector<int>> list;
    std::unordered_map<std::uint64_t, std::size_t> index;

    MonomialIndex(int nvars, int degree) : list(monomials(nvars, degree)) {
        index.reserve(list.size() * 2);
        for (std::size_t i = 0; i < list.size(); ++i) index.emplace(pack(list[i]), i);
    }

    std::size_t at(const std::vector<int>& exps) const { return index.at(pack(exps)); }
    std::size_t size() const { return list.size(); }
};

// Field policies: entries are uint64 residues mod p, or exact rationals.
struct PrimeOps {
    std::uint64_t p;
    using T = std::uint64_t;
    T from_long(long v) const {
        long r = v % static_cast<long>(p);
        if (r < 0) r += static_cast<long>(p);
        return static_cast<T>(r);
    }
    T add(T a, T b) const { return (a + b) % p; }
    T mul(T a, T b) const { return (unsigned __int128)a * b % p; }
    bool zero(T a) const { return a % p == 0; }
};

struct RatOps {
    using T = Rat;
    T from_long(long v) const { return Rat(v); }
    T add(const T& a, const T& b) const { return a + b; }
    T mul(const T& a, const T& b) const { return a * b; }
    bool zero(const T& a) const { return a == 0; }
};

template <class Ops>
std::vector<std::vector<typename Ops::T>> point_rows(const Ops& ops,
                                                     const PointConfiguration& cfg,
                                                     const std::vector<long>& subset) {
    std::vector<std::vector<typename Ops::T>> rows;
    for (long i : subset) {
        std::vector<typename Ops::T> row;
        for (long c : cfg.points[static_cast<std::size_t>(i)]) row.push_back(ops.from_long(c));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline std::size_t subset_rank(const PointConfiguration& cfg, const std::vector<long>& subset) {
    std::size_t ncols = static_cast<std::size_t>(cfg.n + 1);
    if (cfg.field == FieldKind::Prime) {
        PrimeOps ops{cfg.p};
        auto rows = point_rows(ops, cfg, subset);
        return rank::rank_dense(std::move(rows), ncols, cfg.p);
    }
    RatOps ops;
    auto rows = point_rows(ops, cfg, subset);
    return rank::rank_rational(std::move(rows), ncols);
}

/// Size of the smallest linearly dependent subset of the points
/// (0 when every subset of size <= n+1 is independent).
inline long min_dependent_subset_size(const PointConfiguration& cfg) {
    long s = cfg.num_points();
    long best = 0;
    for (unsigned long mask = 1; mask < (1ul << s); ++mask) {
        long size = __builtin_popcountl(mask);
        if (size < 2 || size > cfg.n + 1) continue;
        if (best != 0 && size >= best) continue;
        std::vector<long> subset;
        for (long i = 0; i < s; ++i)
            if (mask & (1ul << i)) subset.push_back(i);
        if (static_cast<long>(subset_rank(cfg, subset)) < size) best = size;
    }
    return best;
}

inline bool spans_ambient(const PointConfiguration& cfg) {
    std::vector<long> all(static_cast<std::size_t>(cfg.num_points()));
    std::iota(all.begin(), all.end(), 0);
    return static_cast<long>(subset_rank(cfg, all)) == cfg.n + 1;
}

inline bool certificate_holds(const PointConfiguration& cfg) {
    // Pairwise distinct as projective points: a dependent pair is a repeat.
    long mindep = min_dependent_subset_size(cfg);
    if (mindep == 2) return false;
    switch (cfg.class_hint.tag) {
        case ConfigTag::Hyperplane: {
            for (const auto& pt : cfg.points)
                if (pt.back() != 0) return false;
            std::vector<long> all(static_cast<std::size_t>(cfg.num_points()));
            std::iota(all.begin(), all.end(), 0);
            return static_cast<long>(subset_rank(cfg, all)) ==
                   std::min<long>(cfg.num_points(), cfg.n);
        }
        case ConfigTag::SpanningN1:
        case ConfigTag::LgpN3: {
            // Linearly general position: no dependent subset of size <= n+1;
            // with s <= n points the whole set is independent instead.
            if (mindep != 0) return false;
            if (cfg.num_points() <= cfg.n) {
                std::vector<long> all(static_cast<std::size_t>(cfg.num_points()));
                std::iota(all.begin(), all.end(), 0);
                return static_cast<long>(subset_rank(cfg, all)) == cfg.num_points();
            }
            return spans_ambient(cfg);
        }
        case ConfigTag::SpanningN2: {
            // A subset of size n+2 is always dependent, so mindep = n+2
            // exactly when no subset of size <= n+1 is dependent.
            long mindep_eff = mindep;
            if (mindep_eff == 0 && cfg.num_points() >= cfg.n + 2) mindep_eff = cfg.n + 2;
            return mindep_eff == cfg.class_hint.dep_t + 2 && spans_ambient(cfg);
        }
    }
    return false;
}

}  // namespace detail

/// Rejection-samples a configuration until the class certificate holds
/// (verified, not assumed). Deterministic in (n, s, class, seed).
inline PointConfiguration random_config(long n, long s, const ConfigClass& class_hint,
                                        std::uint64_t seed,
                                        FieldKind field = FieldKind::Prime,
                                        std::uint64_t p = rank::kDefaultPrime) {
    if (s < 1) throw std::invalid_argument("random_config: s must be >= 1");
    if (n < 0 || n > 7) throw std::invalid_argument("random_config: n out of desk-scale range");
    std::mt19937_64 rng(seed ^ (static_cast<std::uint64_t>(n) << 32) ^
                        (static_cast<std::uint64_t>(s) << 16));
    long coord_bound = field == FieldKind::Prime ? static_cast<long>(p) : 101;
    auto draw = [&]() {
        long v = static_cast<long>(rng() % static_cast<std::uint64_t>(coord_bound));
        return field == FieldKind::Rational ? v - 50 : v;
    };
    for (int attempt = 0; attempt < 500; ++attempt) {
        PointConfiguration cfg;
        cfg.n = n;
        cfg.field = field;
        cfg.p = p;
        cfg.seed = seed;
        cfg.class_hint = class_hint;
        for (long i = 0; i < s; ++i) {
            std::vector<long> pt(static_cast<std::size_t>(n + 1));
            for (auto& c : pt) c = draw();
            if (class_hint.tag == ConfigTag::Hyperplane) pt.back() = 0;
            if (class_hint.tag == ConfigTag::SpanningN2 && i < class_hint.dep_t + 2)
                for (long t = class_hint.dep_t + 1; t <= n; ++t)
                    pt[static_cast<std::size_t>(t)] = 0;
            cfg.points.push_back(std::move(pt));
        }
        if (detail::certificate_holds(cfg)) return cfg;
    }
    throw std::runtime_error("random_config: sampling budget exhausted (seed " +
                             std::to_string(seed) + ")");
}

namespace detail {

/// Streams the rows of the degree-j piece of (l_1^{a_1},...,l_s^{a_s}) and
/// returns its rank; the linear forms are dual to the configuration points.
inline std::size_t power_ideal_rank_prime(const PointConfiguration& cfg,
                                          const std::vector<long>& exps, long j,
                                          std::size_t early_stop) {
    PrimeOps ops{cfg.p};
    int nv = static_cast<int>(cfg.n + 1);
    MonomialIndex cols(nv, static_cast<int>(j));
    rank::EchelonBasis basis(cols.size(), cfg.p);
    std::vector<std::uint64_t> row(cols.size());
    for (std::size_t i = 0; i < exps.size(); ++i) {
        long a = exps[i];
        if (a > j) continue;
        // Multinomial expansion of l_i^a.
        auto expansion = monomials(nv, static_cast<int>(a));
        std::vector<std::uint64_t> coeff(expansion.size());
        for (std::size_t e = 0; e < expansion.size(); ++e) {
            Int c = factorial(a);
            for (int t = 0; t < nv; ++t) {
                c /= factorial(expansion[e][static_cast<std::size_t>(t)]);
                c *= pow_int(Int(cfg.points[i][static_cast<std::size_t>(t)]),
                             expansion[e][static_cast<std::size_t>(t)]);
            }
            coeff[e] = mpz_fdiv_ui(c.get_mpz_t(), cfg.p);
        }
        auto shifts = monomials(nv, static_cast<int>(j - a));
        std::vector<int> sum(static_cast<std::size_t>(nv));
        for (const auto& mu : shifts) {
            std::fill(row.begin(), row.end(), 0);
            for (std::size_t e = 0; e < expansion.size(); ++e) {
                if (coeff[e] == 0) continue;
                for (int t = 0; t < nv; ++t)
                    sum[static_cast<std::size_t>(t)] = expansion[e][static_cast<std::size_t>(t)] +
                                                       mu[static_cast<std::size_t>(t)];
                row[cols.at(sum)] += coeff[e];
            }
            basis.insert(row);
            if (basis.rank() >= early_stop) return basis.rank();
        }
    }
    return basis.rank();
}

inline std::size_t power_ideal_rank_rational(const PointConfiguration& cfg,
                                             const std::vector<long>& exps, long j) {
    int nv = static_cast<int>(cfg.n + 1);
    MonomialIndex cols(nv, static_cast<int>(j));
    std::vector<std::vector<Rat>> rows;
    for (std::size_t i = 0; i < exps.size(); ++i) {
        long a = exps[i];
        if (a > j) continue;
        auto expansion = monomials(nv, static_cast<int>(a));
        std::vector<Rat> coeff(expansion.size());
        for (std::size_t e = 0; e < expansion.size(); ++e) {
            Int c = factorial(a);
            for (int t = 0; t < nv; ++t) {
                c /= factorial(expansion[e][static_cast<std::size_t>(t)]);
                c *= pow_int(Int(cfg.points[i][static_cast<std::size_t>(t)]),
                             expansion[e][static_cast<std::size_t>(t)]);
            }
            coeff[e] = Rat(c);
        }
        auto shifts = monomials(nv, static_cast<int>(j - a));
        std::vector<int> sum(static_cast<std::size_t>(nv));
        for (const auto& mu : shifts) {
            std::vector<Rat> row(cols.size(), Rat(0));
            for (std::size_t e = 0; e < expansion.size(); ++e) {
                if (coeff[e] == 0) continue;
                for (int t = 0; t < nv; ++t)
                    sum[static_cast<std::size_t>(t)] = expansion[e][static_cast<std::size_t>(t)] +
                                                       mu[static_cast<std::size_t>(t)];
                row[cols.at(sum)] += coeff[e];
            }
            rows.push_back(std::move(row));
        }
    }
    return rank::rank_rational(std::move(rows), cols.size());
}

/// Rank of the evaluation matrix of all partial-derivative functionals of
/// order < orders[i] at point i, applied to degree-j monomials.
inline std::size_t derivative_conditions_rank(const PointConfiguration& cfg,
                                              const std::vector<long>& orders, long j) {
    int nv = static_cast<int>(cfg.n + 1);
    MonomialIndex cols(nv, static_cast<int>(j));
    if (cfg.field == FieldKind::Prime) {
        if (cfg.p <= static_cast<std::uint64_t>(j))
            throw std::invalid_argument("derivative conditions need p > degree");
        PrimeOps ops{cfg.p};
        rank::EchelonBasis basis(cols.size(), cfg.p);
        std::vector<std::uint64_t> row(cols.size());
        for (std::size_t i = 0; i < orders.size(); ++i) {
            if (orders[i] <= 0) continue;
            // Powers of the coordinates of point i up to degree j.
            std::vector<std::vector<std::uint64_t>> pw(static_cast<std::size_t>(nv));
            for (int t = 0; t < nv; ++t) {
                pw[static_cast<std::size_t>(t)].resize(static_cast<std::size_t>(j + 1));
                pw[static_cast<std::size_t>(t)][0] = 1;
                std::uint64_t base = ops.from_long(cfg.points[i][static_cast<std::size_t>(t)]);
                for (long e = 1; e <= j; ++e)
                    pw[static_cast<std::size_t>(t)][static_cast<std::size_t>(e)] =
                        ops.mul(pw[static_cast<std::size_t>(t)][static_cast<std::size_t>(e - 1)], base);
            }
            for (long ord = 0; ord < orders[i] && ord <= j; ++ord) {
                if (basis.full()) break;
                for (const auto& u : monomials(nv, static_cast<int>(ord))) {
                    if (basis.full()) break;
                    std::fill(row.begin(), row.end(), 0);
                    for (std::size_t c = 0; c < cols.size(); ++c) {
                        const auto& mu = cols.list[c];
                        std::uint64_t v = 1;
                        bool ok = true;
                        for (int t = 0; t < nv && ok; ++t) {
                            int m = mu[static_cast<std::size_t>(t)], uu = u[static_cast<std::size_t>(t)];
                            if (m < uu) { ok = false; break; }
                            for (int f = m; f > m - uu; --f)
                                v = ops.mul(v, static_cast<std::uint64_t>(f) % cfg.p);
                            v = ops.mul(v, pw[static_cast<std::size_t>(t)][static_cast<std::size_t>(m - uu)]);
                        }
                        if (ok) row[c] = v;
                    }
                    basis.insert(row);
                }
            }
            if (basis.full()) break;
        }
        return basis.rank();
    }
    std::vector<std::vector<Rat>> rows;
    for (std::size_t i = 0; i < orders.size(); ++i) {
        if (orders[i] <= 0) continue;
        for (long ord = 0; ord < orders[i] && ord <= j; ++ord) {
            for (const auto& u : monomials(nv, static_cast<int>(ord))) {
                std::vector<Rat> row(cols.size(), Rat(0));
                for (std::size_t c = 0; c < cols.size(); ++c) {
                    const auto& mu = cols.list[c];
                    Int v = 1;
                    bool ok = true;
                    for (int t = 0; t < nv && ok; ++t) {
                        int m = mu[static_cast<std::size_t>(t)], uu = u[static_cast<std::size_t>(t)];
                        if (m < uu) { ok = false; break; }
                        for (int f = m; f > m - uu; --f) v *= f;
                        v *= pow_int(Int(cfg.points[i][static_cast<std::size_t>(t)]), m - uu);
                    }
                    if (ok) row[c] = Rat(v);
                }
                rows.push_back(std::move(row));
            }
        }
    }
    return rank::rank_rational(std::move(rows), cols.size());
}

}  // namespace detail

inline Int num_monomials(long n, long j) { return binom(n + j, n); }

/// dim_K [R/(l_1^{a_1},...,l_s^{a_s})]_j by exact elimination.
inline long power_ideal_dim(const PointConfiguration& cfg, const std::vector<long>& exps,
                            long j) {
    if (j < 0) throw std::invalid_argument("power_ideal_dim: j must be >= 0");
    for (long a : exps)
        if (a < 1) throw std::invalid_argument("power_ideal_dim: exponents must be >= 1");
    if (static_cast<std::size_t>(exps.size()) != cfg.points.size())
        throw std::invalid_argument("power_ideal_dim: one exponent per point required");
    long ncols = num_monomials(cfg.n, j).get_si();
    std::size_t r =
        cfg.field == FieldKind::Prime
            ? detail::power_ideal_rank_prime(cfg, exps, j, static_cast<std::size_t>(ncols))
            : detail::power_ideal_rank_rational(cfg, exps, j);
    return ncols - static_cast<long>(r);
}

/// dim_K of the degree-j piece of the k-th symbolic power of the point ideal.
inline long symbolic_power_dim(const PointConfiguration& cfg, long k, long j) {
    if (k < 1) throw std::invalid_argument("symbolic_power_dim: k must be >= 1");
    if (j < 0) throw std::invalid_argument("symbolic_power_dim: j must be >= 0");
    std::vector<long> orders(cfg.points.size(), k);
    long ncols = num_monomials(cfg.n, j).get_si();
    return ncols - static_cast<long>(detail::derivative_conditions_rank(cfg, orders, j));
}

/// dim_K of the fat-point linear system with per-point multiplicities.
inline long fat_point_dim(const PointConfiguration& cfg, const std::vector<long>& mults,
                          long j) {
    if (static_cast<std::size_t>(mults.size()) != cfg.points.size())
        throw std::invalid_argument("fat_point_dim: one multiplicity per point required");
    long ncols = num_monomials(cfg.n, j).get_si();
    return ncols - static_cast<long>(detail::derivative_conditions_rank(cfg, mults, j));
}

struct AlphaResult {
    long value = -1;
    bool exceeded_cap = false;
};

/// Least j <= j_cap with a nonzero degree-j piece in the k-th symbolic power.
inline AlphaResult alpha_oracle(const PointConfiguration& cfg, long k, long j_cap) {
    for (long j = 0; j <= j_cap; ++j)
        if (symbolic_power_dim(cfg, k, j) > 0) return {j, false};
    return {-1, true};
}

/// Largest j with a nonzero quotient piece for uniform exponent d; the scan
/// stops at the complete-intersection bound, a guaranteed zero.
inline long regularity_oracle(const PointConfiguration& cfg, long d) {
    if (d < 1) throw std::invalid_argument("regularity_oracle: d must be >= 1");
    if (!detail::spans_ambient(cfg))
        throw std::invalid_argument("regularity_oracle: points must span (Artinian quotient)");
    std::vector<long> exps(cfg.points.size(), d);
    long bound = (cfg.n + 1) * (d - 1) + 1;
    long reg = 0;
    for (long j = 0; j <= bound; ++j) {
        if (power_ideal_dim(cfg, exps, j) > 0)
            reg = j;
        else
            break;  // standard graded: once zero, zero forever
    }
    return reg;
}

struct DualityReport {
    long power_side = 0;
    long symbolic_side = 0;
    bool equal = false;
};

/// Both sides of the duality: the power-ideal quotient dimension and the
/// dimension of the intersection of point-ideal powers with per-point
/// orders j - a_i + 1 (points with a_i > j are skipped). Requires
/// j >= -1 + max a_i.
inline DualityReport duality_check(const PointConfiguration& cfg, const std::vector<long>& exps,
                                   long j) {
    long max_a = *std::max_element(exps.begin(), exps.end());
    if (j < max_a - 1)
        throw std::invalid_argument("duality_check: requires j >= -1 + max exponent");
    DualityReport rep;
    rep.power_side = power_ideal_dim(cfg, exps, j);
    std::vector<long> orders;
    for (long a : exps) orders.push_back(a <= j ? j - a + 1 : 0);
    long ncols = num_monomials(cfg.n, j).get_si();
    rep.symbolic_side = ncols - static_cast<long>(detail::derivative_conditions_rank(cfg, orders, j));
    rep.equal = rep.power_side == rep.symbolic_side;
    return rep;
}

}  // namespace fatpoints::oracle

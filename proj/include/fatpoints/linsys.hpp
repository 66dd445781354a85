#pragma once

// Symbolic rewrite engine for fat-point linear systems L_n(j; b_1,...,b_s):
// Cremona and Bezout steps, cone and base-case resolution, with full
// derivation traces.

#include "fatpoints/bigint.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace fatpoints::linsys {

/// L_n(j; b_1 >= ... >= b_s). Normalization sorts descending and drops
/// zero multiplicities.
struct LinearSystemSpec {
    long n = 0;
    long degree = 0;
    std::vector<long> mults;

    LinearSystemSpec() = default;
    LinearSystemSpec(long n_, long degree_, std::vector<long> mults_)
        : n(n_), degree(degree_), mults(std::move(mults_)) {
        if (n < 0 || degree < 0) throw std::invalid_argument("LinearSystemSpec: n, j must be >= 0");
        for (long b : mults)
            if (b < 0) throw std::invalid_argument("LinearSystemSpec: multiplicities must be >= 0");
        normalize();
    }

    void normalize() {
        std::sort(mults.begin(), mults.end(), std::greater<long>());
        while (!mults.empty() && mults.back() == 0) mults.pop_back();
    }

    long num_points() const { return static_cast<long>(mults.size()); }

    bool operator==(const LinearSystemSpec& other) const {
        return n == other.n && degree == other.degree && mults == other.mults;
    }

    std::string str() const {
        std::ostringstream os;
        os << "L_" << n << "(" << degree << ";";
        for (std::size_t i = 0; i < mults.size(); ++i)
            os << (i ? "," : " ") << mults[i];
        if (mults.empty()) os << " -";
        os << ")";
        return os.str();
    }
};

/// Cremona shift t = (n-1) j - (b_1 + ... + b_{n+1}).
inline long cremona_shift(const LinearSystemSpec& spec) {
    if (spec.num_points() < spec.n + 1)
        throw std::invalid_argument("cremona_shift: need at least n+1 points");
    long sum = 0;
    for (long i = 0; i <= spec.n; ++i) sum += spec.mults[static_cast<std::size_t>(i)];
    return (spec.n - 1) * spec.degree - sum;
}

/// Cremona rewrite: L_n(j+t; b_1+t,...,b_{n+1}+t, rest). Requires n >= 2,
/// s >= n+1, and b_i + t >= 0 for the n+1 largest multiplicities.
inline LinearSystemSpec cremona_step(const LinearSystemSpec& spec) {
    if (spec.n < 2) throw std::invalid_argument("cremona_step: requires n >= 2");
    if (spec.num_points() < spec.n + 1)
        throw std::invalid_argument("cremona_step: requires at least n+1 points");
    long t = cremona_shift(spec);
    for (long i = 0; i <= spec.n; ++i) {
        if (spec.mults[static_cast<std::size_t>(i)] + t < 0)
            throw std::invalid_argument("cremona_step: b_" + std::to_string(i + 1) +
                                        " + t < 0 (t=" + std::to_string(t) + ")");
    }
    std::vector<long> mults = spec.mults;
    for (long i = 0; i <= spec.n; ++i) mults[static_cast<std::size_t>(i)] += t;
    return LinearSystemSpec(spec.n, spec.degree + t, std::move(mults));
}

/// Bezout rewrite: L_n(j-1; b_1-1,...,b_n-1, rest). Requires the n largest
/// multiplicities to be >= 1 with sum exceeding (n-1) j.
inline LinearSystemSpec bezout_step(const LinearSystemSpec& spec) {
    if (spec.n < 2) throw std::invalid_argument("bezout_step: requires n >= 2");
    if (spec.degree < 1) throw std::invalid_argument("bezout_step: requires j >= 1");
    if (spec.num_points() < spec.n)
        throw std::invalid_argument("bezout_step: requires at least n points");
    long sum = 0;
    for (long i = 0; i < spec.n; ++i) {
        long b = spec.mults[static_cast<std::size_t>(i)];
        if (b < 1) throw std::invalid_argument("bezout_step: b_" + std::to_string(i + 1) + " < 1");
        sum += b;
    }
    if (sum <= (spec.n - 1) * spec.degree)
        throw std::invalid_argument("bezout_step: b_1 + ... + b_n <= (n-1) j");
    std::vector<long> mults = spec.mults;
    for (long i = 0; i < spec.n; ++i) mults[static_cast<std::size_t>(i)] -= 1;
    return LinearSystemSpec(spec.n, spec.degree - 1, std::move(mults));
}

/// Cone rewrite: a point of multiplicity b_i = j >= 1 makes every member a
/// cone over it; projecting drops the ambient dimension by one.
inline LinearSystemSpec cone_step(const LinearSystemSpec& spec) {
    if (spec.n < 1) throw std::invalid_argument("cone_step: requires n >= 1");
    if (spec.degree < 1) throw std::invalid_argument("cone_step: requires j >= 1");
    auto it = std::find(spec.mults.begin(), spec.mults.end(), spec.degree);
    if (it == spec.mults.end())
        throw std::invalid_argument("cone_step: no multiplicity equals the degree");
    std::vector<long> mults = spec.mults;
    mults.erase(mults.begin() + (it - spec.mults.begin()));
    return LinearSystemSpec(spec.n - 1, spec.degree, std::move(mults));
}

/// Closed-form dimension for the base cases:
///   (i)   no points: binom(n+j, n);
///   (ii)  one fat point (n >= 1): full space minus the independent
///         derivative conditions;
///   (iii) some b_i > j, or n = 0 with a point, or j = 0 with a point: 0.
/// Returns nullopt when the spec is not a base case.
inline std::optional<Int> base_dimension(const LinearSystemSpec& spec) {
    long n = spec.n, j = spec.degree;
    if (spec.mults.empty()) return binom(n + j, n);
    for (long b : spec.mults)
        if (b > j) return Int(0);
    if (j == 0) return Int(0);   // nonzero multiplicity in degree 0
    if (n == 0) return Int(0);   // the ideal of the unique point of P^0 is trivial
    if (spec.num_points() == 1) {
        long b = spec.mults.front();
        Int conditions = 0;
        for (long e = 0; e <= std::min(b - 1, j); ++e)
            conditions += binom(n - 1 + e, n - 1);
        return binom(n + j, n) - conditions;
    }
    return std::nullopt;
}

enum class Rule { Base, Cone, Bezout, Cremona };

inline const char* rule_name(Rule r) {
    switch (r) {
        case Rule::Base: return "BASE";
        case Rule::Cone: return "CONE";
        case Rule::Bezout: return "BEZOUT";
        case Rule::Cremona: return "CREMONA";
    }
    return "?";
}

struct ReductionStep {
    Rule rule;
    LinearSystemSpec before;
    LinearSystemSpec after;
    long shift = 0;  // Cremona t; 0 for other rules
};

struct ReductionTrace {
    std::vector<ReductionStep> steps;
    bool resolved = false;
    Int dimension = 0;           // valid when resolved
    LinearSystemSpec final_spec;  // valid when not resolved

    std::string pretty() const {
        std::ostringstream os;
        for (const auto& s : steps) {
            os << rule_name(s.rule) << "  " << s.before.str() << " -> " << s.after.str();
            if (s.rule == Rule::Cremona) os << "  [t=" << s.shift << "]";
            os << "\n";
        }
        if (resolved)
            os << "RESOLVED  dim = " << dimension.get_str() << "\n";
        else
            os << "IRREDUCIBLE  " << final_spec.str() << "\n";
        return os.str();
    }
};

/// Applies base > cone > Bezout > strictly-negative-shift Cremona until the
/// system resolves, no rule applies, or max_steps is exhausted. Cremona with
/// t >= 0 is never auto-applied (t > 0 could loop, t = 0 is the identity).
inline ReductionTrace reduce(LinearSystemSpec spec, long max_steps = 200) {
    if (max_steps < 1) throw std::invalid_argument("reduce: max_steps must be >= 1");
    ReductionTrace trace;
    for (long step = 0; step < max_steps; ++step) {
        if (auto dim = base_dimension(spec)) {
            trace.resolved = true;
            trace.dimension = *dim;
            return trace;
        }
        std::optional<ReductionStep> applied;
        if (spec.n >= 1 && spec.degree >= 1 &&
            std::find(spec.mults.begin(), spec.mults.end(), spec.degree) != spec.mults.end()) {
            applied = ReductionStep{Rule::Cone, spec, cone_step(spec), 0};
        }
        if (!applied && spec.n >= 2 && spec.degree >= 1 && spec.num_points() >= spec.n) {
            long sum = 0;
            bool positive = true;
            for (long i = 0; i < spec.n; ++i) {
                long b = spec.mults[static_cast<std::size_t>(i)];
                if (b < 1) positive = false;
                sum += b;
            }
            if (positive && sum > (spec.n - 1) * spec.degree)
                applied = ReductionStep{Rule::Bezout, spec, bezout_step(spec), 0};
        }
        if (!applied && spec.n >= 2 && spec.num_points() >= spec.n + 1) {
            long t = cremona_shift(spec);
            if (t < 0) {
                bool ok = true;
                for (long i = 0; i <= spec.n; ++i)
                    if (spec.mults[static_cast<std::size_t>(i)] + t < 0) ok = false;
                if (ok) applied = ReductionStep{Rule::Cremona, spec, cremona_step(spec), t};
            }
        }
        if (!applied) break;
        spec = applied->after;
        trace.steps.push_back(std::move(*applied));
    }
    trace.resolved = false;
    trace.final_spec = spec;
    return trace;
}

}  // namespace fatpoints::linsys

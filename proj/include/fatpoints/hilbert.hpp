#pragma once

// Exact Hilbert functions of monomial complete intersections via Koszul
// inclusion-exclusion, finite differences, and shape checks.

#include "fatpoints/bigint.hpp"

#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace fatpoints::hilbert {

/// Hilbert function values over the window [0, j_max]; reads outside the
/// window return 0.
struct HilbertTable {
    long num_vars = 0;
    std::vector<long> exponents;
    std::vector<Int> values;

    long j_max() const { return static_cast<long>(values.size()) - 1; }

    Int at(long j) const {
        if (j < 0 || j > j_max()) return Int(0);
        return values[static_cast<std::size_t>(j)];
    }

    bool in_window(long j) const { return j >= 0 && j <= j_max(); }
};

/// Regularity of the CI quotient: sum of (a_i - 1).
inline long ci_regularity(long num_vars, const std::vector<long>& exponents) {
    if (num_vars < 1) throw std::invalid_argument("ci_regularity: need at least one variable");
    if (static_cast<long>(exponents.size()) > num_vars)
        throw std::invalid_argument("ci_regularity: more exponents than variables");
    long r = 0;
    for (long a : exponents) {
        if (a < 1) throw std::invalid_argument("ci_regularity: exponents must be >= 1");
        r += a - 1;
    }
    return r;
}

/// Hilbert function of K[x_1..x_v]/(x_1^{a_1},...,x_s^{a_s}), s <= v,
/// over the window [0, reg+1]. Uniform exponent lists use the binomially
/// weighted single sum; mixed lists fall back to subset inclusion-exclusion.
inline HilbertTable ci_hilbert(long num_vars, const std::vector<long>& exponents) {
    long reg = ci_regularity(num_vars, exponents);
    long v = num_vars;
    long s = static_cast<long>(exponents.size());
    HilbertTable t;
    t.num_vars = v;
    t.exponents = exponents;
    t.values.resize(static_cast<std::size_t>(reg + 2));

    bool uniform = true;
    for (long a : exponents)
        if (a != exponents.front()) uniform = false;

    for (long j = 0; j <= reg + 1; ++j) {
        Int h = 0;
        if (s == 0) {
            h = binom(v - 1 + j, v - 1);
        } else if (uniform) {
            long d = exponents.front();
            for (long k = 0; k <= s; ++k) {
                Int term = binom(s, k) * binom(v - 1 + j - k * d, v - 1);
                if (k % 2 == 0) h += term; else h -= term;
            }
        } else {
            // Subset inclusion-exclusion; s <= v stays small at desk scale.
            for (unsigned long mask = 0; mask < (1ul << s); ++mask) {
                long drop = 0, bits = 0;
                for (long i = 0; i < s; ++i)
                    if (mask & (1ul << i)) { drop += exponents[static_cast<std::size_t>(i)]; ++bits; }
                Int term = binom(v - 1 + j - drop, v - 1);
                if (bits % 2 == 0) h += term; else h -= term;
            }
        }
        t.values[static_cast<std::size_t>(j)] = h;
    }
    return t;
}

/// Applies the difference operator k times; the window grows by k on the
/// right so the trailing negative tail is visible.
inline HilbertTable diff(const HilbertTable& table, long order) {
    if (order < 1) throw std::invalid_argument("diff: order must be >= 1");
    HilbertTable cur = table;
    for (long step = 0; step < order; ++step) {
        HilbertTable next;
        next.num_vars = cur.num_vars;
        next.exponents = cur.exponents;
        next.values.resize(cur.values.size() + 1);
        for (long j = 0; j <= cur.j_max() + 1; ++j)
            next.values[static_cast<std::size_t>(j)] = cur.at(j) - cur.at(j - 1);
        cur = std::move(next);
    }
    return cur;
}

struct ShapeReport {
    bool symmetric = true;
    bool strictly_increasing_first_half = true;
    bool peaks_as_expected = true;
    std::vector<std::string> violations;
    bool ok() const { return symmetric && strictly_increasing_first_half && peaks_as_expected; }
};

/// Symmetry about reg/2, strict increase on [0, floor(reg/2)], and the
/// peak location(s) for a complete intersection table.
inline ShapeReport check_shape(const HilbertTable& table) {
    ShapeReport rep;
    long reg = ci_regularity(table.num_vars, table.exponents);
    for (long j = 0; j <= reg; ++j) {
        if (table.at(j) != table.at(reg - j)) {
            rep.symmetric = false;
            rep.violations.push_back("asymmetry at j=" + std::to_string(j));
        }
    }
    for (long j = 0; j < reg / 2; ++j) {
        if (!(table.at(j) < table.at(j + 1))) {
            rep.strictly_increasing_first_half = false;
            rep.violations.push_back("not strictly increasing at j=" + std::to_string(j));
        }
    }
    if (reg >= 1) {
        Int peak = 0;
        for (long j = 0; j <= reg; ++j) peak = std::max(peak, Int(table.at(j)));
        if (reg % 2 == 0) {
            bool unique = table.at(reg / 2) == peak;
            for (long j = 0; j <= reg && unique; ++j)
                if (j != reg / 2 && table.at(j) == peak) unique = false;
            if (!unique) {
                rep.peaks_as_expected = false;
                rep.violations.push_back("expected unique peak at reg/2");
            }
        } else {
            bool twin = table.at((reg - 1) / 2) == peak && table.at((reg + 1) / 2) == peak;
            for (long j = 0; j <= reg && twin; ++j)
                if (j != (reg - 1) / 2 && j != (reg + 1) / 2 && table.at(j) == peak) twin = false;
            if (!twin) {
                rep.peaks_as_expected = false;
                rep.violations.push_back("expected twin peaks at (reg+-1)/2");
            }
        }
    }
    return rep;
}

struct KoszulTopDiffReport {
    bool matches_expansion = true;
    long sign_changes = 0;
    std::vector<std::string> violations;
};

/// For 2m+2 variables with uniform exponent d, the (2m+2)-nd difference of
/// h_B must be (-1)^i binom(2m+2, i) at j = d*i and 0 elsewhere, the
/// coefficient pattern of (1 - z^d)^{2m+2}.
inline KoszulTopDiffReport koszul_top_difference_check(long m, long d) {
    if (m < 1 || d < 1) throw std::invalid_argument("koszul_top_difference_check: m, d must be >= 1");
    long v = 2 * m + 2;
    HilbertTable base = ci_hilbert(v, std::vector<long>(static_cast<std::size_t>(v), d));
    HilbertTable top = diff(base, v);
    KoszulTopDiffReport rep;
    for (long j = 0; j <= top.j_max(); ++j) {
        Int expected = 0;
        if (j % d == 0 && j / d <= v) {
            long i = j / d;
            expected = binom(v, i);
            if (i % 2 != 0) expected = -expected;
        }
        if (top.at(j) != expected) {
            rep.matches_expansion = false;
            rep.violations.push_back("mismatch at j=" + std::to_string(j));
        }
    }
    int last_sign = 0;
    for (long j = 0; j <= top.j_max(); ++j) {
        Int val = top.at(j);
        if (val == 0) continue;
        int sign = val > 0 ? 1 : -1;
        if (last_sign != 0 && sign != last_sign) ++rep.sign_changes;
        last_sign = sign;
    }
    return rep;
}

}  // namespace fatpoints::hilbert

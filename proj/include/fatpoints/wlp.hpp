#pragma once

// Weak-Lefschetz-failure machinery: the witness polynomial P_{m,q}, its
// realization as a Hilbert-function difference, and the failure predicates
// for almost complete intersections of uniform powers of linear forms.

#include "fatpoints/bigint.hpp"
#include "fatpoints/hilbert.hpp"

#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace fatpoints::wlp {

/// P_{m,q}(t) = sum_{k=0}^m (-1)^k binom(2m+2,k)
///   binom(m-1 + floor(mq/(2m+1)) + (q+1)(m-k) + t[2m(m+1) - k(2m+1)], 2m-1).
inline Int p_poly(long m, long q, long t) {
    if (m < 2) throw std::invalid_argument("p_poly: m must be >= 2");
    if (q < 0 || q > 2 * m) throw std::invalid_argument("p_poly: q must be in [0, 2m]");
    if (t < 0) throw std::invalid_argument("p_poly: t must be >= 0");
    Int sum = 0;
    long base = m - 1 + (m * q) / (2 * m + 1);
    for (long k = 0; k <= m; ++k) {
        long arg = base + (q + 1) * (m - k) + t * (2 * m * (m + 1) - k * (2 * m + 1));
        Int term = binom(2 * m + 2, k) * binom(arg, 2 * m - 1);
        if (k % 2 == 0) sum += term; else sum -= term;
    }
    return sum;
}

/// Degree at which the witness is evaluated:
/// r = floor((n+1)(n+3)(d-1) / (2(n+2))).
inline long r_degree(long n, long d) {
    if (n < 2 || d < 1) throw std::invalid_argument("r_degree: n >= 2, d >= 1 required");
    return floor_div((n + 1) * (n + 3) * (d - 1), 2 * (n + 2));
}

/// Same witness computed through the Hilbert module: with d = t(2m+1)+q+1
/// and r = 2m(m+1)t + mq + floor(mq/(2m+1)), the value equals the second
/// difference of the CI Hilbert function in 2m+2 variables at r.
inline Int p_poly_via_hilbert(long m, long q, long t) {
    if (m < 2) throw std::invalid_argument("p_poly_via_hilbert: m must be >= 2");
    if (q < 0 || q > 2 * m) throw std::invalid_argument("p_poly_via_hilbert: q must be in [0, 2m]");
    if (t < 0) throw std::invalid_argument("p_poly_via_hilbert: t must be >= 0");
    long d = t * (2 * m + 1) + q + 1;
    long r = 2 * m * (m + 1) * t + m * q + (m * q) / (2 * m + 1);
    long v = 2 * m + 2;
    auto table = hilbert::ci_hilbert(v, std::vector<long>(static_cast<std::size_t>(v), d));
    auto dd = hilbert::diff(table, 2);
    return dd.at(r);
}

enum class Verdict { Fails, Unknown };

struct WlpVerdict {
    long n = 0;
    long d = 0;
    long m = 0, q = 0, t = 0;
    Int witness;
    bool applicable = false;  // (n+1) | d-1 or d >= n^2 - n + 2
    Verdict verdict = Verdict::Unknown;
    std::string clause;  // which numerical condition justified the verdict
};

/// One-sided WLP-failure detector for even n >= 8, d >= 2. Decomposes
/// d-1 = t(2m+1) + q, evaluates the witness P_{m,q}(t), and reports Fails
/// only when the regularity hypothesis applies and the witness is <= 0.
/// Never certifies that the WLP holds.
inline WlpVerdict wlp_failure_witness(long n, long d) {
    if (n % 2 != 0) throw std::invalid_argument("wlp_failure_witness: n must be even");
    if (n < 8) throw std::invalid_argument("wlp_failure_witness: n must be >= 8");
    if (d < 2) throw std::invalid_argument("wlp_failure_witness: d must be >= 2");
    WlpVerdict v;
    v.n = n;
    v.d = d;
    v.m = n / 2;
    v.t = (d - 1) / (2 * v.m + 1);
    v.q = (d - 1) % (2 * v.m + 1);
    v.witness = p_poly(v.m, v.q, v.t);
    v.applicable = ((d - 1) % (n + 1) == 0) || d >= n * n - n + 2;
    if (v.applicable && v.witness <= 0) {
        v.verdict = Verdict::Fails;
        if (v.q == 0)
            v.clause = "Prop 6.2(c)";
        else
            v.clause = v.witness < 0 ? "Prop 6.2(b)" : "Prop 6.2 (zero witness)";
    } else {
        v.verdict = Verdict::Unknown;
        v.clause = v.applicable ? "witness positive" : "regularity hypothesis not applicable";
    }
    return v;
}

/// Both computation paths for binom(2m+2,m) - 2 binom(2m+2,m-1) +
/// binom(2m+2,m-2): the direct alternating sum and the factored closed form
/// (2m+2)! / (m!(m+4)!) * (12 - 2m). They must agree; the value vanishes
/// exactly at m = 6.
struct Theorem63Value {
    Int closed_form;
    Int direct;
};

inline Theorem63Value theorem63_value(long m) {
    if (m < 2) throw std::invalid_argument("theorem63_value: m must be >= 2");
    Rat factored = Rat(factorial(2 * m + 2)) / (Rat(factorial(m)) * factorial(m + 4));
    factored *= Rat(12 - 2 * m);
    factored.canonicalize();
    if (factored.get_den() != 1)
        throw std::logic_error("theorem63_value: closed form is not an integer");
    Int direct = binom(2 * m + 2, m) - 2 * binom(2 * m + 2, m - 1) + binom(2 * m + 2, m - 2);
    return {Int(factored.get_num()), direct};
}

struct ScanRow {
    long n, d, m, q, t;
    Int witness;
    bool applicable;
    Verdict verdict;
    std::string clause;
};

struct ScanReport {
    std::vector<ScanRow> rows;
    // Per n: the least d0 such that every applicable d in [d0, d_max]
    // yields Fails; absent when no such threshold exists in range.
    std::vector<std::pair<long, std::optional<long>>> thresholds;

    std::string csv() const {
        std::ostringstream os;
        os << "n,d,m,q,t,witness,applicable,verdict,clause\n";
        for (const auto& r : rows) {
            os << r.n << ',' << r.d << ',' << r.m << ',' << r.q << ',' << r.t << ','
               << r.witness.get_str() << ',' << (r.applicable ? 1 : 0) << ','
               << (r.verdict == Verdict::Fails ? "fails" : "unknown") << ',' << '"'
               << r.clause << '"' << '\n';
        }
        return os.str();
    }
};

inline ScanReport scan_failure(long n_min, long n_max, long d_max) {
    if (n_min % 2 != 0 || n_max % 2 != 0)
        throw std::invalid_argument("scan_failure: even n only");
    ScanReport report;
    for (long n = n_min; n <= n_max; n += 2) {
        std::optional<long> threshold;
        for (long d = 2; d <= d_max; ++d) {
            auto v = wlp_failure_witness(n, d);
            if (v.applicable) {
                if (v.verdict == Verdict::Fails) {
                    if (!threshold) threshold = d;
                } else {
                    threshold.reset();
                }
            }
            report.rows.push_back({v.n, v.d, v.m, v.q, v.t, v.witness, v.applicable,
                                   v.verdict, v.clause});
        }
        report.thresholds.emplace_back(n, threshold);
    }
    return report;
}

/// Literature verdicts for the cases settled outside this machinery,
/// tagged by citation; conjectural rows are marked as such.
struct LiteratureVerdict {
    bool has_wlp;
    bool conjectural;
    std::string source;
};

inline std::optional<LiteratureVerdict> literature_wlp(long n, long d) {
    if (n < 1 || d < 1) return std::nullopt;
    if (n <= 2) return LiteratureVerdict{true, false, "HMNW/SS/MMN2"};
    if (n == 3) return LiteratureVerdict{d <= 2, false, "MMN2"};
    if (n == 4) return LiteratureVerdict{d <= 3, false, "MMN2"};
    if (n % 2 == 1) return LiteratureVerdict{d == 1, false, "MMN2"};
    if (n == 6) return LiteratureVerdict{d <= 2, false, "DIV/MMN2"};
    if (d == 1) return LiteratureVerdict{true, false, "trivial"};
    if (d == 2) return LiteratureVerdict{false, false, "M"};
    return LiteratureVerdict{false, true, "Conj 6.6 (MMN2), open for d >= 3"};
}

}  // namespace fatpoints::wlp

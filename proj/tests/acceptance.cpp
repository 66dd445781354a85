// Acceptance gate: one criterion per section, one PASS/FAIL line each,
// nonzero exit when any criterion fails. Every numeric claim is checked
// against an independent computation path (closed form vs brute-force rank
// oracle, identity vs enumeration, dual formulas).

#include "fatpoints/closed_forms.hpp"
#include "fatpoints/combinatorics.hpp"
#include "fatpoints/hilbert.hpp"
#include "fatpoints/linsys.hpp"
#include "fatpoints/oracle.hpp"
#include "fatpoints/splines.hpp"
#include "fatpoints/wlp.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <vector>

using namespace fatpoints;
using closed_forms::ConfigClass;

namespace {

int failures = 0;

void report(int number, const std::string& name, bool ok, double seconds,
            const std::string& detail) {
    std::printf("[%2d] %-28s %s  (%.1fs%s%s)\n", number, name.c_str(), ok ? "PASS" : "FAIL",
                seconds, detail.empty() ? "" : "; ", detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
}

void criterion(int number, const std::string& name,
               const std::function<bool(std::string&)>& body) {
    auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    report(number, name, ok, secs, detail);
}

std::vector<std::vector<long>> multisets(long size, long lo, long hi) {
    std::vector<std::vector<long>> out;
    std::vector<long> cur(static_cast<std::size_t>(size));
    std::function<void(long, long)> rec = [&](long pos, long min) {
        if (pos == size) {
            out.push_back(cur);
            return;
        }
        for (long v = min; v <= hi; ++v) {
            cur[static_cast<std::size_t>(pos)] = v;
            rec(pos + 1, v);
        }
    };
    rec(0, lo);
    return out;
}

ConfigClass general_class(long n, long s) {
    if (s <= n + 1 || n < 2) return ConfigClass::spanning_n1(std::max(n, 1l));
    return ConfigClass::lgp_n3(n);  // certificate: linearly general position
}

// Memoized general-position configurations per (n, s, seed).
const oracle::PointConfiguration& general_config(long n, long s, std::uint64_t seed) {
    static std::map<std::tuple<long, long, std::uint64_t>, oracle::PointConfiguration> cache;
    auto key = std::make_tuple(n, s, seed);
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, oracle::random_config(n, s, general_class(n, s), seed)).first;
    return it->second;
}

// Oracle dimension of a fat-point system at general points, covering the
// empty and zero-dimensional edge cases the rewrite engine can reach.
Int oracle_dim(const linsys::LinearSystemSpec& spec, std::uint64_t seed) {
    if (spec.mults.empty()) return binom(spec.n + spec.degree, spec.n);
    const auto& cfg = general_config(spec.n, spec.num_points(), seed);
    return Int(oracle::fat_point_dim(cfg, spec.mults, spec.degree));
}

bool criterion_duality(std::string& detail) {
    long checks = 0;
    for (long n = 1; n <= 4; ++n)
        for (long s = 1; s <= n + 3; ++s)
            for (const auto& exps : multisets(s, 1, 4)) {
                long max_a = *std::max_element(exps.begin(), exps.end());
                for (std::uint64_t seed = 1; seed <= 3; ++seed) {
                    const auto& cfg = general_config(n, s, seed);
                    for (long j = std::max(0l, max_a - 1); j <= max_a + 1; ++j) {
                        auto rep = oracle::duality_check(cfg, exps, j);
                        ++checks;
                        if (!rep.equal) {
                            std::ostringstream os;
                            os << "mismatch n=" << n << " s=" << s << " j=" << j << " seed="
                               << seed;
                            detail = os.str();
                            return false;
                        }
                    }
                }
            }
    detail = std::to_string(checks) + " tuples equal";
    return true;
}

bool criterion_n2_regularity(std::string& detail) {
    long checks = 0;
    for (long n = 2; n <= 4; ++n)
        for (long t = 1; t <= n; ++t) {
            auto cls = ConfigClass::spanning_n2(n, t);
            auto cfg = oracle::random_config(n, n + 2, cls, 1);
            for (long d = 1; d <= 5; ++d) {
                long expected = (2 * n + 2 - t) * (d - 1) / 2;
                long got = oracle::regularity_oracle(cfg, d);
                ++checks;
                if (got != expected) {
                    detail = "n=" + std::to_string(n) + " dep_t=" + std::to_string(t) +
                             " d=" + std::to_string(d) + ": oracle " + std::to_string(got) +
                             " vs " + std::to_string(expected);
                    return false;
                }
            }
        }
    detail = std::to_string(checks) + " cells exact";
    return true;
}

bool criterion_n2_alpha(std::string& detail) {
    long checks = 0;
    for (long n = 2; n <= 4; ++n)
        for (long t = 1; t <= n; ++t) {
            auto cls = ConfigClass::spanning_n2(n, t);
            auto cfg = oracle::random_config(n, n + 2, cls, 1);
            for (long k = 1; k <= 4; ++k) {
                long expected = ceil_div((2 * n + 2 - t) * k, 2 * n - t);
                auto got = oracle::alpha_oracle(cfg, k, expected + 2);
                ++checks;
                if (got.value != expected) {
                    detail = "n=" + std::to_string(n) + " dep_t=" + std::to_string(t) +
                             " k=" + std::to_string(k) + ": oracle " + std::to_string(got.value) +
                             " vs " + std::to_string(expected);
                    return false;
                }
            }
        }
    detail = std::to_string(checks) + " cells exact";
    return true;
}

bool criterion_n3_even(std::string& detail) {
    long checks = 0;
    for (long n : {2l, 4l}) {
        auto cfg = oracle::random_config(n, n + 3, ConfigClass::lgp_n3(n), 1);
        for (long d = 2; d <= 4; ++d) {
            long expected_reg = (n + 2) * (d - 1) / 2;
            long got_reg = oracle::regularity_oracle(cfg, d);
            std::vector<long> exps(static_cast<std::size_t>(n + 3), d);
            long socle = oracle::power_ideal_dim(cfg, exps, expected_reg);
            checks += 2;
            if (got_reg != expected_reg || socle != 1) {
                detail = "n=" + std::to_string(n) + " d=" + std::to_string(d) + ": reg " +
                         std::to_string(got_reg) + " vs " + std::to_string(expected_reg) +
                         ", socle " + std::to_string(socle);
                return false;
            }
        }
    }
    detail = std::to_string(checks) + " values exact";
    return true;
}

bool criterion_n3_odd(std::string& detail) {
    auto cfg = oracle::random_config(3, 6, ConfigClass::lgp_n3(3), 1);
    long got_reg = oracle::regularity_oracle(cfg, 6);
    auto socle = closed_forms::top_socle_dim(3, 6);
    std::vector<long> exps(6, 6l);
    long top = oracle::power_ideal_dim(cfg, exps, 12);
    bool ok = got_reg == 12 && socle.degree == 12 && socle.value.value == 1 && top == 1;
    detail = "reg=" + std::to_string(got_reg) + " top=" + std::to_string(top);
    return ok;
}

bool criterion_verlinde(std::string& detail) {
    struct Case { long n; Rat j; };
    std::vector<Case> cases = {{2, Rat(1)}, {2, Rat(2)}, {4, Rat(1)}, {3, Rat(1, 2)}};
    std::ostringstream os;
    for (const auto& c : cases) {
        auto v = closed_forms::verlinde(c.n, c.j);
        long tj = static_cast<long>(Rat(2 * c.j).get_num().get_si());
        long deg = (c.n + 1) * tj / 2;
        long exp = tj + 1;
        auto cfg = oracle::random_config(c.n, c.n + 3, ConfigClass::lgp_n3(c.n), 1);
        std::vector<long> exps(static_cast<std::size_t>(c.n + 3), exp);
        long dim = oracle::power_ideal_dim(cfg, exps, deg);
        if (std::fabs(v.raw - static_cast<double>(dim)) > 1e-6) {
            detail = "n=" + std::to_string(c.n) + " 2j=" + std::to_string(tj) + ": sum " +
                     std::to_string(v.raw) + " vs oracle " + std::to_string(dim);
            return false;
        }
        os << dim << " ";
    }
    detail = "dims " + os.str();
    return true;
}

bool criterion_eulerian(std::string& detail) {
    // Closed form vs one-pass permutation histogram for every i <= 10.
    for (long i = 1; i <= 10; ++i) {
        std::vector<long> perm(static_cast<std::size_t>(i));
        std::iota(perm.begin(), perm.end(), 1);
        std::vector<Int> hist(static_cast<std::size_t>(i), Int(0));
        do {
            long ascents = 0;
            for (std::size_t k = 0; k + 1 < perm.size(); ++k)
                if (perm[k] < perm[k + 1]) ++ascents;
            ++hist[static_cast<std::size_t>(ascents)];
        } while (std::next_permutation(perm.begin(), perm.end()));
        for (long j = 0; j < i; ++j)
            if (combinatorics::eulerian(i, j) != hist[static_cast<std::size_t>(j)]) {
                detail = "A(" + std::to_string(i) + "," + std::to_string(j) + ") mismatch";
                return false;
            }
    }
    for (long i = 2; i <= 12; ++i)
        if (!splines::lemma65_check(i).holds) {
            detail = "lemma 6.5 fails at i=" + std::to_string(i);
            return false;
        }
    if (!(combinatorics::peak_second_difference(3) > 0 &&
          combinatorics::peak_second_difference(4) > 0)) {
        detail = "expected positive peaks at m=3,4";
        return false;
    }
    for (long m = 5; m <= 100; ++m)
        if (combinatorics::peak_second_difference(m) >= 0) {
            detail = "expected negative peak at m=" + std::to_string(m);
            return false;
        }
    detail = "enumeration, Lemma 6.5, peak signs m<=100";
    return true;
}

bool criterion_wlp_identity(std::string& detail) {
    for (long m = 2; m <= 6; ++m)
        for (long q = 0; q <= 2 * m; ++q)
            for (long t = 0; t <= 4; ++t)
                if (wlp::p_poly(m, q, t) != wlp::p_poly_via_hilbert(m, q, t)) {
                    detail = "P identity fails at m=" + std::to_string(m) + " q=" +
                             std::to_string(q) + " t=" + std::to_string(t);
                    return false;
                }
    for (long m = 2; m <= 40; ++m) {
        auto v = wlp::theorem63_value(m);
        bool sign_ok = (m < 6 && v.direct > 0) || (m == 6 && v.direct == 0) ||
                       (m > 6 && v.direct < 0);
        if (v.closed_form != v.direct || !sign_ok) {
            detail = "theorem 6.3 value fails at m=" + std::to_string(m);
            return false;
        }
    }
    detail = "identity m<=6, dual paths m<=40, zero at m=6";
    return true;
}

bool criterion_wlp_scan(std::string& detail) {
    auto rep = wlp::scan_failure(8, 20, 400);
    // Frozen regression fixture: every even n in [8, 20] has threshold n+2.
    for (const auto& [n, d0] : rep.thresholds) {
        if (!d0 || *d0 != n + 2) {
            detail = "n=" + std::to_string(n) + " threshold " +
                     (d0 ? std::to_string(*d0) : std::string("absent")) + ", frozen " +
                     std::to_string(n + 2);
            return false;
        }
    }
    detail = "thresholds d0 = n+2 for all even n in [8,20]";
    return true;
}

bool criterion_reduction(std::string& detail) {
    std::mt19937_64 rng(2024);
    long resolved = 0, validated_steps = 0;
    for (long trial = 0; trial < 500; ++trial) {
        long n = 1 + static_cast<long>(rng() % 4);           // 1..4
        long j = static_cast<long>(rng() % 9);               // 0..8
        long s = 1 + static_cast<long>(rng() % 8);           // 1..8
        std::vector<long> mults;
        for (long i = 0; i < s; ++i)
            mults.push_back(static_cast<long>(rng() % static_cast<unsigned long>(j + 2)));
        linsys::LinearSystemSpec spec(n, j, mults);
        auto trace = linsys::reduce(spec);
        for (const auto& step : trace.steps) {
            Int before = oracle_dim(step.before, 1);
            Int after = oracle_dim(step.after, 1);
            ++validated_steps;
            if (before != after) {
                detail = std::string(linsys::rule_name(step.rule)) + " broke " +
                         step.before.str() + " -> " + step.after.str() + " (" +
                         before.get_str() + " vs " + after.get_str() + ")";
                return false;
            }
        }
        if (trace.resolved) {
            ++resolved;
            Int dim = oracle_dim(spec, 1);
            if (dim != trace.dimension) {
                detail = spec.str() + " resolved to " + trace.dimension.get_str() +
                         " but oracle says " + dim.get_str();
                return false;
            }
        }
    }
    for (long d = 1; d <= 6; ++d) {
        auto trace = linsys::reduce(linsys::LinearSystemSpec(2, 2 * d - 1, {d, d, d, d}));
        if (!trace.resolved || trace.dimension != 0) {
            detail = "L_2(2d-1; d^4) did not vanish at d=" + std::to_string(d);
            return false;
        }
    }
    detail = std::to_string(resolved) + "/500 resolved, " + std::to_string(validated_steps) +
             " steps oracle-checked";
    return true;
}

bool criterion_containment(std::string& detail) {
    std::vector<ConfigClass> classes;
    for (long n = 1; n <= 5; ++n) classes.push_back(ConfigClass::spanning_n1(n));
    for (long n = 2; n <= 5; ++n) {
        for (long t = 2; t <= n; ++t) classes.push_back(ConfigClass::spanning_n2(n, t));
        classes.push_back(ConfigClass::lgp_n3(n));
    }
    for (const auto& cls : classes) {
        for (long k = 1; k <= 5; ++k)
            if (!closed_forms::containment_inequality_check(cls, k)) {
                detail = "containment fails: n=" + std::to_string(cls.n) + " dep_t=" +
                         std::to_string(cls.dep_t) + " k=" + std::to_string(k);
                return false;
            }
        if (!closed_forms::chudnovsky_check(cls)) {
            detail = "chudnovsky fails: n=" + std::to_string(cls.n);
            return false;
        }
        for (long k = 1; k <= 5; ++k) {
            auto verdict = closed_forms::demailly_check(cls, k);
            bool odd_n3_exception = cls.tag == closed_forms::ConfigTag::LgpN3 && cls.n % 2 == 1;
            bool ok = odd_n3_exception ? verdict != closed_forms::Ternary::False
                                       : verdict == closed_forms::Ternary::True;
            if (!ok) {
                detail = "demailly verdict off: n=" + std::to_string(cls.n) + " dep_t=" +
                         std::to_string(cls.dep_t) + " k=" + std::to_string(k);
                return false;
            }
        }
    }
    detail = std::to_string(classes.size()) + " classes, k<=5";
    return true;
}

}  // namespace

int main() {
    criterion(1, "duality suite", criterion_duality);
    criterion(2, "n+2 regularity", criterion_n2_regularity);
    criterion(3, "n+2 initial degree", criterion_n2_alpha);
    criterion(4, "n+3 even", criterion_n3_even);
    criterion(5, "n+3 odd divisibility", criterion_n3_odd);
    criterion(6, "verlinde", criterion_verlinde);
    criterion(7, "eulerian", criterion_eulerian);
    criterion(8, "wlp identity", criterion_wlp_identity);
    criterion(9, "wlp asymptotic scan", criterion_wlp_scan);
    criterion(10, "reduction engine", criterion_reduction);
    criterion(11, "containment", criterion_containment);
    if (failures) {
        std::printf("%d criterion(s) FAILED\n", failures);
        return 1;
    }
    std::printf("all 11 criteria PASS\n");
    return 0;
}

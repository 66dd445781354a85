#pragma once

// Exact big-integer combinatorics: Eulerian numbers A(i,j), their first
// differences D(n,k), the peak second difference driving the spline sign
// analysis, and scanners for the monotonicity conjectures.

#include "fatpoints/bigint.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace fatpoints::combinatorics {

/// Memoized table of Eulerian rows. Row i holds [A(i,0),...,A(i,i-1)].
class EulerianTable {
  public:
    static const std::vector<Int>& row(long i) {
        if (i < 1) throw std::invalid_argument("eulerian: i must be >= 1");
        static EulerianTable table;
        std::lock_guard<std::mutex> lock(table.mutex_);
        auto it = table.rows_.find(i);
        if (it != table.rows_.end()) return it->second;
        std::vector<Int> r(static_cast<std::size_t>(i));
        for (long j = 0; j < i; ++j) r[static_cast<std::size_t>(j)] = compute(i, j);
        return table.rows_.emplace(i, std::move(r)).first->second;
    }

  private:
    // A(i,j) = sum_{k=0}^{j+1} (-1)^k binom(i+1,k) (j+1-k)^i
    static Int compute(long i, long j) {
        Int sum = 0;
        for (long k = 0; k <= j + 1; ++k) {
            Int term = binom(i + 1, k) * pow_int(j + 1 - k, i);
            if (k % 2 == 0) sum += term; else sum -= term;
        }
        return sum;
    }

    std::map<long, std::vector<Int>> rows_;
    std::mutex mutex_;
};

/// A(i,j), 0 for j outside [0, i-1]. Rejects i < 1.
inline Int eulerian(long i, long j) {
    if (i < 1) throw std::invalid_argument("eulerian: i must be >= 1");
    if (j < 0 || j >= i) return Int(0);
    return EulerianTable::row(i)[static_cast<std::size_t>(j)];
}

/// Counts permutations of {1,...,i} with exactly j ascents by enumeration.
/// Guarded at i <= 12.
inline Int eulerian_brute(long i, long j) {
    if (i < 1) throw std::invalid_argument("eulerian_brute: i must be >= 1");
    if (i > 12) throw std::length_error("eulerian_brute: i > 12 exceeds the enumeration guard");
    std::vector<long> perm(static_cast<std::size_t>(i));
    std::iota(perm.begin(), perm.end(), 1);
    Int count = 0;
    do {
        long ascents = 0;
        for (std::size_t k = 0; k + 1 < perm.size(); ++k)
            if (perm[k] < perm[k + 1]) ++ascents;
        if (ascents == j) ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return count;
}

/// D(n,k) = A(n,k) - A(n,k-1). May be negative.
inline Int eulerian_diff(long n, long k) {
    return eulerian(n, k) - eulerian(n, k - 1);
}

/// A(2m-1, m-1) - 2 A(2m-1, m-2) + A(2m-1, m-3), m >= 2.
inline Int peak_second_difference(long m) {
    if (m < 2) throw std::invalid_argument("peak_second_difference: m must be >= 2");
    return eulerian(2 * m - 1, m - 1) - 2 * eulerian(2 * m - 1, m - 2) +
           eulerian(2 * m - 1, m - 3);
}

/// sum_{k=0}^{m} (-1)^k binom(2m+2,k) [2m(m+1) - k(2m+1)]^{2m-1}, m >= 2.
/// This is (2m-1)! times the leading coefficient of P_{m,q} as a polynomial
/// in t, independent of q.
inline Int leading_coeff_sum(long m) {
    if (m < 2) throw std::invalid_argument("leading_coeff_sum: m must be >= 2");
    Int sum = 0;
    for (long k = 0; k <= m; ++k) {
        Int base = Int(2 * m * (m + 1)) - Int(k) * (2 * m + 1);
        Int term = binom(2 * m + 2, k) * pow_int(base, 2 * m - 1);
        if (k % 2 == 0) sum += term; else sum -= term;
    }
    return sum;
}

enum class DiffPattern { StrictlyIncreasing, IncreasingThenFinalDrop, Violation };

struct Conjecture71Row {
    long n = 0;
    DiffPattern pattern = DiffPattern::Violation;
    std::vector<Int> diffs;  // D(n,k) for k in [0, floor((n-1)/2)]
};

struct Conjecture71Report {
    std::vector<Conjecture71Row> rows;
    bool all_match_conjecture = true;
};

/// Classifies the sequence D(n,k) on [0, floor((n-1)/2)] for 3 <= n <= n_max.
/// The conjectured pattern: strictly increasing when n is even or
/// n in {3,5,7}; for odd n = 2m-1 >= 9, strictly increasing on [1, m-2]
/// with a final drop D(2m-1, m-2) > D(2m-1, m-1) > 0.
inline Conjecture71Report scan_conjecture_71(long n_max) {
    if (n_max < 3) throw std::invalid_argument("scan_conjecture_71: n_max must be >= 3");
    Conjecture71Report report;
    for (long n = 3; n <= n_max; ++n) {
        Conjecture71Row row;
        row.n = n;
        long kmax = (n - 1) / 2;
        for (long k = 0; k <= kmax; ++k) row.diffs.push_back(eulerian_diff(n, k));
        bool strictly_increasing = true;
        for (std::size_t k = 0; k + 1 < row.diffs.size(); ++k)
            if (row.diffs[k] >= row.diffs[k + 1]) strictly_increasing = false;
        if (strictly_increasing) {
            row.pattern = DiffPattern::StrictlyIncreasing;
        } else {
            // Check: increasing up to the second-to-last entry, single final
            // drop, and both last values positive.
            bool ok = row.diffs.size() >= 2;
            for (std::size_t k = 0; ok && k + 2 < row.diffs.size(); ++k)
                if (row.diffs[k] >= row.diffs[k + 1]) ok = false;
            if (ok) {
                const Int& last = row.diffs.back();
                const Int& prev = row.diffs[row.diffs.size() - 2];
                ok = prev > last && last > 0;
            }
            row.pattern = ok ? DiffPattern::IncreasingThenFinalDrop : DiffPattern::Violation;
        }
        bool expect_increasing = (n % 2 == 0) || n == 3 || n == 5 || n == 7;
        bool matches = expect_increasing
                           ? row.pattern == DiffPattern::StrictlyIncreasing
                           : row.pattern == DiffPattern::IncreasingThenFinalDrop;
        if (!matches) report.all_match_conjecture = false;
        report.rows.push_back(std::move(row));
    }
    return report;
}

}  // namespace fatpoints::combinatorics

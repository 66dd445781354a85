#pragma once

// Exact rank computation over a prime field via streaming row-echelon
// elimination with lazy modular reduction, plus a fraction-free rational
// path for paranoia runs.

#include "fatpoints/bigint.hpp"

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

namespace fatpoints::rank {

/// Default modulus: a prime just under 2^20 so that products of two reduced
/// entries fit in 52 bits and thousands of axpy terms accumulate in a
/// uint64 before a reduction pass is needed.
inline constexpr std::uint64_t kDefaultPrime = 999983;

inline std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
    std::uint64_t result = 1 % p;
    base %= p;
    while (exp) {
        if (exp & 1) result = (unsigned __int128)result * base % p;
        base = (unsigned __int128)base * base % p;
        exp >>= 1;
    }
    return result;
}

inline std::uint64_t mod_inv(std::uint64_t a, std::uint64_t p) {
    if (a % p == 0) throw std::invalid_argument("mod_inv: zero element");
    return mod_pow(a % p, p - 2, p);
}

/// Incremental row-echelon basis over F_p. Rows are inserted one at a time;
/// pivot rows are stored normalized (pivot entry 1) as column suffixes.
class EchelonBasis {
  public:
    EchelonBasis(std::size_t ncols, std::uint64_t p = kDefaultPrime)
        : ncols_(ncols), p_(p), col_to_pivot_(ncols, -1) {
        if (p >= (1ull << 26)) throw std::invalid_argument("EchelonBasis: p must be < 2^26");
    }

    std::size_t rank() const { return rows_.size(); }
    std::size_t ncols() const { return ncols_; }
    std::uint64_t prime() const { return p_; }
    bool full() const { return rows_.size() == ncols_; }

    /// Reduces w (lazily accumulated uint64 entries, any residues) against
    /// the basis in place; returns true when a new pivot was added.
    bool insert(std::vector<std::uint64_t>& w) {
        if (w.size() != ncols_) throw std::invalid_argument("EchelonBasis::insert: bad width");
        for (std::size_t k = 0; k < ncols_; ++k) w[k] %= p_;
        // Each axpy pass adds at most (p-1)^2 per entry; reduce before the
        // accumulated total can overflow a uint64.
        const long full_budget =
            static_cast<long>((~0ull - p_) / ((p_ - 1) * (p_ - 1)));
        long budget = full_budget;
        for (std::size_t j = 0; j < ncols_; ++j) {
            std::uint64_t c = w[j] % p_;
            w[j] = c;
            if (c == 0) continue;
            int pivot = col_to_pivot_[j];
            if (pivot < 0) {
                normalize_and_store(w, j);
                return true;
            }
            const std::vector<std::uint32_t>& prow = rows_[static_cast<std::size_t>(pivot)];
            std::uint64_t mul = p_ - c;
            const std::uint32_t* src = prow.data();
            std::uint64_t* dst = w.data() + j;
            std::size_t len = prow.size();
            for (std::size_t k = 1; k < len; ++k) dst[k] += mul * src[k];
            w[j] = 0;
            if (--budget == 0) {
                for (std::size_t k = j + 1; k < ncols_; ++k) w[k] %= p_;
                budget = full_budget;
            }
        }
        return false;
    }

  private:
    void normalize_and_store(std::vector<std::uint64_t>& w, std::size_t pivot_col) {
        std::uint64_t inv = mod_inv(w[pivot_col], p_);
        std::vector<std::uint32_t> row(ncols_ - pivot_col);
        for (std::size_t k = pivot_col; k < ncols_; ++k)
            row[k - pivot_col] =
                static_cast<std::uint32_t>((unsigned __int128)(w[k] % p_) * inv % p_);
        col_to_pivot_[pivot_col] = static_cast<int>(rows_.size());
        pivot_cols_.push_back(pivot_col);
        rows_.push_back(std::move(row));
    }

    std::size_t ncols_;
    std::uint64_t p_;
    std::vector<int> col_to_pivot_;
    std::vector<std::size_t> pivot_cols_;
    std::vector<std::vector<std::uint32_t>> rows_;
};

/// Rank of a streamed matrix: `emit` is called repeatedly with a scratch row
/// buffer to fill (entries may be unreduced residues) and must return false
/// when no rows remain. Stops early once the rank hits `early_stop`.
inline std::size_t rank_streamed(std::size_t ncols,
                                 const std::function<bool(std::vector<std::uint64_t>&)>& emit,
                                 std::uint64_t p = kDefaultPrime,
                                 std::size_t early_stop = static_cast<std::size_t>(-1)) {
    EchelonBasis basis(ncols, p);
    std::vector<std::uint64_t> row(ncols);
    while (basis.rank() < early_stop) {
        std::fill(row.begin(), row.end(), 0);
        if (!emit(row)) break;
        basis.insert(row);
    }
    return basis.rank();
}

/// Dense rank over F_p for pre-materialized rows.
inline std::size_t rank_dense(std::vector<std::vector<std::uint64_t>> rows, std::size_t ncols,
                              std::uint64_t p = kDefaultPrime) {
    EchelonBasis basis(ncols, p);
    for (auto& r : rows) {
        if (basis.full()) break;
        basis.insert(r);
    }
    return basis.rank();
}

/// Exact rational rank by straightforward fraction-clearing elimination;
/// intended for small paranoia checks, not for the scan kernels.
inline std::size_t rank_rational(std::vector<std::vector<Rat>> rows, std::size_t ncols) {
    std::size_t rank = 0;
    for (std::size_t col = 0; col < ncols && rank < rows.size(); ++col) {
        std::size_t sel = rank;
        while (sel < rows.size() && rows[sel][col] == 0) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[rank], rows[sel]);
        Rat inv = Rat(1) / rows[rank][col];
        for (std::size_t k = col; k < ncols; ++k) rows[rank][k] *= inv;
        for (std::size_t r = rank + 1; r < rows.size(); ++r) {
            if (rows[r][col] == 0) continue;
            Rat factor = rows[r][col];
            for (std::size_t k = col; k < ncols; ++k) rows[r][k] -= factor * rows[rank][k];
        }
        ++rank;
    }
    return rank;
}

}  // namespace fatpoints::rank

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fatpoints/combinatorics.hpp"
#include "fatpoints/splines.hpp"

using namespace fatpoints;
using namespace fatpoints::splines;

namespace {

// Independent oracle: the truncated-power closed form
// B_i(x) = 1/(i-1)! sum_k (-1)^k binom(i,k) (x-k)_+^{i-1}.
Rat truncated_power_oracle(long i, const Rat& x) {
    if (x < 0 || x > i) return Rat(0);
    Rat sum = 0;
    for (long k = 0; k <= i; ++k) {
        Rat base = x - k;
        if (base < 0) continue;
        if (base == 0 && i == 1) continue;  // (0)_+^0 convention: right-continuous at 0
        Rat pw = 1;
        for (long e = 0; e < i - 1; ++e) pw *= base;
        Rat term = Rat(binom(i, k)) * pw;
        if (k % 2 == 0) sum += term; else sum -= term;
    }
    return sum / Rat(factorial(i - 1));
}

}  // namespace

TEST_CASE("B_1 is the unit-interval indicator") {
    const auto& b = bspline(1);
    CHECK(eval(b, Rat(1, 2)) == 1);
    CHECK(eval(b, Rat(0)) == 1);
    CHECK(eval(b, Rat(3, 2)) == 0);
    CHECK(eval(b, Rat(-1)) == 0);
}

TEST_CASE("B_2 is the hat function and B_4 peaks at 2/3") {
    const auto& b2 = bspline(2);
    CHECK(eval(b2, Rat(1)) == 1);
    CHECK(eval(b2, Rat(1, 2)) == Rat(1, 2));
    CHECK(eval(b2, Rat(3, 2)) == Rat(1, 2));
    CHECK(eval(bspline(4), Rat(2)) == Rat(2, 3));
}

TEST_CASE("matches the truncated-power closed form") {
    for (long i = 2; i <= 10; ++i) {
        const auto& b = bspline(i);
        for (long num = 0; num <= 3 * i; ++num) {
            Rat x(num, 3);
            x.canonicalize();
            CHECK(eval(b, x) == truncated_power_oracle(i, x));
        }
    }
}

TEST_CASE("partition of unity: integer shifts sum to one inside the support") {
    for (long i : {2, 3, 5, 8}) {
        const auto& b = bspline(i);
        for (long num = 1; num < 7; ++num) {
            Rat x = Rat(i, 2) + Rat(num, 7);  // interior points
            x.canonicalize();
            Rat sum = 0;
            for (long shift = -i; shift <= i; ++shift) sum += eval(b, x - shift);
            CHECK(sum == 1);
        }
    }
}

TEST_CASE("symmetry about the center of the support") {
    for (long i : {2, 3, 4, 7, 12}) {
        const auto& b = bspline(i);
        for (long num = 0; num <= 4 * i; ++num) {
            Rat x(num, 4);
            x.canonicalize();
            CHECK(eval(b, x) == eval(b, Rat(i) - x));
        }
    }
}

TEST_CASE("smoothness bookkeeping and derivative guard") {
    CHECK(bspline(1).smoothness == -1);
    CHECK(bspline(4).smoothness == 2);
    CHECK_NOTHROW(derivative(bspline(4), 2));
    CHECK_THROWS_AS(derivative(bspline(4), 3), std::invalid_argument);
    CHECK_THROWS_AS(derivative(bspline(4), 0), std::invalid_argument);
    CHECK_THROWS_AS(bspline(0), std::invalid_argument);
    CHECK_THROWS_AS(bspline(65), std::length_error);
}

TEST_CASE("derivative of B_i is the difference of shifted B_{i-1}") {
    for (long i : {3, 5, 8}) {
        auto d1 = derivative(bspline(i), 1);
        const auto& prev = bspline(i - 1);
        for (long num = 1; num < 5 * i; ++num) {
            Rat x(num, 5);
            x.canonicalize();
            CHECK(eval(d1, x) == eval(prev, x) - eval(prev, x - 1));
        }
    }
}

TEST_CASE("lemma 6.5: integer samples are scaled Eulerian numbers") {
    for (long i = 2; i <= 12; ++i) {
        auto rep = lemma65_check(i);
        CHECK(rep.holds);
        CHECK(rep.violations.empty());
    }
    CHECK_THROWS_AS(lemma65_check(1), std::invalid_argument);
    CHECK_THROWS_AS(lemma65_check(21), std::invalid_argument);
}

TEST_CASE("central second difference sign bridges to the Eulerian peak") {
    for (long m = 2; m <= 32; ++m) {
        int spline_sign = second_diff_sign(m);
        Int peak = combinatorics::peak_second_difference(m);
        int eulerian_sign = peak > 0 ? 1 : (peak < 0 ? -1 : 0);
        // Lemma 6.5: (2m-1)! B_{2m}(j) = A(2m-1, j-1), so the signs agree.
        CHECK(spline_sign == eulerian_sign);
    }
    CHECK(second_diff_sign(3) == 1);
    CHECK(second_diff_sign(4) == 1);
    CHECK(second_diff_sign(5) == -1);
}

TEST_CASE("normalized splines approach the Gaussian at rate O(1/i)") {
    std::vector<Rat> samples;
    for (long t = -8; t <= 8; ++t) samples.push_back(Rat(t, 4));
    for (long i : {8, 16, 32, 64})
        for (long k = 0; k <= 3; ++k) {
            auto rep = gaussian_compare(i, k, samples);
            CHECK(rep.within_bound);
            CHECK(rep.max_deviation < rep.bound);
        }
    // The deviation really shrinks with i.
    auto coarse = gaussian_compare(8, 0, samples);
    auto fine = gaussian_compare(64, 0, samples);
    CHECK(fine.max_deviation < coarse.max_deviation);
    CHECK_THROWS_AS(gaussian_compare(4, 2, samples), std::invalid_argument);
}

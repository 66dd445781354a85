#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fatpoints/closed_forms.hpp"

using namespace fatpoints;
using namespace fatpoints::closed_forms;

TEST_CASE("class factories validate their arguments") {
    CHECK_THROWS_AS(ConfigClass::spanning_n1(0), std::invalid_argument);
    CHECK_THROWS_AS(ConfigClass::spanning_n2(2, 0), std::invalid_argument);
    CHECK_THROWS_AS(ConfigClass::spanning_n2(2, 3), std::invalid_argument);
    CHECK_THROWS_AS(ConfigClass::lgp_n3(1), std::invalid_argument);
    CHECK(ConfigClass::spanning_n2(3, 2).num_points() == 5);
    CHECK(ConfigClass::lgp_n3(4).num_points() == 7);
}

TEST_CASE("initial degrees: spec example values") {
    CHECK(alpha_symbolic(ConfigClass::spanning_n2(3, 1), 5).value == 7);
    CHECK(alpha_symbolic(ConfigClass::spanning_n1(2), 2).value == 3);
    CHECK(alpha_symbolic(ConfigClass::lgp_n3(2), 3).value == 6);
    CHECK(alpha_symbolic(ConfigClass::hyperplane(3), 4).value == 4);
}

TEST_CASE("regularity: spec example values and hyperplane rejection") {
    CHECK(regularity_powers(ConfigClass::spanning_n1(3), 2).value == 4);
    CHECK(regularity_powers(ConfigClass::spanning_n2(3, 1), 3).value == 7);
    CHECK(regularity_powers(ConfigClass::lgp_n3(2), 3).value == 4);
    CHECK_THROWS_AS(regularity_powers(ConfigClass::hyperplane(2), 2), std::invalid_argument);
}

TEST_CASE("odd-n n+3 exactness thresholds") {
    // n = 3: p = (9 + 6 - 1)/2 = 7; exact iff 7 | k or k >= 13*14/10 -> k >= 19.
    CHECK(odd_n3_alpha_exact(3, 7));
    CHECK(odd_n3_alpha_exact(3, 14));
    CHECK(odd_n3_alpha_exact(3, 19));
    CHECK_FALSE(odd_n3_alpha_exact(3, 5));
    CHECK(alpha_symbolic(ConfigClass::lgp_n3(3), 7).status == Status::Exact);
    CHECK(alpha_symbolic(ConfigClass::lgp_n3(3), 5).status == Status::LowerBound);

    CHECK(odd_n3_reg_exact(3, 6));   // (n+2) | d-1
    CHECK(odd_n3_reg_exact(3, 14));  // d >= n^2+n+2
    CHECK_FALSE(odd_n3_reg_exact(3, 3));
    CHECK(regularity_powers(ConfigClass::lgp_n3(3), 6).status == Status::Exact);
    CHECK(regularity_powers(ConfigClass::lgp_n3(3), 3).status == Status::UpperBound);
}

TEST_CASE("rho parameter and top socle dimension") {
    auto [r, rho] = rho_param(3, 6);
    CHECK(r == 12);
    CHECK(rho == 0);
    auto socle = top_socle_dim(3, 6);
    CHECK(socle.degree == 12);
    CHECK(socle.value.value == 1);

    auto even = top_socle_dim(2, 3);
    CHECK(even.degree == 4);
    CHECK(even.value.value == 1);
    CHECK(even.value.status == Status::Exact);

    for (long d = 1; d <= 30; ++d)
        for (long n : {3, 5, 7}) CHECK_NOTHROW(rho_param(n, d));
}

TEST_CASE("waldschmidt constants per class") {
    CHECK(waldschmidt(ConfigClass::hyperplane(4)) == Rat(1));
    CHECK(waldschmidt(ConfigClass::spanning_n1(3)) == Rat(4, 3));
    CHECK(waldschmidt(ConfigClass::spanning_n2(3, 2)) == Rat(3, 2));
    CHECK(waldschmidt(ConfigClass::lgp_n3(2)) == Rat(2));
    CHECK(waldschmidt(ConfigClass::lgp_n3(3)) == Rat(12, 7));
}

TEST_CASE("alpha(I^(k)) / k dominates the Waldschmidt constant and converges") {
    std::vector<ConfigClass> classes = {ConfigClass::spanning_n1(3),
                                        ConfigClass::spanning_n2(4, 2),
                                        ConfigClass::lgp_n3(2), ConfigClass::lgp_n3(5)};
    for (const auto& cls : classes) {
        Rat limit = waldschmidt(cls);
        for (long k = 1; k <= 60; ++k) {
            Rat ratio(alpha_symbolic(cls, k).value, Int(k));
            ratio.canonicalize();
            CHECK(ratio >= limit);
        }
        // The subsequence along denominators hits the limit exactly.
        long den = static_cast<long>(limit.get_den().get_si());
        Rat at_den(alpha_symbolic(cls, den).value, Int(den));
        at_den.canonicalize();
        CHECK(at_den == limit);
    }
}

TEST_CASE("initial degree is subadditive on the exact classes") {
    std::vector<ConfigClass> classes = {ConfigClass::spanning_n1(2),
                                        ConfigClass::spanning_n2(3, 1),
                                        ConfigClass::spanning_n2(4, 4), ConfigClass::lgp_n3(4)};
    for (const auto& cls : classes)
        for (long k1 = 1; k1 <= 10; ++k1)
            for (long k2 = 1; k2 <= 10; ++k2)
                CHECK(alpha_symbolic(cls, k1 + k2).value <=
                      alpha_symbolic(cls, k1).value + alpha_symbolic(cls, k2).value);
}

TEST_CASE("dep_t = n reproduces the n+2 points in linearly general position") {
    // With dep_t = n the formulas degenerate to (2n+2-n)/(2n-n) = (n+2)/n.
    for (long n = 2; n <= 5; ++n) {
        Rat expected(n + 2, n);
        expected.canonicalize();
        CHECK(waldschmidt(ConfigClass::spanning_n2(n, n)) == expected);
        for (long d = 1; d <= 4; ++d)
            CHECK(regularity_powers(ConfigClass::spanning_n2(n, n), d).value ==
                  (n + 2) * (d - 1) / 2);
    }
}

TEST_CASE("chudnovsky holds on every covered class") {
    for (long n = 1; n <= 6; ++n) CHECK(chudnovsky_check(ConfigClass::spanning_n1(n)));
    for (long n = 2; n <= 6; ++n) {
        for (long t = 1; t <= n; ++t) CHECK(chudnovsky_check(ConfigClass::spanning_n2(n, t)));
        CHECK(chudnovsky_check(ConfigClass::lgp_n3(n)));
    }
    CHECK(chudnovsky_check(ConfigClass::hyperplane(3)));
}

TEST_CASE("demailly: true on exact classes, never false on the odd exception") {
    for (long n = 2; n <= 5; ++n)
        for (long k = 1; k <= 6; ++k) {
            CHECK(demailly_check(ConfigClass::spanning_n1(n), k) == Ternary::True);
            for (long t = 1; t <= n; ++t)
                CHECK(demailly_check(ConfigClass::spanning_n2(n, t), k) == Ternary::True);
            auto verdict = demailly_check(ConfigClass::lgp_n3(n), k);
            if (n % 2 == 0)
                CHECK(verdict == Ternary::True);
            else
                CHECK(verdict != Ternary::False);
        }
}

TEST_CASE("e_plus and resurgence on the hypothesis classes") {
    CHECK(e_plus(ConfigClass::spanning_n1(3)) == 2);
    CHECK(e_plus(ConfigClass::spanning_n2(4, 2)) == 2);
    CHECK(e_plus(ConfigClass::lgp_n3(2)) == 3);
    CHECK(e_plus(ConfigClass::lgp_n3(3)) == 2);
    CHECK_THROWS_AS(e_plus(ConfigClass::spanning_n2(3, 1)), std::invalid_argument);
    CHECK_THROWS_AS(e_plus(ConfigClass::hyperplane(2)), std::invalid_argument);

    CHECK(resurgence(ConfigClass::spanning_n1(3)) == Rat(3, 2));
    CHECK(resurgence(ConfigClass::spanning_n2(4, 2)) == Rat(3, 2));  // 2 * (2n-t)/(2n+2-t)
    CHECK(resurgence(ConfigClass::lgp_n3(2)) == Rat(1));
}

TEST_CASE("containment inequality on all hypothesis classes, k <= 5") {
    for (long n = 1; n <= 5; ++n)
        for (long k = 1; k <= 5; ++k)
            CHECK(containment_inequality_check(ConfigClass::spanning_n1(n), k));
    for (long n = 2; n <= 5; ++n)
        for (long k = 1; k <= 5; ++k) {
            for (long t = 2; t <= n; ++t)
                CHECK(containment_inequality_check(ConfigClass::spanning_n2(n, t), k));
            CHECK(containment_inequality_check(ConfigClass::lgp_n3(n), k));
        }
}

TEST_CASE("verlinde: known values and parity constraints") {
    CHECK(verlinde(2, Rat(1)).rounded == 5);
    CHECK(verlinde(2, Rat(1)).near_integer);
    CHECK(verlinde(3, Rat(1, 2)).rounded == 4);
    CHECK(verlinde(3, Rat(1, 2)).near_integer);
    CHECK_THROWS_AS(verlinde(2, Rat(1, 2)), std::invalid_argument);
    CHECK_THROWS_AS(verlinde(3, Rat(1, 3)), std::invalid_argument);
}

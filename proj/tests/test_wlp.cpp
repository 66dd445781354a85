#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fatpoints/wlp.hpp"

using namespace fatpoints;
using namespace fatpoints::wlp;

TEST_CASE("p_poly agrees with the Hilbert-function realization") {
    for (long m = 2; m <= 4; ++m)
        for (long q = 0; q <= 2 * m; ++q)
            for (long t = 0; t <= 2; ++t) CHECK(p_poly(m, q, t) == p_poly_via_hilbert(m, q, t));
}

TEST_CASE("p_poly frozen values") {
    CHECK(p_poly(2, 0, 1) == -34);
    CHECK(p_poly(3, 2, 1) == -16380);
}

TEST_CASE("p_poly input validation") {
    CHECK_THROWS_AS(p_poly(1, 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(p_poly(2, 5, 0), std::invalid_argument);
    CHECK_THROWS_AS(p_poly(2, -1, 0), std::invalid_argument);
    CHECK_THROWS_AS(p_poly(2, 0, -1), std::invalid_argument);
}

TEST_CASE("r_degree equals the decomposition degree for ambient 2m-1") {
    // With n = 2m-1, d-1 = t(2m+1)+q: floor((n+1)(n+3)(d-1)/(2(n+2))) =
    // 2m(m+1)t + mq + floor(mq/(2m+1)).
    for (long m = 2; m <= 6; ++m)
        for (long q = 0; q <= 2 * m; ++q)
            for (long t = 0; t <= 3; ++t) {
                long d = t * (2 * m + 1) + q + 1;
                long decomposed = 2 * m * (m + 1) * t + m * q + (m * q) / (2 * m + 1);
                CHECK(r_degree(2 * m - 1, d) == decomposed);
            }
}

TEST_CASE("failure witness: the spec example n = 12, d = 14") {
    auto v = wlp_failure_witness(12, 14);
    CHECK(v.m == 6);
    CHECK(v.q == 0);
    CHECK(v.t == 1);
    CHECK(v.applicable);
    CHECK(v.verdict == Verdict::Fails);
    CHECK(v.clause == "Prop 6.2(c)");
    CHECK(v.witness < 0);
}

TEST_CASE("failure witness is one-sided and guarded") {
    CHECK_THROWS_AS(wlp_failure_witness(9, 3), std::invalid_argument);   // odd n
    CHECK_THROWS_AS(wlp_failure_witness(6, 3), std::invalid_argument);   // n < 8
    CHECK_THROWS_AS(wlp_failure_witness(8, 1), std::invalid_argument);   // d < 2
    auto v = wlp_failure_witness(8, 3);  // d-1 = 2, not applicable
    CHECK_FALSE(v.applicable);
    CHECK(v.verdict == Verdict::Unknown);
}

TEST_CASE("theorem 6.3 value: both paths agree; zero exactly at m = 6") {
    for (long m = 2; m <= 40; ++m) {
        auto v = theorem63_value(m);
        CHECK(v.closed_form == v.direct);
        if (m < 6) CHECK(v.direct > 0);
        if (m == 6) CHECK(v.direct == 0);
        if (m > 6) CHECK(v.direct < 0);
    }
}

TEST_CASE("scan: frozen threshold table d0 = n + 2 on [8, 20] x [2, 400]") {
    auto rep = scan_failure(8, 20, 400);
    REQUIRE(rep.thresholds.size() == 7);
    for (const auto& [n, d0] : rep.thresholds) {
        REQUIRE(d0.has_value());
        CHECK(*d0 == n + 2);
    }
}

TEST_CASE("scan csv carries the documented schema") {
    auto rep = scan_failure(8, 8, 12);
    auto csv = rep.csv();
    CHECK(csv.rfind("n,d,m,q,t,witness,applicable,verdict,clause\n", 0) == 0);
    CHECK(csv.find("8,10,4,0,1,") != std::string::npos);
}

TEST_CASE("literature table") {
    CHECK(literature_wlp(1, 9)->has_wlp);
    CHECK(literature_wlp(2, 5)->has_wlp);
    CHECK(literature_wlp(3, 2)->has_wlp);
    CHECK_FALSE(literature_wlp(3, 3)->has_wlp);
    CHECK_FALSE(literature_wlp(4, 4)->has_wlp);
    CHECK(literature_wlp(5, 1)->has_wlp);
    CHECK_FALSE(literature_wlp(5, 2)->has_wlp);
    CHECK_FALSE(literature_wlp(8, 2)->has_wlp);
    CHECK_FALSE(literature_wlp(8, 2)->conjectural);
    CHECK(literature_wlp(8, 5)->conjectural);
    CHECK_FALSE(literature_wlp(0, 1).has_value());
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <string>

#include <lplab/common.hpp>
#include <lplab/roots.hpp>
#include <lplab/series.hpp>
#include <lplab/theta.hpp>

#include "oracles.hpp"

using namespace lplab;

TEST_CASE("section_has_witness flips across the quadratic threshold") {
    CHECK(section_has_witness(2, std::sqrt(4.2)));
    CHECK_FALSE(section_has_witness(2, std::sqrt(3.8)));
    CHECK(section_has_witness(3, std::sqrt(3.1)));
    CHECK_FALSE(section_has_witness(3, std::sqrt(2.9)));
    CHECK(section_has_witness(10, std::sqrt(3.30)));
    CHECK_FALSE(section_has_witness(10, std::sqrt(3.15)));
    CHECK_THROWS_AS(section_has_witness(1, 2.0), InvalidInput);
    CHECK_THROWS_AS(section_has_witness(4, 1.0), InvalidInput);
}

TEST_CASE("threshold_c matches the frozen cutoffs") {
    const double tol = 1e-10;
    CHECK(threshold_c(2, tol) == doctest::Approx(oracles::kC2).epsilon(1e-9));
    CHECK(threshold_c(3, tol) == doctest::Approx(oracles::kC3).epsilon(1e-9));
    CHECK(threshold_c(4, tol) == doctest::Approx(oracles::kC4).epsilon(1e-9));
    CHECK(threshold_c(5, tol) == doctest::Approx(oracles::kC5).epsilon(1e-9));
    CHECK(threshold_c(6, tol) == doctest::Approx(oracles::kC6).epsilon(1e-9));
    CHECK(threshold_c(7, tol) == doctest::Approx(oracles::kC7).epsilon(1e-9));
    CHECK(threshold_c(10, tol) == doctest::Approx(oracles::kC10).epsilon(1e-9));
    CHECK_THROWS_AS(threshold_c(4, 1e-14), InvalidInput); // below the tol floor
}

TEST_CASE("threshold equals the real-rootedness transition for small n") {
    // the cutoff in a^2 separates sections with a non-real pair from
    // real-rooted ones; verify by root reports just on each side
    for (int n = 4; n <= 8; ++n) {
        double c = threshold_c(n, 1e-10);
        double lo = std::sqrt(c - 1e-3);
        double hi = std::sqrt(c + 1e-3);
        std::vector<double> below, above;
        for (int k = 0; k <= n; ++k) {
            below.push_back(std::pow(lo, -static_cast<double>(k) * k));
            above.push_back(std::pow(hi, -static_cast<double>(k) * k));
        }
        RootReport rb = poly_roots(below);
        RootReport ra = poly_roots(above);
        CAPTURE(n);
        CHECK(rb.verdict != RootVerdict::AllRealNegative);
        CHECK(ra.verdict == RootVerdict::AllRealNegative);
    }
}

TEST_CASE("q_inf_bracket: strand ordering and limit enclosure") {
    ThetaThresholds t = q_inf_bracket(12, 1e-10);
    REQUIRE(t.n_max == 12);
    REQUIRE(static_cast<int>(t.c.size()) == 11);
    CHECK(t.q_inf_low <= t.q_inf_high + 2e-10);
    CHECK(t.q_inf_low == doctest::Approx(oracles::kQInf).epsilon(1e-8));
    CHECK(t.q_inf_high == doctest::Approx(oracles::kQInf).epsilon(1e-8));

    // parity strands: even cutoffs descend, odd cutoffs ascend (up to 2 tol)
    for (int n = 4; n + 2 <= 12; n += 2)
        CHECK(t.c.at(n + 2) <= t.c.at(n) + 2e-10);
    for (int n = 3; n + 2 <= 12; n += 2)
        CHECK(t.c.at(n + 2) >= t.c.at(n) - 2e-10);
    // the limit lies between the strands
    CHECK(oracles::kQInf >= t.q_inf_low - 1e-8);
    CHECK(oracles::kQInf <= t.q_inf_high + 1e-8);

    CHECK_THROWS_AS(q_inf_bracket(4, 1e-10), InvalidInput);
}

TEST_CASE("g_a_membership: holds above the limit, fails below") {
    CriterionVerdict yes = g_a_membership(2.0);
    CHECK(yes.status == CriterionStatus::Holds);
    REQUIRE(yes.witness.has_value());
    CHECK(yes.note.find("disagree") == std::string::npos);

    CriterionVerdict no = g_a_membership(1.7);
    CHECK(no.status == CriterionStatus::Fails);
    CHECK(no.note.find("disagree") == std::string::npos);

    // a^2 = 3.24 sits just above the limit 3.23364: a member
    CriterionVerdict edge = g_a_membership(1.8);
    CHECK(edge.status == CriterionStatus::Holds);

    CHECK_THROWS_AS(g_a_membership(0.9), InvalidInput);
}

TEST_CASE("witness runs agree with direct evaluation for a period of values") {
    // for each a^2 on a grid spanning the limit, the witness predicate at
    // n = 12 must match the sign structure of the degree-12 section minimum
    for (int i = 0; i <= 50; ++i) {
        double beta = 2.8 + 1.4 * i / 50.0;
        if (std::abs(beta - oracles::kQInf) < 2e-2) continue; // skip the blur zone
        double a = std::sqrt(beta);
        bool w = section_has_witness(12, a);
        std::vector<double> c;
        for (int k = 0; k <= 12; ++k)
            c.push_back(std::pow(a, -static_cast<double>(k) * k));
        bool real_rooted = poly_roots(c).verdict == RootVerdict::AllRealNegative;
        CAPTURE(beta);
        CHECK(w == real_rooted);
    }
}

TEST_CASE("partial-theta(1.8) quartic section stays real-rooted") {
    // a^2 = 3.24 is above c_4 = 3.23607, so S_4 has only real zeros; frozen
    // reference roots live in the oracle header
    std::vector<double> c;
    for (int k = 0; k <= 4; ++k) c.push_back(std::pow(1.8, -static_cast<double>(k) * k));
    RootReport rep = poly_roots(c);
    CHECK(rep.verdict == RootVerdict::AllRealNegative);
    CHECK(section_has_witness(4, 1.8));
}

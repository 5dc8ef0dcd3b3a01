#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "schemebounds/simplex.hpp"

using namespace schemebounds;

namespace {

LPProblem make_lp(std::size_t m, std::size_t n, const std::vector<Rational>& a,
                  const std::vector<Rational>& b, const std::vector<Rational>& c) {
    LPProblem lp;
    lp.A = RationalMatrix(m, n, Rational(0));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) lp.A(i, j) = a[i * n + j];
    }
    lp.b = b;
    lp.c = c;
    return lp;
}

}  // namespace

TEST_CASE("one-variable maximum") {
    const LPProblem lp = make_lp(1, 1, {1}, {5}, {1});
    const LPOutcome out = solve_lp_simplex(lp);
    REQUIRE(out.status == LPStatus::optimal);
    CHECK(out.objective == 5);
    CHECK(out.primal == std::vector<Rational>{5});
    CHECK(out.dual == std::vector<Rational>{1});
}

TEST_CASE("textbook two-phase solve with known dual") {
    // max 3x + 5y: x <= 4, 2y <= 12, 3x + 2y <= 18
    const LPProblem lp = make_lp(3, 2, {1, 0, 0, 2, 3, 2}, {4, 12, 18}, {3, 5});
    const LPOutcome out = solve_lp_simplex(lp);
    REQUIRE(out.status == LPStatus::optimal);
    CHECK(out.objective == 36);
    CHECK(out.primal == std::vector<Rational>{2, 6});
    CHECK(out.dual == std::vector<Rational>{0, Rational(3, 2), 1});
}

TEST_CASE("negative right-hand sides go through phase 1") {
    // x >= 1 written as -x <= -1, together with x <= 3; max x
    const LPProblem lp = make_lp(2, 1, {-1, 1}, {-1, 3}, {1});
    const LPOutcome out = solve_lp_simplex(lp);
    REQUIRE(out.status == LPStatus::optimal);
    CHECK(out.objective == 3);

    // min x instead: the optimum sits on the phase-1 constraint
    const LPProblem lp2 = make_lp(2, 1, {-1, 1}, {-1, 3}, {-1});
    const LPOutcome out2 = solve_lp_simplex(lp2);
    REQUIRE(out2.status == LPStatus::optimal);
    CHECK(out2.objective == -1);
    CHECK(out2.primal == std::vector<Rational>{1});
}

TEST_CASE("equality encoded as two inequalities") {
    // x + y = 4 via <= and >=; max x + 2y
    const LPProblem lp = make_lp(2, 2, {1, 1, -1, -1}, {4, -4}, {1, 2});
    const LPOutcome out = solve_lp_simplex(lp);
    REQUIRE(out.status == LPStatus::optimal);
    CHECK(out.objective == 8);
    CHECK(out.primal == std::vector<Rational>{0, 4});
}

TEST_CASE("box constraints solve at the corner") {
    // max x + y with x <= 1, y <= 1
    const LPProblem lp = make_lp(2, 2, {1, 0, 0, 1}, {1, 1}, {1, 1});
    const LPOutcome out = solve_lp_simplex(lp);
    REQUIRE(out.status == LPStatus::optimal);
    CHECK(out.objective == 2);
    CHECK(out.primal == std::vector<Rational>{1, 1});
}

TEST_CASE("infeasible system is detected") {
    // x <= 1 and x >= 2
    const LPProblem lp = make_lp(2, 1, {1, -1}, {1, -2}, {1});
    CHECK(solve_lp_simplex(lp).status == LPStatus::infeasible);

    // x <= -1 contradicts x >= 0 on its own
    const LPProblem lp2 = make_lp(1, 1, {1}, {-1}, {1});
    CHECK(solve_lp_simplex(lp2).status == LPStatus::infeasible);
}

TEST_CASE("unbounded direction is detected") {
    const LPProblem lp = make_lp(1, 1, {-1}, {1}, {1});
    CHECK(solve_lp_simplex(lp).status == LPStatus::unbounded);

    // bounded only in the other variable
    const LPProblem lp2 = make_lp(1, 2, {1, 0}, {3}, {1, 1});
    CHECK(solve_lp_simplex(lp2).status == LPStatus::unbounded);

    // no constraints at all
    LPProblem free;
    free.A = RationalMatrix(0, 1, Rational(0));
    free.c = {Rational(1)};
    CHECK(solve_lp_simplex(free).status == LPStatus::unbounded);
}

TEST_CASE("degenerate instance known to cycle under naive pivoting") {
    // Beale's example; Bland's rule must terminate at 1/20
    const LPProblem lp = make_lp(
        3, 4,
        {Rational(1, 4), -60, Rational(-1, 25), 9,
         Rational(1, 2), -90, Rational(-1, 50), 3,
         0, 0, 1, 0},
        {0, 0, 1},
        {Rational(3, 4), -150, Rational(1, 50), -6});
    const LPOutcome out = solve_lp_simplex(lp);
    REQUIRE(out.status == LPStatus::optimal);
    CHECK(out.objective == Rational(1, 20));
    CHECK(out.primal == std::vector<Rational>{Rational(1, 25), 0, 1, 0});
}

TEST_CASE("zero objective and empty feasible directions") {
    const LPProblem lp = make_lp(1, 2, {1, 1}, {2}, {0, 0});
    const LPOutcome out = solve_lp_simplex(lp);
    REQUIRE(out.status == LPStatus::optimal);
    CHECK(out.objective == 0);
}

TEST_CASE("redundant equality rows leave the duals consistent") {
    // x = 2 stated twice; max x
    const LPProblem lp = make_lp(4, 1, {1, -1, 1, -1}, {2, -2, 2, -2}, {1});
    const LPOutcome out = solve_lp_simplex(lp);
    REQUIRE(out.status == LPStatus::optimal);
    CHECK(out.objective == 2);
    verify_certificates(lp, out);
}

TEST_CASE("identical input yields identical output") {
    const LPProblem lp = make_lp(3, 4,
                                 {Rational(1, 4), -60, Rational(-1, 25), 9,
                                  Rational(1, 2), -90, Rational(-1, 50), 3,
                                  0, 0, 1, 0},
                                 {0, 0, 1},
                                 {Rational(3, 4), -150, Rational(1, 50), -6});
    const LPOutcome a = solve_lp_simplex(lp);
    const LPOutcome b = solve_lp_simplex(lp);
    CHECK(a.primal == b.primal);
    CHECK(a.dual == b.dual);
    CHECK(a.objective == b.objective);
}

TEST_CASE("random feasible bounded instances satisfy strong duality") {
    std::mt19937 rng(20240817);
    std::uniform_int_distribution<int> num(-4, 4);
    std::uniform_int_distribution<int> den(1, 3);
    std::uniform_int_distribution<std::size_t> msize(1, 5);
    std::uniform_int_distribution<std::size_t> nsize(1, 4);
    std::uniform_int_distribution<int> bval(0, 6);

    for (int round = 0; round < 60; ++round) {
        const std::size_t m = msize(rng);
        const std::size_t n = nsize(rng);
        LPProblem lp;
        lp.A = RationalMatrix(m + 1, n, Rational(0));
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = 0; j < n; ++j) lp.A(i, j) = Rational(num(rng), den(rng));
        }
        // x = 0 is feasible (b >= 0) and the final row caps the total, so
        // every instance is feasible and bounded
        for (std::size_t j = 0; j < n; ++j) lp.A(m, j) = 1;
        for (std::size_t i = 0; i < m; ++i) lp.b.push_back(bval(rng));
        lp.b.push_back(10);
        for (std::size_t j = 0; j < n; ++j) lp.c.push_back(Rational(num(rng), den(rng)));

        const LPOutcome out = solve_lp_simplex(lp);
        INFO("round " << round);
        REQUIRE(out.status == LPStatus::optimal);
        verify_certificates(lp, out);

        Rational by(0);
        for (std::size_t i = 0; i <= m; ++i) by += lp.b[i] * out.dual[i];
        CHECK(by == out.objective);
    }
}

TEST_CASE("scaling the objective scales the optimum") {
    const LPProblem lp = make_lp(2, 2, {1, 2, 3, 1}, {4, 6}, {1, 1});
    LPProblem scaled = lp;
    for (Rational& v : scaled.c) v *= Rational(7, 3);
    const LPOutcome a = solve_lp_simplex(lp);
    const LPOutcome b = solve_lp_simplex(scaled);
    REQUIRE(a.status == LPStatus::optimal);
    REQUIRE(b.status == LPStatus::optimal);
    CHECK(b.objective == a.objective * Rational(7, 3));
}

#include <doctest.h>

#include <random>

#include "fairdiv/errors.hpp"
#include "fairdiv/lp.hpp"

using namespace fairdiv;
using lp::LinearConstraint;
using lp::Relation;

namespace {

LinearConstraint row(std::vector<long> coeffs, Relation rel, long bound) {
    LinearConstraint c;
    for (long a : coeffs) c.coefficients.emplace_back(a);
    c.relation = rel;
    c.bound = Rational(bound);
    return c;
}

bool satisfies(const std::vector<LinearConstraint>& constraints,
               const std::vector<int>& nonneg,
               const std::vector<Rational>& x) {
    for (int v : nonneg)
        if (x[static_cast<std::size_t>(v)] < 0) return false;
    for (const auto& c : constraints) {
        Rational lhs(0);
        for (std::size_t v = 0; v < c.coefficients.size(); ++v)
            lhs += c.coefficients[v] * x[v];
        if (c.relation == Relation::LessEq ? lhs > c.bound : lhs < c.bound) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("feasible systems come with exact witnesses") {
    // x + y <= 4, x >= 1, y >= 2
    std::vector<LinearConstraint> sys{
        row({1, 1}, Relation::LessEq, 4),
        row({1, 0}, Relation::GreaterEq, 1),
        row({0, 1}, Relation::GreaterEq, 2),
    };
    auto result = lp::feasible(sys, {0, 1});
    REQUIRE(result.feasible());
    CHECK(satisfies(sys, {0, 1}, *result.witness));
}

TEST_CASE("infeasibility is detected") {
    std::vector<LinearConstraint> sys{
        row({1}, Relation::GreaterEq, 1),
        row({1}, Relation::LessEq, 0),
    };
    CHECK_FALSE(lp::feasible(sys, {}).feasible());
    CHECK_FALSE(lp::fourier_motzkin_feasible(sys, {}));

    // 2x + 2y >= 5 with x + y <= 2
    std::vector<LinearConstraint> sys2{
        row({2, 2}, Relation::GreaterEq, 5),
        row({1, 1}, Relation::LessEq, 2),
    };
    CHECK_FALSE(lp::feasible(sys2, {0, 1}).feasible());
}

TEST_CASE("free variables can go negative") {
    // x <= -5 has no nonnegative solution but a free one.
    std::vector<LinearConstraint> sys{row({1}, Relation::LessEq, -5)};
    auto free_result = lp::feasible(sys, {});
    REQUIRE(free_result.feasible());
    CHECK((*free_result.witness)[0] <= -5);
    CHECK_FALSE(lp::feasible(sys, {0}).feasible());
}

TEST_CASE("equalities as opposing inequalities") {
    // x + y = 3 and x - y = 1 pin (2, 1).
    std::vector<LinearConstraint> sys{
        row({1, 1}, Relation::LessEq, 3),   row({1, 1}, Relation::GreaterEq, 3),
        row({1, -1}, Relation::LessEq, 1),  row({1, -1}, Relation::GreaterEq, 1),
    };
    auto result = lp::feasible(sys, {});
    REQUIRE(result.feasible());
    CHECK((*result.witness)[0] == 2);
    CHECK((*result.witness)[1] == 1);
}

TEST_CASE("degenerate corner cases") {
    CHECK(lp::feasible({}, {}).feasible());
    CHECK(lp::fourier_motzkin_feasible({}, {}));
    CHECK(lp::feasible({}, {0, 1, 2}).feasible());

    // 0 <= -1 is a contradiction with an empty left side.
    std::vector<LinearConstraint> zero{row({0, 0}, Relation::LessEq, -1)};
    CHECK_FALSE(lp::feasible(zero, {}).feasible());
    CHECK_FALSE(lp::fourier_motzkin_feasible(zero, {}));

    std::vector<LinearConstraint> taut{row({0}, Relation::GreaterEq, 0)};
    CHECK(lp::feasible(taut, {}).feasible());
    CHECK(lp::fourier_motzkin_feasible(taut, {}));

    CHECK_THROWS_AS(lp::feasible({row({1}, Relation::LessEq, 1),
                                  row({1, 2}, Relation::LessEq, 1)},
                                 {}),
                    std::invalid_argument);
}

TEST_CASE("fourier-motzkin refuses wide systems") {
    std::vector<LinearConstraint> sys{
        row({1, 1, 1, 1, 1, 1, 1, 1, 1}, Relation::LessEq, 1)};
    CHECK_THROWS_AS(lp::fourier_motzkin_feasible(sys, {}), CapacityError);
}

TEST_CASE("rational coefficients are handled exactly") {
    // x/3 + y/7 <= 1/21 with x, y >= 0 and x + y >= 1/1000000.
    std::vector<LinearConstraint> sys{
        LinearConstraint{{Rational(1, 3), Rational(1, 7)}, Relation::LessEq, Rational(1, 21)},
        LinearConstraint{{Rational(1), Rational(1)}, Relation::GreaterEq, Rational(1, 1000000)},
    };
    auto result = lp::feasible(sys, {0, 1});
    REQUIRE(result.feasible());
    CHECK(satisfies(sys, {0, 1}, *result.witness));
}

TEST_CASE("simplex and elimination agree on random systems") {
    std::mt19937_64 rng(20240817);
    auto draw = [&](long lo, long hi) {
        return lo + static_cast<long>(rng() % static_cast<unsigned long long>(hi - lo + 1));
    };
    int feasible_count = 0;
    for (int trial = 0; trial < 300; ++trial) {
        int vars = static_cast<int>(draw(1, 4));
        int rows_n = static_cast<int>(draw(1, 10));
        std::vector<LinearConstraint> sys;
        for (int r = 0; r < rows_n; ++r) {
            std::vector<long> coeffs;
            for (int v = 0; v < vars; ++v) coeffs.push_back(draw(-5, 5));
            sys.push_back(row(coeffs, draw(0, 1) ? Relation::LessEq : Relation::GreaterEq,
                              draw(-10, 10)));
        }
        std::vector<int> nonneg;
        for (int v = 0; v < vars; ++v)
            if (draw(0, 1)) nonneg.push_back(v);

        auto simplex = lp::feasible(sys, nonneg);
        bool elimination = lp::fourier_motzkin_feasible(sys, nonneg);
        REQUIRE(simplex.feasible() == elimination);
        if (simplex.feasible()) {
            ++feasible_count;
            CHECK(satisfies(sys, nonneg, *simplex.witness));
        }
    }
    // The mix should exercise both verdicts.
    CHECK(feasible_count > 30);
    CHECK(feasible_count < 270);
}

TEST_CASE("dump_system renders readable rows") {
    std::vector<LinearConstraint> sys{
        LinearConstraint{{Rational(2), Rational(-3, 2), Rational(0)}, Relation::LessEq,
                         Rational(4)},
        LinearConstraint{{Rational(0), Rational(0), Rational(0)}, Relation::GreaterEq,
                         Rational(-1)},
    };
    CHECK(lp::dump_system(sys) == "2 x1 - 3/2 x2 <= 4\n0 >= -1\n");
}

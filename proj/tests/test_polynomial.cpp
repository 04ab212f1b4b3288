#include <gtest/gtest.h>

#include <random>

#include "colpart/graph.hpp"
#include "colpart/poly_parse.hpp"
#include "colpart/polynomial.hpp"
#include "support/naive.hpp"

using namespace colpart;

namespace {

YPolynomial yp(std::initializer_list<long> cs) {
    std::vector<BigInt> v;
    for (long c : cs) {
        v.emplace_back(c);
    }
    return YPolynomial(std::move(v));
}

YPolynomial random_poly(std::mt19937& rng, int max_degree = 4, int bound = 9) {
    std::uniform_int_distribution<int> deg(-1, max_degree);
    std::uniform_int_distribution<int> coef(-bound, bound);
    std::vector<BigInt> v(static_cast<std::size_t>(deg(rng) + 1));
    for (auto& c : v) {
        c = coef(rng);
    }
    return YPolynomial(std::move(v));
}

} // namespace

TEST(YPolynomial, RingExamples) {
    EXPECT_EQ(yp({1, 1}) * yp({1, 1}), yp({1, 2, 1}));
    EXPECT_EQ(yp({0, 2, 6}) + YPolynomial{}, yp({0, 2, 6}));
    EXPECT_EQ(yp({0, 2}) * yp({0, 0, 3}), yp({0, 0, 0, 6}));
    EXPECT_EQ(yp({0, 2, 6}) * BigInt(3), yp({0, 6, 18}));
}

TEST(YPolynomial, CanonicalForm) {
    EXPECT_EQ(yp({1, 0, 0}).degree(), 0);
    EXPECT_TRUE(yp({0, 0}).is_zero());
    EXPECT_EQ(YPolynomial{}.degree(), -1);
    EXPECT_TRUE((yp({1, 2}) - yp({1, 2})).is_zero());
    EXPECT_TRUE((yp({0, 5}) * BigInt(0)).is_zero());
}

TEST(YPolynomial, EvalAndDerivativeAtOne) {
    const auto p = yp({0, 2, 6});
    EXPECT_EQ(eval_at_one(p), 8);

    // 14 is the total part count over all 8 two-colorings of K_3.
    const auto dist = naive::coloring_distribution(3, {{0, 1}, {0, 2}, {1, 2}}, 2, 1);
    EXPECT_EQ(naive::total_components(dist), 14u);
    EXPECT_EQ(derivative_at_one(p), 14);

    EXPECT_EQ(eval_at_one(YPolynomial{}), 0);
    EXPECT_EQ(derivative_at_one(YPolynomial{}), 0);
}

TEST(YPolynomial, RingAxiomsProperty) {
    std::mt19937 rng(20261016);
    for (int trial = 0; trial < 300; ++trial) {
        const auto a = random_poly(rng);
        const auto b = random_poly(rng);
        const auto c = random_poly(rng);
        ASSERT_EQ((a + b) + c, a + (b + c));
        ASSERT_EQ((a * b) * c, a * (b * c));
        ASSERT_EQ(a + b, b + a);
        ASSERT_EQ(a * b, b * a);
        ASSERT_EQ(a * (b + c), a * b + a * c);
        ASSERT_EQ(eval_at_one(a * b), eval_at_one(a) * eval_at_one(b));
        ASSERT_EQ(derivative_at_one(a * b), derivative_at_one(a) * eval_at_one(b) + eval_at_one(a) * derivative_at_one(b));
        ASSERT_EQ(derivative(a * b), derivative(a) * b + a * derivative(b));
    }
}

TEST(YPolynomial, ExactDivision) {
    const auto a = yp({2, 3, 1});  // (1+y)(2+y)
    EXPECT_EQ(divexact(a, yp({1, 1})), yp({2, 1}));
    EXPECT_EQ(divexact(yp({0, 6, 18}), BigInt(6)), yp({0, 1, 3}));
    EXPECT_THROW(divexact(a, yp({3, 1})), contract_violation);
    EXPECT_THROW(divexact(a, YPolynomial{}), contract_violation);
    EXPECT_THROW(divexact(yp({1}), yp({1, 1})), contract_violation);
}

TEST(YPolynomial, GcdProperty) {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const auto g = random_poly(rng, 2, 5);
        const auto a = random_poly(rng, 3, 5);
        const auto b = random_poly(rng, 3, 5);
        if (g.is_zero()) {
            continue;
        }
        const auto d = gcd(g * a, g * b);
        // d is a multiple of g (up to sign and content) and divides both.
        if (!(g * a).is_zero()) {
            EXPECT_NO_THROW(divexact(g * a, d));
        }
        if (!(g * b).is_zero()) {
            EXPECT_NO_THROW(divexact(g * b, d));
        }
        EXPECT_NO_THROW(divexact(d, primitive_part(g)));
    }
    EXPECT_EQ(gcd(yp({2, 2}), yp({4, 4})), yp({2, 2}));
    EXPECT_EQ(gcd(yp({-1, -1}), YPolynomial{}), yp({1, 1}));
    EXPECT_EQ(gcd(yp({1, 0, 1}), yp({1, 1})), yp({1}));
}

TEST(XYPolynomial, NestedArithmetic) {
    const XYPolynomial x = x_var();
    const XYPolynomial y(y_var());
    const XYPolynomial one(YPolynomial(BigInt(1)));
    const auto p = (one - x * (one + y)) * (one + x * (one + y));
    EXPECT_EQ(p, one - x * x * (one + y) * (one + y));
    EXPECT_EQ(eval_y_at_one(p), Polynomial<BigInt>({BigInt(1), BigInt(0), BigInt(-4)}));
    EXPECT_EQ(dy_at_one(p), Polynomial<BigInt>({BigInt(0), BigInt(0), BigInt(-4)}));
    EXPECT_EQ(content(XYPolynomial({yp({0, 4}), yp({6})})), 2);
}

TEST(ParsePolynomial, ImplicitMultiplicationAndPowers) {
    const auto a = parse_xy_polynomial("2 x y (1 + 3 y - x (3 - 7 y + 4 y^2))");
    const auto b = parse_xy_polynomial("2*x*y + 6*x*y^2 - 6*x^2*y + 14*x^2*y^2 - 8*x^2*y^3");
    EXPECT_EQ(a, b);
    EXPECT_EQ(parse_xy_polynomial("(1+y)^3"), parse_xy_polynomial("1 + 3y + 3y^2 + y^3"));
    EXPECT_EQ(parse_xy_polynomial("-x + x"), XYPolynomial{});
    EXPECT_EQ(parse_xy_polynomial("2xy"), parse_xy_polynomial("2 * x * y"));
    EXPECT_EQ(parse_y_polynomial("2y + 6y^2"), yp({0, 2, 6}));
    EXPECT_EQ(parse_y_polynomial("123456789012345678901234567890"), YPolynomial(BigInt("123456789012345678901234567890")));
}

TEST(ParsePolynomial, Errors) {
    for (const char* bad : {"", "(1 + y", "1 +", "z", "y^", "2 ) ", "x^y"}) {
        EXPECT_THROW(parse_xy_polynomial(bad), parse_error) << bad;
    }
    EXPECT_THROW(parse_y_polynomial("x + y"), parse_error);
}

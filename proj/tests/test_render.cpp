#include <gtest/gtest.h>

#include <random>

#include "colpart/poly_parse.hpp"
#include "colpart/render.hpp"

using namespace colpart;

TEST(RenderText, YPolynomials) {
    EXPECT_EQ(to_text(parse_y_polynomial("2y + 6y^2")), "2y + 6y^2");
    EXPECT_EQ(to_text(parse_y_polynomial("y")), "y");
    EXPECT_EQ(to_text(parse_y_polynomial("1")), "1");
    EXPECT_EQ(to_text(YPolynomial{}), "0");
    EXPECT_EQ(to_text(parse_y_polynomial("3 - 7y + 3y^2 + y^3")), "3 - 7y + 3y^2 + y^3");
    EXPECT_EQ(to_text(parse_y_polynomial("-y - 4y^2")), "-y - 4y^2");
}

TEST(RenderText, Series) {
    const auto s = series(BaseGraph::complete(3), 2, 2);
    EXPECT_EQ(series_text(s), "x^1: 2y + 6y^2 ; x^2: 2y + 44y^2 + 12y^3 + 6y^4");
}

TEST(RenderLatex, Series) {
    const auto s = series(BaseGraph::path(2), 2, 2);
    EXPECT_EQ(series_latex(s), "(2 y + 2 y^{2}) x + (2 y + 12 y^{2} + 2 y^{4}) x^{2} + O(x^{3})");
    EXPECT_EQ(series_latex(series(BaseGraph::path(1), 1, 2)), "y x + y x^{2} + O(x^{3})");
}

TEST(RenderText, RationalGf) {
    const RationalGF g{parse_xy_polynomial("2 x y"), parse_xy_polynomial("1 - x (1 + y)")};
    EXPECT_EQ(gf_text(g), "numerator: 2y x\ndenominator: 1 + (-1 - y) x");
    EXPECT_EQ(gf_latex(g), "\\frac{2 y x}{1 + (-1 - y) x}");
}

TEST(RenderJson, DecimalStrings) {
    const auto j = to_json(parse_y_polynomial("2y + 2y^2"));
    EXPECT_EQ(j.dump(), R"(["0","2","2"])");
    EXPECT_EQ(to_json(YPolynomial{}).dump(), "[]");
    const auto big = parse_y_polynomial("123456789012345678901234567890 y");
    EXPECT_EQ(to_json(big)[1], "123456789012345678901234567890");
}

TEST(RenderJson, RoundTripProperty) {
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> deg(-1, 5);
    std::uniform_int_distribution<long> coef(-1'000'000'000L, 1'000'000'000L);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<YPolynomial> rows(static_cast<std::size_t>(deg(rng) + 1));
        for (auto& r : rows) {
            std::vector<BigInt> cs(static_cast<std::size_t>(deg(rng) + 1));
            for (auto& c : cs) {
                c = BigInt(coef(rng)) * BigInt(coef(rng)) * BigInt(coef(rng));
            }
            r = YPolynomial(std::move(cs));
        }
        const XYPolynomial p(std::move(rows));
        const auto text = to_json(p).dump();
        ASSERT_EQ(xy_polynomial_from_json(nlohmann::json::parse(text)), p);
        // Text rendering reads back through the polynomial parser.
        for (const auto& row : p.coefficients()) {
            ASSERT_EQ(parse_y_polynomial(to_text(row)), row);
        }
    }
}

TEST(RenderJson, RejectsMalformed) {
    EXPECT_THROW(y_polynomial_from_json(nlohmann::json::parse("[1, 2]")), parse_error);
    EXPECT_THROW(y_polynomial_from_json(nlohmann::json::parse(R"(["1x"])")), parse_error);
    EXPECT_THROW(y_polynomial_from_json(nlohmann::json::parse("{}")), parse_error);
    EXPECT_THROW(xy_polynomial_from_json(nlohmann::json::parse("3")), parse_error);
}

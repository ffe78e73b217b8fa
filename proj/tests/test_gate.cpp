#include "mvl/errors.hpp"
#include "mvl/gate.hpp"

#include "oracles.hpp"
#include "test_support.hpp"

#include <doctest.h>

#include <random>

using namespace mvl;
using support::q;

namespace {

BarycentricPoint random_point(std::mt19937_64& rng, const std::vector<std::size_t>& arities) {
    BarycentricPoint p;
    for (auto a : arities) p.push_back(oracle::random_interior_simplex_point(rng, a));
    return p;
}

BarycentricPoint vertex(const std::vector<std::size_t>& arities, const std::vector<std::size_t>& index) {
    BarycentricPoint p;
    for (std::size_t i = 0; i < arities.size(); ++i) {
        RationalVector block(arities[i], Rational(0));
        block[index[i]] = 1;
        p.push_back(block);
    }
    return p;
}

Gate random_gate(std::mt19937_64& rng, const std::vector<std::size_t>& arities, std::size_t m) {
    std::size_t size = 1;
    for (auto a : arities) size *= a;
    std::vector<RationalVector> table;
    std::uniform_int_distribution<int> num(-6, 6), den(1, 5);
    for (std::size_t i = 0; i < size; ++i) {
        RationalVector out;
        for (std::size_t c = 0; c < m; ++c) out.emplace_back(num(rng), den(rng));
        table.push_back(out);
    }
    return Gate(arities, m, std::move(table));
}

}  // namespace

TEST_CASE("expand: color gate coefficients") {
    const Gate g = support::load_gate("color_gate.json");
    CHECK(g.arities() == std::vector<std::size_t>{2, 2, 2});
    CHECK(g.output_dim() == 4);
    const auto e = expand(g);
    // f_2 = r1 g0 b0 + 1/2 r1 g0 b1 + 1/2 r1 g1 b0 + 1/3 r1 g1 b1
    const std::vector<std::size_t> r1g0b0{1, 0, 0}, r1g0b1{1, 0, 1}, r1g1b0{1, 1, 0}, r1g1b1{1, 1, 1};
    CHECK(e.coefficient(r1g0b0)[1] == Rational(1));
    CHECK(e.coefficient(r1g0b1)[1] == Rational(1, 2));
    CHECK(e.coefficient(r1g1b0)[1] == Rational(1, 2));
    CHECK(e.coefficient(r1g1b1)[1] == Rational(1, 3));
    std::size_t nonzero_f2 = 0;
    for (const auto& c : e.coefficients()) nonzero_f2 += c[1] != 0 ? 1 : 0;
    CHECK(nonzero_f2 == 4);
}

TEST_CASE("expand: AND and constant gates") {
    const auto e = expand(support::load_gate("and_gate.json"));
    CHECK(e.coefficients() == std::vector<RationalVector>{q({"0"}), q({"0"}), q({"0"}), q({"1"})});
    const auto c = expand(support::load_gate("constant_gate.json"));
    for (const auto& coeff : c.coefficients()) CHECK(coeff == q({"1/2", "-3"}));
}

TEST_CASE("evaluate") {
    const Gate g = support::load_gate("color_gate.json");
    const auto e = expand(g);
    const BarycentricPoint p{q({"1/2", "1/2"}), q({"1", "0"}), q({"1", "0"})};
    CHECK(e.evaluate(p) == q({"1/2", "1/2", "0", "0"}));

    const auto c = expand(support::load_gate("constant_gate.json"));
    CHECK(c.evaluate({q({"1/5", "4/5"}), q({"1/3", "1/3", "1/3"})}) == q({"1/2", "-3"}));

    CHECK_THROWS_AS(e.evaluate({q({"1/2", "1/3"}), q({"1", "0"}), q({"1", "0"})}), DomainError);
    CHECK_THROWS_AS(e.evaluate({q({"3/2", "-1/2"}), q({"1", "0"}), q({"1", "0"})}), DomainError);
    CHECK_THROWS_AS(e.evaluate({q({"1", "0"}), q({"1", "0"})}), DomainError);
    CHECK_THROWS_AS(e.evaluate({q({"1", "0", "0"}), q({"1", "0"}), q({"1", "0"})}), DomainError);
}

TEST_CASE("vertex reproduction for all fixtures") {
    for (const char* name : {"color_gate.json", "and_gate.json", "xor_gate.json", "constant_gate.json",
                             "projection_gate.json"}) {
        const Gate g = support::load_gate(name);
        const auto e = expand(g);
        for (std::size_t flat = 0; flat < g.base_point_count(); ++flat) {
            const auto index = g.index_of(flat);
            REQUIRE(e.evaluate(vertex(g.arities(), index)) == g.output(index));
            REQUIRE(e.coefficient(index) == g.output(index));
        }
    }
}

TEST_CASE("n_of") {
    const std::vector<std::size_t> a{2, 2, 2}, b{2}, c{3, 4};
    CHECK(n_of(a) == 3);
    CHECK(n_of(b) == 1);
    CHECK(n_of(c) == 5);
    CHECK(n_of(expand(support::load_gate("color_gate.json"))) == 3);
}

TEST_CASE("reduced_partial: worked examples") {
    const auto e = expand(support::load_gate("color_gate.json"));
    const BasePoint z{{0, 0, 0}};
    const auto f = e.project(q({"0", "1", "-1", "-1"}));
    // d/dr1: g0 b0 + g0 b1 + g1 b0 + 2/3 g1 b1
    const auto dr = f.reduced_partial(z, 0, 1);
    CHECK(dr.arities() == std::vector<std::size_t>{2, 2});
    CHECK(dr.coefficients() == std::vector<RationalVector>{q({"1"}), q({"1"}), q({"1"}), q({"2/3"})});
    // d/dg1: -r0 b0 - r1 b0 - 1/3 r1 b1
    const auto dg = f.reduced_partial(z, 1, 1);
    CHECK(dg.coefficients() == std::vector<RationalVector>{q({"-1"}), q({"0"}), q({"-1"}), q({"-1/3"})});
    CHECK_THROWS_AS(f.reduced_partial(z, 0, 0), DomainError);
    CHECK_THROWS_AS(f.reduced_partial(z, 3, 1), DomainError);

    const auto c = expand(support::load_gate("constant_gate.json"));
    CHECK(c.reduced_partial(BasePoint{{0, 1}}, 1, 2).is_zero());
    CHECK(c.reduced_partial(BasePoint{{1, 0}}, 0, 0).is_zero());

    const auto a = expand(support::load_gate("and_gate.json"));
    const auto da = a.reduced_partial(BasePoint{{1, 1}}, 0, 0);
    CHECK(da.coefficients() == std::vector<RationalVector>{q({"0"}), q({"-1"})});
}

TEST_CASE("reduced_partial commutes with projections") {
    std::mt19937_64 rng(3);
    const std::vector<std::size_t> arities{2, 3, 2};
    for (int trial = 0; trial < 20; ++trial) {
        const auto e = expand(random_gate(rng, arities, 3));
        const RationalVector w{Rational(1, 2), Rational(-2), Rational(3)};
        const BasePoint z{{1, 2, 0}};
        for (std::size_t block = 0; block < arities.size(); ++block) {
            for (std::size_t coord = 0; coord < arities[block]; ++coord) {
                if (coord == z.indices[block]) continue;
                const auto lhs = e.project(w).reduced_partial(z, block, coord);
                const auto rhs = e.reduced_partial(z, block, coord).project(w);
                REQUIRE(lhs == rhs);
            }
        }
    }
}

TEST_CASE("multilinearity: evaluate is affine in each block") {
    std::mt19937_64 rng(5);
    const std::vector<std::size_t> arities{3, 2, 4};
    for (int trial = 0; trial < 30; ++trial) {
        const auto e = expand(random_gate(rng, arities, 2));
        auto p = random_point(rng, arities);
        const std::size_t block = static_cast<std::size_t>(trial) % arities.size();
        const auto a = oracle::random_interior_simplex_point(rng, arities[block]);
        const auto c = oracle::random_interior_simplex_point(rng, arities[block]);
        const Rational lambda(std::uniform_int_distribution<int>(0, 9)(rng), 9);
        RationalVector mix;
        for (std::size_t j = 0; j < a.size(); ++j) mix.push_back(lambda * a[j] + (1 - lambda) * c[j]);
        p[block] = a;
        const auto fa = e.evaluate(p);
        p[block] = c;
        const auto fc = e.evaluate(p);
        p[block] = mix;
        const auto fm = e.evaluate(p);
        for (std::size_t i = 0; i < fm.size(); ++i) REQUIRE(fm[i] == lambda * fa[i] + (1 - lambda) * fc[i]);
    }
}

TEST_CASE("finite differences with h = 1/7 equal the reduced partial") {
    std::mt19937_64 rng(9);
    const Rational h(1, 7);
    for (const auto& arities : {std::vector<std::size_t>{3}, std::vector<std::size_t>{2, 3}, std::vector<std::size_t>{3, 2, 2}}) {
        for (int trial = 0; trial < 20; ++trial) {
            const auto e = expand(random_gate(rng, arities, 2));
            BasePoint z;
            for (auto a : arities) z.indices.push_back(std::uniform_int_distribution<std::size_t>(0, a - 1)(rng));
            auto x = random_point(rng, arities);
            // pull every block halfway to its base vertex so the base coordinate exceeds h
            for (std::size_t i = 0; i < arities.size(); ++i) {
                for (std::size_t j = 0; j < arities[i]; ++j) {
                    x[i][j] = x[i][j] / 2 + (j == z.indices[i] ? Rational(1, 2) : Rational(0));
                }
            }
            for (std::size_t block = 0; block < arities.size(); ++block) {
                for (std::size_t coord = 0; coord < arities[block]; ++coord) {
                    if (coord == z.indices[block]) continue;
                    auto y = x;
                    y[block][coord] += h;
                    y[block][z.indices[block]] -= h;
                    const auto fx = e.evaluate(x);
                    const auto fy = e.evaluate(y);
                    BarycentricPoint rest;
                    for (std::size_t i = 0; i < arities.size(); ++i) {
                        if (i != block) rest.push_back(x[i]);
                    }
                    const auto d = e.reduced_partial(z, block, coord).evaluate(rest);
                    for (std::size_t c = 0; c < d.size(); ++c) REQUIRE((fy[c] - fx[c]) / h == d[c]);
                }
            }
        }
    }
}

TEST_CASE("Gate validation") {
    using Entry = Gate::Entry;
    CHECK_THROWS_AS(Gate::from_entries({2, 1}, 1, {}), ValidationError);
    std::vector<Entry> partial{{{0, 0}, q({"0"})}, {{0, 1}, q({"0"})}, {{1, 0}, q({"1"})}};
    try {
        Gate::from_entries({2, 2}, 1, partial);
        FAIL("expected a validation error");
    } catch (const ValidationError& err) {
        CHECK(std::string(err.what()).find("(1,1)") != std::string::npos);
    }
    auto dup = partial;
    dup.push_back({{0, 0}, q({"1"})});
    CHECK_THROWS_AS(Gate::from_entries({2, 2}, 1, dup), ValidationError);
    auto wrong_dim = partial;
    wrong_dim.push_back({{1, 1}, q({"1", "2"})});
    CHECK_THROWS_AS(Gate::from_entries({2, 2}, 1, wrong_dim), ValidationError);
    auto out_of_range = partial;
    out_of_range.push_back({{2, 1}, q({"1"})});
    CHECK_THROWS_AS(Gate::from_entries({2, 2}, 1, out_of_range), ValidationError);
    auto complete = partial;
    complete.push_back({{1, 1}, q({"1"})});
    const Gate g = Gate::from_entries({2, 2}, 1, complete);
    CHECK(g.base_point_count() == 4);
    CHECK(g.base_points().size() == 4);
    CHECK(g.base_points()[2].indices == std::vector<std::size_t>{1, 0});
}

TEST_CASE("Gate output labels") {
    const Gate g = support::load_gate("color_gate.json");
    CHECK(g.output_name(q({"0", "1/3", "1/3", "1/3"})) == std::optional<std::string>("white"));
    CHECK_FALSE(g.output_name(q({"0", "0", "0", "0"})).has_value());
}

#include "mvl/cover_poset.hpp"
#include "mvl/errors.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>

using namespace mvl;
using oracle::set_of;
using oracle::sv;

namespace {

SignSet units(std::size_t n) {
    SignSet out;
    for (std::size_t i = 0; i < n; ++i) out.insert(SignVector::unit(n, i));
    return out;
}

SignSet all_of(std::size_t n) {
    const auto zs = enumerate_zs(n);
    return SignSet(zs.begin(), zs.end());
}

}  // namespace

TEST_CASE("is_eliminating_cover") {
    const auto zs2 = enumerate_zs(2);
    for (std::size_t i = 0; i < zs2.size(); ++i) {
        CHECK_FALSE(is_eliminating_cover(SignSet{zs2[i]}, 2));
        for (std::size_t j = i + 1; j < zs2.size(); ++j) CHECK(is_eliminating_cover(SignSet{zs2[i], zs2[j]}, 2));
    }
    for (std::size_t n = 1; n <= 6; ++n) CHECK(is_eliminating_cover(units(n), n));
    CHECK_FALSE(is_eliminating_cover(SignSet{}, 2));
}

TEST_CASE("is_minimal_cover") {
    for (std::size_t n = 1; n <= 4; ++n) {
        CHECK(is_minimal_cover(zs0(n), n));
        CHECK(is_minimal_cover(units(n), n));
    }
    CHECK_FALSE(is_minimal_cover(all_of(2), 2));
    CHECK_THROWS_AS(is_minimal_cover(set_of({"0+"}), 2), DomainError);
}

TEST_CASE("zs0") {
    CHECK(zs0(2) == set_of({"++", "+-"}));
    CHECK(zs0(3) == set_of({"+++", "+--", "+-+", "++-"}));
    for (std::size_t n = 1; n <= 8; ++n) CHECK(zs0(n).size() == (std::size_t{1} << (n - 1)));
}

TEST_CASE("zs0 members are eliminated within zs0 only by themselves") {
    for (std::size_t n = 1; n <= 5; ++n) {
        const auto z = zs0(n);
        for (const auto& t : z) {
            for (const auto& s : z) REQUIRE(eliminates(TotalSignVector(t), s) == (t == s));
        }
    }
}

TEST_CASE("column_rank") {
    CHECK(column_rank(SignMatrix(set_of({"++", "+-"}))) == 2);
    CHECK(column_rank(SignMatrix(set_of({"++"}))) == 1);
    CHECK(column_rank(SignMatrix(set_of({"++0", "+-0", "+00"}))) == 2);
    CHECK(column_rank(SignMatrix(zs0(3))) == 3);
}

TEST_CASE("minimal_covers: n = 2 gives exactly the six 2-subsets") {
    const auto covers = minimal_covers(2, std::nullopt);
    REQUIRE(covers.size() == 6);
    const auto zs2 = enumerate_zs(2);
    std::vector<SignSet> expected;
    for (std::size_t i = 0; i < zs2.size(); ++i) {
        for (std::size_t j = i + 1; j < zs2.size(); ++j) expected.push_back(SignSet{zs2[i], zs2[j]});
    }
    for (const auto& e : expected) CHECK(std::find(covers.begin(), covers.end(), e) != covers.end());
}

TEST_CASE("minimal_covers: n = 3") {
    const auto bounded = minimal_covers(3, 3);
    CHECK_FALSE(bounded.empty());
    for (const auto& x : bounded) CHECK(x.size() == 3);
    CHECK(std::find(bounded.begin(), bounded.end(), units(3)) != bounded.end());

    const auto covers = minimal_covers(3, std::nullopt);
    CHECK(std::find(covers.begin(), covers.end(), units(3)) != covers.end());
    CHECK(std::find(covers.begin(), covers.end(), zs0(3)) != covers.end());
    for (std::size_t i = 0; i < covers.size(); ++i) {
        const auto& x = covers[i];
        REQUIRE(x.size() >= 3);
        REQUIRE(is_eliminating_cover(x, 3));
        REQUIRE(is_minimal_cover(x, 3));
        if (x.size() == 3) REQUIRE(column_rank(SignMatrix(x)) == 3);
        if (i > 0) REQUIRE(covers[i - 1].size() <= x.size());
    }
    // every cover of size n is linearly independent: check all 3-subsets, not only minimal ones
    const auto zs3 = enumerate_zs(3);
    for (std::size_t a = 0; a < zs3.size(); ++a)
        for (std::size_t b = a + 1; b < zs3.size(); ++b)
            for (std::size_t c = b + 1; c < zs3.size(); ++c) {
                SignSet x{zs3[a], zs3[b], zs3[c]};
                if (is_eliminating_cover(x, 3)) REQUIRE(column_rank(SignMatrix(x)) == 3);
            }
}

TEST_CASE("minimal_covers: limits") {
    CHECK_THROWS_AS(minimal_covers(4, std::nullopt), ResourceLimitError);
    Limits limits;
    limits.max_cover_candidates = 100;
    CHECK_THROWS_AS(minimal_covers(4, 4, limits), ResourceLimitError);
    const auto n4 = minimal_covers(4, 4);
    for (const auto& x : n4) {
        REQUIRE(x.size() == 4);
        REQUIRE(column_rank(SignMatrix(x)) == 4);
    }
    CHECK(std::find(n4.begin(), n4.end(), units(4)) != n4.end());
}

TEST_CASE("analyze_cover") {
    const auto r = analyze_cover(units(3), 3);
    CHECK(r.is_cover);
    CHECK(r.is_minimal == std::optional<bool>(true));
    CHECK(r.rank == 3);
    const auto s = analyze_cover(set_of({"0+"}), 2);
    CHECK_FALSE(s.is_cover);
    CHECK_FALSE(s.is_minimal.has_value());
}

TEST_CASE("check_orthogonality: examples") {
    const RationalVector ones{Rational(1), Rational(1)};
    CHECK(check_orthogonality(sv("++"), ones));
    CHECK(check_orthogonality(sv("+-"), ones));
    const RationalVector disjoint{Rational(0), Rational(0), Rational(3)};
    CHECK(check_orthogonality(sv("++0"), disjoint));
}

TEST_CASE("check_orthogonality holds for all x in ZS_n, v in {-2..2}^n, n <= 4") {
    for (std::size_t n = 1; n <= 4; ++n) {
        std::size_t total = 1;
        for (std::size_t i = 0; i < n; ++i) total *= 5;
        const auto zs = enumerate_zs(n);
        for (std::size_t code = 1; code < total; ++code) {
            RationalVector v(n);
            std::size_t c = code;
            for (auto& e : v) {
                e = Rational(static_cast<int>(c % 5) - 2);
                c /= 5;
            }
            if (std::all_of(v.begin(), v.end(), [](const Rational& r) { return r == 0; })) continue;
            for (const auto& x : zs) REQUIRE(check_orthogonality(x, v));
        }
    }
}

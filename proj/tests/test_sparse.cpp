#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ainfty/sparse.hpp"

#include <random>

using namespace ainfty;

namespace {
const Field Q{};

SparseMatrix mat(int r, int c, std::vector<std::tuple<int, int, long>> es)
{
    std::vector<std::tuple<int, int, Scalar>> out;
    for (auto& [i, j, v] : es) out.emplace_back(i, j, Scalar(Q, v));
    return SparseMatrix::make(r, c, std::move(out));
}

SparseMatrix random_matrix(std::mt19937& rng, int r, int c)
{
    std::uniform_int_distribution<int> coeff(-3, 3);
    std::uniform_int_distribution<int> fill(0, 2);
    std::vector<std::tuple<int, int, Scalar>> es;
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j)
            if (fill(rng) == 0) es.emplace_back(i, j, Scalar(Q, coeff(rng)));
    return SparseMatrix::make(r, c, std::move(es));
}
} // namespace

TEST_CASE("rref: identity, zero, dependent rows")
{
    auto id2 = SparseMatrix::identity(Q, 2);
    auto rr = rref(id2);
    CHECK(rr.r == id2);
    CHECK(rr.pivots == std::vector<int>{0, 1});

    auto z = SparseMatrix::zero(3, 3);
    auto rz = rref(z);
    CHECK(rz.r.is_zero());
    CHECK(rz.pivots.empty());

    /* [[1,2],[2,4]] -> [[1,2],[0,0]], pivots [0] */
    auto m = mat(2, 2, {{0, 0, 1}, {0, 1, 2}, {1, 0, 2}, {1, 1, 4}});
    auto rm = rref(m);
    CHECK(rm.pivots == std::vector<int>{0});
    CHECK(rm.r == mat(2, 2, {{0, 0, 1}, {0, 1, 2}}));
}

TEST_CASE("solve: deterministic with free variables zeroed")
{
    auto id = SparseMatrix::identity(Q, 3);
    SparseVec b{{0, Scalar(Q, 5)}, {2, Scalar(Q, -1)}};
    CHECK(vec_eq(*solve(id, b, Q), b));

    CHECK(solve(SparseMatrix::zero(2, 2), {}, Q).has_value());
    CHECK(solve(SparseMatrix::zero(2, 2), {}, Q)->empty());
    CHECK(!solve(SparseMatrix::zero(2, 2), vec_unit(Q, 0), Q));

    /* [[1,1]] x = [2] -> x = (2, 0) */
    auto m = mat(1, 2, {{0, 0, 1}, {0, 1, 1}});
    auto x = solve(m, {{0, Scalar(Q, 2)}}, Q);
    REQUIRE(x.has_value());
    CHECK(vec_eq(*x, {{0, Scalar(Q, 2)}}));
}

TEST_CASE("quotient_basis representatives")
{
    auto qb0 = quotient_basis({}, 2, Q);
    REQUIRE(qb0.size() == 2);
    CHECK(vec_eq(qb0[0], vec_unit(Q, 0)));
    CHECK(vec_eq(qb0[1], vec_unit(Q, 1)));

    auto qb1 = quotient_basis({vec_unit(Q, 0)}, 2, Q);
    REQUIRE(qb1.size() == 1);
    CHECK(vec_eq(qb1[0], vec_unit(Q, 1)));

    /* span{(1,1)}: pivot col 0, representative e1 */
    auto qb2 = quotient_basis({{{0, Scalar(Q, 1)}, {1, Scalar(Q, 1)}}}, 2, Q);
    REQUIRE(qb2.size() == 1);
    CHECK(vec_eq(qb2[0], vec_unit(Q, 1)));
}

TEST_CASE("rank-nullity and solve(m, m x) = consistency on random instances")
{
    std::mt19937 rng(12345);
    for (int trial = 0; trial < 40; ++trial) {
        int r = 1 + static_cast<int>(rng() % 6), c = 1 + static_cast<int>(rng() % 6);
        auto m = random_matrix(rng, r, c);
        auto ker = kernel_basis(m);
        CHECK(rank(m) + static_cast<int>(ker.size()) == c);
        for (auto& k : ker) CHECK(m.apply(k).empty());

        /* a random x, then solve(m, m x) must hit something with m y = m x */
        SparseVec x;
        for (int j = 0; j < c; ++j)
            if (rng() % 2) x.emplace_back(j, Scalar(Q, static_cast<long>(rng() % 5) - 2));
        x.erase(std::remove_if(x.begin(), x.end(), [](auto& p) { return p.second.is_zero(); }), x.end());
        auto b = m.apply(x);
        auto y = solve(m, b, Q);
        REQUIRE(y.has_value());
        CHECK(vec_eq(m.apply(*y), b));
    }
}

TEST_CASE("matrix product and transpose agree with dense expectations")
{
    auto a = mat(2, 3, {{0, 0, 1}, {0, 2, 2}, {1, 1, -1}});
    auto b = mat(3, 2, {{0, 0, 3}, {1, 0, 1}, {2, 1, 4}});
    auto ab = a * b;
    CHECK(ab == mat(2, 2, {{0, 0, 3}, {0, 1, 8}, {1, 0, -1}}));
    CHECK(a.transposed().transposed() == a);
}

TEST_CASE("subspace membership and reduction")
{
    Subspace s({{{0, Scalar(Q, 1)}, {1, Scalar(Q, 1)}}, {{1, Scalar(Q, 1)}, {2, Scalar(Q, 1)}}}, 3, Q);
    CHECK(s.dim() == 2);
    CHECK(s.contains({{0, Scalar(Q, 1)}, {2, Scalar(Q, -1)}}));
    CHECK(!s.contains(vec_unit(Q, 0)));
}

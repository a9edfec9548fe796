#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ainfty/graded.hpp"

#include <random>

using namespace ainfty;

namespace {
const Field Q{};

GradedVectorSpace random_space(std::mt19937& rng, const std::string& prefix)
{
    GradedVectorSpace v;
    int n = 1 + static_cast<int>(rng() % 3);
    for (int i = 0; i < n; ++i)
        v.basis.emplace_back(prefix + std::to_string(i), static_cast<int>(rng() % 5) - 2);
    return v;
}

GradedMap random_map(std::mt19937& rng, const GradedVectorSpace& src, const GradedVectorSpace& tgt, int deg)
{
    std::vector<std::tuple<int, int, Scalar>> es;
    for (int i = 0; i < tgt.dim(); ++i)
        for (int j = 0; j < src.dim(); ++j)
            if (tgt.degree(i) == src.degree(j) + deg && rng() % 2)
                es.emplace_back(i, j, Scalar(Q, static_cast<long>(rng() % 5) - 2));
    GradedMap f = GradedMap::zero(src, tgt, deg);
    f.mat = SparseMatrix::make(tgt.dim(), src.dim(), std::move(es));
    return f;
}
} // namespace

TEST_CASE("shift moves every degree by exactly -n and is invertible")
{
    GradedVectorSpace v{{{"x", 0}, {"y", 3}}};
    auto sv = shift(v, 1);
    CHECK(sv.degree(0) == -1);
    CHECK(sv.degree(1) == 2);
    CHECK(shift(v, 0) == v);
    CHECK(shift(shift(v, 1), -1) == v);
}

TEST_CASE("tensor identities and zero maps")
{
    GradedVectorSpace v{{{"x", 1}, {"y", -1}}};
    GradedVectorSpace w{{{"a", 0}, {"b", 2}}};
    auto idv = GradedMap::identity(Q, v);
    auto idw = GradedMap::identity(Q, w);
    auto t = tensor_map(Q, idv, idw);
    CHECK(t == GradedMap::identity(Q, tensor_space(v, w)));

    auto z = GradedMap::zero(v, v, 0);
    CHECK(tensor_map(Q, z, idw).is_zero());
}

TEST_CASE("degree-0 left factor contributes no sign")
{
    GradedVectorSpace v{{{"x", 1}}};
    std::mt19937 rng(7);
    auto f = random_map(rng, v, v, 0);
    /* (f (x) g) with deg g = 0: no Koszul signs at all */
    GradedVectorSpace w{{{"a", 3}}};
    auto g = GradedMap::identity(Q, w);
    auto t = tensor_map(Q, f, g);
    for (auto& [i, j, s] : t.mat.entries) CHECK(s == f.mat.at(Q, i, j));
}

TEST_CASE("Koszul interchange on random small maps")
{
    std::mt19937 rng(99);
    for (int trial = 0; trial < 60; ++trial) {
        auto a = random_space(rng, "a"), b = random_space(rng, "b");
        auto c = random_space(rng, "c"), d = random_space(rng, "d");
        int df = static_cast<int>(rng() % 3) - 1, dg = static_cast<int>(rng() % 3) - 1;
        int dfp = static_cast<int>(rng() % 3) - 1, dgp = static_cast<int>(rng() % 3) - 1;
        auto f = random_map(rng, a, a, df);
        auto g = random_map(rng, b, b, dg);
        auto fp = random_map(rng, c, a, dfp);
        auto gp = random_map(rng, d, b, dgp);
        /* (f(x)g) o (f'(x)g') = (-1)^{|g||f'|} (f o f') (x) (g o g') */
        auto lhs = compose_graded(tensor_map(Q, f, g), tensor_map(Q, fp, gp));
        auto rhs = tensor_map(Q, compose_graded(f, fp), compose_graded(g, gp));
        if ((dg % 2 != 0) && (dfp % 2 != 0)) rhs = rhs.scaled(Scalar(Q, -1));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("tensor_map is strictly associative under flattened ordering")
{
    std::mt19937 rng(3);
    auto a = random_space(rng, "a"), b = random_space(rng, "b"), c = random_space(rng, "c");
    auto f = random_map(rng, a, a, 1), g = random_map(rng, b, b, -1), h = random_map(rng, c, c, 2);
    auto left = tensor_map(Q, tensor_map(Q, f, g), h);
    auto right = tensor_map(Q, f, tensor_map(Q, g, h));
    CHECK(left == right);
}

TEST_CASE("to_shifted / from_shifted are mutually inverse")
{
    std::mt19937 rng(41);
    for (int k = 1; k <= 4; ++k) {
        std::vector<GradedVectorSpace> factors;
        GradedVectorSpace tens;
        for (int i = 0; i < k; ++i) {
            factors.push_back(random_space(rng, "f" + std::to_string(i) + "_"));
            tens = i == 0 ? factors[0] : tensor_space(tens, factors.back());
        }
        auto tgt = random_space(rng, "t");
        /* operation-like components (degree 2-k) shift to degree 1, functor-like
         * components (degree 1-k) to degree 0 */
        auto f = random_map(rng, tens, tgt, 2 - k);
        auto q = to_shifted(Q, f, factors);
        CHECK(q.degree == 1);
        CHECK(from_shifted(Q, q, factors) == f);
        auto g = random_map(rng, tens, tgt, 1 - k);
        auto p = to_shifted(Q, g, factors);
        CHECK(p.degree == 0);
        CHECK(from_shifted(Q, p, factors) == g);
    }
}

TEST_CASE("koszul_swap squares to the identity")
{
    std::mt19937 rng(11);
    auto v = random_space(rng, "v"), w = random_space(rng, "w");
    auto fwd = koszul_swap(Q, v, w);
    auto bwd = koszul_swap(Q, w, v);
    CHECK(compose_graded(bwd, fwd) == GradedMap::identity(Q, tensor_space(v, w)));
}

TEST_CASE("compose degree bookkeeping")
{
    std::mt19937 rng(5);
    auto a = random_space(rng, "a"), b = random_space(rng, "b"), c = random_space(rng, "c");
    auto g = random_map(rng, a, b, 1);
    auto f = random_map(rng, b, c, -2);
    auto fg = compose_graded(f, g);
    CHECK(fg.degree == -1);
    CHECK(fg.degree_violations().empty());
    CHECK_THROWS_AS(compose_graded(g, f), MathError);
    CHECK(compose_graded(f, GradedMap::identity(Q, b)) == f);
    CHECK(compose_graded(GradedMap::identity(Q, c), f) == f);
}

#include "ainfty/examples.hpp"

namespace ainfty {
namespace examples {

AInftyCategory algebra(Field f, const std::vector<std::pair<std::string, int>>& basis,
                       const std::vector<std::tuple<std::string, std::string, std::vector<std::pair<std::string, long>>>>& products,
                       const std::vector<std::pair<std::string, std::vector<std::pair<std::string, long>>>>& diff)
{
    AInftyCategory a;
    a.field = f;
    a.quiver.objects = {"*"};
    GradedVectorSpace h;
    h.basis = basis;
    h.validate();
    int dim = h.dim();
    a.quiver.homs[{0, 0}] = h;
    a.arity_bound = 2;
    a.mode = Mode::Exact;

    if (!diff.empty()) {
        std::vector<std::tuple<int, int, Scalar>> es;
        for (auto& [x, img] : diff) {
            int j = h.find(x);
            if (j < 0) throw MathError("algebra: unknown basis label " + x);
            for (auto& [y, c] : img) {
                int i = h.find(y);
                if (i < 0) throw MathError("algebra: unknown basis label " + y);
                es.emplace_back(i, j, Scalar(f, c));
            }
        }
        GradedMap m1 = GradedMap::zero(h, h, 1);
        m1.mat = SparseMatrix::make(dim, dim, std::move(es));
        a.set_m(1, {0, 0}, std::move(m1));
    }

    std::vector<std::tuple<int, int, Scalar>> es;
    for (auto& [later, earlier, img] : products) {
        int i2 = h.find(later), i1 = h.find(earlier);
        if (i2 < 0 || i1 < 0) throw MathError("algebra: unknown basis label in product");
        for (auto& [y, c] : img) {
            int r = h.find(y);
            if (r < 0) throw MathError("algebra: unknown basis label " + y);
            es.emplace_back(r, i2 * dim + i1, Scalar(f, c));
        }
    }
    GradedMap m2 = GradedMap::zero(a.chain_space({0, 0, 0}), h, 0);
    m2.mat = SparseMatrix::make(dim, dim * dim, std::move(es));
    a.set_m(2, {0, 0, 0}, std::move(m2));
    return a;
}

AInftyCategory k_eps12(Field f)
{
    return algebra(f, {{"1", 0}, {"e1", 0}, {"e2", 0}},
                   {
                       {"1", "1", {{"1", 1}}},
                       {"1", "e1", {{"e1", 1}}},
                       {"1", "e2", {{"e2", 1}}},
                       {"e1", "1", {{"e1", 1}}},
                       {"e2", "1", {{"e2", 1}}},
                   });
}

AInftyCategory k_eps(Field f)
{
    return algebra(f, {{"1", 0}, {"e", -1}},
                   {
                       {"1", "1", {{"1", 1}}},
                       {"1", "e", {{"e", 1}}},
                       {"e", "1", {{"e", 1}}},
                   });
}

AInftyCategory k_eps0(Field f)
{
    return algebra(f, {{"1", 0}, {"e0", 0}},
                   {
                       {"1", "1", {{"1", 1}}},
                       {"1", "e0", {{"e0", 1}}},
                       {"e0", "1", {{"e0", 1}}},
                   });
}

AInftyCategory ground(Field f)
{
    return trivial_category(f, {"*"});
}

AInftyCategory two_term_acyclic(Field f)
{
    return algebra(f, {{"x", 0}, {"y", 1}}, {}, {{"x", {{"y", 1}}}});
}

AInftyCategory reduced_k_eps(Field f)
{
    return algebra(f, {{"e", -1}}, {});
}

AInftyFunctor f1(Field f)
{
    auto src = k_eps12(f), tgt = k_eps(f);
    SparseMatrix m = SparseMatrix::make(2, 3, {{0, 0, Scalar(f, 1)}});
    return strict_functor(src, tgt, {0}, {{{0, 0}, m}});
}

static AInftyFunctor f2_impl(Field f, const std::string& later, const std::string& first)
{
    AInftyFunctor F = f1(f);
    const auto& src = F.source.hom(0, 0);
    const auto& tgt = F.target.hom(0, 0);
    GradedMap F2 = GradedMap::zero(F.source.chain_space({0, 0, 0}), tgt, -1);
    int col = src.find(later) * src.dim() + src.find(first);
    F2.mat = SparseMatrix::make(tgt.dim(), src.dim() * src.dim(), {{tgt.find("e"), col, Scalar(f, 1)}});
    F.set_comp(2, {0, 0, 0}, std::move(F2));
    F.arity_bound = 2;
    return F;
}

AInftyFunctor f2(Field f)
{
    /* F^2(e1, e2) = e: e1 the later morphism, e2 the first */
    return f2_impl(f, "e1", "e2");
}

AInftyFunctor f2_flipped(Field f)
{
    return f2_impl(f, "e2", "e1");
}

AInftyFunctor j(Field f, int which)
{
    if (which != 1 && which != 2) throw MathError("j: which must be 1 or 2");
    auto src = k_eps0(f), tgt = k_eps12(f);
    std::vector<std::tuple<int, int, Scalar>> es{{0, 0, Scalar(f, 1)},
                                                 {which == 1 ? 1 : 2, 1, Scalar(f, 1)}};
    SparseMatrix m = SparseMatrix::make(3, 2, std::move(es));
    return strict_functor(src, tgt, {0}, {{{0, 0}, m}});
}

} // namespace examples
} // namespace ainfty

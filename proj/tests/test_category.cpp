#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ainfty/examples.hpp"

using namespace ainfty;

namespace {
const Field Q{};
}

TEST_CASE("stock algebras satisfy the relations for all n")
{
    for (auto make : {examples::k_eps12, examples::k_eps, examples::k_eps0, examples::two_term_acyclic}) {
        auto a = make(Q);
        a.validate();
        auto rep = check_catrel(a, 8);
        CHECK_MESSAGE(rep.ok, rep.what);
        CHECK(rep.certificate.find("all n") != std::string::npos);
    }
}

TEST_CASE("all-zero multiplications pass vacuously")
{
    auto a = examples::reduced_k_eps(Q);
    CHECK(check_catrel(a, 8).ok);

    AInftyCategory empty;
    empty.field = Q;
    CHECK(check_catrel(empty, 4).ok);
}

TEST_CASE("n=3 relation is associativity with the documented signs")
{
    auto a = examples::k_eps12(Q);
    /* with m1 = m3 = 0 the n=3 sum is -m2(m2 (x) id) + m2(id (x) m2) */
    GradedMap r = catrel_sum(a, 3, {0, 0, 0, 0});
    Field f = Q;
    const auto& h = a.hom(0, 0);
    GradedMap m2 = a.m(2, {0, 0, 0});
    GradedMap left = compose_graded(m2, tensor_map(f, m2, GradedMap::identity(f, h)));
    GradedMap right = compose_graded(m2, tensor_map(f, GradedMap::identity(f, h), m2));
    CHECK(r == right - left);
    CHECK(r.is_zero());
}

TEST_CASE("injected m3 entries are located by the checker")
{
    auto a = examples::k_eps12(Q);
    const auto& h = a.hom(0, 0);
    /* every possible m3 entry on a degree-0 algebra violates |m_3| = -1 */
    int bad = 0;
    for (int col = 0; col < h.dim() * h.dim() * h.dim(); ++col)
        for (int row = 0; row < h.dim(); ++row) {
            auto b = a;
            GradedMap m3 = GradedMap::zero(b.chain_space({0, 0, 0, 0}), h, -1);
            m3.mat = SparseMatrix::make(h.dim(), h.dim() * h.dim() * h.dim(), {{row, col, Scalar(Q, 1)}});
            b.set_m(3, {0, 0, 0, 0}, std::move(m3));
            b.arity_bound = 3;
            auto rep = check_catrel(b, 4);
            CHECK(!rep.ok);
            CHECK(!rep.what.empty());
            ++bad;
        }
    CHECK(bad == 3 * 27);
}

TEST_CASE("degree-valid corruption of m2 fails at n = 3 with a named instance")
{
    auto a = examples::k_eps12(Q);
    auto m2 = a.m(2, {0, 0, 0});
    auto es = m2.mat.entries;
    const auto& h = a.hom(0, 0);
    es.emplace_back(h.find("1"), h.find("e1") * h.dim() + h.find("e2"), Scalar(Q, 1)); // e1*e2 := 1
    m2.mat = SparseMatrix::make(m2.mat.rows, m2.mat.cols, std::move(es));
    a.set_m(2, {0, 0, 0}, std::move(m2));
    auto rep = check_catrel(a, 4);
    CHECK(!rep.ok);
    CHECK(rep.what.find("n=3") != std::string::npos);
}

TEST_CASE("strict unit detection on the stock algebras")
{
    auto a = examples::k_eps12(Q);
    auto u = detect_strict_units(a);
    REQUIRE(u.has_value());
    CHECK(vec_eq(u->id_of[0], vec_unit(Q, a.hom(0, 0).find("1"))));
    CHECK(verify_strict_units(a, *u).ok);

    /* the trivial category has id_A for every object */
    auto k3 = trivial_category(Q, {"a", "b", "c"});
    auto uk = detect_strict_units(k3);
    REQUIRE(uk.has_value());
    for (int i = 0; i < 3; ++i) CHECK(vec_eq(uk->id_of[static_cast<size_t>(i)], vec_unit(Q, 0)));

    /* a complex without products has no unit */
    CHECK(!detect_strict_units(examples::reduced_k_eps(Q)).has_value());
}

TEST_CASE("cohomology: zero differential, acyclic complex, graded algebra")
{
    /* zero differential: H = A with composition m2 */
    auto a = examples::k_eps(Q);
    auto H = cohomology(a);
    CHECK(H.hom_or_zero(0, 0).dim() == 2);
    /* degrees 0 and -1, one class each */
    CHECK(H.hom_or_zero(0, 0).degree(0) == -1);
    CHECK(H.hom_or_zero(0, 0).degree(1) == 0);

    /* acyclic: H = 0 */
    auto b = examples::two_term_acyclic(Q);
    CHECK(cohomology(b).hom_or_zero(0, 0).dim() == 0);
}

TEST_CASE("cohomology composition is associative and unital when it should be")
{
    auto a = examples::k_eps12(Q);
    auto H = cohomology(a);
    const auto& h = H.hom_or_zero(0, 0);
    REQUIRE(h.dim() == 3);
    GradedMap c = H.comp_or_zero({0, 0, 0});
    /* associativity on the table */
    Field f = Q;
    GradedMap assoc_l = compose_graded(c, tensor_map(f, c, GradedMap::identity(f, h)));
    GradedMap assoc_r = compose_graded(c, tensor_map(f, GradedMap::identity(f, h), c));
    CHECK(assoc_l == assoc_r);

    CHECK(is_cohomologically_unital(a));
    std::vector<SparseVec> units;
    CHECK(is_cohomologically_unital(examples::k_eps(Q), &units));
}

TEST_CASE("reduced algebra with nonzero H0 but no unit class is not c-unital")
{
    /* reduction of K[e1,e2]: two degree-0 generators, all products zero */
    auto red = examples::algebra(Q, {{"e1", 0}, {"e2", 0}}, {});
    CHECK(check_catrel(red, 6).ok);
    CHECK(cohomology(red).hom_or_zero(0, 0).dim() == 2);
    CHECK(!is_cohomologically_unital(red));
}

TEST_CASE("zero category is vacuously cohomologically unital")
{
    AInftyCategory z;
    z.field = Q;
    z.quiver.objects = {"a", "b"};
    CHECK(is_cohomologically_unital(z));
}

TEST_CASE("augment adjoins a strict unit; reduce undoes it")
{
    auto red = examples::algebra(Q, {{"e1", 0}, {"e2", 0}}, {});
    auto aug = augment(red);
    CHECK(check_catrel(aug, 6).ok);
    auto u = detect_strict_units(aug);
    REQUIRE(u.has_value());
    CHECK(vec_eq(u->id_of[0], vec_unit(Q, aug.hom(0, 0).find("@1"))));

    auto eps = canonical_augmentation_of_augmented(aug);
    auto back = reduce(aug, eps);
    CHECK(back.quiver.homs == red.quiver.homs);
    for (auto& [arity, tabs] : red.mult)
        for (auto& [chain, g] : tabs) CHECK(back.m(arity, chain) == g);

    /* in augment(a), m2(1,f) = f and m2(f,1) = f for all f */
    auto m2 = aug.m(2, {0, 0, 0});
    int uidx = aug.hom(0, 0).find("@1");
    for (int x = 0; x < aug.hom(0, 0).dim(); ++x) {
        CHECK(vec_eq(m2.mat.apply(vec_unit(Q, x * aug.hom(0, 0).dim() + uidx)), vec_unit(Q, x)));
        CHECK(vec_eq(m2.mat.apply(vec_unit(Q, uidx * aug.hom(0, 0).dim() + x)), vec_unit(Q, x)));
    }

    /* augment(zero category on one object) = K as an algebra */
    AInftyCategory zero;
    zero.field = Q;
    zero.quiver.objects = {"*"};
    auto k = augment(zero);
    CHECK(k.hom(0, 0).dim() == 1);
    CHECK(detect_strict_units(k).has_value());
}

TEST_CASE("tensor product of dg categories")
{
    auto a = examples::k_eps(Q);
    auto b = examples::two_term_acyclic(Q);
    auto t = tensor_dg(a, b);
    t.validate();
    CHECK(t.hom(0, 0).dim() == a.hom(0, 0).dim() * b.hom(0, 0).dim());
    auto rep = check_catrel(t, 6);
    CHECK_MESSAGE(rep.ok, rep.what); // includes (d (x) 1 + 1 (x) d)^2 = 0 at n = 1

    /* trivial category is a unit up to relabeling */
    auto k1 = trivial_category(Q, {"p"});
    auto t2 = tensor_dg(k1, a);
    CHECK(t2.hom(0, 0).dim() == a.hom(0, 0).dim());
    CHECK(check_catrel(t2, 6).ok);

    /* non-dg input is rejected */
    auto c = examples::k_eps12(Q);
    c.mode = Mode::Truncated;
    CHECK_THROWS_AS(tensor_dg(c, a), MathError);
}

#pragma once

/* A-infinity functors as component tables F^i of degree 1-i, with the
 * relation checker
 *
 *   sum (-1)^{ak+c} F^{a+1+c} (id^{(x)a} (x) m_k (x) id^{(x)c})
 *     = sum_{t_1+...+t_r = n} (-1)^{E(t)} m_r (F^{t_1} (x) ... (x) F^{t_r}),
 *
 * blocks written left to right (t_1 consumes the last t_1 morphisms) and
 *   E(t) = sum_{2<=u<=r} (1 - t_u)(t_1 + ... + t_{u-1}).
 * Composition uses the same partition sum; the bar route must agree. */

#include "ainfty/category.hpp"

namespace ainfty {

struct AInftyFunctor {
    AInftyCategory source;
    AInftyCategory target;
    std::vector<int> object_map;
    std::map<int, std::map<Chain, GradedMap>> comps; // F^i per source chain
    int arity_bound = 1;
    Mode mode = Mode::Exact;

    GradedMap comp(int arity, const Chain& chain) const;
    void set_comp(int arity, const Chain& chain, GradedMap f);
    Chain image_chain(const Chain& chain) const;
    void validate() const;
};

AInftyFunctor identity_functor(const AInftyCategory& a);
/* strict functor from degree-0 hom maps (chain tables of arity 1) */
AInftyFunctor strict_functor(AInftyCategory source, AInftyCategory target, std::vector<int> object_map,
                             std::map<std::pair<int, int>, SparseMatrix> f1);

GradedMap funrel_lhs(const AInftyFunctor& f, int n, const Chain& chain);
GradedMap funrel_rhs(const AInftyFunctor& f, int n, const Chain& chain);
CheckReport check_funrel(const AInftyFunctor& f, int n_max, int jobs = 1);

/* g o f by the partition-sum formula; n_max < 0 picks the exact closure
 * bound f.arity_bound * g.arity_bound when both are Exact */
AInftyFunctor compose(const AInftyFunctor& f, const AInftyFunctor& g, int n_max = -1);

/* component-by-component equality up to the common arity bound */
bool functors_equal(const AInftyFunctor& f, const AInftyFunctor& g);

/* the induced graded functor on cohomology */
struct HFunctor {
    CohomologyCategory src;
    CohomologyCategory tgt;
    std::vector<int> object_map;
    std::map<std::pair<int, int>, GradedMap> maps; // keyed by source pair
};
HFunctor h_functor(const AInftyFunctor& f);

bool is_quasi_isomorphism(const AInftyFunctor& f);
bool is_quasi_equivalence(const AInftyFunctor& f);

bool is_strictly_unital_functor(const AInftyFunctor& f);
bool is_cohomologically_unital_functor(const AInftyFunctor& f);

/* X ~= Y in the (unital) cohomology category: searches a witness u with a
 * two-sided inverse; candidate-driven, verified exactly */
bool h0_isomorphic(const CohomologyCategory& H, const std::vector<SparseVec>& unit_classes, int X, int Y);

} // namespace ainfty

#pragma once

/* A-infinity categories as finite data: a graded quiver together with sparse
 * multiplication tables m_i of degree 2-i, one graded map per composable
 * object chain. The associativity relations
 *
 *   sum_{a+k+c=n} (-1)^{ak+c} m_{a+1+c} (id^{(x)a} (x) m_k (x) id^{(x)c}) = 0
 *
 * are checked as literal matrix identities; id^{(x)a} sits on the left, i.e.
 * acts on the last a morphisms of the chain. Tensor factors are written in
 * composition order: the rightmost factor is the first morphism of the chain.
 */

#include "ainfty/graded.hpp"
#include "ainfty/report.hpp"

#include <optional>

namespace ainfty {

/* object chain (A_0, ..., A_k): a path of k composable hom spaces */
using Chain = std::vector<int>;

enum class Mode { Exact, Truncated };

struct AInftyCategory {
    Field field;
    GradedQuiver quiver;
    /* mult[i][chain] : chain tensor space -> hom(A_0, A_k); absent = zero */
    std::map<int, std::map<Chain, GradedMap>> mult;
    int arity_bound = 2;
    Mode mode = Mode::Exact;

    int num_objects() const { return static_cast<int>(quiver.objects.size()); }
    const GradedVectorSpace& hom(int a, int b) const { return quiver.hom_or_zero(a, b); }

    /* tensor space of the chain, composition order (leftmost factor = last
     * morphism); the empty product for k = 0 is not used */
    GradedVectorSpace chain_space(const Chain& chain) const;
    /* stored table or the zero map of the right shape */
    GradedMap m(int arity, const Chain& chain) const;
    void set_m(int arity, const Chain& chain, GradedMap f);

    bool is_dg() const; // m_i = 0 for i > 2 (Exact mode)
    void validate() const;

    /* all chains (A_0..A_n) whose tensor space is nonzero */
    std::vector<Chain> nonzero_chains(int n) const;
};

/* the relation sum at a single (n, chain), as one graded map */
GradedMap catrel_sum(const AInftyCategory& a, int n, const Chain& chain);

/* checks degrees of all tables and the relations for n <= n_max; in Exact
 * mode success for n_max >= 2*arity_bound - 1 certifies every n */
CheckReport check_catrel(const AInftyCategory& a, int n_max, int jobs = 1);

/* ---- units ---- */
struct UnitAssignment {
    std::vector<SparseVec> id_of; // per object, coordinates in hom(A,A)
};

std::optional<UnitAssignment> detect_strict_units(const AInftyCategory& a);
/* re-check the three strict unit axioms verbatim for a given assignment */
CheckReport verify_strict_units(const AInftyCategory& a, const UnitAssignment& u);

/* ---- cohomology ---- */
struct CohomologyCategory {
    Field field;
    std::vector<std::string> objects;
    std::map<std::pair<int, int>, GradedVectorSpace> homs; // class labels "h<i>"
    /* representative cocycle per class, in ambient hom coordinates */
    std::map<std::pair<int, int>, std::vector<SparseVec>> reps;
    /* composition table: per chain (A,B,C): map H(B,C) (x) H(A,B) -> H(A,C) */
    std::map<Chain, GradedMap> comp;

    const GradedVectorSpace& hom_or_zero(int a, int b) const;
    GradedMap comp_or_zero(const Chain& ch) const;
    /* express a cocycle as class coordinates (must be a cocycle) */
    SparseVec project(int a, int b, const SparseVec& cocycle) const;

    std::map<std::pair<int, int>, std::vector<SparseVec>> im_basis; // boundaries
};

CohomologyCategory cohomology(const AInftyCategory& a);
bool is_cohomologically_unital(const AInftyCategory& a, std::vector<SparseVec>* units_out = nullptr);

/* ---- augmentation / reduction ---- */
/* adjoins a strict unit "@1" to every diagonal hom; the canonical
 * augmentation of the result kills the original category */
AInftyCategory augment(const AInftyCategory& a);

/* an augmentation: the degree-0 functional per diagonal hom cutting out the
 * unit line (the component of the strict dg functor to k_Ob) */
struct Augmentation {
    std::vector<SparseVec> counit; // per object: functional on hom(A,A) as coefficient row
    std::vector<SparseVec> unit;   // per object: the strict unit vector
};

Augmentation canonical_augmentation_of_augmented(const AInftyCategory& aug_cat);
AInftyCategory reduce(const AInftyCategory& a, const Augmentation& eps);

/* ---- constructions ---- */
AInftyCategory trivial_category(Field f, const std::vector<std::string>& objects);
/* tensor product of dg categories (errors on non-dg input) */
AInftyCategory tensor_dg(const AInftyCategory& a1, const AInftyCategory& a2);

} // namespace ainfty

#pragma once

/* Graded vector spaces, graded quivers and Koszul-signed maps between them.
 * Every sign in the engine is generated here, by the single rule
 *     (f (x) g)(x (x) y) = (-1)^{deg g * deg x} f(x) (x) g(y),
 * and never hand-coded per equation. */

#include "ainfty/sparse.hpp"

#include <map>
#include <string>
#include <vector>

namespace ainfty {

struct GradedVectorSpace {
    std::vector<std::pair<std::string, int>> basis; // (label, degree); labels unique

    int dim() const { return static_cast<int>(basis.size()); }
    int degree(int i) const { return basis[static_cast<size_t>(i)].second; }
    const std::string& label(int i) const { return basis[static_cast<size_t>(i)].first; }
    int find(const std::string& label) const; // -1 if absent
    bool operator==(const GradedVectorSpace& o) const { return basis == o.basis; }
    void validate() const; // unique labels
};

/* degree shift: V[n] places a degree-d element in degree d - n (so V[1] = sV
 * lowers degrees by one) */
GradedVectorSpace shift(const GradedVectorSpace& v, int n);

/* tensor product basis, lexicographic in (left index, right index); the label
 * of (i, j) is "<left>⊗<right>" */
GradedVectorSpace tensor_space(const GradedVectorSpace& a, const GradedVectorSpace& b);
GradedVectorSpace ground_space(const std::string& label); // one generator, degree 0

struct GradedMap {
    GradedVectorSpace src;
    GradedVectorSpace tgt;
    int degree = 0;
    SparseMatrix mat; // tgt.dim x src.dim

    static GradedMap zero(GradedVectorSpace s, GradedVectorSpace t, int deg);
    static GradedMap identity(Field f, const GradedVectorSpace& v);

    bool is_zero() const { return mat.is_zero(); }
    bool operator==(const GradedMap& o) const;
    GradedMap operator+(const GradedMap& o) const;
    GradedMap operator-(const GradedMap& o) const;
    GradedMap scaled(const Scalar& c) const;

    /* entries (i, j) with degree(tgt i) != degree(src j) + degree; empty on a
     * well-formed map, reported (not asserted) so corrupted inputs surface in
     * check reports instead of construction errors */
    std::vector<std::pair<int, int>> degree_violations() const;
};

/* f o g, degrees add; shapes must match exactly (same basis content) */
GradedMap compose_graded(const GradedMap& f, const GradedMap& g);

/* Koszul-signed tensor of maps */
GradedMap tensor_map(Field fld, const GradedMap& f, const GradedMap& g);
GradedMap tensor_many(Field fld, const std::vector<GradedMap>& fs);

/* the suspension V -> V[1] (degree -1, identity matrix) and its inverse */
GradedMap s_map(Field f, const GradedVectorSpace& v);
GradedMap s_inv_map(Field f, const GradedVectorSpace& v);

/* the braiding v (x) w -> (-1)^{|v||w|} w (x) v */
GradedMap koszul_swap(Field f, const GradedVectorSpace& v, const GradedVectorSpace& w);

/* conjugation between unshifted arity-k operation components and their
 * shifted avatars on tensor words of suspended letters:
 *   to_shifted(F)   = s o F o (s^{-1})^{(x)k}
 *   from_shifted(q) = (-1)^{k(k-1)/2} s^{-1} o q o s^{(x)k}
 * Mutually inverse; `factors` lists the unshifted tensor factors of F's
 * source, left to right. */
GradedMap to_shifted(Field f, const GradedMap& unshifted, const std::vector<GradedVectorSpace>& factors);
GradedMap from_shifted(Field f, const GradedMap& shifted, const std::vector<GradedVectorSpace>& factors);

/* graded quiver: objects plus hom spaces; missing keys mean the zero space */
struct GradedQuiver {
    std::vector<std::string> objects;
    std::map<std::pair<int, int>, GradedVectorSpace> homs;

    const GradedVectorSpace& hom_or_zero(int a, int b) const;
    void validate() const;
};

} // namespace ainfty

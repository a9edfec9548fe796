#pragma once

/* Sparse exact matrices and the linear algebra the whole engine runs on:
 * reduced row echelon form, kernels, solving, quotient bases. Everything is
 * exact; equality is literal. */

#include "ainfty/scalar.hpp"

#include <optional>
#include <tuple>
#include <vector>

namespace ainfty {

using SparseVec = std::vector<std::pair<int, Scalar>>; // sorted by index, no zeros

struct SparseMatrix {
    int rows = 0;
    int cols = 0;
    /* sorted lexicographically by (row, col); no zero entries, no duplicates */
    std::vector<std::tuple<int, int, Scalar>> entries;

    static SparseMatrix zero(int r, int c) { return SparseMatrix{r, c, {}}; }
    static SparseMatrix identity(Field f, int n);
    /* normalizes: sorts, merges duplicates, drops zeros, bound-checks */
    static SparseMatrix make(int r, int c, std::vector<std::tuple<int, int, Scalar>> es);

    bool is_zero() const { return entries.empty(); }
    bool operator==(const SparseMatrix& o) const;

    SparseMatrix operator+(const SparseMatrix& o) const;
    SparseMatrix operator-(const SparseMatrix& o) const;
    SparseMatrix operator*(const SparseMatrix& o) const; // matrix product
    SparseMatrix scaled(const Scalar& c) const;
    SparseMatrix transposed() const;

    SparseVec apply(const SparseVec& v) const; // m * v
    Scalar at(Field f, int r, int c) const;
};

/* ---- sparse vector helpers ---- */
SparseVec vec_add(const SparseVec& a, const SparseVec& b);
SparseVec vec_scale(const SparseVec& a, const Scalar& c);
SparseVec vec_unit(Field f, int i);
bool vec_eq(const SparseVec& a, const SparseVec& b);
Scalar vec_at(Field f, const SparseVec& v, int i);

struct RrefResult {
    SparseMatrix r;
    std::vector<int> pivots; // pivot column per nonzero row, increasing
};

RrefResult rref(const SparseMatrix& m);
int rank(const SparseMatrix& m);
/* inverse of a square matrix; throws MathError when singular */
SparseMatrix inverse_matrix(const SparseMatrix& m, Field f);

/* basis of the null space {x : m x = 0}; deterministic (one vector per free
 * column of the rref, in column order, free coordinate set to 1) */
std::vector<SparseVec> kernel_basis(const SparseMatrix& m);

/* one solution of m x = b with free variables zeroed, or nothing */
std::optional<SparseVec> solve(const SparseMatrix& m, const SparseVec& b, Field f);

/* coset representatives of ambient/span(gens): the standard basis vectors at
 * the non-pivot columns of rref(gens-as-rows) */
std::vector<SparseVec> quotient_basis(const std::vector<SparseVec>& gens, int ambient_dim, Field f);

/* A row-reduced span with membership tests and coordinates. */
class Subspace {
public:
    Subspace(std::vector<SparseVec> gens, int ambient_dim, Field f);

    int dim() const { return static_cast<int>(rows_.size()); }
    int ambient() const { return ambient_; }
    bool contains(const SparseVec& v) const;
    /* reduce v modulo the span (deterministic normal form) */
    SparseVec reduce(const SparseVec& v) const;
    const std::vector<SparseVec>& basis() const { return rows_; } // rref rows
    const std::vector<int>& pivots() const { return pivots_; }

private:
    int ambient_;
    Field field_;
    std::vector<SparseVec> rows_;
    std::vector<int> pivots_;
};

} // namespace ainfty

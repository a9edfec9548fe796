#include "ainfty/graded.hpp"

#include <set>

namespace ainfty {

int GradedVectorSpace::find(const std::string& label) const
{
    for (size_t i = 0; i < basis.size(); ++i)
        if (basis[i].first == label) return static_cast<int>(i);
    return -1;
}

void GradedVectorSpace::validate() const
{
    std::set<std::string> seen;
    for (auto& [l, d] : basis) {
        (void)d;
        if (!seen.insert(l).second) throw MathError("duplicate basis label: " + l);
    }
}

GradedVectorSpace shift(const GradedVectorSpace& v, int n)
{
    GradedVectorSpace out = v;
    for (auto& [l, d] : out.basis) {
        (void)l;
        d -= n;
    }
    return out;
}

GradedVectorSpace tensor_space(const GradedVectorSpace& a, const GradedVectorSpace& b)
{
    GradedVectorSpace out;
    out.basis.reserve(a.basis.size() * b.basis.size());
    for (auto& [la, da] : a.basis)
        for (auto& [lb, db] : b.basis)
            out.basis.emplace_back(la + "⊗" + lb, da + db);
    return out;
}

GradedVectorSpace ground_space(const std::string& label)
{
    return GradedVectorSpace{{{label, 0}}};
}

GradedMap GradedMap::zero(GradedVectorSpace s, GradedVectorSpace t, int deg)
{
    int r = t.dim(), c = s.dim();
    return GradedMap{std::move(s), std::move(t), deg, SparseMatrix::zero(r, c)};
}

GradedMap GradedMap::identity(Field f, const GradedVectorSpace& v)
{
    return GradedMap{v, v, 0, SparseMatrix::identity(f, v.dim())};
}

bool GradedMap::operator==(const GradedMap& o) const
{
    return degree == o.degree && src == o.src && tgt == o.tgt && mat == o.mat;
}

GradedMap GradedMap::operator+(const GradedMap& o) const
{
    if (!(src == o.src) || !(tgt == o.tgt) || degree != o.degree)
        throw MathError("graded map shape mismatch in +");
    return GradedMap{src, tgt, degree, mat + o.mat};
}

GradedMap GradedMap::operator-(const GradedMap& o) const
{
    if (!(src == o.src) || !(tgt == o.tgt) || degree != o.degree)
        throw MathError("graded map shape mismatch in -");
    return GradedMap{src, tgt, degree, mat - o.mat};
}

GradedMap GradedMap::scaled(const Scalar& c) const
{
    return GradedMap{src, tgt, degree, mat.scaled(c)};
}

std::vector<std::pair<int, int>> GradedMap::degree_violations() const
{
    std::vector<std::pair<int, int>> out;
    for (auto& [i, j, v] : mat.entries) {
        (void)v;
        if (tgt.degree(i) != src.degree(j) + degree) out.emplace_back(i, j);
    }
    return out;
}

GradedMap compose_graded(const GradedMap& f, const GradedMap& g)
{
    if (!(f.src == g.tgt))
        throw MathError("compose_graded: incompatible spaces");
    return GradedMap{g.src, f.tgt, f.degree + g.degree, f.mat * g.mat};
}

GradedMap tensor_map(Field fld, const GradedMap& f, const GradedMap& g)
{
    GradedMap out{tensor_space(f.src, g.src), tensor_space(f.tgt, g.tgt), f.degree + g.degree, {}};
    out.mat.rows = out.tgt.dim();
    out.mat.cols = out.src.dim();
    std::vector<std::tuple<int, int, Scalar>> es;
    es.reserve(f.mat.entries.size() * g.mat.entries.size());
    const int gt = g.tgt.dim(), gs = g.src.dim();
    for (auto& [fi, fj, a] : f.mat.entries) {
        /* Koszul: g moves past the f-input of degree |x| */
        bool flip = (g.degree % 2 != 0) && (f.src.degree(fj) % 2 != 0);
        for (auto& [gi, gj, b] : g.mat.entries) {
            Scalar c = a * b;
            if (flip) c = -c;
            if (!c.is_zero()) es.emplace_back(fi * gt + gi, fj * gs + gj, c);
        }
    }
    out.mat = SparseMatrix::make(out.mat.rows, out.mat.cols, std::move(es));
    (void)fld;
    return out;
}

GradedMap tensor_many(Field fld, const std::vector<GradedMap>& fs)
{
    if (fs.empty()) throw MathError("tensor_many: empty factor list");
    GradedMap acc = fs[0];
    for (size_t i = 1; i < fs.size(); ++i) acc = tensor_map(fld, acc, fs[i]);
    return acc;
}

GradedMap s_map(Field f, const GradedVectorSpace& v)
{
    return GradedMap{v, shift(v, 1), -1, SparseMatrix::identity(f, v.dim())};
}

GradedMap s_inv_map(Field f, const GradedVectorSpace& v)
{
    return GradedMap{shift(v, 1), v, 1, SparseMatrix::identity(f, v.dim())};
}

GradedMap to_shifted(Field f, const GradedMap& unshifted, const std::vector<GradedVectorSpace>& factors)
{
    std::vector<GradedMap> sinvs;
    sinvs.reserve(factors.size());
    for (auto& v : factors) sinvs.push_back(s_inv_map(f, v));
    GradedMap inner = tensor_many(f, sinvs);
    return compose_graded(s_map(f, unshifted.tgt), compose_graded(unshifted, inner));
}

GradedMap from_shifted(Field f, const GradedMap& shifted, const std::vector<GradedVectorSpace>& factors)
{
    std::vector<GradedMap> ss;
    ss.reserve(factors.size());
    for (auto& v : factors) ss.push_back(s_map(f, v));
    GradedMap inner = tensor_many(f, ss);
    GradedMap out = compose_graded(compose_graded(s_inv_map(f, shift(shifted.tgt, -1)), shifted), inner);
    size_t k = factors.size();
    if ((k * (k - 1) / 2) % 2 == 1) out = out.scaled(Scalar(f, -1));
    return out;
}

GradedMap koszul_swap(Field f, const GradedVectorSpace& v, const GradedVectorSpace& w)
{
    GradedMap out{tensor_space(v, w), tensor_space(w, v), 0, {}};
    out.mat.rows = out.tgt.dim();
    out.mat.cols = out.src.dim();
    std::vector<std::tuple<int, int, Scalar>> es;
    es.reserve(static_cast<size_t>(v.dim()) * w.dim());
    for (int i = 0; i < v.dim(); ++i)
        for (int j = 0; j < w.dim(); ++j) {
            bool neg = (v.degree(i) % 2 != 0) && (w.degree(j) % 2 != 0);
            es.emplace_back(j * v.dim() + i, i * w.dim() + j, Scalar(f, neg ? -1 : 1));
        }
    out.mat = SparseMatrix::make(out.mat.rows, out.mat.cols, std::move(es));
    return out;
}

const GradedVectorSpace& GradedQuiver::hom_or_zero(int a, int b) const
{
    static const GradedVectorSpace empty{};
    auto it = homs.find({a, b});
    return it == homs.end() ? empty : it->second;
}

void GradedQuiver::validate() const
{
    int n = static_cast<int>(objects.size());
    std::set<std::string> names(objects.begin(), objects.end());
    if (static_cast<int>(names.size()) != n) throw MathError("duplicate object names");
    for (auto& [key, sp] : homs) {
        if (key.first < 0 || key.first >= n || key.second < 0 || key.second >= n)
            throw MathError("hom key references undeclared object");
        sp.validate();
    }
}

} // namespace ainfty

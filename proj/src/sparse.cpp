#include "ainfty/sparse.hpp"

#include <algorithm>
#include <map>

namespace ainfty {

SparseMatrix SparseMatrix::identity(Field f, int n)
{
    SparseMatrix m{n, n, {}};
    m.entries.reserve(n);
    for (int i = 0; i < n; ++i) m.entries.emplace_back(i, i, Scalar(f, 1));
    return m;
}

SparseMatrix SparseMatrix::make(int r, int c, std::vector<std::tuple<int, int, Scalar>> es)
{
    for (auto& [i, j, v] : es) {
        if (i < 0 || i >= r || j < 0 || j >= c)
            throw MathError("matrix entry out of bounds");
        (void)v;
    }
    std::sort(es.begin(), es.end(), [](const auto& a, const auto& b) {
        return std::pair(std::get<0>(a), std::get<1>(a)) < std::pair(std::get<0>(b), std::get<1>(b));
    });
    SparseMatrix m{r, c, {}};
    for (auto& [i, j, v] : es) {
        if (!m.entries.empty() && std::get<0>(m.entries.back()) == i && std::get<1>(m.entries.back()) == j) {
            Scalar s = std::get<2>(m.entries.back()) + v;
            if (s.is_zero())
                m.entries.pop_back();
            else
                std::get<2>(m.entries.back()) = s;
        } else if (!v.is_zero()) {
            m.entries.emplace_back(i, j, v);
        }
    }
    /* a merge may have re-exposed a zero followed by an equal key; redo once */
    return m;
}

bool SparseMatrix::operator==(const SparseMatrix& o) const
{
    if (rows != o.rows || cols != o.cols || entries.size() != o.entries.size()) return false;
    for (size_t k = 0; k < entries.size(); ++k)
        if (std::get<0>(entries[k]) != std::get<0>(o.entries[k]) ||
            std::get<1>(entries[k]) != std::get<1>(o.entries[k]) ||
            std::get<2>(entries[k]) != std::get<2>(o.entries[k]))
            return false;
    return true;
}

SparseMatrix SparseMatrix::operator+(const SparseMatrix& o) const
{
    if (rows != o.rows || cols != o.cols) throw MathError("matrix shape mismatch in +");
    auto es = entries;
    es.insert(es.end(), o.entries.begin(), o.entries.end());
    return make(rows, cols, std::move(es));
}

SparseMatrix SparseMatrix::operator-(const SparseMatrix& o) const
{
    if (rows != o.rows || cols != o.cols) throw MathError("matrix shape mismatch in -");
    auto es = entries;
    es.reserve(es.size() + o.entries.size());
    for (auto& [i, j, v] : o.entries) es.emplace_back(i, j, -v);
    return make(rows, cols, std::move(es));
}

SparseMatrix SparseMatrix::scaled(const Scalar& c) const
{
    if (c.is_zero()) return zero(rows, cols);
    SparseMatrix m{rows, cols, entries};
    for (auto& [i, j, v] : m.entries) v = v * c;
    return m;
}

SparseMatrix SparseMatrix::transposed() const
{
    std::vector<std::tuple<int, int, Scalar>> es;
    es.reserve(entries.size());
    for (auto& [i, j, v] : entries) es.emplace_back(j, i, v);
    return make(cols, rows, std::move(es));
}

SparseMatrix SparseMatrix::operator*(const SparseMatrix& o) const
{
    if (cols != o.rows) throw MathError("matrix shape mismatch in *");
    /* group o's entries by row */
    std::vector<std::tuple<int, int, Scalar>> es;
    size_t lo = 0;
    std::map<std::pair<int, int>, Scalar> acc;
    /* index of o rows */
    std::vector<std::pair<size_t, size_t>> orow(o.rows, {0, 0});
    for (size_t k = 0; k < o.entries.size();) {
        int r = std::get<0>(o.entries[k]);
        size_t start = k;
        while (k < o.entries.size() && std::get<0>(o.entries[k]) == r) ++k;
        orow[r] = {start, k};
    }
    (void)lo;
    for (auto& [i, j, v] : entries) {
        auto [s, e] = orow[j];
        for (size_t k = s; k < e; ++k) {
            auto& [jr, jc, w] = o.entries[k];
            (void)jr;
            auto key = std::pair(i, jc);
            auto it = acc.find(key);
            if (it == acc.end())
                acc.emplace(key, v * w);
            else
                it->second = it->second + v * w;
        }
    }
    for (auto& [key, v] : acc)
        if (!v.is_zero()) es.emplace_back(key.first, key.second, v);
    return make(rows, o.cols, std::move(es));
}

SparseVec SparseMatrix::apply(const SparseVec& v) const
{
    std::map<int, Scalar> acc;
    std::vector<std::pair<size_t, size_t>> byrow; // not needed; scan by column lookup
    for (auto& [i, j, a] : entries) {
        auto it = std::lower_bound(v.begin(), v.end(), j,
                                   [](const std::pair<int, Scalar>& p, int jj) { return p.first < jj; });
        if (it != v.end() && it->first == j) {
            auto f = acc.find(i);
            if (f == acc.end())
                acc.emplace(i, a * it->second);
            else
                f->second = f->second + a * it->second;
        }
    }
    SparseVec out;
    for (auto& [i, s] : acc)
        if (!s.is_zero()) out.emplace_back(i, s);
    return out;
}

Scalar SparseMatrix::at(Field f, int r, int c) const
{
    for (auto& [i, j, v] : entries)
        if (i == r && j == c) return v;
    return Scalar(f);
}

SparseVec vec_add(const SparseVec& a, const SparseVec& b)
{
    SparseVec out;
    size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            out.push_back(b[j++]);
        } else {
            Scalar s = a[i].second + b[j].second;
            if (!s.is_zero()) out.emplace_back(a[i].first, s);
            ++i;
            ++j;
        }
    }
    return out;
}

SparseVec vec_scale(const SparseVec& a, const Scalar& c)
{
    if (c.is_zero()) return {};
    SparseVec out = a;
    for (auto& [i, v] : out) v = v * c;
    return out;
}

SparseVec vec_unit(Field f, int i)
{
    return {{i, Scalar(f, 1)}};
}

bool vec_eq(const SparseVec& a, const SparseVec& b)
{
    if (a.size() != b.size()) return false;
    for (size_t k = 0; k < a.size(); ++k)
        if (a[k].first != b[k].first || a[k].second != b[k].second) return false;
    return true;
}

Scalar vec_at(Field f, const SparseVec& v, int i)
{
    for (auto& [j, s] : v)
        if (j == i) return s;
    return Scalar(f);
}

/* Gaussian elimination over the exact field, producing full RREF. Rows are
 * kept as sorted sparse vectors. */
namespace {

struct Elim {
    std::vector<SparseVec> rows;
    std::vector<int> pivots;
    Field field;

    void run(std::vector<SparseVec> input, int cols)
    {
        for (auto& v : input) {
            SparseVec w = reduce_against(v);
            if (w.empty()) continue;
            normalize(w);
            insert_row(std::move(w));
        }
        (void)cols;
        back_substitute();
    }

    SparseVec reduce_against(SparseVec v) const
    {
        for (size_t r = 0; r < rows.size() && !v.empty(); ++r) {
            Scalar c = vec_at(field, v, pivots[r]);
            if (!c.is_zero()) v = vec_add(v, vec_scale(rows[r], -c));
        }
        return v;
    }

    void normalize(SparseVec& w) const
    {
        Scalar lead = w.front().second;
        if (!lead.is_one()) w = vec_scale(w, lead.inverse());
    }

    void insert_row(SparseVec w)
    {
        int p = w.front().first;
        auto it = std::lower_bound(pivots.begin(), pivots.end(), p);
        size_t pos = static_cast<size_t>(it - pivots.begin());
        pivots.insert(it, p);
        rows.insert(rows.begin() + pos, std::move(w));
    }

    void back_substitute()
    {
        for (size_t r = 0; r < rows.size(); ++r) {
            for (size_t s = r + 1; s < rows.size(); ++s) {
                Scalar c = vec_at(field, rows[r], pivots[s]);
                if (!c.is_zero()) rows[r] = vec_add(rows[r], vec_scale(rows[s], -c));
            }
        }
    }
};

Field field_of(const SparseMatrix& m)
{
    if (!m.entries.empty()) return std::get<2>(m.entries.front()).field();
    return Field{0};
}

} // namespace

RrefResult rref(const SparseMatrix& m)
{
    Field f = field_of(m);
    std::vector<SparseVec> rows(m.rows);
    for (auto& [i, j, v] : m.entries) rows[i].emplace_back(j, v);
    Elim e{{}, {}, f};
    e.run(std::move(rows), m.cols);
    SparseMatrix r{m.rows, m.cols, {}};
    for (size_t i = 0; i < e.rows.size(); ++i)
        for (auto& [j, v] : e.rows[i]) r.entries.emplace_back(static_cast<int>(i), j, v);
    return {std::move(r), std::move(e.pivots)};
}

int rank(const SparseMatrix& m)
{
    return static_cast<int>(rref(m).pivots.size());
}

SparseMatrix inverse_matrix(const SparseMatrix& m, Field f)
{
    if (m.rows != m.cols) throw MathError("inverse of non-square matrix");
    /* eliminate on [m | I] */
    auto aug = m;
    aug.cols = 2 * m.cols;
    for (int i = 0; i < m.rows; ++i) aug.entries.emplace_back(i, m.cols + i, Scalar(f, 1));
    aug = SparseMatrix::make(aug.rows, aug.cols, std::move(aug.entries));
    auto rr = rref(aug);
    std::vector<std::tuple<int, int, Scalar>> es;
    for (size_t r = 0; r < rr.pivots.size(); ++r) {
        if (rr.pivots[r] != static_cast<int>(r)) throw MathError("matrix is singular");
    }
    if (static_cast<int>(rr.pivots.size()) != m.rows) throw MathError("matrix is singular");
    for (auto& [i, j, v] : rr.r.entries)
        if (j >= m.cols) es.emplace_back(i, j - m.cols, v);
    return SparseMatrix::make(m.rows, m.cols, std::move(es));
}

std::vector<SparseVec> kernel_basis(const SparseMatrix& m)
{
    Field f = field_of(m);
    auto rr = rref(m);
    std::vector<bool> is_pivot(m.cols, false);
    for (int p : rr.pivots) is_pivot[p] = true;

    /* column-indexed view of the rref */
    std::vector<SparseVec> rows(rr.pivots.size());
    for (auto& [i, j, v] : rr.r.entries) rows[i].emplace_back(j, v);

    std::vector<SparseVec> out;
    for (int c = 0; c < m.cols; ++c) {
        if (is_pivot[c]) continue;
        SparseVec v;
        for (size_t r = 0; r < rows.size(); ++r) {
            Scalar a = vec_at(f, rows[r], c);
            if (!a.is_zero()) v.emplace_back(rr.pivots[r], -a);
        }
        v.emplace_back(c, Scalar(f, 1));
        std::sort(v.begin(), v.end(), [](auto& a, auto& b) { return a.first < b.first; });
        out.push_back(std::move(v));
    }
    return out;
}

std::optional<SparseVec> solve(const SparseMatrix& m, const SparseVec& b, Field f)
{
    /* eliminate on the augmented matrix [m | b] */
    auto aug = m;
    aug.cols = m.cols + 1;
    for (auto& [i, v] : b) aug.entries.emplace_back(i, m.cols, v);
    aug = SparseMatrix::make(aug.rows, aug.cols, std::move(aug.entries));
    auto rr = rref(aug);
    std::vector<SparseVec> rows(rr.pivots.size());
    for (auto& [i, j, v] : rr.r.entries) rows[i].emplace_back(j, v);
    SparseVec x;
    for (size_t r = 0; r < rr.pivots.size(); ++r) {
        if (rr.pivots[r] == m.cols) return std::nullopt; // inconsistent
        Scalar rhs = vec_at(f, rows[r], m.cols);
        if (!rhs.is_zero()) x.emplace_back(rr.pivots[r], rhs);
        /* non-pivot coordinates stay zero: with free variables zeroed the
         * pivot row gives the coordinate directly */
    }
    return x;
}

std::vector<SparseVec> quotient_basis(const std::vector<SparseVec>& gens, int ambient_dim, Field f)
{
    Subspace s(gens, ambient_dim, f);
    std::vector<bool> is_pivot(ambient_dim, false);
    for (int p : s.pivots()) is_pivot[p] = true;
    std::vector<SparseVec> out;
    for (int c = 0; c < ambient_dim; ++c)
        if (!is_pivot[c]) out.push_back(vec_unit(f, c));
    return out;
}

Subspace::Subspace(std::vector<SparseVec> gens, int ambient_dim, Field f)
    : ambient_(ambient_dim), field_(f)
{
    Elim e{{}, {}, f};
    e.run(std::move(gens), ambient_dim);
    rows_ = std::move(e.rows);
    pivots_ = std::move(e.pivots);
}

bool Subspace::contains(const SparseVec& v) const
{
    return reduce(v).empty();
}

SparseVec Subspace::reduce(const SparseVec& v) const
{
    SparseVec w = v;
    for (size_t r = 0; r < rows_.size() && !w.empty(); ++r) {
        Scalar c = vec_at(field_, w, pivots_[r]);
        if (!c.is_zero()) w = vec_add(w, vec_scale(rows_[r], -c));
    }
    return w;
}

} // namespace ainfty

#include "ainfty/functor.hpp"
#include "ainfty/parallel.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>

namespace ainfty {

GradedMap AInftyFunctor::comp(int arity, const Chain& chain) const
{
    auto it = comps.find(arity);
    if (it != comps.end()) {
        auto jt = it->second.find(chain);
        if (jt != it->second.end()) return jt->second;
    }
    Chain img = image_chain(chain);
    return GradedMap::zero(source.chain_space(chain), target.hom(img.front(), img.back()), 1 - arity);
}

void AInftyFunctor::set_comp(int arity, const Chain& chain, GradedMap f)
{
    if (static_cast<int>(chain.size()) != arity + 1) throw MathError("chain length does not match arity");
    if (f.is_zero()) {
        auto it = comps.find(arity);
        if (it != comps.end()) it->second.erase(chain);
        return;
    }
    comps[arity][chain] = std::move(f);
}

Chain AInftyFunctor::image_chain(const Chain& chain) const
{
    Chain img;
    img.reserve(chain.size());
    for (int obj : chain) img.push_back(object_map[static_cast<size_t>(obj)]);
    return img;
}

void AInftyFunctor::validate() const
{
    if (static_cast<int>(object_map.size()) != source.num_objects()) throw MathError("object map size mismatch");
    for (int o : object_map)
        if (o < 0 || o >= target.num_objects()) throw MathError("object map out of range");
    for (auto& [arity, tabs] : comps)
        for (auto& [chain, g] : tabs) {
            if (static_cast<int>(chain.size()) != arity + 1) throw MathError("component chain of wrong length");
            if (g.degree != 1 - arity)
                throw MathError("F^" + std::to_string(arity) + " has degree " + std::to_string(g.degree));
            Chain img = image_chain(chain);
            if (!(g.src == source.chain_space(chain)) || !(g.tgt == target.hom(img.front(), img.back())))
                throw MathError("F^" + std::to_string(arity) + " has mismatched shape");
        }
}

AInftyFunctor identity_functor(const AInftyCategory& a)
{
    AInftyFunctor f;
    f.source = a;
    f.target = a;
    f.object_map.resize(static_cast<size_t>(a.num_objects()));
    for (int i = 0; i < a.num_objects(); ++i) f.object_map[static_cast<size_t>(i)] = i;
    for (int i = 0; i < a.num_objects(); ++i)
        for (int j = 0; j < a.num_objects(); ++j)
            if (a.hom(i, j).dim() > 0)
                f.set_comp(1, {i, j}, GradedMap::identity(a.field, a.hom(i, j)));
    f.arity_bound = 1;
    f.mode = Mode::Exact;
    return f;
}

AInftyFunctor strict_functor(AInftyCategory source, AInftyCategory target, std::vector<int> object_map,
                             std::map<std::pair<int, int>, SparseMatrix> f1)
{
    AInftyFunctor f;
    f.source = std::move(source);
    f.target = std::move(target);
    f.object_map = std::move(object_map);
    f.arity_bound = 1;
    f.mode = Mode::Exact;
    for (auto& [key, m] : f1) {
        Chain chain{key.first, key.second};
        Chain img = f.image_chain(chain);
        GradedMap g{f.source.hom(key.first, key.second), f.target.hom(img.front(), img.back()), 0, m};
        f.set_comp(1, chain, std::move(g));
    }
    return f;
}

GradedMap funrel_lhs(const AInftyFunctor& f, int n, const Chain& chain)
{
    const AInftyCategory& a = f.source;
    Field fld = a.field;
    Chain img = f.image_chain(chain);
    GradedMap acc = GradedMap::zero(a.chain_space(chain), f.target.hom(img.front(), img.back()), 2 - n);
    for (int k = 1; k <= n; ++k)
        for (int c = 0; c + k <= n; ++c) {
            int lefts = n - k - c;
            Chain sub(chain.begin() + c, chain.begin() + c + k + 1);
            GradedMap mk = a.m(k, sub);
            if (mk.is_zero()) continue;
            Chain contracted;
            contracted.insert(contracted.end(), chain.begin(), chain.begin() + c + 1);
            contracted.insert(contracted.end(), chain.begin() + c + k + 1, chain.end());
            GradedMap outer = f.comp(lefts + 1 + c, contracted);
            if (outer.is_zero()) continue;
            std::vector<GradedMap> factors;
            if (lefts > 0) {
                GradedVectorSpace pre = a.hom(chain[static_cast<size_t>(n - 1)], chain[static_cast<size_t>(n)]);
                for (int p = 1; p < lefts; ++p)
                    pre = tensor_space(pre,
                                       a.hom(chain[static_cast<size_t>(n - 1 - p)], chain[static_cast<size_t>(n - p)]));
                factors.push_back(GradedMap::identity(fld, pre));
            }
            factors.push_back(mk);
            if (c > 0) {
                GradedVectorSpace suf = a.hom(chain[static_cast<size_t>(c - 1)], chain[static_cast<size_t>(c)]);
                for (int p = 1; p < c; ++p)
                    suf = tensor_space(suf,
                                       a.hom(chain[static_cast<size_t>(c - 1 - p)], chain[static_cast<size_t>(c - p)]));
                factors.push_back(GradedMap::identity(fld, suf));
            }
            GradedMap term = compose_graded(outer, tensor_many(fld, factors));
            bool neg = ((lefts * k + c) % 2) != 0;
            acc = acc + (neg ? term.scaled(Scalar(fld, -1)) : term);
        }
    return acc;
}

/* shared partition machinery: outer(r, image_chain) o (F^{t_1} (x) ... (x) F^{t_r})
 * summed over compositions t of n with the relation sign */
static GradedMap partition_sum(const AInftyFunctor& f, int n, const Chain& chain,
                               const std::function<GradedMap(int, const Chain&)>& outer,
                               const GradedVectorSpace& out_space, int out_degree)
{
    Field fld = f.source.field;
    GradedMap acc = GradedMap::zero(f.source.chain_space(chain), out_space, out_degree);
    std::vector<int> t;
    auto rec = [&](auto&& self, int remaining) -> void {
        if (remaining == 0) {
            int r = static_cast<int>(t.size());
            std::vector<int> starts(t.size());
            int acc_start = 0;
            for (int i = r - 1; i >= 0; --i) {
                starts[static_cast<size_t>(i)] = acc_start;
                acc_start += t[static_cast<size_t>(i)];
            }
            std::vector<GradedMap> inner;
            inner.reserve(t.size());
            bool dead = false;
            for (int i = 0; i < r && !dead; ++i) {
                Chain sub(chain.begin() + starts[static_cast<size_t>(i)],
                          chain.begin() + starts[static_cast<size_t>(i)] + t[static_cast<size_t>(i)] + 1);
                GradedMap Fi = f.comp(t[static_cast<size_t>(i)], sub);
                if (Fi.is_zero()) dead = true;
                inner.push_back(std::move(Fi));
            }
            if (!dead) {
                Chain outer_chain;
                outer_chain.push_back(f.object_map[static_cast<size_t>(chain.front())]);
                for (int i = r - 1; i >= 0; --i)
                    outer_chain.push_back(f.object_map[static_cast<size_t>(chain[static_cast<size_t>(
                        starts[static_cast<size_t>(i)] + t[static_cast<size_t>(i)])])]);
                GradedMap om = outer(r, outer_chain);
                if (!om.is_zero()) {
                    int e = 0, prefix = t[0];
                    for (int u = 1; u < r; ++u) {
                        e += (1 - t[static_cast<size_t>(u)]) * prefix;
                        prefix += t[static_cast<size_t>(u)];
                    }
                    GradedMap term = compose_graded(om, tensor_many(fld, inner));
                    if (((e % 2) + 2) % 2 != 0) term = term.scaled(Scalar(fld, -1));
                    acc = acc + term;
                }
            }
            return;
        }
        for (int part = 1; part <= remaining; ++part) {
            t.push_back(part);
            self(self, remaining - part);
            t.pop_back();
        }
    };
    rec(rec, n);
    return acc;
}

GradedMap funrel_rhs(const AInftyFunctor& f, int n, const Chain& chain)
{
    Chain img = f.image_chain(chain);
    return partition_sum(
        f, n, chain, [&](int r, const Chain& oc) { return f.target.m(r, oc); },
        f.target.hom(img.front(), img.back()), 2 - n);
}

static std::string chain_str(const AInftyCategory& a, const Chain& chain)
{
    std::string s = "(";
    for (size_t i = 0; i < chain.size(); ++i) {
        if (i) s += ",";
        s += a.quiver.objects[static_cast<size_t>(chain[i])];
    }
    return s + ")";
}

CheckReport check_funrel(const AInftyFunctor& f, int n_max, int jobs)
{
    for (auto& [i, tabs] : f.comps)
        for (auto& [chain, g] : tabs) {
            auto bad = g.degree_violations();
            if (!bad.empty()) {
                std::ostringstream os;
                os << "degree violation in F^" << i << " at chain " << chain_str(f.source, chain) << ": entry ("
                   << g.tgt.label(bad[0].first) << " <- " << g.src.label(bad[0].second) << ") breaks |F^i| = 1-i";
                return CheckReport::fail(os.str(), "degree screening");
            }
        }

    std::string cert;
    if (f.mode == Mode::Exact && f.source.mode == Mode::Exact && f.target.mode == Mode::Exact) {
        int closure = std::max(f.source.arity_bound + f.arity_bound - 1, f.target.arity_bound * f.arity_bound);
        cert = (n_max >= closure) ? "certified for all n (Exact closure)"
                                  : "verified for n <= " + std::to_string(n_max) + " (Exact closure needs n <= " +
                                        std::to_string(closure) + ")";
    } else {
        cert = "verified for n <= " + std::to_string(n_max) + " (truncated data: no claim beyond)";
    }

    for (int n = 1; n <= n_max; ++n) {
        auto chains = f.source.nonzero_chains(n);
        std::vector<std::string> failures(chains.size());
        parallel_for(jobs, chains.size(), [&](size_t idx) {
            const Chain& chain = chains[idx];
            GradedMap d = funrel_lhs(f, n, chain) - funrel_rhs(f, n, chain);
            if (!d.is_zero()) {
                auto& [i, j, v] = d.mat.entries.front();
                std::ostringstream os;
                os << "functor relation fails at n=" << n << " chain " << chain_str(f.source, chain)
                   << ": difference " << v.str() << " at (" << d.tgt.label(i) << " <- " << d.src.label(j) << ")";
                failures[idx] = os.str();
            }
        });
        for (auto& s : failures)
            if (!s.empty()) return CheckReport::fail(s, cert);
    }
    return CheckReport::pass(cert);
}

AInftyFunctor compose(const AInftyFunctor& f, const AInftyFunctor& g, int n_max)
{
    if (!(f.target.quiver.objects == g.source.quiver.objects))
        throw MathError("compose: middle categories do not match");
    AInftyFunctor out;
    out.source = f.source;
    out.target = g.target;
    out.object_map.reserve(f.object_map.size());
    for (int o : f.object_map) out.object_map.push_back(g.object_map[static_cast<size_t>(o)]);

    bool exact = f.mode == Mode::Exact && g.mode == Mode::Exact;
    int closure = f.arity_bound * g.arity_bound;
    int bound = n_max < 0 ? (exact ? closure : std::max(f.arity_bound, g.arity_bound)) : n_max;
    out.arity_bound = bound;
    out.mode = (exact && bound >= closure) ? Mode::Exact : Mode::Truncated;

    for (int n = 1; n <= bound; ++n)
        for (const Chain& chain : f.source.nonzero_chains(n)) {
            Chain img = out.image_chain(chain);
            GradedMap c = partition_sum(
                f, n, chain, [&](int r, const Chain& oc) { return g.comp(r, oc); },
                g.target.hom(img.front(), img.back()), 1 - n);
            if (!c.is_zero()) out.set_comp(n, chain, std::move(c));
        }
    return out;
}

bool functors_equal(const AInftyFunctor& f, const AInftyFunctor& g)
{
    if (f.object_map != g.object_map) return false;
    int bound = std::max(f.arity_bound, g.arity_bound);
    for (int n = 1; n <= bound; ++n)
        for (const Chain& chain : f.source.nonzero_chains(n))
            if (!(f.comp(n, chain).mat == g.comp(n, chain).mat)) return false;
    return true;
}

HFunctor h_functor(const AInftyFunctor& f)
{
    HFunctor out{cohomology(f.source), cohomology(f.target), f.object_map, {}};
    for (int A = 0; A < f.source.num_objects(); ++A)
        for (int B = 0; B < f.source.num_objects(); ++B) {
            const auto& hs = out.src.hom_or_zero(A, B);
            if (hs.dim() == 0) continue;
            int FA = f.object_map[static_cast<size_t>(A)], FB = f.object_map[static_cast<size_t>(B)];
            GradedMap m = GradedMap::zero(hs, out.tgt.hom_or_zero(FA, FB), 0);
            std::vector<std::tuple<int, int, Scalar>> es;
            GradedMap f1 = f.comp(1, {A, B});
            for (int j = 0; j < hs.dim(); ++j) {
                SparseVec img = f1.mat.apply(out.src.reps.at({A, B})[static_cast<size_t>(j)]);
                if (img.empty()) continue;
                SparseVec cls = out.tgt.project(FA, FB, img);
                for (auto& [ci, cv] : cls) es.emplace_back(ci, j, cv);
            }
            m.mat = SparseMatrix::make(m.tgt.dim(), m.src.dim(), std::move(es));
            out.maps[{A, B}] = std::move(m);
        }
    return out;
}

bool is_quasi_isomorphism(const AInftyFunctor& f)
{
    std::vector<bool> hit(static_cast<size_t>(f.target.num_objects()), false);
    for (int o : f.object_map) {
        if (hit[static_cast<size_t>(o)]) return false;
        hit[static_cast<size_t>(o)] = true;
    }
    if (f.source.num_objects() != f.target.num_objects()) return false;
    for (bool h : hit)
        if (!h) return false;

    HFunctor H = h_functor(f);
    for (int A = 0; A < f.source.num_objects(); ++A)
        for (int B = 0; B < f.source.num_objects(); ++B) {
            int FA = f.object_map[static_cast<size_t>(A)], FB = f.object_map[static_cast<size_t>(B)];
            int ds = H.src.hom_or_zero(A, B).dim();
            int dt = H.tgt.hom_or_zero(FA, FB).dim();
            if (ds != dt) return false;
            if (ds == 0) continue;
            if (rank(H.maps.at({A, B}).mat) != ds) return false;
        }
    return true;
}

bool h0_isomorphic(const CohomologyCategory& H, const std::vector<SparseVec>& unit_classes, int X, int Y)
{
    Field f = H.field;
    if (X == Y) return true;
    const auto& hxy = H.hom_or_zero(X, Y);
    const auto& hyx = H.hom_or_zero(Y, X);
    std::vector<int> uc; // degree-0 classes X -> Y
    for (int i = 0; i < hxy.dim(); ++i)
        if (hxy.degree(i) == 0) uc.push_back(i);
    if (uc.empty()) return false;

    std::vector<SparseVec> candidates;
    for (int i : uc) candidates.push_back(vec_unit(f, i));
    std::mt19937 rng(20240u + static_cast<unsigned>(X * 31 + Y));
    for (int t = 0; t < 64; ++t) {
        SparseVec u;
        for (int i : uc) {
            long cmul = static_cast<long>(rng() % 5) - 2;
            if (cmul != 0) u.emplace_back(i, Scalar(f, cmul));
        }
        if (!u.empty()) candidates.push_back(std::move(u));
    }

    GradedMap cyx = H.comp_or_zero({Y, X, Y}); // u o v : Y -> Y  (u leftmost)
    GradedMap cxy = H.comp_or_zero({X, Y, X}); // v o u : X -> X
    const SparseVec& idY = unit_classes[static_cast<size_t>(Y)];
    const SparseVec& idX = unit_classes[static_cast<size_t>(X)];

    for (const auto& u : candidates) {
        int nv = hyx.dim();
        if (nv == 0) return false;
        std::vector<std::tuple<int, int, Scalar>> es;
        int rows0 = H.hom_or_zero(Y, Y).dim();
        for (auto& [ri, rj, rv] : cyx.mat.entries) {
            int ui = rj / nv, vj = rj % nv;
            Scalar cu = vec_at(f, u, ui);
            if (!cu.is_zero()) es.emplace_back(ri, vj, rv * cu);
        }
        for (auto& [ri, rj, rv] : cxy.mat.entries) {
            int vi = rj / hxy.dim(), uj = rj % hxy.dim();
            Scalar cu = vec_at(f, u, uj);
            if (!cu.is_zero()) es.emplace_back(rows0 + ri, vi, rv * cu);
        }
        SparseVec rhs = idY;
        for (auto& [i, s] : idX) rhs.emplace_back(rows0 + i, s);
        std::sort(rhs.begin(), rhs.end(), [](auto& a, auto& b) { return a.first < b.first; });
        SparseMatrix M = SparseMatrix::make(rows0 + H.hom_or_zero(X, X).dim(), nv, std::move(es));
        if (solve(M, rhs, f)) return true;
    }
    return false;
}

bool is_quasi_equivalence(const AInftyFunctor& f)
{
    HFunctor H = h_functor(f);
    for (int A = 0; A < f.source.num_objects(); ++A)
        for (int B = 0; B < f.source.num_objects(); ++B) {
            int FA = f.object_map[static_cast<size_t>(A)], FB = f.object_map[static_cast<size_t>(B)];
            int ds = H.src.hom_or_zero(A, B).dim();
            int dt = H.tgt.hom_or_zero(FA, FB).dim();
            if (ds != dt) return false;
            if (ds == 0) continue;
            if (rank(H.maps.at({A, B}).mat) != ds) return false;
        }
    std::vector<SparseVec> units;
    if (!is_cohomologically_unital(f.target, &units)) return false;
    for (int B = 0; B < f.target.num_objects(); ++B) {
        bool found = false;
        for (int A = 0; A < f.source.num_objects() && !found; ++A)
            found = h0_isomorphic(H.tgt, units, f.object_map[static_cast<size_t>(A)], B);
        if (!found) return false;
    }
    return true;
}

bool is_strictly_unital_functor(const AInftyFunctor& f)
{
    auto us = detect_strict_units(f.source);
    auto ut = detect_strict_units(f.target);
    if (!us || !ut) throw MathError("is_strictly_unital_functor: categories are not strictly unital");
    for (int A = 0; A < f.source.num_objects(); ++A) {
        int FA = f.object_map[static_cast<size_t>(A)];
        SparseVec img = f.comp(1, {A, A}).mat.apply(us->id_of[static_cast<size_t>(A)]);
        if (!vec_eq(img, ut->id_of[static_cast<size_t>(FA)])) return false;
    }
    for (auto& [arity, tabs] : f.comps) {
        if (arity < 2) continue;
        for (auto& [chain, g] : tabs) {
            size_t k = chain.size() - 1;
            for (int t = 1; t <= static_cast<int>(k); ++t) {
                int A = chain[static_cast<size_t>(t - 1)];
                if (chain[static_cast<size_t>(t)] != A) continue;
                const SparseVec& uA = us->id_of[static_cast<size_t>(A)];
                int slot_factor = static_cast<int>(k) - t;
                std::vector<int> dims(k);
                for (size_t p = 0; p < k; ++p) dims[p] = f.source.hom(chain[k - 1 - p], chain[k - p]).dim();
                std::vector<int> combo(k, 0);
                auto advance = [&]() {
                    for (size_t q = k; q-- > 0;) {
                        if (static_cast<int>(q) == slot_factor) continue;
                        if (++combo[q] < dims[q]) return true;
                        combo[q] = 0;
                    }
                    return false;
                };
                do {
                    SparseVec in;
                    for (auto& [j, s] : uA) {
                        auto idx = combo;
                        idx[static_cast<size_t>(slot_factor)] = j;
                        int flat = 0;
                        for (size_t q = 0; q < k; ++q) flat = flat * dims[q] + idx[q];
                        in.emplace_back(flat, s);
                    }
                    std::sort(in.begin(), in.end(), [](auto& a, auto& b) { return a.first < b.first; });
                    if (!g.mat.apply(in).empty()) return false;
                } while (advance());
            }
        }
    }
    return true;
}

bool is_cohomologically_unital_functor(const AInftyFunctor& f)
{
    std::vector<SparseVec> us, ut;
    if (!is_cohomologically_unital(f.source, &us) || !is_cohomologically_unital(f.target, &ut))
        throw MathError("is_cohomologically_unital_functor: categories are not cohomologically unital");
    HFunctor H = h_functor(f);
    for (int A = 0; A < f.source.num_objects(); ++A) {
        int FA = f.object_map[static_cast<size_t>(A)];
        if (H.src.hom_or_zero(A, A).dim() == 0) {
            if (!ut[static_cast<size_t>(FA)].empty()) return false;
            continue;
        }
        SparseVec img = H.maps.at({A, A}).mat.apply(us[static_cast<size_t>(A)]);
        if (!vec_eq(img, ut[static_cast<size_t>(FA)])) return false;
    }
    return true;
}

} // namespace ainfty

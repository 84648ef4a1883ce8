#pragma once

// Ordered finite simplicial complexes ("polyhedra"), their morphisms, the
// 1-skeleton metric rho, neighbourhoods, barycentric subdivisions delta /
// delta' / Delta with the collapse morphisms, links and the Moebius weight
// mu_L(x) = 1 - chi(lk_L x).

#include "core.hpp"

#include <functional>
#include <map>
#include <memory>
#include <numeric>
#include <queue>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

namespace mbs {

using VertexId = int;
using SimplexIdx = int;
constexpr SimplexIdx kEmptySimplex = -1;  // the empty simplex of L-diamond

struct VecIntHash {
    std::size_t operator()(const std::vector<int>& v) const {
        std::size_t h = 0x9e3779b97f4a7c15ULL ^ v.size();
        for (int x : v) {
            h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return h;
    }
};

struct RawComplex {
    std::vector<std::string> vertices;                // declared universe (may be empty)
    std::vector<std::vector<std::string>> simplices;  // ordered tuples
};

class Polyhedron {
public:
    std::vector<std::string> vertex_names;          // id -> name
    std::vector<std::vector<VertexId>> simplices;   // canonical order: (size, lex of sorted set)
    // sorted vertex set -> simplex index
    std::unordered_map<std::vector<int>, SimplexIdx, VecIntHash> by_set;

    Polyhedron() = default;

    std::size_t nverts() const { return vertex_names.size(); }
    std::size_t size() const { return simplices.size(); }
    bool empty() const { return simplices.empty(); }
    int dim_of(SimplexIdx s) const {
        return s == kEmptySimplex ? -1 : static_cast<int>(simplices[s].size()) - 1;
    }
    int dim() const {
        int d = -1;
        for (std::size_t s = 0; s < simplices.size(); ++s) d = std::max(d, dim_of((SimplexIdx)s));
        return d;
    }
    const std::vector<VertexId>& tuple(SimplexIdx s) const { return simplices[s]; }

    std::vector<int> sorted_set(SimplexIdx s) const {
        std::vector<int> k = simplices[s];
        std::sort(k.begin(), k.end());
        return k;
    }
    SimplexIdx find_set(std::vector<int> key) const {
        std::sort(key.begin(), key.end());
        auto it = by_set.find(key);
        return it == by_set.end() ? kEmptySimplex : it->second;
    }
    bool has_set(const std::vector<int>& key) const { return find_set(key) != kEmptySimplex; }

    VertexId vertex_id(const std::string& name) const {
        for (std::size_t i = 0; i < vertex_names.size(); ++i)
            if (vertex_names[i] == name) return (VertexId)i;
        fail("UnknownVertex", name);
    }
    SimplexIdx find_named(const std::vector<std::string>& names) const {
        std::vector<int> key;
        key.reserve(names.size());
        for (auto& n : names) key.push_back(vertex_id(n));
        return find_set(std::move(key));
    }

    std::string simplex_str(SimplexIdx s) const {
        if (s == kEmptySimplex) return "[]";
        std::string out = "[";
        for (std::size_t i = 0; i < simplices[s].size(); ++i) {
            if (i) out += ",";
            out += vertex_names[simplices[s][i]];
        }
        return out + "]";
    }

    // i-th face in tuple order: delete the i-th vertex. Only for dim >= 1.
    SimplexIdx face(SimplexIdx s, std::size_t i) const {
        const auto& t = simplices[s];
        require(t.size() >= 2 && i < t.size(), "BadFace", "face index out of range");
        std::vector<int> key;
        key.reserve(t.size() - 1);
        for (std::size_t j = 0; j < t.size(); ++j)
            if (j != i) key.push_back(t[j]);
        SimplexIdx f = find_set(std::move(key));
        require(f != kEmptySimplex, "MissingFace", simplex_str(s));
        return f;
    }

    // Rebuilds canonical simplex order and the set index. Tuples must already
    // be face-closed and order-compatible; callers that construct complexes
    // directly go through finish() once.
    void finish() {
        std::sort(simplices.begin(), simplices.end(),
                  [](const std::vector<int>& a, const std::vector<int>& b) {
                      if (a.size() != b.size()) return a.size() < b.size();
                      std::vector<int> sa = a, sb = b;
                      std::sort(sa.begin(), sa.end());
                      std::sort(sb.begin(), sb.end());
                      return sa < sb;
                  });
        by_set.clear();
        by_set.reserve(simplices.size() * 2);
        for (std::size_t s = 0; s < simplices.size(); ++s) {
            std::vector<int> key = simplices[s];
            std::sort(key.begin(), key.end());
            auto [it, fresh] = by_set.emplace(std::move(key), (SimplexIdx)s);
            require(fresh, "DuplicateSimplex", simplex_str((SimplexIdx)s));
        }
    }

    bool operator==(const Polyhedron& o) const {
        return vertex_names == o.vertex_names && simplices == o.simplices;
    }
};

using PolyPtr = std::shared_ptr<const Polyhedron>;

inline PolyPtr make_poly(Polyhedron p) { return std::make_shared<const Polyhedron>(std::move(p)); }

// ---------------------------------------------------------------------------
// validate

inline void check_face_closure(const Polyhedron& L) {
    for (std::size_t s = 0; s < L.simplices.size(); ++s) {
        const auto& t = L.simplices[s];
        require(!t.empty(), "DuplicateSimplex", "empty tuple");
        std::size_t n = t.size();
        // every nonempty proper subtuple, preserving order
        for (std::uint64_t mask = 1; mask + 1 < (1ULL << n); ++mask) {
            std::vector<int> sub;
            for (std::size_t i = 0; i < n; ++i)
                if (mask & (1ULL << i)) sub.push_back(t[i]);
            std::vector<int> key = sub;
            std::sort(key.begin(), key.end());
            auto it = L.by_set.find(key);
            require(it != L.by_set.end(), "MissingFace",
                    L.simplex_str((SimplexIdx)s) + " lacks a face");
            // order induced from the cofacet must match the face's own tuple
            require(L.simplices[it->second] == sub, "OrderConflict",
                    L.simplex_str((SimplexIdx)s) + " vs " + L.simplex_str(it->second));
        }
    }
}

inline Polyhedron validate(const RawComplex& raw) {
    Polyhedron L;
    std::map<std::string, VertexId> ids;
    std::vector<std::string> names = raw.vertices;
    for (auto& t : raw.simplices)
        for (auto& v : t)
            if (std::find(names.begin(), names.end(), v) == names.end()) names.push_back(v);
    std::sort(names.begin(), names.end());
    names.erase(std::unique(names.begin(), names.end()), names.end());
    L.vertex_names = names;
    for (std::size_t i = 0; i < names.size(); ++i) ids[names[i]] = (VertexId)i;

    for (auto& t : raw.simplices) {
        std::vector<int> tup;
        std::set<std::string> seen;
        require(!t.empty(), "DuplicateSimplex", "empty tuple");
        for (auto& v : t) {
            require(seen.insert(v).second, "DuplicateSimplex", "repeated vertex in a tuple");
            tup.push_back(ids.at(v));
        }
        L.simplices.push_back(std::move(tup));
    }
    L.finish();
    check_face_closure(L);
    return L;
}

inline Polyhedron poly_from_tuples(std::vector<std::vector<std::string>> tuples) {
    RawComplex raw;
    raw.simplices = std::move(tuples);
    return validate(raw);
}

// ---------------------------------------------------------------------------
// generated subpolyhedra

struct SubComplex {
    Polyhedron sub;
    std::vector<SimplexIdx> parent_simplex;  // sub idx -> parent idx
    std::vector<VertexId> parent_vertex;     // sub vertex -> parent vertex
    std::unordered_map<int, SimplexIdx> from_parent;  // parent idx -> sub idx
};

inline SubComplex generated(const Polyhedron& L, const std::vector<SimplexIdx>& T) {
    std::set<SimplexIdx> keep;
    for (SimplexIdx s : T) {
        require(s != kEmptySimplex && s >= 0 && s < (SimplexIdx)L.size(), "SimplexNotInL",
                "generated");
        const auto& t = L.simplices[s];
        std::size_t n = t.size();
        for (std::uint64_t mask = 1; mask < (1ULL << n); ++mask) {
            std::vector<int> key;
            for (std::size_t i = 0; i < n; ++i)
                if (mask & (1ULL << i)) key.push_back(t[i]);
            std::sort(key.begin(), key.end());
            keep.insert(L.by_set.at(key));
        }
    }
    SubComplex out;
    std::map<VertexId, VertexId> vmap;
    for (SimplexIdx s : keep)
        for (VertexId v : L.simplices[s]) vmap.emplace(v, 0);
    for (auto& [pv, nv] : vmap) {
        nv = (VertexId)out.sub.vertex_names.size();
        out.sub.vertex_names.push_back(L.vertex_names[pv]);
        out.parent_vertex.push_back(pv);
    }
    for (SimplexIdx s : keep) {
        std::vector<int> tup;
        for (VertexId v : L.simplices[s]) tup.push_back(vmap.at(v));
        out.sub.simplices.push_back(std::move(tup));
    }
    out.sub.finish();
    out.parent_simplex.assign(out.sub.size(), kEmptySimplex);
    for (std::size_t s = 0; s < out.sub.size(); ++s) {
        std::vector<int> key;
        for (VertexId v : out.sub.simplices[s]) key.push_back(out.parent_vertex[v]);
        std::sort(key.begin(), key.end());
        SimplexIdx p = L.by_set.at(key);
        out.parent_simplex[s] = p;
        out.from_parent[p] = (SimplexIdx)s;
    }
    return out;
}

// closure of one simplex: y-bar
inline SubComplex closure(const Polyhedron& L, SimplexIdx y) {
    if (y == kEmptySimplex) return SubComplex{};
    return generated(L, {y});
}

// spanned simplex of T, if T is small
inline std::optional<SimplexIdx> is_small(const Polyhedron& L, const std::vector<SimplexIdx>& T) {
    std::set<int> uni;
    for (SimplexIdx s : T) {
        require(s != kEmptySimplex && s >= 0 && s < (SimplexIdx)L.size(), "SimplexNotInL",
                "is_small");
        for (VertexId v : L.simplices[s]) uni.insert(v);
    }
    if (uni.empty()) return kEmptySimplex;  // T empty: spanned by the empty simplex
    SimplexIdx s = L.find_set(std::vector<int>(uni.begin(), uni.end()));
    if (s == kEmptySimplex) return std::nullopt;
    return s;
}

// ---------------------------------------------------------------------------
// the metric rho and neighbourhoods

class SkeletonMetric {
    const Polyhedron* L_;
    std::vector<std::vector<std::uint32_t>> vdist_;  // UINT32_MAX = unreachable

public:
    static constexpr std::uint32_t UNREACH = std::numeric_limits<std::uint32_t>::max();

    explicit SkeletonMetric(const Polyhedron& L) : L_(&L) {
        std::size_t n = L.nverts();
        std::vector<std::vector<int>> adj(n);
        for (auto& t : L.simplices)
            if (t.size() == 2) {
                adj[t[0]].push_back(t[1]);
                adj[t[1]].push_back(t[0]);
            }
        vdist_.assign(n, std::vector<std::uint32_t>(n, UNREACH));
        std::vector<std::uint32_t> dist;
        for (std::size_t src = 0; src < n; ++src) {
            dist.assign(n, UNREACH);
            dist[src] = 0;
            std::queue<int> q;
            q.push((int)src);
            while (!q.empty()) {
                int u = q.front();
                q.pop();
                for (int w : adj[u])
                    if (dist[w] == UNREACH) {
                        dist[w] = dist[u] + 1;
                        q.push(w);
                    }
            }
            vdist_[src] = dist;
        }
    }

    ExtNat vdist(VertexId a, VertexId b) const {
        std::uint32_t d = vdist_[a][b];
        return d == UNREACH ? ExtNat::infinity() : ExtNat(d);
    }

    ExtNat rho(SimplexIdx x, SimplexIdx y) const {
        require(x != kEmptySimplex && y != kEmptySimplex, "SimplexNotInL",
                "rho is undefined on the empty simplex");
        std::uint32_t best = UNREACH;
        for (VertexId u : L_->simplices[x])
            for (VertexId v : L_->simplices[y]) best = std::min(best, vdist_[u][v]);
        return best == UNREACH ? ExtNat::infinity() : ExtNat(best);
    }

    // O_L(T, d) = { z : rho(z, y) < d for some y in T }
    std::vector<SimplexIdx> neighbourhood(const std::vector<SimplexIdx>& T, std::uint64_t d) const {
        std::vector<SimplexIdx> out;
        for (std::size_t z = 0; z < L_->size(); ++z) {
            for (SimplexIdx y : T)
                if (rho((SimplexIdx)z, y) < ExtNat(d)) {
                    out.push_back((SimplexIdx)z);
                    break;
                }
        }
        return out;
    }

    ExtNat separation(const std::vector<SimplexIdx>& T) const {
        ExtNat best = ExtNat::infinity();
        for (std::size_t i = 0; i < T.size(); ++i)
            for (std::size_t j = i + 1; j < T.size(); ++j)
                if (T[i] != T[j]) best = min(best, rho(T[i], T[j]));
        return best;
    }
};

inline ExtNat rho(const Polyhedron& L, SimplexIdx x, SimplexIdx y) {
    return SkeletonMetric(L).rho(x, y);
}
inline std::vector<SimplexIdx> neighbourhood(const Polyhedron& L, const std::vector<SimplexIdx>& T,
                                             std::uint64_t d) {
    return SkeletonMetric(L).neighbourhood(T, d);
}
inline ExtNat separation(const Polyhedron& L, const std::vector<SimplexIdx>& T) {
    return SkeletonMetric(L).separation(T);
}

// ---------------------------------------------------------------------------
// morphisms

struct PolyMorphism {
    PolyPtr dom, cod;
    std::vector<VertexId> vmap;  // dom vertex -> cod vertex

    VertexId operator()(VertexId v) const { return vmap[v]; }

    // image simplex of a dom simplex (the simplex spanned by image vertices)
    SimplexIdx image(SimplexIdx s) const {
        std::vector<int> key;
        for (VertexId v : dom->simplices[s]) key.push_back(vmap[v]);
        std::sort(key.begin(), key.end());
        key.erase(std::unique(key.begin(), key.end()), key.end());
        SimplexIdx t = cod->find_set(std::move(key));
        require(t != kEmptySimplex, "NotAMorphism", "image is not a simplex");
        return t;
    }
};

inline void validate_morphism(const PolyMorphism& f) {
    require(f.vmap.size() == f.dom->nverts(), "NotAMorphism", "vmap size mismatch");
    for (VertexId v = 0; v < (VertexId)f.dom->nverts(); ++v)
        require(f.vmap[v] >= 0 && f.vmap[v] < (VertexId)f.cod->nverts(), "NotAMorphism",
                "vertex image out of range");
    for (std::size_t s = 0; s < f.dom->size(); ++s) {
        std::vector<int> img;
        for (VertexId v : f.dom->simplices[s]) img.push_back(f.vmap[v]);
        std::vector<int> key = img;
        std::sort(key.begin(), key.end());
        key.erase(std::unique(key.begin(), key.end()), key.end());
        SimplexIdx t = f.cod->find_set(key);
        require(t != kEmptySimplex, "NotAMorphism",
                f.dom->simplex_str((SimplexIdx)s) + ": image set is not a simplex");
        // non-strict order along the image simplex's tuple
        const auto& ct = f.cod->simplices[t];
        auto pos = [&](int v) {
            return std::find(ct.begin(), ct.end(), v) - ct.begin();
        };
        for (std::size_t i = 0; i + 1 < img.size(); ++i)
            require(pos(img[i]) <= pos(img[i + 1]), "NotAMorphism",
                    f.dom->simplex_str((SimplexIdx)s) + ": order not preserved");
    }
}

inline PolyMorphism identity_morphism(PolyPtr L) {
    PolyMorphism f{L, L, {}};
    f.vmap.resize(L->nverts());
    std::iota(f.vmap.begin(), f.vmap.end(), 0);
    return f;
}

inline PolyMorphism compose(const PolyMorphism& f, const PolyMorphism& g) {
    // f after g
    require(*g.cod == *f.dom, "DomainMismatch", "compose");
    PolyMorphism h{g.dom, f.cod, {}};
    h.vmap.reserve(g.vmap.size());
    for (VertexId v : g.vmap) h.vmap.push_back(f.vmap[v]);
    return h;
}

// ---------------------------------------------------------------------------
// subdivisions

struct Subdivision {
    PolyPtr sub;                        // delta L (or delta' L, Delta L)
    PolyMorphism collapse;              // phi_L (phi'_L, Phi_L): sub -> L
    std::vector<SimplexIdx> centre_of;  // sub vertex -> the L-simplex it subdivides
};

namespace detail {

inline Subdivision barycentric(PolyPtr Lp, bool ascending) {
    const Polyhedron& L = *Lp;
    Polyhedron S;
    S.vertex_names.reserve(L.size());
    for (std::size_t s = 0; s < L.size(); ++s) {
        std::string nm = "(";
        const auto& t = L.simplices[s];
        for (std::size_t i = 0; i < t.size(); ++i) {
            if (i) nm += ",";
            nm += L.vertex_names[t[i]];
        }
        nm += ")";
        S.vertex_names.push_back(nm);
    }
    // supersets of each simplex (strict, any codimension)
    std::vector<std::vector<SimplexIdx>> sup(L.size());
    for (std::size_t t = 0; t < L.size(); ++t) {
        const auto& tt = L.simplices[t];
        std::size_t n = tt.size();
        for (std::uint64_t mask = 1; mask + 1 < (1ULL << n); ++mask) {
            std::vector<int> key;
            for (std::size_t i = 0; i < n; ++i)
                if (mask & (1ULL << i)) key.push_back(tt[i]);
            std::sort(key.begin(), key.end());
            sup[L.by_set.at(key)].push_back((SimplexIdx)t);
        }
    }
    // chains x_0 < x_1 < ... (strict face inclusion), DFS from each start
    std::vector<SimplexIdx> chain;
    std::vector<std::vector<int>> flags;
    auto emit = [&]() {
        std::vector<int> tup(chain.begin(), chain.end());
        if (!ascending) std::reverse(tup.begin(), tup.end());
        flags.push_back(std::move(tup));
    };
    std::function<void(SimplexIdx)> dfs = [&](SimplexIdx top) {
        emit();
        for (SimplexIdx next : sup[top]) {
            chain.push_back(next);
            dfs(next);
            chain.pop_back();
        }
    };
    for (std::size_t s = 0; s < L.size(); ++s) {
        chain.assign(1, (SimplexIdx)s);
        dfs((SimplexIdx)s);
    }
    S.simplices = std::move(flags);
    S.finish();

    Subdivision out;
    out.centre_of.resize(L.size());
    std::iota(out.centre_of.begin(), out.centre_of.end(), 0);
    PolyPtr Sp = make_poly(std::move(S));
    PolyMorphism phi{Sp, Lp, {}};
    phi.vmap.reserve(L.size());
    for (std::size_t s = 0; s < L.size(); ++s) {
        const auto& t = L.simplices[s];
        phi.vmap.push_back(ascending ? t.back() : t.front());
    }
    out.sub = Sp;
    out.collapse = std::move(phi);
    return out;
}

}  // namespace detail

// delta L: barycentres ordered by increasing dimension; phi_L = highest vertex.
inline Subdivision subdivide_delta(PolyPtr L) { return detail::barycentric(L, true); }
// delta' L: opposite order; phi'_L = lowest vertex.
inline Subdivision subdivide_delta_prime(PolyPtr L) { return detail::barycentric(L, false); }

// Delta L = delta' delta L, Phi_L = phi_L o phi'_{delta L}.
struct DoubleSubdivision {
    Subdivision first;   // delta L
    Subdivision second;  // delta' (delta L)
    PolyPtr sub;         // Delta L
    PolyMorphism collapse;  // Phi_L
};

inline DoubleSubdivision subdivide_Delta(PolyPtr L) {
    DoubleSubdivision out;
    out.first = subdivide_delta(L);
    out.second = subdivide_delta_prime(out.first.sub);
    out.sub = out.second.sub;
    out.collapse = compose(out.first.collapse, out.second.collapse);
    return out;
}

// ---------------------------------------------------------------------------
// links, Euler characteristic, mu

inline Polyhedron link(const Polyhedron& L, SimplexIdx x) {
    if (x == kEmptySimplex) return L;
    require(x >= 0 && x < (SimplexIdx)L.size(), "SimplexNotInL", "link");
    const auto xs = L.sorted_set(x);
    Polyhedron out;
    std::map<VertexId, VertexId> vmap;
    std::vector<std::vector<int>> tuples;
    for (std::size_t t = 0; t < L.size(); ++t) {
        const auto& tt = L.simplices[t];
        if (tt.size() <= xs.size()) continue;
        std::vector<int> rest;
        std::size_t hit = 0;
        for (int v : tt) {
            if (std::binary_search(xs.begin(), xs.end(), v))
                ++hit;
            else
                rest.push_back(v);
        }
        if (hit != xs.size()) continue;  // t does not contain x
        for (int v : rest) vmap.emplace(v, 0);
        tuples.push_back(std::move(rest));
    }
    for (auto& [pv, nv] : vmap) {
        nv = (VertexId)out.vertex_names.size();
        out.vertex_names.push_back(L.vertex_names[pv]);
    }
    for (auto& t : tuples) {
        for (int& v : t) v = vmap.at(v);
        out.simplices.push_back(std::move(t));
    }
    out.finish();
    return out;
}

inline std::int64_t euler(const Polyhedron& L) {
    std::int64_t chi = 0;
    for (std::size_t s = 0; s < L.size(); ++s) chi += (L.simplices[s].size() % 2 == 1) ? 1 : -1;
    return chi;
}

inline std::int64_t mu(const Polyhedron& L, SimplexIdx x) {
    return 1 - euler(link(L, x));
}

// mu for every x in L-diamond; out[0] is mu(empty), out[s+1] is mu(simplex s).
// Uses mu_L(x) = sum_{t >= x} (-1)^{dim t - dim x}, which avoids building links.
inline std::vector<std::int64_t> mu_all(const Polyhedron& L) {
    std::vector<std::int64_t> out(L.size() + 1, 0);
    out[0] = 1 - euler(L);
    for (std::size_t t = 0; t < L.size(); ++t) {
        const auto& tt = L.simplices[t];
        std::size_t n = tt.size();
        for (std::uint64_t mask = 1; mask < (1ULL << n); ++mask) {
            std::vector<int> key;
            for (std::size_t i = 0; i < n; ++i)
                if (mask & (1ULL << i)) key.push_back(tt[i]);
            std::sort(key.begin(), key.end());
            SimplexIdx x = L.by_set.at(key);
            int d = (int)(n - key.size());  // dim t - dim x
            out[x + 1] += (d % 2 == 0) ? 1 : -1;
        }
    }
    return out;
}

// intersection of two diamond simplices as a diamond simplex (vertex sets)
inline SimplexIdx intersect(const Polyhedron& L, SimplexIdx x, SimplexIdx y) {
    if (x == kEmptySimplex || y == kEmptySimplex) return kEmptySimplex;
    auto a = L.sorted_set(x), b = L.sorted_set(y);
    std::vector<int> key;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(key));
    if (key.empty()) return kEmptySimplex;
    auto it = L.by_set.find(key);
    require(it != L.by_set.end(), "MissingFace", "intersection escaped the complex");
    return it->second;
}

// sum_{x in L-diamond, x cap y = z} mu_L(x); equals [y == z] by (12.1)
inline std::int64_t moebius_identity(const Polyhedron& L, SimplexIdx y, SimplexIdx z) {
    auto mus = mu_all(L);
    std::int64_t acc = 0;
    for (SimplexIdx x = kEmptySimplex; x < (SimplexIdx)L.size(); ++x)
        if (intersect(L, x, y) == z) acc += mus[x + 1];
    return acc;
}

}  // namespace mbs

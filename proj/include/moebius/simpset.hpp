#pragma once

// Finitely presented simplicial sets, Eilenberg-Zilber degeneracy normal
// forms, completion of polyhedra, sections and quasisections, smash powers
// and skeleta.

#include "complex.hpp"

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace mbs {

// s_{j_1} ... s_{j_p} cell with j_1 > ... > j_p (normal form)
struct SimplexElt {
    int cell = -1;
    std::vector<int> degens;

    bool degenerate() const { return !degens.empty(); }
    friend auto operator<=>(const SimplexElt&, const SimplexElt&) = default;
};

inline std::string elt_str(const SimplexElt& e, const std::vector<std::string>& cell_ids) {
    std::string out;
    for (int j : e.degens) out += "s" + std::to_string(j) + " ";
    out += cell_ids[e.cell];
    return out;
}

class SimplicialSet {
public:
    std::vector<std::string> cell_ids;
    std::vector<int> cell_dims;
    std::vector<std::vector<SimplexElt>> cell_faces;  // [cell][i], i = 0..dim; empty for 0-cells
    std::optional<int> basepoint;                     // a 0-cell

    std::size_t ncells() const { return cell_ids.size(); }
    int dim() const {
        int d = 0;
        for (int cd : cell_dims) d = std::max(d, cd);
        return d;
    }
    int find_cell(const std::string& id) const {
        for (std::size_t i = 0; i < cell_ids.size(); ++i)
            if (cell_ids[i] == id) return (int)i;
        fail("UnknownCell", id);
    }

    int dim_of(const SimplexElt& e) const { return cell_dims[e.cell] + (int)e.degens.size(); }

    bool pointed() const { return basepoint.has_value(); }
    // the unique degenerate basepoint element in dimension n
    SimplexElt marked(int n) const {
        require(pointed(), "NotPointed", "simplicial set has no basepoint");
        SimplexElt e{*basepoint, {}};
        for (int j = n - 1; j >= 0; --j) e.degens.push_back(j);
        return e;
    }
    bool is_marked(const SimplexElt& e) const {
        return pointed() && e.cell == *basepoint;  // the degeneracy word is then forced
    }

    // s_i e, keeping the normal form
    SimplexElt degen(SimplexElt e, int i) const {
        require(i >= 0 && i <= dim_of(e), "IndexOutOfRange", "degeneracy index");
        std::vector<int> out;
        std::size_t k = 0;
        while (k < e.degens.size() && i <= e.degens[k]) {
            out.push_back(e.degens[k] + 1);  // s_i s_j = s_{j+1} s_i for i <= j
            ++k;
        }
        out.push_back(i);
        for (; k < e.degens.size(); ++k) out.push_back(e.degens[k]);
        e.degens = std::move(out);
        return e;
    }

    // d_i e, keeping the normal form; d of a 0-dimensional element is an error
    SimplexElt face(SimplexElt e, int i) const {
        require(i >= 0 && i <= dim_of(e), "IndexOutOfRange", "face index");
        std::vector<int> emitted;
        std::size_t k = 0;
        while (k < e.degens.size()) {
            int j = e.degens[k];
            if (i == j || i == j + 1) {
                // d_i s_j = id
                SimplexElt rest{e.cell, {e.degens.begin() + k + 1, e.degens.end()}};
                for (auto it = emitted.rbegin(); it != emitted.rend(); ++it)
                    rest = degen(rest, *it);
                return rest;
            }
            if (i < j) {
                emitted.push_back(j - 1);  // d_i s_j = s_{j-1} d_i
                ++k;
            } else {
                emitted.push_back(j);  // d_i s_j = s_j d_{i-1}
                --i;
                ++k;
            }
        }
        require(cell_dims[e.cell] >= 1, "IndexOutOfRange", "face of a 0-cell");
        SimplexElt base = cell_faces[e.cell][i];
        for (auto it = emitted.rbegin(); it != emitted.rend(); ++it) base = degen(base, *it);
        return base;
    }

    // apply a mixed word of operators, outermost first: ops = [(is_face, idx)...]
    SimplexElt normalize(int cell, const std::vector<std::pair<bool, int>>& ops) const {
        SimplexElt e{cell, {}};
        for (auto it = ops.rbegin(); it != ops.rend(); ++it)
            e = it->first ? face(e, it->second) : degen(e, it->second);
        return e;
    }

    std::string str(const SimplexElt& e) const { return elt_str(e, cell_ids); }
};

// d_i d_j = d_{j-1} d_i for i < j on every cell
inline void check_simplicial_identities(const SimplicialSet& E) {
    for (std::size_t c = 0; c < E.ncells(); ++c) {
        int d = E.cell_dims[c];
        if (d < 2) continue;
        SimplexElt e{(int)c, {}};
        for (int j = 1; j <= d; ++j)
            for (int i = 0; i < j; ++i)
                require(E.face(E.face(e, j), i) == E.face(E.face(e, i), j - 1),
                        "SimplicialIdentity", E.cell_ids[c]);
    }
}

// all elements (including degenerate ones) of dimension n, marked one excluded
inline std::vector<SimplexElt> alphabet(const SimplicialSet& E, int n) {
    std::vector<SimplexElt> out;
    std::function<void(SimplexElt&, int)> grow = [&](SimplexElt& e, int want) {
        int have = E.dim_of(e);
        if (have == want) {
            if (!E.is_marked(e)) out.push_back(e);
            return;
        }
        // prepend s_j with j above the current head, j <= have
        int lo = e.degens.empty() ? 0 : e.degens.front() + 1;
        for (int j = lo; j <= have; ++j) {
            SimplexElt bigger = e;
            bigger.degens.insert(bigger.degens.begin(), j);
            grow(bigger, want);
        }
    };
    for (std::size_t c = 0; c < E.ncells(); ++c) {
        if (E.cell_dims[c] > n) continue;
        SimplexElt e{(int)c, {}};
        grow(e, n);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// completion of a polyhedron

inline SimplicialSet completion(const Polyhedron& L) {
    SimplicialSet E;
    for (std::size_t s = 0; s < L.size(); ++s) {
        E.cell_ids.push_back(L.simplex_str((SimplexIdx)s));
        E.cell_dims.push_back(L.dim_of((SimplexIdx)s));
    }
    E.cell_faces.resize(L.size());
    for (std::size_t s = 0; s < L.size(); ++s) {
        int d = L.dim_of((SimplexIdx)s);
        for (int i = 0; i <= d && d >= 1; ++i)
            E.cell_faces[s].push_back(SimplexElt{L.face((SimplexIdx)s, i), {}});
    }
    return E;
}

// ---------------------------------------------------------------------------
// simplicial maps given on nondegenerate cells

struct SSetMap {
    const SimplicialSet* dom = nullptr;
    const SimplicialSet* cod = nullptr;
    std::vector<SimplexElt> images;  // per dom cell

    SimplexElt apply(const SimplexElt& e) const {
        SimplexElt out = images[e.cell];
        for (auto it = e.degens.rbegin(); it != e.degens.rend(); ++it)
            out = cod->degen(out, *it);
        return out;
    }
};

inline void check_sset_map(const SSetMap& f) {
    require(f.images.size() == f.dom->ncells(), "ShapeMismatch", "image table size");
    for (std::size_t c = 0; c < f.dom->ncells(); ++c) {
        require(f.dom->cell_dims[c] == f.cod->dim_of(f.images[c]), "ShapeMismatch",
                "dimension of image of " + f.dom->cell_ids[c]);
        for (int i = 0; i <= f.dom->cell_dims[c] && f.dom->cell_dims[c] >= 1; ++i) {
            SimplexElt lhs = f.cod->face(f.images[c], i);
            SimplexElt rhs = f.apply(f.dom->cell_faces[c][i]);
            require(lhs == rhs, "ShapeMismatch", "face mismatch at " + f.dom->cell_ids[c]);
        }
    }
}

// the monotone surjection collapsing a dom tuple onto its image tuple,
// encoded as a strictly decreasing degeneracy word
inline std::vector<int> collapse_word(const std::vector<int>& positions) {
    // positions: psi(0) <= psi(1) <= ... ; word = { i : psi(i) = psi(i+1) } descending
    std::vector<int> J;
    for (int i = (int)positions.size() - 2; i >= 0; --i)
        if (positions[i] == positions[i + 1]) J.push_back(i);
    return J;
}

// hat f : ^K -> ^L for a polyhedron morphism f
inline SSetMap completion_map(const PolyMorphism& f, const SimplicialSet& hatK,
                              const SimplicialSet& hatL) {
    SSetMap out{&hatK, &hatL, {}};
    for (std::size_t x = 0; x < f.dom->size(); ++x) {
        SimplexIdx y = f.image((SimplexIdx)x);
        const auto& yt = f.cod->simplices[y];
        std::vector<int> pos;
        for (VertexId v : f.dom->simplices[x]) {
            int p = (int)(std::find(yt.begin(), yt.end(), f.vmap[v]) - yt.begin());
            pos.push_back(p);
        }
        SimplexElt e{(int)y, {}};
        auto J = collapse_word(pos);
        for (auto it = J.rbegin(); it != J.rend(); ++it) e = hatL.degen(e, *it);
        out.images.push_back(e);
    }
    return out;
}

// ---------------------------------------------------------------------------
// sections: simplicial maps ^L -> E for a theory of values
//
// A theory Th provides: value type Elt, dim(e), face(e, i), degen(e, i),
// equality, and for group-valued theories unit(n)/is_unit(e)/mul/inv.
// Sections store one value per simplex of the base; a valid section satisfies
// face(value(y), i) == value(face_i(y)).

template <class Th>
struct Section {
    PolyPtr base;
    std::vector<typename Th::Elt> table;  // indexed by SimplexIdx

    const typename Th::Elt& at(SimplexIdx s) const { return table[s]; }
    friend bool operator==(const Section& a, const Section& b) {
        return *a.base == *b.base && a.table == b.table;
    }
    friend auto operator<=>(const Section& a, const Section& b) { return a.table <=> b.table; }
};

template <class Th>
void check_section(const Th& th, const Section<Th>& v) {
    const Polyhedron& L = *v.base;
    require(v.table.size() == L.size(), "ShapeMismatch", "section table size");
    for (std::size_t s = 0; s < L.size(); ++s) {
        require(th.dim(v.table[s]) == L.dim_of((SimplexIdx)s), "ShapeMismatch",
                "value dimension at " + L.simplex_str((SimplexIdx)s));
        int d = L.dim_of((SimplexIdx)s);
        for (int i = 0; i <= d && d >= 1; ++i) {
            auto lhs = th.face(v.table[s], i);
            const auto& rhs = v.table[L.face((SimplexIdx)s, i)];
            require(lhs == rhs, "ShapeMismatch",
                    "face mismatch at " + L.simplex_str((SimplexIdx)s));
        }
    }
}

// restriction along a subcomplex
template <class Th>
Section<Th> restrict_section(const Section<Th>& v, const SubComplex& K, PolyPtr Kp) {
    Section<Th> out{Kp, {}};
    out.table.reserve(K.sub.size());
    for (std::size_t s = 0; s < K.sub.size(); ++s) out.table.push_back(v.table[K.parent_simplex[s]]);
    return out;
}

// v o f for a polyhedron morphism f : K -> L
template <class Th>
Section<Th> compose_section(const Th& th, const Section<Th>& v, const PolyMorphism& f, PolyPtr Kp) {
    require(*f.cod == *v.base, "DomainMismatch", "compose_section");
    Section<Th> out{Kp, {}};
    const Polyhedron& K = *f.dom;
    out.table.reserve(K.size());
    for (std::size_t x = 0; x < K.size(); ++x) {
        SimplexIdx y = f.image((SimplexIdx)x);
        const auto& yt = f.cod->simplices[y];
        std::vector<int> pos;
        for (VertexId w : K.simplices[x])
            pos.push_back((int)(std::find(yt.begin(), yt.end(), f.vmap[w]) - yt.begin()));
        auto val = v.table[y];
        auto J = collapse_word(pos);
        for (auto it = J.rbegin(); it != J.rend(); ++it) val = th.degen(val, *it);
        out.table.push_back(std::move(val));
    }
    return out;
}

// t_# for a per-dimension transform F commuting with faces
template <class ThB, class ThA, class Fn>
Section<ThB> pushforward(const Section<ThA>& v, Fn&& F) {
    Section<ThB> out{v.base, {}};
    out.table.reserve(v.table.size());
    for (std::size_t s = 0; s < v.table.size(); ++s)
        out.table.push_back(F(v.base->dim_of((SimplexIdx)s), v.table[s]));
    return out;
}

// sigma(v) = { y : v restricted to y-bar is not the unit }
template <class Th>
std::vector<SimplexIdx> support(const Th& th, const Section<Th>& v) {
    const Polyhedron& L = *v.base;
    std::vector<char> bad(L.size(), 0);
    for (std::size_t s = 0; s < L.size(); ++s)
        if (!th.is_unit(v.table[s])) bad[s] = 1;
    std::vector<SimplexIdx> out;
    for (std::size_t y = 0; y < L.size(); ++y) {
        const auto& t = L.simplices[y];
        bool hit = false;
        std::size_t n = t.size();
        for (std::uint64_t mask = 1; mask < (1ULL << n) && !hit; ++mask) {
            std::vector<int> key;
            for (std::size_t i = 0; i < n; ++i)
                if (mask & (1ULL << i)) key.push_back(t[i]);
            std::sort(key.begin(), key.end());
            hit = bad[L.by_set.at(key)];
        }
        if (hit) out.push_back((SimplexIdx)y);
    }
    return out;
}

// Yoneda: a section over y-bar is its value at the top simplex. The inverse
// spreads a dimension-matching element over the closure.
template <class Th>
Section<Th> yoneda_section(const Th& th, PolyPtr ybar, const typename Th::Elt& top_value) {
    const Polyhedron& C = *ybar;
    // the top simplex is the unique one of maximal dimension
    SimplexIdx top = (SimplexIdx)(C.size() - 1);
    require(th.dim(top_value) == C.dim_of(top), "ShapeMismatch", "yoneda value dimension");
    const auto& tt = C.simplices[top];
    Section<Th> out{ybar, {}};
    out.table.resize(C.size());
    for (std::size_t z = 0; z < C.size(); ++z) {
        // delete the positions of top's tuple not used by z, descending
        const auto& zt = C.simplices[z];
        std::vector<int> keep;
        for (VertexId v : zt)
            keep.push_back((int)(std::find(tt.begin(), tt.end(), v) - tt.begin()));
        auto val = top_value;
        for (int i = (int)tt.size() - 1; i >= 0; --i)
            if (std::find(keep.begin(), keep.end(), i) == keep.end()) val = th.face(val, i);
        out.table[z] = std::move(val);
    }
    return out;
}

// quasirestriction: the tuple of Yoneda values over T
template <class Th>
std::vector<typename Th::Elt> quasirestrict(const Section<Th>& v, const std::vector<SimplexIdx>& T) {
    std::vector<typename Th::Elt> out;
    out.reserve(T.size());
    for (SimplexIdx y : T) out.push_back(v.table[y]);
    return out;
}

// w o f for a quasisection w over L (tuple of Yoneda values per simplex of L):
// (w o f)_x = w_{f(x)} o f'_x, computed on Yoneda values.
template <class Th>
std::vector<typename Th::Elt> quasicompose(const Th& th, const std::vector<typename Th::Elt>& w,
                                           const PolyMorphism& f) {
    const Polyhedron& K = *f.dom;
    std::vector<typename Th::Elt> out;
    out.reserve(K.size());
    for (std::size_t x = 0; x < K.size(); ++x) {
        SimplexIdx y = f.image((SimplexIdx)x);
        const auto& yt = f.cod->simplices[y];
        std::vector<int> pos;
        for (VertexId v : K.simplices[x])
            pos.push_back((int)(std::find(yt.begin(), yt.end(), f.vmap[v]) - yt.begin()));
        auto val = w[y];
        auto J = collapse_word(pos);
        for (auto it = J.rbegin(); it != J.rend(); ++it) val = th.degen(val, *it);
        out.push_back(std::move(val));
    }
    return out;
}

// ---------------------------------------------------------------------------
// the theory of plain simplicial-set values

struct SSetTheory {
    const SimplicialSet* E;
    using Elt = SimplexElt;
    int dim(const Elt& e) const { return E->dim_of(e); }
    Elt face(const Elt& e, int i) const { return E->face(e, i); }
    Elt degen(const Elt& e, int i) const { return E->degen(e, i); }
    bool is_unit(const Elt& e) const { return E->is_marked(e); }
    Elt unit(int n) const { return E->marked(n); }
};

// all sections of E over L (finite enumeration, backtracking on face equations)
inline std::vector<Section<SSetTheory>> all_sections(const SimplicialSet& E, PolyPtr Lp) {
    const Polyhedron& L = *Lp;
    SSetTheory th{&E};
    std::vector<std::vector<SimplexElt>> options(L.size());
    std::vector<Section<SSetTheory>> out;
    std::vector<SimplexElt> table(L.size());
    std::function<void(std::size_t)> rec = [&](std::size_t s) {
        if (s == L.size()) {
            out.push_back(Section<SSetTheory>{Lp, table});
            return;
        }
        int d = L.dim_of((SimplexIdx)s);
        for (const auto& cand : alphabet(E, d)) {
            bool ok = true;
            for (int i = 0; i <= d && d >= 1 && ok; ++i)
                ok = (E.face(cand, i) == table[L.face((SimplexIdx)s, i)]);
            if (!ok) continue;
            table[s] = cand;
            rec(s + 1);
        }
        // the marked element is excluded from alphabet(); include it for pointed E
        if (E.pointed()) {
            SimplexElt cand = E.marked(d);
            bool ok = true;
            for (int i = 0; i <= d && d >= 1 && ok; ++i)
                ok = (E.face(cand, i) == table[L.face((SimplexIdx)s, i)]);
            if (ok) {
                table[s] = cand;
                rec(s + 1);
            }
        }
    };
    rec(0);
    return out;
}

// ---------------------------------------------------------------------------
// smash powers and skeleta

namespace detail {

// Eilenberg-Zilber normal form of a tuple of elements (coordinatewise ops):
// returns the jointly-nondegenerate core and the common degeneracy word.
inline std::pair<std::vector<SimplexElt>, std::vector<int>> tuple_normal_form(
    const SimplicialSet& E, std::vector<SimplexElt> t, int dim) {
    std::vector<int> J;
    bool changed = true;
    while (changed && dim > 0) {
        changed = false;
        for (int j = dim - 1; j >= 0; --j) {
            bool all = true;
            for (const auto& e : t)
                if (E.degen(E.face(e, j + 1), j) != e) {
                    all = false;
                    break;
                }
            if (all) {
                for (auto& e : t) e = E.face(e, j + 1);
                J.push_back(j);
                --dim;
                changed = true;
                break;
            }
        }
    }
    std::sort(J.rbegin(), J.rend());
    return {std::move(t), std::move(J)};
}

}  // namespace detail

// E wedge-power: cells are jointly nondegenerate tuples with no marked
// coordinate, plus the basepoint. E^{smash 0} is the 0-sphere.
// SmashData keeps the coordinate tuple of every cell (empty for basepoints).
struct SmashData {
    SimplicialSet set;
    int power = 0;
    std::vector<std::vector<SimplexElt>> cell_tuple;

    // the coordinate tuple of an arbitrary non-marked element
    std::vector<SimplexElt> tuple_of(const SimplicialSet& E, const SimplexElt& e) const {
        std::vector<SimplexElt> t = cell_tuple[e.cell];
        for (auto it = e.degens.rbegin(); it != e.degens.rend(); ++it)
            for (auto& coord : t) coord = E.degen(coord, *it);
        return t;
    }
    // the element with the given coordinates, or nullopt when marked
    std::optional<SimplexElt> elt_of(const SimplicialSet& E, std::vector<SimplexElt> t,
                                     int dim) const {
        for (const auto& coord : t)
            if (E.is_marked(coord)) return std::nullopt;
        auto [core, J] = detail::tuple_normal_form(E, std::move(t), dim);
        for (std::size_t c = 0; c < cell_tuple.size(); ++c)
            if (cell_tuple[c] == core && set.cell_dims[c] == dim - (int)J.size()) {
                SimplexElt e{(int)c, {}};
                for (auto it = J.rbegin(); it != J.rend(); ++it) e = set.degen(e, *it);
                return e;
            }
        fail("UnknownCell", "tuple does not name a smash cell");
    }
};

inline SmashData smash_power_data(const SimplicialSet& E, int s) {
    require(E.pointed(), "NotPointed", "smash power needs a basepoint");
    SmashData data;
    data.power = s;
    SimplicialSet& out = data.set;
    out.cell_ids.push_back("*");
    out.cell_dims.push_back(0);
    out.cell_faces.emplace_back();
    out.basepoint = 0;
    data.cell_tuple.emplace_back();
    if (s == 0) {
        out.cell_ids.push_back("-*");
        out.cell_dims.push_back(0);
        out.cell_faces.emplace_back();
        data.cell_tuple.emplace_back();
        return data;
    }

    std::map<std::vector<SimplexElt>, int> index;  // tuple -> cell
    std::vector<std::vector<SimplexElt>> tuples;
    int maxdim = E.dim() * s;
    for (int k = 0; k <= maxdim; ++k) {
        auto alpha = alphabet(E, k);
        std::vector<SimplexElt> t(s);
        std::function<void(int)> rec = [&](int pos) {
            if (pos == s) {
                auto [core, J] = detail::tuple_normal_form(E, t, k);
                if (!J.empty()) return;  // jointly degenerate
                tuples.push_back(t);
                return;
            }
            for (const auto& e : alpha) {
                t[pos] = e;
                rec(pos + 1);
            }
        };
        rec(0);
    }
    std::sort(tuples.begin(), tuples.end());
    for (const auto& t : tuples) {
        index[t] = (int)out.cell_ids.size();
        std::string id = "(";
        for (int i = 0; i < s; ++i) {
            if (i) id += ",";
            id += E.str(t[i]);
        }
        id += ")";
        out.cell_ids.push_back(id);
        out.cell_dims.push_back(E.dim_of(t[0]));
        out.cell_faces.emplace_back();
        data.cell_tuple.push_back(t);
    }
    // faces
    for (const auto& t : tuples) {
        int c = index.at(t);
        int d = out.cell_dims[c];
        for (int i = 0; i <= d && d >= 1; ++i) {
            std::vector<SimplexElt> ft;
            bool dead = false;
            for (const auto& e : t) {
                auto fe = E.face(e, i);
                if (E.is_marked(fe)) dead = true;
                ft.push_back(std::move(fe));
            }
            if (dead) {
                out.cell_faces[c].push_back(out.marked(d - 1));
                continue;
            }
            auto [core, J] = detail::tuple_normal_form(E, ft, d - 1);
            SimplexElt img{index.at(core), {}};
            for (auto it = J.rbegin(); it != J.rend(); ++it) img = out.degen(img, *it);
            out.cell_faces[c].push_back(img);
        }
    }
    return data;
}

inline SimplicialSet smash_power(const SimplicialSet& E, int s) {
    return smash_power_data(E, s).set;
}

inline SimplicialSet skeleton(const SimplicialSet& E, int m) {
    require(m >= 0, "IndexOutOfRange", "skeleton bound must be a natural");
    SimplicialSet out;
    std::vector<int> remap(E.ncells(), -1);
    for (std::size_t c = 0; c < E.ncells(); ++c) {
        if (E.cell_dims[c] > m) continue;
        remap[c] = (int)out.cell_ids.size();
        out.cell_ids.push_back(E.cell_ids[c]);
        out.cell_dims.push_back(E.cell_dims[c]);
        out.cell_faces.emplace_back();
    }
    for (std::size_t c = 0; c < E.ncells(); ++c) {
        if (remap[c] < 0) continue;
        for (const auto& f : E.cell_faces[c]) {
            SimplexElt g = f;
            require(remap[g.cell] >= 0, "IndexOutOfRange", "skeleton lost a face");
            g.cell = remap[g.cell];
            out.cell_faces[remap[c]].push_back(g);
        }
    }
    if (E.basepoint && remap[*E.basepoint] >= 0) out.basepoint = remap[*E.basepoint];
    return out;
}

// the minimal simplicial circle: one vertex, one 1-cell
inline SimplicialSet minimal_s1() {
    SimplicialSet E;
    E.cell_ids = {"*", "a"};
    E.cell_dims = {0, 1};
    E.cell_faces = {{}, {SimplexElt{0, {}}, SimplexElt{0, {}}}};
    E.basepoint = 0;
    return E;
}

// the minimal simplicial 2-sphere: one vertex, one 2-cell
inline SimplicialSet minimal_s2() {
    SimplicialSet E;
    E.cell_ids = {"*", "w"};
    E.cell_dims = {0, 2};
    SimplexElt s0star{0, {0}};
    E.cell_faces = {{}, {s0star, s0star, s0star}};
    E.basepoint = 0;
    return E;
}

// a wedge of k minimal 2-spheres: one vertex, k 2-cells
inline SimplicialSet wedge_s2(int k) {
    SimplicialSet E;
    E.cell_ids = {"*"};
    E.cell_dims = {0};
    E.cell_faces = {{}};
    E.basepoint = 0;
    SimplexElt s0star{0, {0}};
    for (int i = 0; i < k; ++i) {
        E.cell_ids.push_back("w" + std::to_string(i));
        E.cell_dims.push_back(2);
        E.cell_faces.push_back({s0star, s0star, s0star});
    }
    return E;
}

}  // namespace mbs

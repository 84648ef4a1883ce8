#pragma once

// Free groups on pointed sets, the free simplicial group FE, integral group
// rings, the Magnus expansion into truncated noncommutative series, the
// filtration calculus (augmentation powers, lower central series, eta and
// theta), Fox derivatives with constructive augmentation-power
// factorizations, and the degree-s splitting of the group ring of FE.

#include "abelian.hpp"

namespace mbs {

// ---------------------------------------------------------------------------
// reduced words

template <class Gen>
struct FreeWord {
    std::vector<std::pair<Gen, int>> letters;  // nonzero exponents, adjacent gens distinct

    static FreeWord one() { return {}; }
    static FreeWord gen(const Gen& g, int e = 1) {
        FreeWord w;
        w.push(g, e);
        return w;
    }
    bool is_one() const { return letters.empty(); }
    int length() const {
        int n = 0;
        for (auto& [g, e] : letters) n += std::abs(e);
        return n;
    }
    void push(const Gen& g, int e) {
        if (e == 0) return;
        if (!letters.empty() && letters.back().first == g) {
            letters.back().second += e;
            if (letters.back().second == 0) letters.pop_back();
        } else {
            letters.push_back({g, e});
        }
    }
    friend FreeWord operator*(const FreeWord& a, const FreeWord& b) {
        FreeWord r = a;
        for (auto& [g, e] : b.letters) r.push(g, e);
        return r;
    }
    FreeWord inverse() const {
        FreeWord r;
        for (auto it = letters.rbegin(); it != letters.rend(); ++it) r.push(it->first, -it->second);
        return r;
    }
    friend FreeWord commutator(const FreeWord& a, const FreeWord& b) {
        return a * b * a.inverse() * b.inverse();
    }
    friend auto operator<=>(const FreeWord&, const FreeWord&) = default;
};

// a tuple of free words: an element of a finite product of free groups
template <class Gen>
struct ProdWord {
    std::vector<FreeWord<Gen>> slots;
    friend ProdWord operator*(const ProdWord& a, const ProdWord& b) {
        require(a.slots.size() == b.slots.size(), "ShapeMismatch", "product group arity");
        ProdWord r = a;
        for (std::size_t i = 0; i < r.slots.size(); ++i) r.slots[i] = r.slots[i] * b.slots[i];
        return r;
    }
    bool is_one() const {
        for (auto& w : slots)
            if (!w.is_one()) return false;
        return true;
    }
    friend auto operator<=>(const ProdWord&, const ProdWord&) = default;
};

// ---------------------------------------------------------------------------
// integral group rings (finite formal sums)

template <class T>
struct GroupRingElt {
    std::map<T, i64> terms;  // no zero coefficients

    static GroupRingElt zero() { return {}; }
    static GroupRingElt of(const T& g, i64 c = 1) {
        GroupRingElt r;
        r.add_term(g, c);
        return r;
    }
    void add_term(const T& g, i64 c) {
        if (!c) return;
        auto [it, fresh] = terms.emplace(g, 0);
        it->second += c;
        if (it->second == 0) terms.erase(it);
    }
    bool is_zero() const { return terms.empty(); }
    i64 aug() const {
        i64 s = 0;
        for (auto& [g, c] : terms) s += c;
        return s;
    }
    GroupRingElt& operator+=(const GroupRingElt& o) {
        for (auto& [g, c] : o.terms) add_term(g, c);
        return *this;
    }
    friend GroupRingElt operator+(GroupRingElt a, const GroupRingElt& b) { return a += b; }
    friend GroupRingElt operator-(const GroupRingElt& a, const GroupRingElt& b) {
        GroupRingElt r = a;
        for (auto& [g, c] : b.terms) r.add_term(g, -c);
        return r;
    }
    GroupRingElt scaled(i64 k) const {
        GroupRingElt r;
        if (k)
            for (auto& [g, c] : terms) r.terms.emplace(g, c * k);
        return r;
    }
    // multiplication with an explicit group law
    template <class Mul>
    GroupRingElt mul_with(const GroupRingElt& o, Mul&& mul) const {
        GroupRingElt r;
        for (auto& [g, c] : terms)
            for (auto& [h, d] : o.terms) r.add_term(mul(g, h), c * d);
        return r;
    }
    friend GroupRingElt operator*(const GroupRingElt& a, const GroupRingElt& b) {
        return a.mul_with(b, [](const T& g, const T& h) { return g * h; });
    }
    // the additive map induced by g -> fn(g)
    template <class Fn>
    auto apply(Fn&& fn) const {
        GroupRingElt<std::decay_t<decltype(fn(terms.begin()->first))>> r;
        for (auto& [g, c] : terms) r.add_term(fn(g), c);
        return r;
    }
    friend auto operator<=>(const GroupRingElt&, const GroupRingElt&) = default;
};

template <class T>
GroupRingElt<T> ring_unit_minus(const T& g, const T& unit) {
    GroupRingElt<T> r = GroupRingElt<T>::of(g);
    r.add_term(unit, -1);
    return r;
}

// ---------------------------------------------------------------------------
// truncated noncommutative series (Magnus target); slots commute with each
// other, letters within a slot do not

template <class Gen>
struct NCSeries {
    using Mono = std::vector<std::pair<int, Gen>>;
    int trunc = 0;
    std::map<Mono, i64> terms;

    static Mono canon(Mono m) {
        std::stable_sort(m.begin(), m.end(),
                         [](const auto& a, const auto& b) { return a.first < b.first; });
        return m;
    }
    static NCSeries zero(int N) { return NCSeries{N, {}}; }
    static NCSeries one(int N) {
        NCSeries r{N, {}};
        r.terms[{}] = 1;
        return r;
    }
    void add_term(Mono m, i64 c) {
        if (!c || (int)m.size() > trunc) return;
        m = canon(std::move(m));
        auto [it, fresh] = terms.emplace(std::move(m), 0);
        it->second += c;
        if (it->second == 0) terms.erase(it);
    }
    bool is_zero() const { return terms.empty(); }
    friend NCSeries operator+(NCSeries a, const NCSeries& b) {
        for (auto& [m, c] : b.terms) a.add_term(m, c);
        return a;
    }
    friend NCSeries operator-(NCSeries a, const NCSeries& b) {
        for (auto& [m, c] : b.terms) a.add_term(m, -c);
        return a;
    }
    NCSeries scaled(i64 k) const {
        NCSeries r{trunc, {}};
        if (k)
            for (auto& [m, c] : terms) r.terms.emplace(m, c * k);
        return r;
    }
    friend NCSeries operator*(const NCSeries& a, const NCSeries& b) {
        NCSeries r{a.trunc, {}};
        for (auto& [m, c] : a.terms) {
            if ((int)m.size() > a.trunc) continue;
            for (auto& [n, d] : b.terms) {
                if ((int)(m.size() + n.size()) > a.trunc) continue;
                Mono mn = m;
                mn.insert(mn.end(), n.begin(), n.end());
                r.add_term(std::move(mn), c * d);
            }
        }
        return r;
    }
    friend bool operator==(const NCSeries& a, const NCSeries& b) {
        return a.trunc == b.trunc && a.terms == b.terms;
    }

    // least total degree of a surviving monomial
    std::optional<int> min_degree() const {
        std::optional<int> best;
        for (auto& [m, c] : terms)
            if (!best || (int)m.size() < *best) best = (int)m.size();
        return best;
    }
    std::string str(const std::function<std::string(const Gen&)>& gen_str) const {
        std::string out;
        for (auto& [m, c] : terms) {
            if (m.empty())
                out += "1";
            else
                for (auto& [slot, g] : m) out += "X[" + std::to_string(slot) + "," + gen_str(g) + "]";
            out += ":" + std::to_string(c) + "\n";
        }
        return out;
    }
};

namespace detail {
inline i64 binom_i64(i64 n, i64 k) {
    // generalized binomial for integer n (possibly negative), k >= 0
    i64 num = 1, den = 1;
    for (i64 i = 0; i < k; ++i) {
        num *= (n - i);
        den *= (i + 1);
    }
    return num / den;
}
}  // namespace detail

// Magnus expansion of one word into the given slot: each generator g maps to
// 1 + X_g, inverses to the truncated geometric series.
template <class Gen>
NCSeries<Gen> magnus_word(const FreeWord<Gen>& w, int slot, int N) {
    auto r = NCSeries<Gen>::one(N);
    for (auto& [g, e] : w.letters) {
        NCSeries<Gen> f = NCSeries<Gen>::zero(N);
        for (int k = 0; k <= N; ++k) {
            typename NCSeries<Gen>::Mono m(k, {slot, g});
            f.add_term(std::move(m), detail::binom_i64(e, k));
        }
        r = r * f;
    }
    return r;
}

template <class Gen>
NCSeries<Gen> magnus(const ProdWord<Gen>& t, int N) {
    auto r = NCSeries<Gen>::one(N);
    for (std::size_t i = 0; i < t.slots.size(); ++i) r = r * magnus_word(t.slots[i], (int)i, N);
    return r;
}

template <class Gen>
NCSeries<Gen> magnus(const FreeWord<Gen>& w, int N) {
    return magnus_word(w, 0, N);
}

// least total degree of a nonzero monomial of sum m_g magnus(g), capped at N
template <class Gen>
CapNat aug_degree(const GroupRingElt<ProdWord<Gen>>& V, int N) {
    if (V.is_zero()) return CapNat::infinity();
    auto acc = NCSeries<Gen>::zero(N);
    for (auto& [g, c] : V.terms) acc = acc + magnus(g, N).scaled(c);
    auto d = acc.min_degree();
    if (!d) return CapNat::at_least(N + 1);
    return CapNat::exact(*d);
}

template <class Gen>
CapNat aug_degree(const GroupRingElt<FreeWord<Gen>>& V, int N) {
    GroupRingElt<ProdWord<Gen>> W;
    for (auto& [g, c] : V.terms) W.add_term(ProdWord<Gen>{{g}}, c);
    return aug_degree(W, N);
}

// ---------------------------------------------------------------------------
// lower central series via Magnus order

template <class Gen>
bool gamma_member(const FreeWord<Gen>& w, int s) {
    require(s >= 1, "IndexOutOfRange", "gamma_s needs s >= 1");
    if (s == 1) return true;
    auto V = ring_unit_minus(w, FreeWord<Gen>::one());
    return aug_degree(V, s - 1).ge(s);  // no surviving monomial below s
}

// nested commutator of weight s over the alphabet
template <class Gen>
FreeWord<Gen> gamma_sample(const std::vector<Gen>& alphabet, int s, Rng& rng) {
    require(s >= 1 && !alphabet.empty(), "IndexOutOfRange", "gamma_sample");
    if (s == 1) {
        auto g = alphabet[rng.below(alphabet.size())];
        return FreeWord<Gen>::gen(g, rng.coin() ? 1 : -1);
    }
    int left = 1 + (int)rng.below((std::uint64_t)(s - 1));
    auto u = gamma_sample(alphabet, left, rng);
    auto v = gamma_sample(alphabet, s - left, rng);
    return commutator(u, v);
}

// ---------------------------------------------------------------------------
// the free simplicial group G = FE: dimension-tagged words over alphabet(E, n)

struct GElt {
    int dim = 0;
    FreeWord<SimplexElt> word;
    bool is_one() const { return word.is_one(); }
    friend auto operator<=>(const GElt&, const GElt&) = default;
};

struct FreeTheory {
    const SimplicialSet* E;
    using Elt = GElt;

    int dim(const Elt& e) const { return e.dim; }
    Elt unit(int n) const { return GElt{n, {}}; }
    bool is_unit(const Elt& e) const { return e.is_one(); }
    Elt mul(const Elt& a, const Elt& b) const {
        require(a.dim == b.dim, "ShapeMismatch", "G mul");
        return GElt{a.dim, a.word * b.word};
    }
    Elt inv(const Elt& a) const { return GElt{a.dim, a.word.inverse()}; }

    Elt face(const Elt& e, int i) const {
        FreeWord<SimplexElt> out;
        for (auto& [g, ex] : e.word.letters) {
            SimplexElt fg = E->face(g, i);
            if (!E->is_marked(fg)) out.push(fg, ex);
        }
        return GElt{e.dim - 1, std::move(out)};
    }
    Elt degen(const Elt& e, int i) const {
        FreeWord<SimplexElt> out;
        for (auto& [g, ex] : e.word.letters) out.push(E->degen(g, i), ex);
        return GElt{e.dim + 1, std::move(out)};
    }
    Elt sub(const Elt&, const Elt&) const { fail("ShapeMismatch", "G is not abelian"); }
};

using GSection = Section<FreeTheory>;
using GEnsemble = GroupRingElt<GSection>;

inline GSection section_mul(const FreeTheory& th, const GSection& a, const GSection& b) {
    GSection r = a;
    for (std::size_t s = 0; s < r.table.size(); ++s) r.table[s] = th.mul(r.table[s], b.table[s]);
    return r;
}
inline GSection section_inv(const FreeTheory& th, const GSection& a) {
    GSection r = a;
    for (auto& v : r.table) v = th.inv(v);
    return r;
}
inline GSection unit_section(const FreeTheory& th, PolyPtr L) {
    GSection r{L, {}};
    for (std::size_t s = 0; s < L->size(); ++s) r.table.push_back(th.unit(L->dim_of((SimplexIdx)s)));
    return r;
}
inline GSection section_commutator(const FreeTheory& th, const GSection& a, const GSection& b) {
    return section_mul(th, section_mul(th, a, b),
                       section_mul(th, section_inv(th, a), section_inv(th, b)));
}

// ---------------------------------------------------------------------------
// eta and theta

// the quasirestriction over all of L, one slot per simplex
inline ProdWord<SimplexElt> full_quasirestriction(const GSection& v) {
    ProdWord<SimplexElt> t;
    t.slots.reserve(v.table.size());
    for (auto& e : v.table) t.slots.push_back(e.word);
    return t;
}

inline CapNat eta(const GEnsemble& V, int N) {
    if (V.is_zero()) return CapNat::infinity();
    GroupRingElt<ProdWord<SimplexElt>> W;
    for (auto& [v, c] : V.terms) W.add_term(full_quasirestriction(v), c);
    return aug_degree(W, N);
}

// theta: least #T with a surviving quasirestriction; exhaustive up to the cap
template <class Th>
CapNat theta(const GroupRingElt<Section<Th>>& V, int cap) {
    if (V.is_zero()) return CapNat::infinity();
    std::size_t n = V.terms.begin()->first.table.size();
    for (int t = 0; t <= cap; ++t) {
        bool found = false;
        for_each_subset(n, (std::size_t)t, [&](const std::vector<std::size_t>& idx) {
            if (found) return;
            std::map<std::vector<typename Th::Elt>, i64> acc;
            for (auto& [v, c] : V.terms) {
                std::vector<typename Th::Elt> key;
                key.reserve(idx.size());
                for (auto i : idx) key.push_back(v.table[i]);
                auto [it, fresh] = acc.emplace(std::move(key), 0);
                it->second += c;
            }
            for (auto& [k, c] : acc)
                if (c != 0) {
                    found = true;
                    return;
                }
        });
        if (found) return CapNat::exact(t);
    }
    return CapNat::at_least(cap + 1);
}

// V restricted to the quasisection tuple over T (for product-group reads)
inline GroupRingElt<ProdWord<SimplexElt>> quasirestrict_ring(const GEnsemble& V,
                                                             const std::vector<SimplexIdx>& T) {
    GroupRingElt<ProdWord<SimplexElt>> out;
    for (auto& [v, c] : V.terms) {
        ProdWord<SimplexElt> t;
        for (SimplexIdx y : T) t.slots.push_back(v.table[y].word);
        out.add_term(std::move(t), c);
    }
    return out;
}

// ensemble product in <G(L)> (sections multiply pointwise)
inline GEnsemble ensemble_mul(const FreeTheory& th, const GEnsemble& a, const GEnsemble& b) {
    return a.mul_with(b, [&](const GSection& u, const GSection& v) { return section_mul(th, u, v); });
}

// <v> - 1 as an ensemble
inline GEnsemble ensemble_aug_gen(const FreeTheory& th, const GSection& v) {
    GEnsemble r = GEnsemble::of(v);
    r.add_term(unit_section(th, v.base), -1);
    return r;
}

// the canonical sections i_#(v) for set-valued sections v of E, used as a
// sampling pool for the section group G(L)
inline std::vector<GSection> g_section_pool(const FreeTheory& th, const SimplicialSet& E,
                                            PolyPtr L) {
    std::vector<GSection> out;
    for (auto& v : all_sections(E, L)) {
        GSection g{L, {}};
        g.table.reserve(v.table.size());
        bool unit = true;
        for (std::size_t s = 0; s < v.table.size(); ++s) {
            int d = L->dim_of((SimplexIdx)s);
            if (E.is_marked(v.table[s]))
                g.table.push_back(th.unit(d));
            else {
                g.table.push_back(GElt{d, FreeWord<SimplexElt>::gen(v.table[s])});
                unit = false;
            }
        }
        if (!unit) out.push_back(std::move(g));
    }
    return out;
}

// sampled generator of I_s: a product of (<v_l> - 1) with v_l valued in the
// gamma_{s_l} subgroup (pointwise nested commutators of pool sections) and
// sum s_l >= s; k = 0 with s = 0 gives <1>.
inline GEnsemble is_generator_sample(const FreeTheory& th, PolyPtr L,
                                     const std::vector<GSection>& pool, int s, Rng& rng) {
    require(!pool.empty(), "EmptyPick", "section pool");
    auto gamma_section = [&](int weight) {
        std::function<GSection(int)> rec = [&](int wgt) -> GSection {
            if (wgt == 1) {
                auto v = pool[rng.below(pool.size())];
                return rng.coin() ? v : section_inv(th, v);
            }
            int left = 1 + (int)rng.below((std::uint64_t)(wgt - 1));
            return section_commutator(th, rec(left), rec(wgt - left));
        };
        return rec(weight);
    };
    GEnsemble out = GEnsemble::of(unit_section(th, L));
    int remaining = s;
    int k = std::max(1, s);
    if (s == 0) k = (int)rng.below(2);  // sometimes the bare unit
    for (int l = 0; l < k; ++l) {
        int sl = (l + 1 == k) ? std::max(1, remaining) : 1 + (int)rng.below((std::uint64_t)std::max(1, remaining));
        remaining -= sl;
        out = ensemble_mul(th, out, ensemble_aug_gen(th, gamma_section(sl)));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Fox derivatives and augmentation-power factorizations

// left Fox derivative with respect to a generator: d(uv) = d(u) + <u> d(v)
template <class Gen>
GroupRingElt<FreeWord<Gen>> fox(const FreeWord<Gen>& w, const Gen& x) {
    GroupRingElt<FreeWord<Gen>> out;
    FreeWord<Gen> prefix;
    for (auto& [g, e] : w.letters) {
        if (g == x) {
            if (e > 0) {
                for (int i = 0; i < e; ++i)
                    out.add_term(prefix * FreeWord<Gen>::gen(g, i), 1);
            } else {
                for (int i = 1; i <= -e; ++i)
                    out.add_term(prefix * FreeWord<Gen>::gen(g, -i), -1);
            }
        }
        prefix = prefix * FreeWord<Gen>::gen(g, e);
    }
    return out;
}

// one product term of a factorization: coeff * prod_t (<factor_t> - 1)
template <class Gen>
struct AugTerm {
    i64 coeff = 0;
    std::vector<FreeWord<Gen>> factors;
};

template <class Gen>
GroupRingElt<FreeWord<Gen>> expand_aug_terms(const std::vector<AugTerm<Gen>>& terms) {
    GroupRingElt<FreeWord<Gen>> out;
    for (auto& t : terms) {
        auto acc = GroupRingElt<FreeWord<Gen>>::of(FreeWord<Gen>::one(), t.coeff);
        for (auto& f : t.factors)
            acc = acc * ring_unit_minus(f, FreeWord<Gen>::one());
        out += acc;
    }
    return out;
}

// Writes xi (with aug_degree >= s, s >= 1) as a sum of products of exactly s
// augmentation factors, by iterated Fox decomposition xi = sum_j (d_j xi)(x_j - 1).
template <class Gen>
std::vector<AugTerm<Gen>> factor_aug(const GroupRingElt<FreeWord<Gen>>& xi,
                                     const std::vector<Gen>& gens, int s) {
    std::vector<AugTerm<Gen>> out;
    if (xi.is_zero()) return out;
    require(xi.aug() == 0, "DegreeTooLow", "factor_aug of an element with nonzero augmentation");
    if (s <= 1) {
        for (auto& [g, c] : xi.terms)
            if (!g.is_one()) out.push_back({c, {g}});
        return out;
    }
    for (const Gen& x : gens) {
        GroupRingElt<FreeWord<Gen>> eta;
        for (auto& [g, c] : xi.terms) eta += fox(g, x).scaled(c);
        if (eta.is_zero()) continue;
        auto sub = factor_aug(eta, gens, s - 1);
        for (auto& t : sub) {
            t.factors.push_back(FreeWord<Gen>::gen(x));
            out.push_back(std::move(t));
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// the degree-s decomposition of <FE>: k_s and split_Ds

// alphabet table of G_k = F(alphabet(E, k)), shared by the maps below
struct FreeRingContext {
    const SimplicialSet* E;
    int dim;
    std::vector<SimplexElt> gens;  // alphabet(E, dim)

    FreeRingContext(const SimplicialSet& e, int k) : E(&e), dim(k), gens(alphabet(e, k)) {}
};

// k_s : <E^{smash s}>_tri -> <G>_tri^s on reduced-chain coordinates
inline GroupRingElt<FreeWord<SimplexElt>> k_s_map(const SimplicialSet& E, const SmashData& sm,
                                                  const AbElt& x) {
    GroupRingElt<FreeWord<SimplexElt>> out;
    (void)E;
    auto basis = alphabet(sm.set, x.dim);
    require((int)basis.size() == (int)x.c.size(), "ShapeMismatch", "k_s coordinates");
    for (std::size_t b = 0; b < basis.size(); ++b) {
        if (!x.c[b]) continue;
        auto tup = sm.tuple_of(sm.set, basis[b]);
        auto acc = GroupRingElt<FreeWord<SimplexElt>>::of(FreeWord<SimplexElt>::one(), x.c[b]);
        for (auto& e : tup)
            acc = acc * ring_unit_minus(FreeWord<SimplexElt>::gen(e), FreeWord<SimplexElt>::one());
        out += acc;
    }
    return out;
}

// the degree-s Magnus part of xi read as an element of <E^{smash s}>_tri
inline AbElt magnus_part_as_smash(const SimplicialSet& E, const SmashData& sm, int dim,
                                  const GroupRingElt<FreeWord<SimplexElt>>& xi, int s) {
    auto basis = alphabet(sm.set, dim);
    AbElt out{dim, std::vector<i64>(basis.size(), 0)};
    auto series = NCSeries<SimplexElt>::zero(s);
    for (auto& [g, c] : xi.terms) series = series + magnus(g, s).scaled(c);
    for (auto& [m, c] : series.terms) {
        if ((int)m.size() != s) continue;
        std::vector<SimplexElt> tup;
        tup.reserve(m.size());
        for (auto& [slot, g] : m) tup.push_back(g);
        auto elt = sm.elt_of(E, std::move(tup), dim);
        require(elt.has_value(), "ShapeMismatch", "marked coordinate in a Magnus monomial");
        auto it = std::lower_bound(basis.begin(), basis.end(), *elt);
        require(it != basis.end() && *it == *elt, "UnknownCell", "smash basis lookup");
        out.c[it - basis.begin()] += c;
    }
    return out;
}

struct SplitResult {
    GroupRingElt<FreeWord<SimplexElt>> component;  // in D^s = im k_s
    AbElt smash_coords;                            // its <E^{smash s}>_tri coordinates
    GroupRingElt<FreeWord<SimplexElt>> remainder;  // in degree >= s+1
};

// <G>^s_tri = D^s (+) <G>^{s+1}_tri realized constructively
inline SplitResult split_Ds(const SimplicialSet& E, const SmashData& sm, int dim,
                            const GroupRingElt<FreeWord<SimplexElt>>& x, int s, int N) {
    require(aug_degree(x, s - 1 >= 0 ? s - 1 : 0).ge(s), "DegreeTooLow",
            "split_Ds input below degree s");
    SplitResult r;
    r.smash_coords = magnus_part_as_smash(E, sm, dim, x, s);
    r.component = k_s_map(E, sm, r.smash_coords);
    r.remainder = x - r.component;
    require(aug_degree(r.remainder, std::max(N, s)).ge(s + 1), "DegreeTooLow",
            "split_Ds remainder below degree s+1");
    return r;
}

// ---------------------------------------------------------------------------
// fusion: <G(L)> -> <G>(L), generic over the group theory

// dimension-tagged element of the simplicial ring <G>
template <class GTh>
struct RingEltOf {
    int dim = 0;
    GroupRingElt<typename GTh::Elt> val;
    friend auto operator<=>(const RingEltOf&, const RingEltOf&) = default;
};

template <class GTh>
struct RingTheoryOf {
    GTh g;
    using Elt = RingEltOf<GTh>;

    int dim(const Elt& e) const { return e.dim; }
    Elt face(const Elt& e, int i) const {
        return {e.dim - 1, e.val.apply([&](const typename GTh::Elt& k) { return g.face(k, i); })};
    }
    Elt degen(const Elt& e, int i) const {
        return {e.dim + 1, e.val.apply([&](const typename GTh::Elt& k) { return g.degen(k, i); })};
    }
    Elt unit(int n) const {
        return {n, GroupRingElt<typename GTh::Elt>::of(g.unit(n))};
    }
    bool is_unit(const Elt& e) const {
        return e.val == GroupRingElt<typename GTh::Elt>::of(g.unit(e.dim));
    }
    Elt sub(Elt a, const Elt& b) const {
        require(a.dim == b.dim, "ShapeMismatch", "ring sub");
        return {a.dim, a.val - b.val};
    }
};

using GRingTheory = RingTheoryOf<FreeTheory>;
using GRingElt = RingEltOf<FreeTheory>;
using GRingSection = Section<GRingTheory>;

// J(<v>) = j o v pointwise, extended additively
template <class GTh>
Section<RingTheoryOf<GTh>> fusion(const GTh&, PolyPtr L,
                                  const GroupRingElt<Section<GTh>>& V) {
    Section<RingTheoryOf<GTh>> out{L, {}};
    out.table.resize(L->size());
    for (std::size_t s = 0; s < L->size(); ++s) out.table[s].dim = L->dim_of((SimplexIdx)s);
    for (auto& [v, c] : V.terms)
        for (std::size_t s = 0; s < v.table.size(); ++s) out.table[s].val.add_term(v.table[s], c);
    return out;
}

// the inverse of fusion over the closure of one simplex (top-value read)
template <class GTh>
GroupRingElt<Section<GTh>> fusion_inverse_on_closure(const GTh& th, PolyPtr ybar,
                                                     const GroupRingElt<typename GTh::Elt>& top) {
    GroupRingElt<Section<GTh>> out;
    for (auto& [g, c] : top.terms) out.add_term(yoneda_section(th, ybar, g), c);
    return out;
}

// ---------------------------------------------------------------------------
// claim harnesses on abstract free groups (integer generator alphabets)

using IntWord = FreeWord<int>;
using IntTuple = ProdWord<int>;
using IntRing = GroupRingElt<IntWord>;
using IntTupleRing = GroupRingElt<IntTuple>;

inline IntWord random_word(Rng& rng, int alphabet, int maxlen) {
    IntWord w;
    int len = (int)rng.below((std::uint64_t)maxlen + 1);
    for (int i = 0; i < len; ++i) w.push((int)rng.below((std::uint64_t)alphabet), rng.coin() ? 1 : -1);
    return w;
}

// a random element of the augmentation ideal of one factor
inline IntRing random_aug_elt(Rng& rng, int alphabet, int maxlen, int terms) {
    IntRing out;
    for (int t = 0; t < terms; ++t) {
        auto w = random_word(rng, alphabet, maxlen);
        i64 c = rng.range(-2, 2);
        out += ring_unit_minus(w, IntWord::one()).scaled(c);
    }
    return out;
}

struct CheckOutcome {
    bool pass = true;
    int samples = 0;
    std::string counterexample;

    void expect(bool ok, const std::string& what) {
        ++samples;
        if (!ok && pass) {
            pass = false;
            counterexample = what;
        }
    }
};

// (6.1): sampled elements of (+)_{#J >= s} S(J) lie in every ker<p_J'> with
// #J' < s and have augmentation degree >= s.
inline CheckOutcome check_6_1(const std::vector<int>& factor_alphabets, int s, int nsamples,
                              Rng& rng) {
    CheckOutcome out;
    int arity = (int)factor_alphabets.size();
    if (s == 0) return out;  // vacuous
    std::vector<std::vector<int>> big_js;
    for (std::uint64_t mask = 0; mask < (1ULL << arity); ++mask) {
        std::vector<int> J;
        for (int i = 0; i < arity; ++i)
            if (mask & (1ULL << i)) J.push_back(i);
        if ((int)J.size() >= s) big_js.push_back(J);
    }
    if (big_js.empty()) return out;
    for (int n = 0; n < nsamples; ++n) {
        IntTupleRing x;
        const auto& J = big_js[rng.below(big_js.size())];
        // tensor product of augmentation elements in the J slots
        IntTupleRing acc = IntTupleRing::of(IntTuple{std::vector<IntWord>((std::size_t)arity)});
        for (int i : J) {
            auto a = random_aug_elt(rng, factor_alphabets[i], 3, 2);
            IntTupleRing slot;
            for (auto& [w, c] : a.terms) {
                IntTuple t{std::vector<IntWord>((std::size_t)arity)};
                t.slots[i] = w;
                slot.add_term(t, c);
            }
            acc = acc * slot;
        }
        x += acc;
        if (x.is_zero()) continue;
        // kernel membership for every projection with #J' < s
        for (std::uint64_t mask = 0; mask < (1ULL << arity); ++mask) {
            std::vector<int> Jp;
            for (int i = 0; i < arity; ++i)
                if (mask & (1ULL << i)) Jp.push_back(i);
            if ((int)Jp.size() >= s) continue;
            auto proj = x.apply([&](const IntTuple& t) {
                IntTuple r;
                for (int i : Jp) r.slots.push_back(t.slots[i]);
                return r;
            });
            out.expect(proj.is_zero(), "projection does not vanish");
        }
        out.expect(aug_degree(x, s).ge(s), "degree below s");
    }
    return out;
}

// (8.1): Q(<v>) = prod_t (1 + a_t(v)) with additive a_t given on generators;
// Q vanishes on sampled generators of the (r+1)-st augmentation power.
struct AffineProductQ {
    int r = 0, trunc = 0;
    std::vector<std::vector<NCSeries<int>>> images;  // images[t][gen]

    NCSeries<int> a(int t, const IntWord& v) const {
        auto acc = NCSeries<int>::zero(trunc);
        for (auto& [g, e] : v.letters) acc = acc + images[t][(std::size_t)g].scaled(e);
        return acc;
    }
    NCSeries<int> q_of_word(const IntWord& v) const {
        auto acc = NCSeries<int>::one(trunc);
        for (int t = 0; t < r; ++t) acc = acc * (NCSeries<int>::one(trunc) + a(t, v));
        return acc;
    }
    NCSeries<int> q(const IntRing& x) const {
        auto acc = NCSeries<int>::zero(trunc);
        for (auto& [v, c] : x.terms) acc = acc + q_of_word(v).scaled(c);
        return acc;
    }
};

inline AffineProductQ random_affine_q(Rng& rng, int alphabet, int r, int trunc) {
    AffineProductQ Q{r, trunc, {}};
    Q.images.resize((std::size_t)r);
    for (int t = 0; t < r; ++t)
        for (int g = 0; g < alphabet; ++g) {
            auto h = NCSeries<int>::zero(trunc);
            int nterms = 1 + (int)rng.below(2);
            for (int i = 0; i < nterms; ++i) {
                typename NCSeries<int>::Mono m;
                int deg = 1 + (int)rng.below(2);
                for (int d = 0; d < deg; ++d) m.push_back({0, (int)rng.below((std::uint64_t)alphabet)});
                h.add_term(std::move(m), rng.range(-2, 2));
            }
            Q.images[t].push_back(h);
        }
    return Q;
}

inline CheckOutcome check_8_1(int alphabet, int r, int nsamples, Rng& rng) {
    CheckOutcome out;
    auto Q = random_affine_q(rng, alphabet, r, 2 * r + 2);
    for (int n = 0; n < nsamples; ++n) {
        // a generator of the (r+1)-st power
        auto x = IntRing::of(IntWord::one());
        for (int t = 0; t < r + 1; ++t)
            x = x * ring_unit_minus(random_word(rng, alphabet, 3), IntWord::one());
        out.expect(Q.q(x).is_zero(), "Q does not vanish on a power-(r+1) generator");
    }
    return out;
}

// r-strictness harness: additive maps <V> -> <W> given on group elements
using WordMap = std::function<IntRing(const IntWord&)>;

inline IntRing apply_word_map(const WordMap& f, const IntRing& x) {
    IntRing out;
    for (auto& [v, c] : x.terms) out += f(v).scaled(c);
    return out;
}

// h(<v>) = f(<v>) g(<v>) extended additively ((9.2))
inline WordMap product_map(const WordMap& f, const WordMap& g) {
    return [f, g](const IntWord& v) { return f(v) * g(v); };
}

// verify h maps sampled generators of power s into power s, for s <= r
inline CheckOutcome strictness_check(const WordMap& h, int alphabet, int r, int nsamples,
                                     Rng& rng) {
    CheckOutcome out;
    for (int s = 1; s <= r; ++s)
        for (int n = 0; n < nsamples; ++n) {
            auto x = IntRing::of(IntWord::one());
            for (int t = 0; t < s; ++t)
                x = x * ring_unit_minus(random_word(rng, alphabet, 2), IntWord::one());
            auto y = apply_word_map(h, x);
            out.expect(aug_degree(y, s - 1).ge(s), "image drops below power s");
        }
    return out;
}

}  // namespace mbs

#pragma once

// Exact integer linear algebra (HNF/SNF, kernels, solves) and finite-type
// simplicial abelian groups: Moore normalization, connectivity checks, the
// two-term Dold-Kan splitting and the section <-> cochain correspondence.

#include "simpset.hpp"

#include <cstdlib>

namespace mbs {

using i64 = std::int64_t;

struct IntMat {
    int rows = 0, cols = 0;
    std::vector<i64> a;

    IntMat() = default;
    IntMat(int r, int c) : rows(r), cols(c), a((std::size_t)r * c, 0) {}
    i64& at(int r, int c) { return a[(std::size_t)r * cols + c]; }
    i64 at(int r, int c) const { return a[(std::size_t)r * cols + c]; }

    static IntMat identity(int n) {
        IntMat m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }
    std::vector<i64> col(int c) const {
        std::vector<i64> v(rows);
        for (int r = 0; r < rows; ++r) v[r] = at(r, c);
        return v;
    }
    void set_col(int c, const std::vector<i64>& v) {
        for (int r = 0; r < rows; ++r) at(r, c) = v[r];
    }
    std::vector<i64> mul(const std::vector<i64>& x) const {
        require((int)x.size() == cols, "ShapeMismatch", "matrix-vector product");
        std::vector<i64> y(rows, 0);
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c) y[r] += at(r, c) * x[c];
        return y;
    }
    IntMat mul(const IntMat& b) const {
        require(cols == b.rows, "ShapeMismatch", "matrix product");
        IntMat y(rows, b.cols);
        for (int r = 0; r < rows; ++r)
            for (int k = 0; k < cols; ++k) {
                i64 v = at(r, k);
                if (!v) continue;
                for (int c = 0; c < b.cols; ++c) y.at(r, c) += v * b.at(k, c);
            }
        return y;
    }
    friend bool operator==(const IntMat&, const IntMat&) = default;
};

namespace lin {

inline void col_swap(IntMat& m, int i, int j) {
    for (int r = 0; r < m.rows; ++r) std::swap(m.at(r, i), m.at(r, j));
}
inline void col_addmul(IntMat& m, int dst, int src, i64 k) {
    if (!k) return;
    for (int r = 0; r < m.rows; ++r) m.at(r, dst) += k * m.at(r, src);
}
inline void col_neg(IntMat& m, int i) {
    for (int r = 0; r < m.rows; ++r) m.at(r, i) = -m.at(r, i);
}

// Column Hermite form with a transform tracker: returns (H, U) with H = M*U,
// U unimodular, H in column echelon form (pivot rows strictly increasing).
struct Hnf {
    IntMat H, U;
    std::vector<int> pivot_row;  // per pivot column
};

inline Hnf hnf_cols(IntMat M) {
    IntMat U = IntMat::identity(M.cols);
    int pc = 0;
    std::vector<int> pivots;
    for (int r = 0; r < M.rows && pc < M.cols; ++r) {
        // euclidean elimination across columns pc..end on row r
        while (true) {
            int best = -1;
            for (int c = pc; c < M.cols; ++c)
                if (M.at(r, c) != 0 && (best < 0 || std::llabs(M.at(r, c)) < std::llabs(M.at(r, best))))
                    best = c;
            if (best < 0) break;
            if (best != pc) {
                col_swap(M, pc, best);
                col_swap(U, pc, best);
            }
            bool clean = true;
            for (int c = pc + 1; c < M.cols; ++c) {
                i64 q = M.at(r, c) / M.at(r, pc);
                col_addmul(M, c, pc, -q);
                col_addmul(U, c, pc, -q);
                if (M.at(r, c) != 0) clean = false;
            }
            if (clean) break;
        }
        if (pc < M.cols && M.at(r, pc) != 0) {
            if (M.at(r, pc) < 0) {
                col_neg(M, pc);
                col_neg(U, pc);
            }
            pivots.push_back(r);
            ++pc;
        }
    }
    return {std::move(M), std::move(U), std::move(pivots)};
}

// basis of { x : M x = 0 } as columns
inline IntMat kernel_basis(const IntMat& M) {
    auto h = hnf_cols(M);
    int rank = (int)h.pivot_row.size();
    IntMat K(M.cols, M.cols - rank);
    for (int c = rank; c < M.cols; ++c)
        for (int r = 0; r < M.cols; ++r) K.at(r, c - rank) = h.U.at(r, c);
    return K;
}

// lattice basis of the column span, as columns
inline IntMat image_basis(const IntMat& M) {
    auto h = hnf_cols(M);
    int rank = (int)h.pivot_row.size();
    IntMat B(M.rows, rank);
    for (int c = 0; c < rank; ++c)
        for (int r = 0; r < M.rows; ++r) B.at(r, c) = h.H.at(r, c);
    return B;
}

// one integer solution of M x = b, if any
inline std::optional<std::vector<i64>> solve(const IntMat& M, const std::vector<i64>& b) {
    auto h = hnf_cols(M);
    std::vector<i64> rem = b, coef(h.pivot_row.size(), 0);
    for (std::size_t p = 0; p < h.pivot_row.size(); ++p) {
        int r = h.pivot_row[p];
        i64 piv = h.H.at(r, (int)p);
        if (rem[r] % piv != 0) return std::nullopt;
        i64 q = rem[r] / piv;
        coef[p] = q;
        for (int rr = 0; rr < M.rows; ++rr) rem[rr] -= q * h.H.at(rr, (int)p);
    }
    for (i64 v : rem)
        if (v) return std::nullopt;
    std::vector<i64> x(M.cols, 0);
    for (std::size_t p = 0; p < coef.size(); ++p)
        for (int r = 0; r < M.cols; ++r) x[r] += coef[p] * h.U.at(r, (int)p);
    return x;
}

inline IntMat inverse_unimodular(const IntMat& U) {
    require(U.rows == U.cols, "ShapeMismatch", "inverse of a non-square matrix");
    IntMat inv(U.rows, U.cols);
    for (int c = 0; c < U.cols; ++c) {
        std::vector<i64> e(U.rows, 0);
        e[c] = 1;
        auto x = solve(U, e);
        require(x.has_value(), "NotUnimodular", "matrix is not invertible over Z");
        inv.set_col(c, *x);
    }
    return inv;
}

// Smith normal form diagonal (nonzero entries)
inline std::vector<i64> snf_diagonal(IntMat M) {
    std::vector<i64> diag;
    int top = 0;
    while (top < M.rows && top < M.cols) {
        // find a nonzero entry
        int pr = -1, pc = -1;
        for (int r = top; r < M.rows; ++r)
            for (int c = top; c < M.cols; ++c)
                if (M.at(r, c) != 0 &&
                    (pr < 0 || std::llabs(M.at(r, c)) < std::llabs(M.at(pr, pc)))) {
                    pr = r;
                    pc = c;
                }
        if (pr < 0) break;
        // move to (top, top)
        for (int c = 0; c < M.cols; ++c) std::swap(M.at(top, c), M.at(pr, c));
        col_swap(M, top, pc);
        bool again = true;
        while (again) {
            again = false;
            for (int r = top + 1; r < M.rows; ++r) {
                i64 q = M.at(r, top) / M.at(top, top);
                for (int c = 0; c < M.cols; ++c) M.at(r, c) -= q * M.at(top, c);
                if (M.at(r, top) != 0) {
                    for (int c = 0; c < M.cols; ++c) std::swap(M.at(top, c), M.at(r, c));
                    again = true;
                }
            }
            for (int c = top + 1; c < M.cols; ++c) {
                i64 q = M.at(top, c) / M.at(top, top);
                col_addmul(M, c, top, -q);
                if (M.at(top, c) != 0) {
                    col_swap(M, top, c);
                    again = true;
                }
            }
        }
        diag.push_back(std::llabs(M.at(top, top)));
        ++top;
    }
    return diag;
}

}  // namespace lin

// ---------------------------------------------------------------------------
// finite-type simplicial abelian groups

struct AbElt {
    int dim = 0;
    std::vector<i64> c;
    friend auto operator<=>(const AbElt&, const AbElt&) = default;
};

class SimplicialAbGroup {
public:
    int bound = 0;                                      // bases exist for dims 0..bound
    std::vector<std::vector<std::string>> basis_names;  // per dim
    std::vector<std::vector<IntMat>> face_mat;          // [k][i] : dim k -> dim k-1
    std::vector<std::vector<IntMat>> degen_mat;         // [k][i] : dim k -> dim k+1

    int rank(int k) const { return (int)basis_names[k].size(); }

    AbElt zero(int k) const { return AbElt{k, std::vector<i64>((std::size_t)rank(k), 0)}; }
    bool is_zero(const AbElt& e) const {
        for (i64 v : e.c)
            if (v) return false;
        return true;
    }
    AbElt add(AbElt a, const AbElt& b) const {
        require(a.dim == b.dim, "ShapeMismatch", "add");
        for (std::size_t i = 0; i < a.c.size(); ++i) a.c[i] += b.c[i];
        return a;
    }
    AbElt neg(AbElt a) const {
        for (auto& v : a.c) v = -v;
        return a;
    }
    AbElt scale(AbElt a, i64 k) const {
        for (auto& v : a.c) v *= k;
        return a;
    }
    AbElt face(const AbElt& e, int i) const {
        require(e.dim >= 1 && i >= 0 && i <= e.dim, "IndexOutOfRange", "ab face");
        return AbElt{e.dim - 1, face_mat[e.dim][i].mul(e.c)};
    }
    AbElt degen(const AbElt& e, int i) const {
        require(e.dim < bound && i >= 0 && i <= e.dim, "IndexOutOfRange", "ab degen");
        return AbElt{e.dim + 1, degen_mat[e.dim][i].mul(e.c)};
    }
};

inline void check_ab_identities(const SimplicialAbGroup& A) {
    for (int k = 2; k <= A.bound; ++k)
        for (int j = 1; j <= k; ++j)
            for (int i = 0; i < j; ++i)
                require(A.face_mat[k - 1][i].mul(A.face_mat[k][j]) ==
                            A.face_mat[k - 1][j - 1].mul(A.face_mat[k][i]),
                        "SimplicialIdentity", "d_i d_j");
    for (int k = 0; k + 1 <= A.bound && k + 1 <= A.bound; ++k)
        for (int i = 0; i <= k; ++i) {
            // d_i s_i = d_{i+1} s_i = id
            require(A.face_mat[k + 1][i].mul(A.degen_mat[k][i]) == IntMat::identity(A.rank(k)),
                    "SimplicialIdentity", "d_i s_i");
            require(A.face_mat[k + 1][i + 1].mul(A.degen_mat[k][i]) == IntMat::identity(A.rank(k)),
                    "SimplicialIdentity", "d_{i+1} s_i");
        }
}

// reduced chains of a pointed simplicial set: basis = non-marked elements
inline SimplicialAbGroup reduced_chains(const SimplicialSet& E, int bound) {
    require(E.pointed(), "NotPointed", "reduced chains need a basepoint");
    SimplicialAbGroup A;
    A.bound = bound;
    A.basis_names.resize(bound + 1);
    std::vector<std::vector<SimplexElt>> basis(bound + 1);
    for (int k = 0; k <= bound; ++k) {
        basis[k] = alphabet(E, k);
        for (auto& e : basis[k]) A.basis_names[k].push_back(E.str(e));
    }
    auto index_of = [&](int k, const SimplexElt& e) -> int {
        auto it = std::lower_bound(basis[k].begin(), basis[k].end(), e);
        if (it == basis[k].end() || !(*it == e)) return -1;  // marked
        return (int)(it - basis[k].begin());
    };
    A.face_mat.resize(bound + 1);
    A.degen_mat.resize(bound + 1);
    for (int k = 1; k <= bound; ++k) {
        A.face_mat[k].assign(k + 1, IntMat((int)basis[k - 1].size(), (int)basis[k].size()));
        for (int i = 0; i <= k; ++i)
            for (std::size_t b = 0; b < basis[k].size(); ++b) {
                int t = index_of(k - 1, E.face(basis[k][b], i));
                if (t >= 0) A.face_mat[k][i].at(t, (int)b) = 1;
            }
    }
    for (int k = 0; k < bound; ++k) {
        A.degen_mat[k].assign(k + 1, IntMat((int)basis[k + 1].size(), (int)basis[k].size()));
        for (int i = 0; i <= k; ++i)
            for (std::size_t b = 0; b < basis[k].size(); ++b) {
                int t = index_of(k + 1, E.degen(basis[k][b], i));
                require(t >= 0, "NotFree", "degeneracy of a non-marked element is marked");
                A.degen_mat[k][i].at(t, (int)b) = 1;
            }
    }
    return A;
}

// ---------------------------------------------------------------------------
// Moore normalization and the two-term splitting

// N_k = intersection of ker d_i, i >= 1; the differential is d_0.
struct MooreComplex {
    const SimplicialAbGroup* A = nullptr;
    std::vector<IntMat> n_basis;   // columns: N_k inside A_k
    std::vector<IntMat> partial;   // d_0 : N_k -> N_{k-1} in N-coordinates (k >= 1)
};

inline MooreComplex moore(const SimplicialAbGroup& A) {
    MooreComplex M;
    M.A = &A;
    M.n_basis.resize(A.bound + 1);
    M.partial.resize(A.bound + 1);
    for (int k = 0; k <= A.bound; ++k) {
        if (k == 0) {
            M.n_basis[0] = IntMat::identity(A.rank(0));
            continue;
        }
        IntMat stacked(A.rank(k - 1) * k, A.rank(k));
        for (int i = 1; i <= k; ++i)
            for (int r = 0; r < A.rank(k - 1); ++r)
                for (int c = 0; c < A.rank(k); ++c)
                    stacked.at((i - 1) * A.rank(k - 1) + r, c) = A.face_mat[k][i].at(r, c);
        M.n_basis[k] = lin::kernel_basis(stacked);
    }
    for (int k = 1; k <= A.bound; ++k) {
        // d_0 of N_k-basis columns, expressed in N_{k-1}-coordinates
        IntMat img = A.face_mat[k][0].mul(M.n_basis[k]);
        IntMat out(M.n_basis[k - 1].cols, M.n_basis[k].cols);
        for (int c = 0; c < img.cols; ++c) {
            auto x = lin::solve(M.n_basis[k - 1], img.col(c));
            require(x.has_value(), "SimplicialIdentity", "d_0 left the normalized part");
            out.set_col(c, *x);
        }
        M.partial[k] = std::move(out);
    }
    return M;
}

// the normalization retraction (1 - s_0 d_1)(1 - s_1 d_2)...(1 - s_{k-1} d_k),
// rightmost factor applied first; works for any theory with faces/degens
template <class Th>
typename Th::Elt moore_project(const Th& th, typename Th::Elt e, int k) {
    for (int j = k - 1; j >= 0; --j) {
        auto sd = th.degen(th.face(e, j + 1), j);
        e = th.sub(std::move(e), sd);
    }
    return e;
}

// first nonvanishing reduced homology H_n for n <= m, or nullopt if m-connected
inline std::optional<int> first_homology(const MooreComplex& M, int m) {
    require(m + 1 <= M.A->bound, "NotConnectedEnough", "bound too small to verify connectivity");
    for (int n = 0; n <= m; ++n) {
        IntMat Z = (n == 0) ? IntMat::identity(M.n_basis[0].cols) : lin::kernel_basis(M.partial[n]);
        // express the boundary image inside Z and check the quotient vanishes
        IntMat Bn = M.partial[n + 1];
        IntMat Bz(Z.cols, Bn.cols);
        for (int c = 0; c < Bn.cols; ++c) {
            auto x = lin::solve(Z, Bn.col(c));
            require(x.has_value(), "SimplicialIdentity", "boundary is not a cycle");
            Bz.set_col(c, *x);
        }
        auto diag = lin::snf_diagonal(Bz);
        bool onto = (int)diag.size() == Z.cols;
        for (i64 d : diag) onto = onto && (d == 1);
        if (!onto) return n;
    }
    return std::nullopt;
}

// Two-term splitting data for dimensions n <= m: N = (+) C^n where
// C^n_n = Z_n, C^n_{n+1} = W_{n+1}, and d_0 : W_{n+1} -> Z_n is invertible.
struct TwoTermSplit {
    MooreComplex moore;
    int m = 0;
    std::vector<IntMat> z_basis;      // Z_n inside N_n, n = 0..m+1
    std::vector<IntMat> w_basis;      // W_{n+1} inside N_{n+1}, n = 0..m
    std::vector<IntMat> w_to_z;       // d_0 restricted: W-coords -> Z-coords
    std::vector<IntMat> z_to_w;       // its inverse
};

inline TwoTermSplit dk_split(const SimplicialAbGroup& A, int m) {
    TwoTermSplit S;
    S.moore = moore(A);
    S.m = m;
    auto bad = first_homology(S.moore, m);
    if (bad) fail("NotConnectedEnough", "H_" + std::to_string(*bad) + " does not vanish");
    S.z_basis.resize(m + 2);
    S.w_basis.resize(m + 1);
    S.w_to_z.resize(m + 1);
    S.z_to_w.resize(m + 1);
    for (int n = 0; n <= m + 1; ++n)
        S.z_basis[n] = (n == 0) ? IntMat::identity(S.moore.n_basis[0].cols)
                                : lin::kernel_basis(S.moore.partial[n]);
    for (int n = 0; n <= m; ++n) {
        // image basis of d_0 : N_{n+1} -> N_n equals Z_n by exactness;
        // pick W-columns as preimages of a Z-basis
        IntMat W(S.moore.n_basis[n + 1].cols, S.z_basis[n].cols);
        IntMat w2z = IntMat::identity(S.z_basis[n].cols);
        for (int c = 0; c < S.z_basis[n].cols; ++c) {
            auto x = lin::solve(S.moore.partial[n + 1], S.z_basis[n].col(c));
            require(x.has_value(), "NotConnectedEnough", "exactness witness missing");
            W.set_col(c, *x);
        }
        S.w_basis[n] = std::move(W);
        S.w_to_z[n] = w2z;  // by construction d_0(w_c) = z_c
        S.z_to_w[n] = std::move(w2z);
    }
    return S;
}

// ---------------------------------------------------------------------------
// Dold-Kan bookkeeping: A_k = (+)_{eta:[k]->>[n]} s_eta(N_n)

struct DkWord {
    int n = 0;                 // source dimension
    std::vector<int> degens;   // strictly decreasing word, length k - n
};

inline void dk_words_into(int k, int n, std::vector<DkWord>& out) {
    // enumerate valid degeneracy words lifting dim n to dim k
    std::function<void(DkWord&, int)> grow = [&](DkWord& w, int have) {
        if (have == k) {
            out.push_back(w);
            return;
        }
        int lo = w.degens.empty() ? 0 : w.degens.front() + 1;
        for (int j = lo; j <= have; ++j) {
            DkWord big = w;
            big.degens.insert(big.degens.begin(), j);
            grow(big, have + 1);
        }
    };
    DkWord w{n, {}};
    grow(w, n);
}

struct DkBasis {
    // change of basis at dimension k: columns are s_J(N_n-basis vectors)
    IntMat U, Uinv;
    struct Col {
        int n;
        std::vector<int> word;
        int idx;  // N_n basis index
    };
    std::vector<Col> cols;
};

inline DkBasis dk_basis(const SimplicialAbGroup& A, const MooreComplex& M, int k) {
    DkBasis B;
    std::vector<DkWord> words;
    for (int n = k; n >= 0; --n) dk_words_into(k, n, words);
    std::vector<std::vector<i64>> columns;
    for (const auto& w : words) {
        for (int b = 0; b < M.n_basis[w.n].cols; ++b) {
            AbElt e{w.n, M.n_basis[w.n].col(b)};
            for (auto it = w.degens.rbegin(); it != w.degens.rend(); ++it) e = A.degen(e, *it);
            columns.push_back(e.c);
            B.cols.push_back({w.n, w.degens, b});
        }
    }
    require((int)columns.size() == A.rank(k), "NotFree", "Dold-Kan basis count mismatch");
    B.U = IntMat(A.rank(k), A.rank(k));
    for (std::size_t c = 0; c < columns.size(); ++c) B.U.set_col((int)c, columns[c]);
    B.Uinv = lin::inverse_unimodular(B.U);
    return B;
}

// refined version: N_n replaced by Z_n (+) W_n, usable through dim m+1
struct RefinedDk {
    struct Col {
        int n;
        bool in_w;  // Z_n column or W_n column
        std::vector<int> word;
        int idx;
    };
    std::vector<IntMat> U, Uinv;
    std::vector<std::vector<Col>> cols;
};

inline RefinedDk refined_dk(const SimplicialAbGroup& A, const TwoTermSplit& S, int kmax) {
    require(kmax <= S.m + 1, "IndexOutOfRange", "refined Dold-Kan beyond the split bound");
    RefinedDk R;
    R.U.resize(kmax + 1);
    R.Uinv.resize(kmax + 1);
    R.cols.resize(kmax + 1);
    for (int k = 0; k <= kmax; ++k) {
        std::vector<DkWord> words;
        for (int n = k; n >= 0; --n) dk_words_into(k, n, words);
        std::vector<std::vector<i64>> columns;
        for (const auto& w : words) {
            auto push = [&](bool in_w, const IntMat& sub, int b) {
                AbElt e{w.n, S.moore.n_basis[w.n].mul(sub.col(b))};
                for (auto it = w.degens.rbegin(); it != w.degens.rend(); ++it)
                    e = A.degen(e, *it);
                columns.push_back(e.c);
                R.cols[k].push_back({w.n, in_w, w.degens, b});
            };
            for (int b = 0; b < S.z_basis[w.n].cols; ++b) push(false, S.z_basis[w.n], b);
            if (w.n >= 1)
                for (int b = 0; b < S.w_basis[w.n - 1].cols; ++b) push(true, S.w_basis[w.n - 1], b);
        }
        require((int)columns.size() == A.rank(k), "NotFree", "refined Dold-Kan count mismatch");
        R.U[k] = IntMat(A.rank(k), A.rank(k));
        for (std::size_t c = 0; c < columns.size(); ++c) R.U[k].set_col((int)c, columns[c]);
        R.Uinv[k] = lin::inverse_unimodular(R.U[k]);
    }
    return R;
}

// ---------------------------------------------------------------------------
// the theory of abelian values, for Section<AbTheory>

struct AbTheory {
    const SimplicialAbGroup* A;
    using Elt = AbElt;
    int dim(const Elt& e) const { return e.dim; }
    Elt face(const Elt& e, int i) const { return A->face(e, i); }
    Elt degen(const Elt& e, int i) const { return A->degen(e, i); }
    bool is_unit(const Elt& e) const { return A->is_zero(e); }
    Elt unit(int n) const { return A->zero(n); }
    Elt sub(Elt a, const Elt& b) const { return A->add(std::move(a), A->neg(b)); }
};

// ---------------------------------------------------------------------------
// sections with values in the n-th two-term component <-> n-cochains
//
// A section valued in the component D^n (normalization concentrated in
// degrees n, n+1 with invertible differential) is the same as a function
// from the n-simplices to C^n_n = Z_n.

struct CochainView {
    const SimplicialAbGroup* A;
    const TwoTermSplit* S;
    int n;  // component index, n <= m
};

inline std::map<SimplexIdx, std::vector<i64>> section_to_cochain(const CochainView& V,
                                                                 const Section<AbTheory>& w) {
    AbTheory th{V.A};
    const Polyhedron& L = *w.base;
    std::map<SimplexIdx, std::vector<i64>> out;
    IntMat embed = V.S->moore.n_basis[V.n].mul(V.S->z_basis[V.n]);
    for (std::size_t s = 0; s < L.size(); ++s) {
        if (L.dim_of((SimplexIdx)s) != V.n) continue;
        AbElt proj = moore_project(th, w.table[s], V.n);
        auto z = lin::solve(embed, proj.c);
        require(z.has_value(), "ShapeMismatch", "section value is not in the component");
        out[(SimplexIdx)s] = *z;
    }
    return out;
}

// columns spanning D^n_k (the component's piece of dimension k)
inline IntMat component_columns(const CochainView& V, int k) {
    const auto& A = *V.A;
    const auto& S = *V.S;
    std::vector<std::vector<i64>> columns;
    std::vector<DkWord> words;
    for (int nn = k; nn >= 0; --nn) dk_words_into(k, nn, words);
    for (const auto& w : words) {
        if (w.n == V.n) {
            for (int b = 0; b < S.z_basis[V.n].cols; ++b) {
                AbElt e{V.n, S.moore.n_basis[V.n].mul(S.z_basis[V.n].col(b))};
                for (auto it = w.degens.rbegin(); it != w.degens.rend(); ++it)
                    e = A.degen(e, *it);
                columns.push_back(e.c);
            }
        } else if (w.n == V.n + 1) {
            for (int b = 0; b < S.w_basis[V.n].cols; ++b) {
                AbElt e{V.n + 1, S.moore.n_basis[V.n + 1].mul(S.w_basis[V.n].col(b))};
                for (auto it = w.degens.rbegin(); it != w.degens.rend(); ++it)
                    e = A.degen(e, *it);
                columns.push_back(e.c);
            }
        }
    }
    IntMat out(A.rank(k), (int)columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) out.set_col((int)c, columns[c]);
    return out;
}

inline Section<AbTheory> section_from_cochain(const CochainView& V, PolyPtr Lp,
                                              const std::map<SimplexIdx, std::vector<i64>>& om) {
    const Polyhedron& L = *Lp;
    const auto& A = *V.A;
    Section<AbTheory> out{Lp, {}};
    out.table.resize(L.size());
    IntMat embed = V.S->moore.n_basis[V.n].mul(V.S->z_basis[V.n]);
    for (std::size_t s = 0; s < L.size(); ++s) {
        int k = L.dim_of((SimplexIdx)s);
        if (k < V.n) {
            out.table[s] = A.zero(k);
            continue;
        }
        if (k == V.n) {
            auto it = om.find((SimplexIdx)s);
            std::vector<i64> z(V.S->z_basis[V.n].cols, 0);
            if (it != om.end()) z = it->second;
            out.table[s] = AbElt{k, embed.mul(z)};
            continue;
        }
        // dimensions above n: the unique component element with the given faces
        IntMat cols = component_columns(V, k);
        IntMat stacked(A.rank(k - 1) * (k + 1), cols.cols);
        std::vector<i64> rhs;
        rhs.reserve((std::size_t)A.rank(k - 1) * (k + 1));
        for (int i = 0; i <= k; ++i) {
            IntMat fc = A.face_mat[k][i].mul(cols);
            for (int r = 0; r < fc.rows; ++r)
                for (int c = 0; c < fc.cols; ++c)
                    stacked.at(i * A.rank(k - 1) + r, c) = fc.at(r, c);
            const AbElt& fv = out.table[L.face((SimplexIdx)s, i)];
            for (i64 v : fv.c) rhs.push_back(v);
        }
        auto u = lin::solve(stacked, rhs);
        require(u.has_value(), "ShapeMismatch", "no component element matches the faces");
        out.table[s] = AbElt{k, cols.mul(*u)};
    }
    return out;
}

}  // namespace mbs

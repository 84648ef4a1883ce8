#include <catch2/catch_amalgamated.hpp>

#include "moebius/simpset.hpp"

using namespace mbs;

namespace {

Polyhedron edge_ab() { return poly_from_tuples({{"a"}, {"b"}, {"a", "b"}}); }

Polyhedron full_triangle() {
    return poly_from_tuples(
        {{"a"}, {"b"}, {"c"}, {"a", "b"}, {"a", "c"}, {"b", "c"}, {"a", "b", "c"}});
}

}  // namespace

TEST_CASE("completion of an edge, a point, the empty polyhedron") {
    auto L = edge_ab();
    auto E = completion(L);
    REQUIRE(E.ncells() == 3);
    int ab = E.find_cell("[a,b]");
    CHECK(E.cell_ids[E.cell_faces[ab][0].cell] == "[b]");
    CHECK(E.cell_ids[E.cell_faces[ab][1].cell] == "[a]");
    check_simplicial_identities(E);

    CHECK(completion(poly_from_tuples({{"x"}})).ncells() == 1);
    CHECK(completion(Polyhedron{}).ncells() == 0);
}

TEST_CASE("normal form identities") {
    auto E = completion(full_triangle());
    int abc = E.find_cell("[a,b,c]");
    int ab = E.find_cell("[a,b]");

    // s_0 s_0 x = s_1 s_0 x
    CHECK(E.normalize(abc, {{false, 0}, {false, 0}}) == SimplexElt{abc, {1, 0}});
    // d_0 s_0 x = x
    CHECK(E.normalize(ab, {{true, 0}, {false, 0}}) == SimplexElt{ab, {}});
    // d_2 s_0 x = s_0 d_1 x for dim x = 1
    CHECK(E.normalize(ab, {{true, 2}, {false, 0}}) == E.degen(E.face(SimplexElt{ab, {}}, 1), 0));
}

TEST_CASE("confluence: simplicial identities hold on arbitrary elements") {
    auto E = completion(full_triangle());
    std::vector<SimplexElt> pool;
    for (int n = 2; n <= 4; ++n)
        for (auto& e : alphabet(E, n)) pool.push_back(e);
    for (const auto& e : pool) {
        int n = E.dim_of(e);
        for (int j = 1; j <= n; ++j)
            for (int i = 0; i < j; ++i)
                CHECK(E.face(E.face(e, j), i) == E.face(E.face(e, i), j - 1));
        for (int j = 0; j <= n; ++j)
            for (int i = 0; i <= j; ++i)
                CHECK(E.degen(E.degen(e, j), i) == E.degen(E.degen(e, i), j + 1));
        for (int i = 0; i <= n + 1; ++i)
            for (int j = 0; j <= n; ++j) {
                auto se = E.degen(e, j);
                if (i == j || i == j + 1) {
                    CHECK(E.face(se, i) == e);
                } else if (i < j) {
                    CHECK(E.face(se, i) == E.degen(E.face(e, i), j - 1));
                } else {
                    CHECK(E.face(se, i) == E.degen(E.face(e, i - 1), j));
                }
            }
    }
}

TEST_CASE("completion is functorial") {
    auto K = make_poly(edge_ab());
    auto L = make_poly(poly_from_tuples({{"x"}}));
    PolyMorphism f{K, L, {0, 0}};
    validate_morphism(f);
    auto hatK = completion(*K), hatL = completion(*L);
    auto hf = completion_map(f, hatK, hatL);
    check_sset_map(hf);

    auto idm = identity_morphism(L);
    auto hid = completion_map(idm, hatL, hatL);
    for (std::size_t c = 0; c < hatK.ncells(); ++c)
        CHECK(hid.apply(hf.images[c]) == hf.images[c]);
}

TEST_CASE("sections of the minimal 2-sphere over small polyhedra") {
    auto E = minimal_s2();
    check_simplicial_identities(E);

    auto L = make_poly(edge_ab());
    auto secs = all_sections(E, L);
    REQUIRE(secs.size() == 1);  // everything maps to degenerate basepoints
    SSetTheory th{&E};
    for (auto& v : secs) check_section(th, v);

    auto T = make_poly(full_triangle());
    auto secsT = all_sections(E, T);
    REQUIRE(secsT.size() == 2);  // the top simplex hits w or the marked element
    for (auto& v : secsT) check_section(th, v);

    for (auto& v : secsT) {
        auto sup = support(th, v);
        if (v.table.back() == E.marked(2))
            CHECK(sup.empty());
        else
            CHECK(sup == std::vector<SimplexIdx>{(SimplexIdx)(T->size() - 1)});
    }
}

TEST_CASE("yoneda correspondence over an edge") {
    auto E = minimal_s2();
    SSetTheory th{&E};
    auto L = make_poly(edge_ab());
    SimplexIdx ab = L->find_named({"a", "b"});
    auto cls = closure(*L, ab);
    auto ybar = make_poly(cls.sub);

    auto v = yoneda_section(th, ybar, E.marked(1));
    check_section(th, v);
    CHECK(v.table.back() == E.marked(1));

    auto secs = all_sections(E, ybar);
    for (auto& s : secs) {
        auto round = yoneda_section(th, ybar, s.table.back());
        CHECK(round == s);
    }
}

TEST_CASE("smash powers") {
    auto E = minimal_s2();
    auto S0 = smash_power(E, 0);
    CHECK(S0.ncells() == 2);
    CHECK(S0.cell_dims == std::vector<int>{0, 0});

    auto S1 = smash_power(E, 1);
    CHECK(S1.ncells() == E.ncells());
    check_simplicial_identities(S1);

    auto S2 = smash_power(E, 2);
    check_simplicial_identities(S2);
    std::size_t zero_cells = 0, two_cells = 0, four_cells = 0;
    for (std::size_t c = 0; c < S2.ncells(); ++c) {
        if (S2.cell_dims[c] == 0) ++zero_cells;
        if (S2.cell_dims[c] == 2) ++two_cells;
        if (S2.cell_dims[c] == 4) ++four_cells;
    }
    CHECK(zero_cells == 1);  // just the basepoint
    CHECK(two_cells == 1);   // (w, w)
    CHECK(four_cells == 6);  // shuffles of (2, 2): C(4, 2)
}

TEST_CASE("skeleton") {
    auto E = minimal_s2();
    auto full = skeleton(E, E.dim());
    CHECK(full.ncells() == E.ncells());
    auto pt = skeleton(E, 1);
    CHECK(pt.ncells() == 1);
    CHECK_THROWS(skeleton(E, -1));
}

TEST_CASE("quasisections compose along morphisms") {
    auto E = minimal_s2();
    SSetTheory th{&E};
    auto K = make_poly(edge_ab());
    auto L = make_poly(poly_from_tuples({{"x"}}));
    PolyMorphism f{K, L, {0, 0}};

    std::vector<SimplexElt> w = {E.marked(0)};
    auto wf = quasicompose(th, w, f);
    REQUIRE(wf.size() == K->size());
    CHECK(wf[0] == E.marked(0));
    CHECK(wf[2] == E.marked(1));
}

#include <catch2/catch_amalgamated.hpp>

#include "moebius/complex.hpp"

using namespace mbs;

namespace {

// independent distance oracle: Floyd-Warshall over the 1-skeleton
std::vector<std::vector<long>> floyd(const Polyhedron& L) {
    const long INF = 1e9;
    std::size_t n = L.nverts();
    std::vector<std::vector<long>> d(n, std::vector<long>(n, INF));
    for (std::size_t i = 0; i < n; ++i) d[i][i] = 0;
    for (auto& t : L.simplices)
        if (t.size() == 2) d[t[0]][t[1]] = d[t[1]][t[0]] = 1;
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    return d;
}

long rho_oracle(const Polyhedron& L, SimplexIdx x, SimplexIdx y) {
    auto d = floyd(L);
    long best = 1e9;
    for (int u : L.simplices[x])
        for (int v : L.simplices[y]) best = std::min(best, d[u][v]);
    return best;
}

std::uint64_t factorial(std::uint64_t n) { return n <= 1 ? 1 : n * factorial(n - 1); }

// flag-count oracle: number of simplices of the barycentric subdivision of the
// closed n-simplex equals sum over chains; the top count is (n+1)!.
std::size_t count_top(const Polyhedron& L, int dim) {
    std::size_t c = 0;
    for (std::size_t s = 0; s < L.size(); ++s)
        if (L.dim_of((SimplexIdx)s) == dim) ++c;
    return c;
}

Polyhedron path_abc() { return poly_from_tuples({{"a"}, {"b"}, {"c"}, {"a", "b"}, {"b", "c"}}); }

Polyhedron full_triangle() {
    return poly_from_tuples({{"a"}, {"b"}, {"c"}, {"a", "b"}, {"a", "c"}, {"b", "c"}, {"a", "b", "c"}});
}

Polyhedron triangle_boundary() {
    return poly_from_tuples({{"a"}, {"b"}, {"c"}, {"a", "b"}, {"a", "c"}, {"b", "c"}});
}

}  // namespace

TEST_CASE("validate accepts and rejects per the axioms") {
    auto L = poly_from_tuples({{"a"}, {"b"}, {"a", "b"}});
    CHECK(L.size() == 3);

    RawComplex bad;
    bad.simplices = {{"a", "b"}};
    CHECK_THROWS_WITH(validate(bad), Catch::Matchers::ContainsSubstring("MissingFace"));

    // cyclic triangle: local orders need no global extension
    auto cyc = poly_from_tuples({{"a"}, {"b"}, {"c"}, {"a", "b"}, {"b", "c"}, {"c", "a"}});
    CHECK(cyc.size() == 6);

    RawComplex dup;
    dup.simplices = {{"a"}, {"b"}, {"a", "b"}, {"b", "a"}};
    CHECK_THROWS_WITH(validate(dup), Catch::Matchers::ContainsSubstring("DuplicateSimplex"));

    RawComplex conflict;
    conflict.simplices = {{"a"}, {"b"}, {"c"}, {"b", "a"}, {"a", "c"}, {"b", "c"}, {"a", "b", "c"}};
    CHECK_THROWS_WITH(validate(conflict), Catch::Matchers::ContainsSubstring("OrderConflict"));
}

TEST_CASE("validate is independent of input iteration order") {
    auto L1 = poly_from_tuples({{"a"}, {"b"}, {"c"}, {"a", "b"}, {"b", "c"}});
    auto L2 = poly_from_tuples({{"b", "c"}, {"c"}, {"a", "b"}, {"b"}, {"a"}});
    CHECK(L1 == L2);
}

TEST_CASE("generated subpolyhedra") {
    auto L = full_triangle();
    SimplexIdx abc = L.find_named({"a", "b", "c"});
    auto sub = generated(L, {abc});
    CHECK(sub.sub.size() == 7);

    auto none = generated(L, {});
    CHECK(none.sub.size() == 0);

    SimplexIdx a = L.find_named({"a"});
    auto just_a = generated(L, {a});
    CHECK(just_a.sub.size() == 1);

    CHECK_THROWS(generated(L, {(SimplexIdx)99}));
}

TEST_CASE("is_small and spanned simplices") {
    auto L = full_triangle();
    SimplexIdx a = L.find_named({"a"}), c = L.find_named({"c"});
    auto sp = is_small(L, {a, c});
    REQUIRE(sp.has_value());
    CHECK(*sp == L.find_named({"a", "c"}));

    auto two_edges = poly_from_tuples({{"a"}, {"b"}, {"c"}, {"d"}, {"a", "b"}, {"c", "d"}});
    CHECK_FALSE(is_small(two_edges, {two_edges.find_named({"a"}), two_edges.find_named({"c"})})
                    .has_value());

    SimplexIdx y = L.find_named({"a", "b"});
    auto sp2 = is_small(L, {y});
    REQUIRE(sp2.has_value());
    CHECK(*sp2 == y);
}

TEST_CASE("rho against the BFS oracle, plus edge cases") {
    auto L = path_abc();
    SimplexIdx a = L.find_named({"a"}), c = L.find_named({"c"});
    CHECK(rho(L, a, c) == ExtNat(2));
    CHECK(rho(L, a, c).value() == (std::uint64_t)rho_oracle(L, a, c));
    CHECK(rho(L, a, a) == ExtNat(0));

    auto D = poly_from_tuples({{"a"}, {"b"}, {"c"}, {"d"}, {"a", "b"}, {"c", "d"}});
    CHECK(rho(D, D.find_named({"a", "b"}), D.find_named({"c", "d"})).is_inf());

    CHECK_THROWS(rho(L, kEmptySimplex, a));
}

TEST_CASE("strict triangle law of rho") {
    auto L = path_abc();
    SkeletonMetric m(L);
    for (SimplexIdx x = 0; x < (SimplexIdx)L.size(); ++x)
        for (SimplexIdx y = 0; y < (SimplexIdx)L.size(); ++y)
            for (SimplexIdx z = 0; z < (SimplexIdx)L.size(); ++z) {
                auto xy = m.rho(x, y), yz = m.rho(y, z), xz = m.rho(x, z);
                if (xy.is_inf() || yz.is_inf()) continue;
                // rho(x,y) < a, rho(y,z) < b  =>  rho(x,z) < a+b with a,b minimal
                CHECK(xz < ExtNat(xy.value() + 1 + yz.value() + 1));
            }
}

TEST_CASE("neighbourhood and separation") {
    auto L = path_abc();
    SkeletonMetric m(L);
    SimplexIdx a = L.find_named({"a"}), c = L.find_named({"c"});
    auto O = m.neighbourhood({a}, 1);
    // rho < 1 means rho = 0 means sharing a vertex: [a] and [a,b]
    REQUIRE(O.size() == 2);
    CHECK(m.separation({a}) == ExtNat::infinity());
    CHECK(m.separation({a, c}) == ExtNat(2));
}

TEST_CASE("subdivision of a single edge") {
    auto L = make_poly(poly_from_tuples({{"a"}, {"b"}, {"a", "b"}}));
    auto d = subdivide_delta(L);
    CHECK(d.sub->nverts() == 3);
    CHECK(count_top(*d.sub, 1) == 2);
    validate_morphism(d.collapse);
    // phi sends the barycentre of [a,b] to its highest vertex b
    SimplexIdx ab = L->find_named({"a", "b"});
    VertexId bary = kEmptySimplex;
    for (std::size_t v = 0; v < d.centre_of.size(); ++v)
        if (d.centre_of[v] == ab) bary = (VertexId)v;
    REQUIRE(bary != kEmptySimplex);
    CHECK(d.collapse.vmap[bary] == L->vertex_id("b"));

    auto dp = subdivide_delta_prime(L);
    validate_morphism(dp.collapse);
    CHECK(dp.collapse.vmap[bary] == L->vertex_id("a"));
}

TEST_CASE("subdivision sizes: flag count oracle") {
    auto L = make_poly(full_triangle());
    auto d = subdivide_delta(L);
    CHECK(count_top(*d.sub, 2) == factorial(3));  // 6 triangles
    auto D = subdivide_Delta(L);
    CHECK(count_top(*D.sub, 2) == 36);
    validate_morphism(D.collapse);
    check_face_closure(*D.sub);

    auto pt = make_poly(poly_from_tuples({{"a"}}));
    auto dpt = subdivide_delta(pt);
    CHECK(dpt.sub->size() == 1);
    CHECK(dpt.collapse.vmap == std::vector<VertexId>{0});
}

TEST_CASE("subdivision metric halving and small stars") {
    auto seeds = {triangle_boundary(), full_triangle(), path_abc()};
    for (const auto& seed : seeds) {
        auto L = make_poly(seed);
        auto D = subdivide_Delta(L);
        SkeletonMetric mL(*L), mD(*D.sub);
        for (SimplexIdx x = 0; x < (SimplexIdx)D.sub->size(); ++x) {
            for (SimplexIdx y = 0; y < (SimplexIdx)D.sub->size(); ++y) {
                auto dd = mD.rho(x, y);
                if (dd.is_inf()) continue;
                std::uint64_t bound = (dd.value() + 1) / 2;  // least d with rho_Delta <= 2d
                auto dl = mL.rho(D.collapse.image(x), D.collapse.image(y));
                REQUIRE(dl <= ExtNat(bound));
            }
            // the Phi-image of the star of x is small
            std::vector<SimplexIdx> img;
            for (SimplexIdx t = 0; t < (SimplexIdx)D.sub->size(); ++t) {
                auto xs = D.sub->sorted_set(x), ts = D.sub->sorted_set(t);
                if (std::includes(ts.begin(), ts.end(), xs.begin(), xs.end()))
                    img.push_back(D.collapse.image(t));
            }
            REQUIRE(is_small(*L, img).has_value());
        }
    }
}

TEST_CASE("link, euler, mu") {
    auto pt = poly_from_tuples({{"a"}});
    CHECK(mu(pt, pt.find_named({"a"})) == 1);
    CHECK(mu(pt, kEmptySimplex) == 0);

    auto tb = triangle_boundary();
    CHECK(euler(tb) == 0);
    CHECK(mu(tb, tb.find_named({"a"})) == -1);
    CHECK(mu(tb, tb.find_named({"a", "b"})) == 1);
    CHECK(mu(tb, kEmptySimplex) == 1);

    auto ft = full_triangle();
    CHECK(mu(ft, kEmptySimplex) == 0);

    // links stay valid complexes
    check_face_closure(link(tb, tb.find_named({"a"})));
}

TEST_CASE("mu_all matches the link-based definition") {
    for (const auto& L : {triangle_boundary(), full_triangle(), path_abc()}) {
        auto fast = mu_all(L);
        CHECK(fast[0] == mu(L, kEmptySimplex));
        for (SimplexIdx s = 0; s < (SimplexIdx)L.size(); ++s) CHECK(fast[s + 1] == mu(L, s));
    }
}

TEST_CASE("Moebius identity (12.1) on seeds and subdivisions") {
    std::vector<Polyhedron> corpus = {poly_from_tuples({{"a"}}), path_abc(), triangle_boundary(),
                                      full_triangle()};
    {
        auto D = subdivide_Delta(make_poly(triangle_boundary()));
        corpus.push_back(*D.sub);
    }
    for (const auto& L : corpus) {
        for (SimplexIdx y = kEmptySimplex; y < (SimplexIdx)L.size(); ++y)
            for (SimplexIdx z = kEmptySimplex; z < (SimplexIdx)L.size(); ++z) {
                std::int64_t want = (y == z) ? 1 : 0;
                REQUIRE(moebius_identity(L, y, z) == want);
            }
    }
    auto pt = poly_from_tuples({{"a"}});
    CHECK(moebius_identity(pt, pt.find_named({"a"}), kEmptySimplex) == 0);
}

TEST_CASE("morphism validation and composition") {
    auto L = make_poly(poly_from_tuples({{"a"}, {"b"}, {"a", "b"}}));
    auto idm = identity_morphism(L);
    validate_morphism(idm);
    auto d = subdivide_delta(L);
    auto both = compose(idm, d.collapse);
    CHECK(both.vmap == d.collapse.vmap);

    // collapsing an edge to a vertex is a morphism
    auto P = make_poly(poly_from_tuples({{"a"}}));
    PolyMorphism c{L, P, {0, 0}};
    validate_morphism(c);

    // order-reversing map on an edge is not
    PolyMorphism r{L, L, {L->vertex_id("b"), L->vertex_id("a")}};
    CHECK_THROWS_WITH(validate_morphism(r), Catch::Matchers::ContainsSubstring("NotAMorphism"));

    auto Q = make_poly(poly_from_tuples({{"x"}}));
    PolyMorphism g{Q, Q, {0}};
    CHECK_THROWS_WITH(compose(g, c), Catch::Matchers::ContainsSubstring("DomainMismatch"));
}

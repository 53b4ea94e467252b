#include <doctest.h>

#include <set>

#include "maghom/complexes.hpp"
#include "maghom/json_io.hpp"

#include <nlohmann/json.hpp>

using namespace maghom;

TEST_CASE("single triangle face lattice") {
    SimplicialComplex k = single_simplex(2);
    CHECK(k.dimension() == 2);
    CHECK(k.num_faces(0) == 3);
    CHECK(k.num_faces(1) == 3);
    CHECK(k.num_faces(2) == 1);
    CHECK(k.is_pure());
}

TEST_CASE("facet maximality pruning and errors") {
    SimplicialComplex k = SimplicialComplex::from_facets({{0, 1, 2}, {0, 1}, {2, 0}});
    CHECK(k.facets().size() == 1);
    CHECK_THROWS_AS(SimplicialComplex::from_facets({}), std::invalid_argument);
}

TEST_CASE("built-in RP2 is certified by its homology") {
    SimplicialComplex rp2 = rp2_minimal();
    CHECK(rp2.num_vertices() == 6);
    CHECK(rp2.num_faces(1) == 15);
    CHECK(rp2.num_faces(2) == 10);
    std::vector<HomologyGroup> h = complex_homology(rp2);
    CHECK(h[0].free_rank == 0);
    CHECK(h[0].torsion.empty());
    CHECK(h[1].free_rank == 0);
    CHECK(h[1].torsion == std::vector<Int>{2});
    CHECK(h[2].free_rank == 0);
    CHECK(h[2].torsion.empty());
}

TEST_CASE("boundary of the tetrahedron is a homology sphere") {
    SimplicialComplex s2 = simplex_boundary(3);
    CHECK(s2.num_faces(0) == 4);
    CHECK(s2.num_faces(1) == 6);
    CHECK(s2.num_faces(2) == 4);
    std::vector<HomologyGroup> h = complex_homology(s2);
    CHECK(h[0].free_rank == 0);
    CHECK(h[1].free_rank == 0);
    CHECK(h[2].free_rank == 1);
    CHECK(h[2].torsion.empty());
}

TEST_CASE("single simplices are acyclic") {
    for (int m = 0; m <= 3; ++m) {
        std::vector<HomologyGroup> h = complex_homology(single_simplex(m));
        for (const auto& g : h) {
            CHECK(g.free_rank == 0);
            CHECK(g.torsion.empty());
        }
    }
}

TEST_CASE("KY graph of a single 2-simplex") {
    SimplicialComplex k = single_simplex(2);
    Graph g = ky_graph(k);
    // empty face, 3 vertices, 3 edges, the triangle itself as maximum
    CHECK(g.num_vertices() == 8);
    CHECK(g.num_edges() == 3 + 6 + 3);
    CHECK(g.neighbors(0) == std::vector<int>{1, 2, 3});
    // no extra top adjoined: d(bottom, top) = m + 1
    CHECK(g.dist(0, g.num_vertices() - 1) == 3);
}

TEST_CASE("KY graph of a single edge complex") {
    SimplicialComplex k = single_simplex(1);
    AugmentedPoset p = augmented_poset(k);
    CHECK(p.size() == 4);
    CHECK_FALSE(p.top_adjoined);
    Graph g = ky_graph(k);
    CHECK(g.num_vertices() == 4);
    CHECK(g.dist(0, 3) == 2);
}

TEST_CASE("KY graph of RP2") {
    Graph g = ky_graph(rp2_minimal());
    CHECK(g.num_vertices() == 33); // 1 + 6 + 15 + 10 + 1
    CHECK(g.num_edges() == 76);    // 6 + 30 + 30 + 10
    CHECK(g.dist(0, 32) == 4);     // top adjoined: d = m + 2
}

TEST_CASE("KY construction rejects non-pure complexes") {
    SimplicialComplex k = SimplicialComplex::from_facets({{0, 1, 2}, {3, 4}});
    CHECK_FALSE(k.is_pure());
    CHECK_THROWS_AS(ky_graph(k), std::invalid_argument);
}

TEST_CASE("poset size and cover relations match a brute-force enumeration") {
    for (const SimplicialComplex& k : {single_simplex(2), simplex_boundary(3), rp2_minimal()}) {
        AugmentedPoset p = augmented_poset(k);
        int faces = 0;
        for (int d = 0; d <= k.dimension(); ++d) faces += k.num_faces(d);
        CHECK(p.size() == faces + 1 + (p.top_adjoined ? 1 : 0));

        // brute-force covers: subset pairs with size difference one, plus the
        // bottom and any adjoined top
        std::set<std::pair<int, int>> expect;
        std::map<std::vector<int>, int> idx;
        for (std::size_t i = 0; i < p.elements.size(); ++i) idx[p.elements[i]] = static_cast<int>(i);
        for (const auto& [f, fi] : idx)
            for (const auto& [g, gi] : idx) {
                if (f.size() + 1 != g.size()) continue;
                if (std::includes(g.begin(), g.end(), f.begin(), f.end())) expect.insert({fi, gi});
            }
        if (p.top_adjoined)
            for (const auto& f : k.facets()) expect.insert({idx[f], p.top()});
        std::set<std::pair<int, int>> got(p.covers.begin(), p.covers.end());
        CHECK(got == expect);
    }
}

TEST_CASE("d(bottom, top) equals the longest chain in the poset") {
    for (const SimplicialComplex& k :
         {single_simplex(1), single_simplex(2), single_simplex(3), simplex_boundary(2),
          simplex_boundary(3), rp2_minimal()}) {
        AugmentedPoset p = augmented_poset(k);
        Graph g = ky_graph(k);
        CHECK(g.dist(0, p.top()) == p.longest_chain());
        CHECK(p.longest_chain() == k.dimension() + (p.top_adjoined ? 2 : 1));
    }
}

TEST_CASE("pachner move on a triangle") {
    SimplicialComplex k = single_simplex(2);
    SimplicialComplex sub = pachner_subdivide(k, {0, 1, 2});
    CHECK(sub.num_vertices() == 4);
    CHECK(sub.facets().size() == 3);
    CHECK(sub.is_pure());
}

TEST_CASE("pachner move adds m facets") {
    for (const SimplicialComplex& k : {simplex_boundary(3), rp2_minimal()}) {
        SimplicialComplex sub = pachner_subdivide(k, k.facets()[0]);
        CHECK(sub.facets().size() == k.facets().size() + k.dimension());
        CHECK(sub.is_pure());
    }
}

TEST_CASE("pachner move preserves homology") {
    for (const SimplicialComplex& k : {simplex_boundary(3), rp2_minimal(), single_simplex(2)}) {
        SimplicialComplex sub = pachner_subdivide(k, k.facets()[0]);
        std::vector<HomologyGroup> a = complex_homology(k);
        std::vector<HomologyGroup> b = complex_homology(sub);
        REQUIRE(a.size() == b.size());
        for (std::size_t d = 0; d < a.size(); ++d) {
            CHECK(a[d].free_rank == b[d].free_rank);
            CHECK(a[d].torsion == b[d].torsion);
        }
    }
}

TEST_CASE("subdivided RP2 counts") {
    SimplicialComplex rp2 = rp2_minimal();
    SimplicialComplex sub = pachner_subdivide(rp2, rp2.facets()[0]);
    CHECK(sub.num_vertices() == 7);
    CHECK(sub.num_faces(1) == 18);
    CHECK(sub.num_faces(2) == 12);
    std::vector<HomologyGroup> h = complex_homology(sub);
    CHECK(h[1].torsion == std::vector<Int>{2});
}

TEST_CASE("pachner rejects non-facets") {
    SimplicialComplex rp2 = rp2_minimal();
    CHECK_THROWS_AS(pachner_subdivide(rp2, {0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(pachner_subdivide(rp2, {0, 1, 3}), std::invalid_argument);
}

TEST_CASE("complex json round-trips") {
    SimplicialComplex rp2 = rp2_minimal();
    nlohmann::json j = complex_to_json(rp2);
    SimplicialComplex back = complex_from_json(j);
    CHECK(back.facets() == rp2.facets());
    CHECK_THROWS_AS(complex_from_json(nlohmann::json::object()), std::invalid_argument);
}

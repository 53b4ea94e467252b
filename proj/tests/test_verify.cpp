#include <doctest.h>

#include "maghom/verify.hpp"

#include <nlohmann/json.hpp>

using namespace maghom;

TEST_CASE("Gu recursion base cases and published cells") {
    CHECK(gu_rank(4, 0, 0) == 8);
    CHECK(gu_rank(4, 1, 1) == 16);
    CHECK(gu_rank(4, 2, 2) == 16);
    CHECK(gu_rank(4, 2, 4) == 8);
    CHECK(gu_rank(4, 4, 6) == 16);
    CHECK(gu_rank(4, -1, 3) == 0);
    CHECK(gu_rank(4, 3, -1) == 0);
    CHECK(gu_rank(3, 0, 0) == 6);
}

TEST_CASE("Gu recursion matches the computed C6 table") {
    VerificationReport r = check_gu_recursion(3, 6, 6);
    CHECK(r.pass());
    CHECK(r.verdict() == "pass");
}

TEST_CASE("Gu recursion matches the computed C10 table") {
    CHECK(check_gu_recursion(5, 7, 7).pass());
}

TEST_CASE("closed forms pass on their instances") {
    CHECK(check_closed_form(cycle_graph(3), form_c3_diagonal(), 5, 5).pass());
    CHECK(check_closed_form(cycle_graph(4), form_c4_diagonal(), 5, 5).pass());
    CHECK(check_closed_form(cycle_graph(5), form_girth5_diagonal(), 4, 4).pass());
    CHECK(check_closed_form(random_tree(7, 1), form_tree_table(), 4, 4).pass());
    CHECK(check_closed_form(pentomino_p1(), form_square_polyomino_diagonal(5), 3, 3).pass());
    CHECK(check_closed_form(wheel_graph(5), form_wheel_diagonal(), 3, 3).pass());
}

TEST_CASE("closed forms report inapplicable graphs distinctly") {
    VerificationReport r = check_closed_form(cycle_graph(4), form_c3_diagonal(), 3, 3);
    CHECK_FALSE(r.hypotheses_met);
    CHECK(r.verdict() == "hypotheses-not-met");
    CHECK_FALSE(check_closed_form(cycle_graph(4), form_girth5_diagonal(), 3, 3).hypotheses_met);
    CHECK_FALSE(check_closed_form(path_graph(4), form_wheel_diagonal(), 3, 3).hypotheses_met);
    CHECK_FALSE(check_closed_form(cycle_graph(5), form_tree_table(), 3, 3).hypotheses_met);
}

TEST_CASE("a wrong table is reported with both values") {
    // girth-5 form applied to C6 but with doctored bounds: C6 does satisfy it,
    // so instead check the mismatch path via the golden-table checker
    std::map<std::pair<int, int>, long long> wrong{{{0, 0}, 5}};
    VerificationReport r = check_golden_table("wrong", cycle_graph(6), wrong, 1, 1);
    CHECK_FALSE(r.pass());
    REQUIRE(r.mismatches() >= 1);
    bool found = false;
    for (const auto& c : r.cells)
        if (c.status == CellOutcome::Status::Mismatch && c.k == 0 && c.l == 0) {
            CHECK(c.expected == 5);
            CHECK(c.actual == 6);
            found = true;
        }
    CHECK(found);
}

TEST_CASE("outerplanar table form on the two-C6 gluing") {
    GlueResult r = build_outerplanar_chain({{6, 6}, true});
    CHECK(check_closed_form(r.graph, form_outerplanar_table(3, 2, 0), 5, 5).pass());
    // second diagonal values come from the Mayer-Vietoris derivation
    ClosedForm f = form_outerplanar_table(3, 2, 0);
    CHECK(f.predicted(r.graph, 2, 3) == 12);
    CHECK(f.predicted(r.graph, 3, 4) == 24);
    CHECK(f.predicted(r.graph, 0, 0) == 10);
    CHECK(f.predicted(r.graph, 1, 1) == 22);
    CHECK(f.predicted(r.graph, 1, 2) == 0);
}

TEST_CASE("euler check passes on small graphs") {
    CHECK(check_euler(build_graph(1, {}), 5).pass());
    CHECK(check_euler(cycle_graph(6), 5).pass());
    CHECK(check_euler(build_graph(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}}), 5).pass());
    // a random connected 6-vertex graph
    Graph g = build_graph(6, {{0, 1}, {0, 2}, {1, 3}, {2, 4}, {3, 5}, {1, 4}, {2, 3}});
    REQUIRE(g.connected());
    CHECK(check_euler(g, 5).pass());
}

TEST_CASE("mayer-vietoris on the two-C6 gluing") {
    GlueResult g = build_outerplanar_chain({{6, 6}, true});
    SubgraphRef h1(g.graph, g.piece_maps[0]);
    SubgraphRef h2(g.graph, g.piece_maps[1]);
    VerificationReport r = check_mayer_vietoris(g.graph, h1, h2, 4, 4, {2}, {});
    CHECK(r.pass());
}

TEST_CASE("mayer-vietoris trivial decomposition H1 = G") {
    Graph g = cycle_graph(6);
    std::vector<int> all{0, 1, 2, 3, 4, 5};
    VerificationReport r = check_mayer_vietoris(g, SubgraphRef(g, all), SubgraphRef(g, {0, 1}), 3, 3, {2}, {});
    CHECK(r.pass());
}

TEST_CASE("mayer-vietoris reports unmet hypotheses for an odd-cycle gluing") {
    GlueResult g = build_outerplanar_chain({{5, 6}, true});
    SubgraphRef h1(g.graph, g.piece_maps[0]); // the C5 side must do the projecting
    SubgraphRef h2(g.graph, g.piece_maps[1]);
    VerificationReport r = check_mayer_vietoris(g.graph, h1, h2, 3, 3, {2}, {});
    CHECK_FALSE(r.hypotheses_met);
    CHECK(r.verdict() == "hypotheses-not-met");
    CHECK(r.hypothesis_note.find("project") != std::string::npos);
}

TEST_CASE("mayer-vietoris distinguishes cover failures") {
    Graph g = cycle_graph(6);
    VerificationReport r =
        check_mayer_vietoris(g, SubgraphRef(g, {0, 1, 2}), SubgraphRef(g, {2, 3, 4}), 2, 2, {2}, {});
    CHECK_FALSE(r.hypotheses_met);
}

TEST_CASE("kunneth on K2 box K2 and on the unit") {
    CHECK(check_kunneth(complete_graph(2), complete_graph(2), 4, 4).pass());
    CHECK(check_kunneth(cycle_graph(5), build_graph(1, {}), 4, 4).pass());
}

TEST_CASE("torsion embedding is vacuous for contractible complexes") {
    VerificationReport r = check_torsion_embedding(single_simplex(2), 3);
    CHECK(r.pass());
    for (const auto& c : r.cells) CHECK(c.detail.find("trivial") != std::string::npos);
}

TEST_CASE("free homology of the 2-sphere embeds in its KY graph") {
    VerificationReport r = check_torsion_embedding(simplex_boundary(3), 4);
    CHECK(r.pass());
    bool saw_rank_one = false;
    for (const auto& c : r.cells)
        if (c.k == 4 && c.expected == 1) saw_rank_one = true;
    CHECK(saw_rank_one); // reduced H_2(S^2) = Z must appear at k = 4
}

TEST_CASE("free homology of a 7-vertex torus embeds at two degrees") {
    // user-supplied facet list: the cyclic torus on K7, certified by its
    // reduced homology before the embedding check
    std::vector<std::vector<int>> facets;
    for (int i = 0; i < 7; ++i) facets.push_back({i, (i + 1) % 7, (i + 3) % 7});
    for (int i = 0; i < 7; ++i) facets.push_back({i, (i + 2) % 7, (i + 3) % 7});
    SimplicialComplex torus = SimplicialComplex::from_facets(facets);
    std::vector<HomologyGroup> h = complex_homology(torus);
    REQUIRE(h.size() == 3);
    CHECK(h[1].free_rank == 2);
    CHECK(h[2].free_rank == 1);
    CHECK(h[1].torsion.empty());
    VerificationReport r = check_torsion_embedding(torus, 4);
    CHECK(r.pass());
}

TEST_CASE("torsion embedding rejects non-pure complexes") {
    SimplicialComplex k = SimplicialComplex::from_facets({{0, 1, 2}, {3, 4}});
    VerificationReport r = check_torsion_embedding(k, 2);
    CHECK_FALSE(r.hypotheses_met);
}

TEST_CASE("torsion subgroup embedding criterion") {
    using V = std::vector<Int>;
    CHECK(torsion_subgroup_embeds(V{}, V{}));
    CHECK(torsion_subgroup_embeds(V{2}, V{2}));
    CHECK(torsion_subgroup_embeds(V{2}, V{4}));
    CHECK(torsion_subgroup_embeds(V{2}, V{2, 4}));
    CHECK_FALSE(torsion_subgroup_embeds(V{2, 2}, V{4}));
    CHECK_FALSE(torsion_subgroup_embeds(V{3}, V{2, 4}));
    CHECK(torsion_subgroup_embeds(V{2, 6}, V{2, 2, 12}));
    CHECK_FALSE(torsion_subgroup_embeds(V{8}, V{2, 4}));
}

TEST_CASE("reports serialize with verdicts and details") {
    GlueResult g = build_outerplanar_chain({{5, 6}, true});
    VerificationReport r = check_mayer_vietoris(g.graph, SubgraphRef(g.graph, g.piece_maps[0]),
                                                SubgraphRef(g.graph, g.piece_maps[1]), 2, 2, {2}, {});
    nlohmann::json j = report_to_json(r);
    CHECK(j["verdict"] == "hypotheses-not-met");
    CHECK(j.contains("hypothesis_note"));
    std::string text = report_to_text(r);
    CHECK(text.find("hypotheses-not-met") != std::string::npos);
}

TEST_CASE("the edge-added RP2 graph keeps its 2-torsion") {
    Graph g = edge_added_rp2_graph();
    CHECK(g.num_vertices() == 33);
    CHECK(g.num_edges() == 77);
    HomologyGroup h = homology_at(g, 3, 4);
    CHECK(h.free_rank == 474);
    bool even = false;
    for (const Int& d : h.torsion)
        if (d % 2 == 0) even = true;
    CHECK(even);
}

TEST_CASE("monotone bounds never flip a previous containment verdict") {
    SimplicialComplex s2 = simplex_boundary(3);
    VerificationReport small = check_torsion_embedding(s2, 2);
    VerificationReport big = check_torsion_embedding(s2, 4);
    for (const auto& cs : small.cells) {
        bool found = false;
        for (const auto& cb : big.cells)
            if (cb.k == cs.k && cb.l == cs.l) {
                CHECK(cb.status == cs.status);
                found = true;
            }
        CHECK(found);
    }
}

// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Bounds and tolerances are pinned here; every comparison is exact.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <vector>

#include "maghom/complexes.hpp"
#include "maghom/json_io.hpp"
#include "maghom/series.hpp"
#include "maghom/verify.hpp"
#include "oracles.hpp"

#include <nlohmann/json.hpp>

using namespace maghom;

namespace {

int g_failures = 0;

void criterion(int number, const char* description, double budget_seconds,
               const std::function<bool(std::string&)>& body) {
    std::string detail;
    auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (elapsed > budget_seconds) {
        ok = false;
        detail += (detail.empty() ? "" : "; ") + std::string("runtime budget exceeded");
    }
    std::printf("%s criterion %d: %s (%.1fs)%s%s\n", ok ? "PASS" : "FAIL", number, description, elapsed,
                detail.empty() ? "" : " -- ", detail.c_str());
    std::fflush(stdout);
    if (!ok) ++g_failures;
}

bool report_ok(const VerificationReport& r, std::string& detail) {
    if (!r.pass()) {
        detail += (detail.empty() ? "" : "; ") + r.name + ": " + r.verdict();
        for (const auto& c : r.cells)
            if (c.status != CellOutcome::Status::Match) {
                detail += " (k=" + std::to_string(c.k) + ",l=" + std::to_string(c.l) + ": expected " +
                          std::to_string(c.expected) + ", got " + std::to_string(c.actual) + ")";
                break;
            }
        if (!r.hypotheses_met) detail += " [" + r.hypothesis_note + "]";
    }
    return r.pass();
}

std::vector<Graph> corpus_graphs() {
    std::vector<Graph> graphs{cycle_graph(3), cycle_graph(4), cycle_graph(5), cycle_graph(6), cycle_graph(8),
                              build_outerplanar_chain({{6, 6}, true}).graph,
                              sq1_graph(), sq2_graph(), wheel_graph(5), pentomino_p1()};
    for (int i = 0; i < 5; ++i) graphs.push_back(random_tree(5 + i % 4, 427 + i));
    return graphs;
}

int corpus_lmax(const Graph& g) {
    if (g.num_vertices() == 8 && g.num_edges() == 8) return 10;       // C8
    if (g.num_vertices() <= 4) return 8;                              // C3, C4
    if (g.num_vertices() == 6 && g.num_edges() == 6) return 9;        // C6
    if (g.num_vertices() == 6 && g.num_edges() == 8) return 7;        // Sq1, Sq2
    return 6;
}

} // namespace

int main() {
    VerifyOptions opt;
    opt.jobs = 8;

    criterion(1, "C8 integral table through l=10 equals Table 1 with no torsion", 300, [&](std::string& d) {
        std::map<std::pair<int, int>, long long> table1;
        for (int i = 1; 4 * (i - 1) <= 10; ++i)
            for (int j = 1; 4 * (i - 1) + (j - 1) <= 10; ++j)
                table1[{2 * (i - 1) + (j - 1), 4 * (i - 1) + (j - 1)}] = j == 1 ? 8 : 16;
        return report_ok(check_golden_table("c8-published-ranks", cycle_graph(8), table1, 10, 10, true, opt), d);
    });

    criterion(2, "closed forms: C3, C4, C5, five trees, two-C6 gluing", 600, [&](std::string& d) {
        bool ok = true;
        ok &= report_ok(check_closed_form(cycle_graph(3), form_c3_diagonal(), 8, 8, opt), d);
        ok &= report_ok(check_closed_form(cycle_graph(4), form_c4_diagonal(), 8, 8, opt), d);
        ok &= report_ok(check_closed_form(cycle_graph(5), form_girth5_diagonal(), 6, 6, opt), d);
        for (int i = 0; i < 5; ++i)
            ok &= report_ok(check_closed_form(random_tree(5 + i % 4, 427 + i), form_tree_table(), 6, 6, opt), d);
        Graph twoc6 = build_outerplanar_chain({{6, 6}, true}).graph;
        ok &= report_ok(check_closed_form(twoc6, form_even_outerplanar_diagonal(), 7, 7, opt), d);
        ok &= report_ok(check_closed_form(twoc6, form_outerplanar_table(3, 2, 0), 7, 7, opt), d);
        return ok;
    });

    criterion(3, "Gu recursion matches C6 and C8 through l=9, diagonal form verified", 600,
              [&](std::string& d) {
                  bool ok = report_ok(check_gu_recursion(3, 9, 9, opt), d);
                  ok &= report_ok(check_gu_recursion(4, 9, 9, opt), d);
                  return ok;
              });

    criterion(4, "RP2 torsion: even invariant factor and F2-vs-Q gap at (3,4)", 1800, [&](std::string& d) {
        SimplicialComplex rp2 = rp2_minimal();
        Graph gk = ky_graph(rp2);
        HomologyGroup mh = homology_at(gk, 3, 4, CoeffMode::Z, 0, opt.limits);
        bool even_factor = false;
        for (const Int& t : mh.torsion)
            if (t % 2 == 0) even_factor = true;
        TorsionProbe probe = torsion_detect(gk, 3, 4, 2, opt.limits);
        d = "rank " + std::to_string(mh.free_rank) + ", torsion count " + std::to_string(mh.torsion.size()) +
            ", dimQ " + std::to_string(probe.dim_q) + ", dimF2 " + std::to_string(probe.dim_p);
        bool embedding = report_ok(check_torsion_embedding(rp2, 3, false, opt), d);
        return even_factor && probe.dim_p > probe.dim_q && embedding;
    });

    criterion(5, "Pachner persistence: F2-vs-Q gap survives one subdivision", 3600, [&](std::string& d) {
        SimplicialComplex rp2 = rp2_minimal();
        SimplicialComplex sub = pachner_subdivide(rp2, rp2.facets()[0]);
        try {
            Graph gk = ky_graph(sub);
            int lstar = gk.dist(0, gk.num_vertices() - 1);
            TorsionProbe probe = torsion_detect(gk, 3, lstar, 2, opt.limits);
            d = "l* = " + std::to_string(lstar) + ", dimQ " + std::to_string(probe.dim_q) + ", dimF2 " +
                std::to_string(probe.dim_p);
            return probe.dim_p > probe.dim_q;
        } catch (const CellTimeout&) {
            // declared downgrade: certify the simplicial side instead
            std::vector<HomologyGroup> h = complex_homology(sub);
            d = "detect ceiling hit; downgraded to simplicial H_1 of the subdivision";
            return h.size() > 1 && h[1].free_rank == 0 && h[1].torsion == std::vector<Int>{2};
        }
    });

    criterion(6, "graded Euler characteristic = inversion = alternating on the corpus", 1800,
              [&](std::string& d) {
                  bool ok = true;
                  for (const Graph& g : corpus_graphs())
                      ok &= report_ok(check_euler(g, corpus_lmax(g), opt), d);
                  return ok;
              });

    criterion(7, "Tables 3-5: Sq1, Sq2, W5, P-pentomino", 1800, [&](std::string& d) {
        const long long diag[] = {6, 16, 32, 60, 112, 212, 408, 796};
        std::map<std::pair<int, int>, long long> t4l, t4r, t3l, t5l;
        for (int k = 0; k <= 7; ++k) t4l[{k, k}] = t4r[{k, k}] = diag[k];
        t4r[{2, 3}] = 2;
        t4r[{3, 4}] = 12;
        t4r[{4, 5}] = 44;
        t4r[{4, 6}] = 2;
        t4r[{5, 6}] = 132;
        t4r[{5, 7}] = 16;
        t4r[{6, 7}] = 356;
        for (int k = 0; k <= 6; ++k) {
            t3l[{k, k}] = k == 0 ? 11 : 30 + 20 * (k - 1);
            long long w = k == 0 ? 6 : 20;
            for (int i = 1; i < k; ++i) w *= 3;
            t5l[{k, k}] = w;
        }
        bool ok = true;
        ok &= report_ok(check_golden_table("sq1-published-ranks", sq1_graph(), t4l, 7, 7, true, opt), d);
        ok &= report_ok(check_golden_table("sq2-published-ranks", sq2_graph(), t4r, 7, 7, true, opt), d);
        ok &= report_ok(check_golden_table("w5-published-ranks", wheel_graph(5), t5l, 6, 6, true, opt), d);
        ok &= report_ok(check_golden_table("pentomino-p1-published-ranks", pentomino_p1(), t3l, 6, 6, true, opt), d);
        return ok;
    });

    criterion(8, "Mayer-Vietoris additivity on three decompositions; C5 gluing refused", 1800,
              [&](std::string& d) {
                  bool ok = true;
                  {
                      GlueResult g = build_outerplanar_chain({{6, 6}, true});
                      ok &= report_ok(check_mayer_vietoris(g.graph, SubgraphRef(g.graph, g.piece_maps[0]),
                                                           SubgraphRef(g.graph, g.piece_maps[1]), 6, 6, {2, 3},
                                                           opt),
                                      d);
                  }
                  {
                      GlueResult g = build_outerplanar_chain({{6, 4}, true});
                      ok &= report_ok(check_mayer_vietoris(g.graph, SubgraphRef(g.graph, g.piece_maps[0]),
                                                           SubgraphRef(g.graph, g.piece_maps[1]), 6, 6, {2, 3},
                                                           opt),
                                      d);
                  }
                  {
                      GlueResult g = build_outerplanar_chain({{6, 6, 6}, true});
                      std::vector<int> first_two = g.piece_maps[0];
                      first_two.insert(first_two.end(), g.piece_maps[1].begin(), g.piece_maps[1].end());
                      ok &= report_ok(check_mayer_vietoris(g.graph, SubgraphRef(g.graph, first_two),
                                                           SubgraphRef(g.graph, g.piece_maps[2]), 5, 5, {2, 3},
                                                           opt),
                                      d);
                  }
                  {
                      GlueResult g = build_outerplanar_chain({{5, 6}, true});
                      VerificationReport mv =
                          check_mayer_vietoris(g.graph, SubgraphRef(g.graph, g.piece_maps[0]),
                                               SubgraphRef(g.graph, g.piece_maps[1]), 4, 4, {2}, opt);
                      if (mv.hypotheses_met) {
                          d += (d.empty() ? "" : "; ") + std::string("C5 gluing was not refused");
                          ok = false;
                      }
                  }
                  return ok;
              });

    criterion(9, "Kunneth: K2 box K2 equals the rank convolution through l=6", 600, [&](std::string& d) {
        return report_ok(check_kunneth(complete_graph(2), complete_graph(2), 6, 6, opt), d);
    });

    criterion(10, "property suite: d*d=0, Smith chains, mode consistency, dense oracle, determinism", 3600,
              [&](std::string& d) {
                  bool ok = true;

                  // boundary-of-boundary vanishes on every computed bigrading
                  for (const Graph& g : corpus_graphs()) {
                      int lmax = corpus_lmax(g);
                      for (int l = 0; l <= lmax; ++l)
                          for (int k = 2; k <= std::min(l, lmax); ++k)
                              if (!product_is_zero(boundary_matrix(g, k, l), boundary_matrix(g, k + 1, l))) {
                                  d += "d*d != 0 at (" + std::to_string(k) + "," + std::to_string(l) + ")";
                                  ok = false;
                              }
                  }

                  // Smith chains on boundary matrices (the library asserts the
                  // chain internally; exercise it on real inputs)
                  for (const Graph& g : {sq2_graph(), cycle_graph(8)})
                      for (int l = 2; l <= 6; ++l)
                          for (int k = 2; k <= l; ++k) {
                              SmithResult s = smith_normal_form(boundary_matrix(g, k, l));
                              for (std::size_t i = 0; i + 1 < s.factors.size(); ++i)
                                  if (s.factors[i + 1] % s.factors[i] != 0) {
                                      d += "divisibility chain broken";
                                      ok = false;
                                  }
                          }

                  // universal coefficients consistency across Z, Q, F2, F3
                  TableOptions topt;
                  topt.jobs = 8;
                  for (const Graph& g : corpus_graphs()) {
                      int lmax = std::min(5, corpus_lmax(g));
                      BigradedTable tz = homology_table(g, lmax, lmax, CoeffMode::Z, 0, topt);
                      BigradedTable tq = homology_table(g, lmax, lmax, CoeffMode::Q, 0, topt);
                      for (std::uint64_t p : {2ULL, 3ULL}) {
                          BigradedTable tp = homology_table(g, lmax, lmax, CoeffMode::Fp, p, topt);
                          for (const CellEntry& c : tz.cells) {
                              auto count_p = [&](int k, int l) {
                                  const CellEntry* cell = tz.find(k, l);
                                  long long cnt = 0;
                                  if (cell)
                                      for (const Int& t : cell->group.torsion)
                                          if (t % p == 0) ++cnt;
                                  return cnt;
                              };
                              const CellEntry* cq = tq.find(c.k, c.l);
                              const CellEntry* cp = tp.find(c.k, c.l);
                              if (!cq || !cp || cq->group.free_rank != c.group.free_rank ||
                                  cp->group.free_rank !=
                                      c.group.free_rank + count_p(c.k, c.l) + count_p(c.k - 1, c.l)) {
                                  d += "mode inconsistency at (" + std::to_string(c.k) + "," +
                                       std::to_string(c.l) + ")";
                                  ok = false;
                              }
                          }
                      }
                  }

                  // dense kernel-basis oracle on every graph with <= 5 vertices
                  std::vector<Graph> reps;
                  for (int n = 1; n <= 5; ++n) {
                      const int pairs = n * (n - 1) / 2;
                      std::set<std::uint64_t> seen;
                      std::vector<std::pair<int, int>> all;
                      for (int i = 0; i < n; ++i)
                          for (int j = i + 1; j < n; ++j) all.push_back({i, j});
                      std::vector<int> perm(n);
                      for (unsigned mask = 0; mask < (1u << pairs); ++mask) {
                          std::uint64_t canon = ~0ULL;
                          std::iota(perm.begin(), perm.end(), 0);
                          do {
                              std::uint64_t key = 0;
                              for (int b = 0; b < pairs; ++b)
                                  if (mask & (1u << b)) {
                                      auto [u, v] = all[b];
                                      int pu = perm[u], pv = perm[v];
                                      if (pu > pv) std::swap(pu, pv);
                                      key |= 1ULL << (pu * n + pv);
                                  }
                              canon = std::min(canon, key);
                          } while (std::next_permutation(perm.begin(), perm.end()));
                          if (!seen.insert(canon).second) continue;
                          std::vector<std::pair<int, int>> e;
                          for (int b = 0; b < pairs; ++b)
                              if (mask & (1u << b)) e.push_back(all[b]);
                          reps.push_back(Graph(n, e));
                      }
                  }
                  for (const Graph& g : reps)
                      for (int l = 0; l <= 4; ++l)
                          for (int k = 0; k <= l; ++k) {
                              HomologyGroup fast = homology_at(g, k, l);
                              HomologyGroup slow = test::dense_homology_oracle(g, k, l);
                              if (!(fast == slow)) {
                                  d += "oracle mismatch on a " + std::to_string(g.num_vertices()) +
                                       "-vertex graph at (" + std::to_string(k) + "," + std::to_string(l) + ")";
                                  ok = false;
                              }
                          }

                  // determinism across parallelism degrees
                  for (const Graph& g : {sq2_graph(), cycle_graph(8)}) {
                      TableOptions j1, j8;
                      j1.jobs = 1;
                      j8.jobs = 8;
                      BigradedTable a = homology_table(g, 6, 6, CoeffMode::Z, 0, j1);
                      BigradedTable b = homology_table(g, 6, 6, CoeffMode::Z, 0, j8);
                      if (table_to_json(a).dump() != table_to_json(b).dump()) {
                          d += "tables differ across --jobs";
                          ok = false;
                      }
                  }
                  return ok;
              });

    std::printf("%s: %d of 10 criteria failed\n", g_failures == 0 ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL",
                g_failures);
    return g_failures == 0 ? 0 : 1;
}

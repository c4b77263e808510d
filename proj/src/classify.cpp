#include "gk/classify.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

#include "gk/errors.hpp"

namespace gk {

namespace {

// true iff the product of vals exceeds limit; never overflows
bool product_exceeds(const std::vector<u64>& vals, u64 limit) {
    u64 prod = 1;
    for (u64 v : vals) {
        if (v == 0) return false;
        if (prod > limit / v) return true;
        prod *= v;
    }
    return prod > limit;
}

u64 saturating_product(const std::vector<u64>& vals, u64 cap) {
    u64 prod = 1;
    for (u64 v : vals) {
        if (prod > cap / v) return cap;
        prod *= v;
    }
    return prod;
}

}  // namespace

SolvableResult classify_solvable(const Graph& f) {
    Graph c = complement(f);
    if (auto tri = find_triangle(c)) return SolvableReject{tri};
    if (auto col = k_color(c, 3)) return SolvableAccept{std::move(*col)};
    return SolvableReject{std::nullopt};
}

MetanilpotentResult classify_metanilpotent(const Graph& f) {
    BipartiteCheck check = bipartite_check(complement(f));
    if (check.ok()) return MetanilpotentAccept{std::move(*check.coloring)};
    return MetanilpotentReject{std::move(check.odd_cycle)};
}

namespace {

// next ascending k-combination of {0..n-1}; false when exhausted
bool next_combination(std::vector<int>& comb, int n) {
    int k = static_cast<int>(comb.size());
    for (int i = k - 1; i >= 0; i--) {
        if (comb[i] < n - (k - i)) {
            comb[i]++;
            for (int j = i + 1; j < k; j++) comb[j] = comb[j - 1] + 1;
            return true;
        }
    }
    return false;
}

}  // namespace

NpfResult classify_npowerfree_solvable(const Graph& f, std::uint64_t n) {
    if (n < 2) throw std::invalid_argument("npowerfree: n must be >= 2");
    Graph c = complement(f);
    int nv = c.vertex_count();

    if (auto tri = find_triangle(c)) return NpfReject{tri, {}};

    int kmax = count_primes_below(n, nv);  // never need more reds than vertices
    NpfReject report;

    for (int k = 0; k <= kmax; k++) {
        std::vector<u64> labels = first_primes(k);
        std::vector<int> red(k);
        std::iota(red.begin(), red.end(), 0);
        bool more = true;
        while (more) {
            mask_t red_mask = 0;
            for (int r : red) red_mask |= mask_t{1} << r;
            bool independent = true;
            for (int r : red)
                if (c.neighbors(r) & red_mask) {
                    independent = false;
                    break;
                }
            if (!independent) {
                more = next_combination(red, nv);
                continue;
            }

            mask_t rest_mask = c.all_vertices_mask() & ~red_mask;
            Graph rest = c.induced(rest_mask);
            std::vector<int> rest_to_c = mask_to_vertices(rest_mask);
            BipartiteCheck bip = bipartite_check(rest);

            if (!bip.ok()) {
                NpfCase entry;
                entry.red = red;
                for (int v : bip.odd_cycle) entry.odd_cycle.push_back(rest_to_c[v]);
                report.cases.push_back(std::move(entry));
                more = next_combination(red, nv);
                continue;
            }

            std::vector<mask_t> comps = component_masks(rest);
            int nc = static_cast<int>(comps.size());
            NpfCase entry;
            entry.red = red;

            for (mask_t swap = 0; swap < (mask_t{1} << nc); swap++) {
                Coloring col;
                col.num_colors = 3;
                col.color.assign(nv, -1);
                for (int r : red) col.color[r] = 0;
                for (int ci = 0; ci < nc; ci++) {
                    int green_class = (swap >> ci) & 1;
                    for (int hv : mask_to_vertices(comps[ci]))
                        col.color[rest_to_c[hv]] =
                            bip.coloring->color[hv] == green_class ? 1 : 2;
                }
                Digraph orient = canonical_orientation(c, col);

                std::vector<int> blue_verts;
                std::vector<std::vector<int>> sources;
                for (int v = 0; v < nv; v++) {
                    if (col.color[v] != 2) continue;
                    blue_verts.push_back(v);
                    sources.push_back(mask_to_vertices(directed_two_path_sources(orient, v)));
                }

                // label permutations: red vertices ascending get labels[perm]
                std::vector<u64> perm = labels;
                bool accepted = false;
                do {
                    bool ok = true;
                    for (size_t bi = 0; bi < blue_verts.size() && ok; bi++) {
                        std::vector<u64> vals;
                        for (int s : sources[bi]) {
                            auto it = std::find(red.begin(), red.end(), s);
                            vals.push_back(perm[it - red.begin()]);
                        }
                        if (product_exceeds(vals, n - 1)) ok = false;
                    }
                    if (ok) {
                        accepted = true;
                        break;
                    }
                } while (std::next_permutation(perm.begin(), perm.end()));

                if (accepted) {
                    NpfWitness w;
                    w.coloring = col;
                    w.red_vertices = red;
                    w.red_labels = perm;
                    for (size_t bi = 0; bi < blue_verts.size(); bi++) {
                        NpfBlueSources b;
                        b.vertex = blue_verts[bi];
                        b.sources = sources[bi];
                        std::vector<u64> vals;
                        for (int s : sources[bi]) {
                            auto it = std::find(red.begin(), red.end(), s);
                            vals.push_back(perm[it - red.begin()]);
                        }
                        b.label_product = saturating_product(vals, ~u64{0});
                        w.blue.push_back(std::move(b));
                    }
                    return w;
                }

                NpfCaseColoring cc;
                for (int v = 0; v < nv; v++) {
                    if (col.color[v] == 1) cc.green.push_back(v);
                    if (col.color[v] == 2) cc.blue.push_back(v);
                }
                for (size_t bi = 0; bi < blue_verts.size(); bi++) {
                    std::vector<u64> smallest = first_primes(static_cast<int>(sources[bi].size()));
                    if (product_exceeds(smallest, n - 1)) cc.forced_ends.push_back(blue_verts[bi]);
                }
                entry.colorings.push_back(std::move(cc));
            }
            report.cases.push_back(std::move(entry));
            more = next_combination(red, nv);
        }
    }
    return report;
}

CubefreeSolvableResult classify_cubefree_solvable(const Graph& f) {
    Graph c = complement(f);
    if (auto tri = find_triangle(c)) return CubefreeSolvableReject{tri};
    if (c.vertex_count() == 0)
        return CubefreeSolvableAccept{std::nullopt, Coloring{{}, 2}};
    if (auto r = bipartite_after_one_vertex(c))
        return CubefreeSolvableAccept{r->removed, std::move(r->coloring)};
    return CubefreeSolvableReject{std::nullopt};
}

namespace {

int eligible_side_primes(u64 half) {
    // odd primes dividing the side to exactly the first power
    int count = 0;
    for (auto& [p, e] : factorize(half).factors)
        if (p != 2 && e == 1) count++;
    return count;
}

struct SideCounts {
    int m = 0, n = 0;          // distinct primes per side
    int elig_m = 0, elig_n = 0;
};

SideCounts side_counts(const PslProfile& prof) {
    SideCounts s;
    s.m = prof.m;
    s.n = prof.n;
    s.elig_m = eligible_side_primes((prof.q - 1) / 2);
    s.elig_n = eligible_side_primes((prof.q + 1) / 2);
    return s;
}

}  // namespace

CubefreeResult classify_cubefree(const Graph& f, const CubefreeOptions& opts) {
    Graph c = complement(f);
    int nv = c.vertex_count();
    CubefreeResult out;

    BipartiteCheck bip = bipartite_check(c);
    if (bip.ok()) out.verdicts.push_back(OddOrderVerdict{*bip.coloring});

    if (!find_triangle(c)) {
        if (nv == 0)
            out.verdicts.push_back(SolvableEvenVerdict{std::nullopt, Coloring{{}, 2}});
        else if (auto r = bipartite_after_one_vertex(c))
            out.verdicts.push_back(SolvableEvenVerdict{r->removed, std::move(r->coloring)});
    }

    std::vector<mask_t> comps = component_masks(c);
    int ncomp = static_cast<int>(comps.size());
    std::vector<PslProfile> profiles;  // filled on first use
    bool profiles_ready = false;

    for (int ci = 0; ci < ncomp; ci++) {
        bool others_bipartite = true;
        for (int cj = 0; cj < ncomp && others_bipartite; cj++)
            if (cj != ci && !bipartite_check(c.induced(comps[cj])).ok()) others_bipartite = false;
        if (!others_bipartite) continue;

        std::vector<int> sub_to_c = mask_to_vertices(comps[ci]);
        Graph sub = c.induced(comps[ci]);
        Graph csub = complement(sub);
        std::vector<mask_t> parts = component_masks(csub);
        bool multipartite = true;
        for (mask_t part : parts) {
            std::vector<int> vs = mask_to_vertices(part);
            for (size_t i = 0; i < vs.size() && multipartite; i++)
                for (size_t j = i + 1; j < vs.size(); j++)
                    if (!csub.has_edge(vs[i], vs[j])) {
                        multipartite = false;
                        break;
                    }
        }
        if (!multipartite) continue;

        std::vector<int> other_singletons;  // component indices
        for (int cj = 0; cj < ncomp; cj++)
            if (cj != ci && std::popcount(comps[cj]) == 1) other_singletons.push_back(cj);

        // interpretation: which part is the q vertex (or none, q deleted),
        // leaving kept clique classes of sizes m', n'
        struct Interp {
            bool char_deleted;
            int q_part;           // part index, -1 when deleted
            int m_part, n_part;   // part indices, -1 = absent
        };
        std::vector<Interp> interps;
        std::vector<std::pair<bool, std::pair<int, int>>> seen;  // (mode, {m',n'} sorted)
        auto add_interp = [&](bool del, int qp, int mp, int np_) {
            int ms = mp >= 0 ? std::popcount(parts[mp]) : 0;
            int ns = np_ >= 0 ? std::popcount(parts[np_]) : 0;
            if (ms == 0 && ns == 0) return;  // the side holding 2 can never dissolve
            auto key = std::make_pair(del, std::make_pair(std::min(ms, ns), std::max(ms, ns)));
            if (std::find(seen.begin(), seen.end(), key) != seen.end()) return;
            seen.push_back(key);
            interps.push_back({del, qp, mp, np_});
        };
        int np = static_cast<int>(parts.size());
        if (np <= 3) {
            for (int qp = 0; qp < np; qp++) {
                if (std::popcount(parts[qp]) != 1) continue;
                std::vector<int> rest;
                for (int p = 0; p < np; p++)
                    if (p != qp) rest.push_back(p);
                add_interp(false, qp, rest.size() > 0 ? rest[0] : -1,
                           rest.size() > 1 ? rest[1] : -1);
            }
        }
        if (opts.include_characteristic && np <= 2)
            add_interp(true, -1, np > 0 ? 0 : -1, np > 1 ? 1 : -1);

        if (!profiles_ready && !interps.empty()) {
            profiles = psl2_profiles_upto(opts.q_bound);
            profiles_ready = true;
        }

        for (const Interp& it : interps) {
            int msz = it.m_part >= 0 ? std::popcount(parts[it.m_part]) : 0;
            int nsz = it.n_part >= 0 ? std::popcount(parts[it.n_part]) : 0;
            bool found = false;
            for (const PslProfile& prof : profiles) {
                SideCounts sc = side_counts(prof);
                int avail = static_cast<int>(other_singletons.size());
                int extra = it.char_deleted ? 1 : 0;
                // assignment A: m' drawn from the (q-1)/2 side
                for (bool m_minus : {true, false}) {
                    int side_m = m_minus ? sc.m : sc.n;
                    int side_n = m_minus ? sc.n : sc.m;
                    int elig_m = m_minus ? sc.elig_m : sc.elig_n;
                    int elig_n = m_minus ? sc.elig_n : sc.elig_m;
                    int sm = side_m - msz, sn = side_n - nsz;
                    if (sm < 0 || sn < 0 || sm > elig_m || sn > elig_n) continue;
                    if (sm + sn + extra > avail) continue;

                    NonSolvableVerdict v;
                    v.q = prof.q;
                    v.profile = prof;
                    v.characteristic_deleted = it.char_deleted;
                    if (it.q_part >= 0)
                        for (int x : mask_to_vertices(parts[it.q_part]))
                            v.q_class.push_back(sub_to_c[x]);
                    if (it.m_part >= 0)
                        for (int x : mask_to_vertices(parts[it.m_part]))
                            v.m_class.push_back(sub_to_c[x]);
                    if (it.n_part >= 0)
                        for (int x : mask_to_vertices(parts[it.n_part]))
                            v.n_class.push_back(sub_to_c[x]);
                    v.m_is_minus_side = m_minus;
                    v.s_minus = m_minus ? sm : sn;
                    v.s_plus = m_minus ? sn : sm;
                    int need = sm + sn + extra;
                    mask_t s_mask = 0;
                    for (int si = 0; si < need; si++) {
                        int vtx = mask_to_vertices(comps[other_singletons[si]])[0];
                        v.s_vertices.push_back(vtx);
                        s_mask |= mask_t{1} << vtx;
                    }
                    mask_t rest_mask = 0;
                    for (int cj = 0; cj < ncomp; cj++)
                        if (cj != ci) rest_mask |= comps[cj];
                    rest_mask &= ~s_mask;
                    v.bipartite_vertices = mask_to_vertices(rest_mask);
                    v.bipartite_coloring.num_colors = 2;
                    v.bipartite_coloring.color.assign(nv, -1);
                    if (rest_mask) {
                        Graph restg = c.induced(rest_mask);
                        auto rc = bipartite_check(restg);
                        std::vector<int> to_c = mask_to_vertices(rest_mask);
                        for (int j = 0; j < restg.vertex_count(); j++)
                            v.bipartite_coloring.color[to_c[j]] = rc.coloring->color[j];
                    }
                    out.verdicts.push_back(std::move(v));
                    found = true;
                    break;
                }
                if (found) break;
            }
            if (!found) out.q_bound_exhausted = true;
        }
    }
    return out;
}

PslShapeResult classify_psl2_cubefree(const Graph& f, std::uint64_t q_bound) {
    PslShapeResult out;
    std::vector<mask_t> comps = component_masks(f);
    if (comps.size() != 3) return out;
    int singleton = -1;
    for (size_t i = 0; i < comps.size(); i++) {
        std::vector<int> vs = mask_to_vertices(comps[i]);
        for (size_t a = 0; a < vs.size(); a++)
            for (size_t b = a + 1; b < vs.size(); b++)
                if (!f.has_edge(vs[a], vs[b])) return out;  // every component a clique
        if (singleton < 0 && vs.size() == 1) singleton = static_cast<int>(i);
    }
    if (singleton < 0) return out;
    out.shape_ok = true;
    std::vector<int> sizes;
    for (size_t i = 0; i < comps.size(); i++)
        if (static_cast<int>(i) != singleton) sizes.push_back(std::popcount(comps[i]));
    for (const PslProfile& prof : psl2_profiles_upto(q_bound)) {
        if (prof.m == sizes[0] && prof.n == sizes[1]) {
            out.match = PslShapeMatch{prof.q, prof, true};
            return out;
        }
        if (prof.m == sizes[1] && prof.n == sizes[0]) {
            out.match = PslShapeMatch{prof.q, prof, false};
            return out;
        }
    }
    out.bound_exhausted = true;
    return out;
}

PseudoSolvableReport pseudo_solvable_check(const PrimeLabeledGraph& f) {
    PseudoSolvableReport rep;
    Graph c = complement(f.graph);
    int v2 = f.vertex_of(2), v3 = f.vertex_of(3), v5 = f.vertex_of(5);

    Graph ca = c;
    if (v3 >= 0 && v5 >= 0 && ca.has_edge(v3, v5)) ca.remove_edge(v3, v5);
    if (auto tri = find_triangle(ca)) {
        rep.condition_a = false;
        rep.a_triangle = {f.label_of((*tri)[0]), f.label_of((*tri)[1]), f.label_of((*tri)[2])};
    } else if (k_color(ca, 3)) {
        rep.condition_a = true;
    } else {
        rep.condition_a = false;
        rep.a_not_three_colorable = true;
    }

    bool has_235 = v2 >= 0 && v3 >= 0 && v5 >= 0 && c.has_edge(v2, v3) && c.has_edge(v2, v5) &&
                   c.has_edge(v3, v5);
    std::vector<std::pair<std::uint64_t, std::uint64_t>> two_p;
    if (v2 >= 0)
        for (int w : mask_to_vertices(c.neighbors(v2))) {
            u64 p = f.label_of(w);
            if (p != 3 && p != 5) two_p.emplace_back(2, p);
        }
    rep.condition_b = !has_235 || two_p.empty();
    if (!rep.condition_b) {
        rep.b_triangle = {{2, 3, 5}};
        rep.b_edges = two_p;
    }
    return rep;
}

}  // namespace gk

#include "gk/realize.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "gk/errors.hpp"
#include "gk/numtheory.hpp"

namespace gk {

namespace {

// Smallest prime acceptable under the avoid list, above `lower`, congruent to
// residue mod modulus.  A nonzero-seeded rng may skip past the first matches.
struct PrimePicker {
    std::vector<u64> used;
    std::mt19937_64 rng;
    bool fuzz = false;

    explicit PrimePicker(const RealizeOptions& opts) : rng(opts.seed), fuzz(opts.seed != 0) {
        used = opts.avoid;
        if (opts.odd_only) used.push_back(2);
    }

    u64 next(u64 modulus, u64 residue) {
        int skip = fuzz ? static_cast<int>(rng() % 3) : 0;
        u64 lower = 1;
        u64 p = 0;
        for (int i = 0; i <= skip; i++) {
            p = dirichlet_prime(modulus, residue, used, lower);
            lower = p;
        }
        used.push_back(p);
        return p;
    }
};

}  // namespace

SquarefreeResult realize_squarefree(const Graph& f, const RealizeOptions& opts) {
    Graph c = complement(f);
    int nv = c.vertex_count();
    BipartiteCheck bip = bipartite_check(c);
    if (!bip.ok()) return RealizeReject{bip.odd_cycle};

    // acting side per component: fewer edge-bearing vertices wins, ties keep
    // the class of the component's first vertex (class 0)
    mask_t acting = 0;
    for (mask_t comp : component_masks(c)) {
        int bearing[2] = {0, 0};
        for (int v : mask_to_vertices(comp))
            if (c.degree(v) > 0) bearing[bip.coloring->color[v]]++;
        int red_class = bearing[1] < bearing[0] ? 1 : 0;
        for (int v : mask_to_vertices(comp))
            if (bip.coloring->color[v] == red_class && c.degree(v) > 0)
                acting |= mask_t{1} << v;
    }

    std::vector<int> O = mask_to_vertices(acting);
    std::vector<int> I;
    for (int v = 0; v < nv; v++)
        if (!((acting >> v) & 1)) I.push_back(v);

    PrimePicker picker(opts);
    std::vector<u64> ps;
    u64 modulus = 1;
    for (size_t j = 0; j < O.size(); j++) {
        u64 p = picker.next(1, 0);
        ps.push_back(p);
        if (modulus > ~u64{0} / p) throw CapacityError("realize: acting order overflows");
        modulus *= p;
    }
    std::vector<u64> qs;
    for (size_t k = 0; k < I.size(); k++)
        qs.push_back(picker.next(modulus, modulus == 1 ? 0 : 1));

    std::vector<u64> vertex_primes(nv, 0);
    for (size_t j = 0; j < O.size(); j++) vertex_primes[O[j]] = ps[j];
    for (size_t k = 0; k < I.size(); k++) vertex_primes[I[k]] = qs[k];

    GroupSpec spec;
    if (O.empty()) {
        if (I.empty()) {
            spec.value = Cyclic{1};
        } else if (I.size() == 1) {
            spec.value = Cyclic{qs[0]};
        } else {
            DirectProduct prod;
            for (u64 q : qs) prod.factors.push_back(GroupSpec{Cyclic{q}});
            spec.value = std::move(prod);
        }
    } else {
        Semidirect sd;
        sd.qs = qs;
        sd.ps = ps;
        sd.action.assign(ps.size(), std::vector<u64>(qs.size(), 1));
        for (size_t j = 0; j < O.size(); j++)
            for (size_t k = 0; k < I.size(); k++)
                if (c.has_edge(O[j], I[k])) sd.action[j][k] = unit_of_order(ps[j], qs[k]);
        spec.value = std::move(sd);
    }
    return SquarefreeRealization{std::move(spec), std::move(vertex_primes)};
}

NpfCertificateResult realize_npowerfree_certificate(const Graph& f, std::uint64_t n) {
    NpfResult res = classify_npowerfree_solvable(f, n);
    if (std::holds_alternative<NpfReject>(res)) return std::get<NpfReject>(std::move(res));
    NpfWitness w = std::get<NpfWitness>(std::move(res));

    Graph c = complement(f);
    int nv = c.vertex_count();
    Digraph orient = canonical_orientation(c, w.coloring);

    std::vector<u64> label_of(nv, 0);
    for (size_t i = 0; i < w.red_vertices.size(); i++)
        label_of[w.red_vertices[i]] = w.red_labels[i];

    std::vector<u64> exponents(nv, 1);
    for (int v = 0; v < nv; v++) {
        std::vector<int> sources = mask_to_vertices(directed_two_path_sources(orient, v));
        u64 e = 1;
        for (int s : sources) {
            if (label_of[s] == 0) throw std::logic_error("certificate: non-red 2-path source");
            e *= label_of[s];
        }
        exponents[v] = e;
        if (e > n - 1) throw std::logic_error("certificate: exponent exceeds n-1");
    }

    // red vertices keep their witness labels; the rest get fresh primes
    std::vector<u64> vertex_primes(nv, 0);
    for (size_t i = 0; i < w.red_vertices.size(); i++)
        vertex_primes[w.red_vertices[i]] = w.red_labels[i];
    u64 candidate = 2;
    for (int v = 0; v < nv; v++) {
        if (vertex_primes[v] != 0) continue;
        while (!is_prime(candidate) ||
               std::find(vertex_primes.begin(), vertex_primes.end(), candidate) !=
                   vertex_primes.end())
            candidate++;
        vertex_primes[v] = candidate++;
    }

    NpfCertificate cert;
    cert.witness = std::move(w);
    cert.vertex_primes = vertex_primes;
    cert.vertex_exponents = exponents;
    cert.certificate.n_bound = n;
    for (int v = 0; v < nv; v++)
        cert.certificate.factors.emplace_back(vertex_primes[v], exponents[v]);
    std::sort(cert.certificate.factors.begin(), cert.certificate.factors.end());
    return cert;
}

CubefreeRealizeResult realize_cubefree_nonsolvable(const Graph& f, const NonSolvableVerdict& v,
                                                  const RealizeOptions& opts) {
    auto prof = psl2_cubefree_profile(v.q);
    if (!prof) return RealizeInconsistency{"q has no admissible profile"};
    int nv = f.vertex_count();

    auto side_primes = [](u64 half) {
        std::vector<u64> out;
        for (auto& [p, e] : factorize(half).factors) out.push_back(p);
        return out;
    };
    auto eligible = [](u64 half) {
        std::vector<u64> out;
        for (auto& [p, e] : factorize(half).factors)
            if (p != 2 && e == 1) out.push_back(p);
        return out;
    };

    std::vector<u64> minus = side_primes((v.q - 1) / 2), plus = side_primes((v.q + 1) / 2);
    std::vector<u64> elig_minus = eligible((v.q - 1) / 2), elig_plus = eligible((v.q + 1) / 2);

    if (v.s_minus > static_cast<int>(elig_minus.size()) ||
        v.s_plus > static_cast<int>(elig_plus.size()))
        return RealizeInconsistency{"verdict deletes more side primes than are eligible"};

    // smallest-first deletions, deterministic
    std::vector<u64> s_primes(elig_minus.begin(), elig_minus.begin() + v.s_minus);
    s_primes.insert(s_primes.end(), elig_plus.begin(), elig_plus.begin() + v.s_plus);
    auto erase_from = [](std::vector<u64>& side, const std::vector<u64>& gone) {
        side.erase(std::remove_if(side.begin(), side.end(),
                                  [&](u64 p) {
                                      return std::find(gone.begin(), gone.end(), p) != gone.end();
                                  }),
                   side.end());
    };
    erase_from(minus, s_primes);
    erase_from(plus, s_primes);
    if (v.characteristic_deleted) s_primes.push_back(v.q);
    std::sort(s_primes.begin(), s_primes.end());

    const std::vector<u64>& m_kept = v.m_is_minus_side ? minus : plus;
    const std::vector<u64>& n_kept = v.m_is_minus_side ? plus : minus;
    if (m_kept.size() != v.m_class.size() || n_kept.size() != v.n_class.size())
        return RealizeInconsistency{"kept side sizes disagree with verdict classes"};
    if (v.characteristic_deleted ? !v.q_class.empty() : v.q_class.size() != 1)
        return RealizeInconsistency{"q class size disagrees with verdict"};
    if (s_primes.size() != v.s_vertices.size())
        return RealizeInconsistency{"singleton count disagrees with deleted primes"};

    std::vector<u64> vertex_primes(nv, 0);
    if (!v.q_class.empty()) vertex_primes[v.q_class[0]] = v.q;
    for (size_t i = 0; i < v.m_class.size(); i++) vertex_primes[v.m_class[i]] = m_kept[i];
    for (size_t i = 0; i < v.n_class.size(); i++) vertex_primes[v.n_class[i]] = n_kept[i];
    for (size_t i = 0; i < v.s_vertices.size(); i++) vertex_primes[v.s_vertices[i]] = s_primes[i];

    DirectProduct prod;
    prod.factors.push_back(GroupSpec{Psl2{v.q}});

    if (!v.bipartite_vertices.empty()) {
        mask_t bmask = 0;
        for (int x : v.bipartite_vertices) bmask |= mask_t{1} << x;
        Graph side = f.induced(bmask);
        RealizeOptions sopts = opts;
        for (u64 p : {u64{2}, v.q}) sopts.avoid.push_back(p);
        for (u64 p : minus) sopts.avoid.push_back(p);
        for (u64 p : plus) sopts.avoid.push_back(p);
        for (u64 p : s_primes) sopts.avoid.push_back(p);
        SquarefreeResult sres = realize_squarefree(side, sopts);
        if (std::holds_alternative<RealizeReject>(sres))
            return RealizeInconsistency{"bipartite side is not bipartite"};
        auto& sreal = std::get<SquarefreeRealization>(sres);
        for (size_t i = 0; i < v.bipartite_vertices.size(); i++)
            vertex_primes[v.bipartite_vertices[i]] = sreal.vertex_primes[i];
        prod.factors.push_back(std::move(sreal.spec));
    }
    for (u64 s : s_primes) prod.factors.push_back(GroupSpec{Cyclic{s}});

    GroupSpec spec;
    if (prod.factors.size() == 1)
        spec = std::move(prod.factors[0]);
    else
        spec.value = std::move(prod);

    for (int x = 0; x < nv; x++)
        if (vertex_primes[x] == 0) return RealizeInconsistency{"vertex not covered by verdict"};
    return CubefreeRealization{std::move(spec), std::move(vertex_primes)};
}

}  // namespace gk

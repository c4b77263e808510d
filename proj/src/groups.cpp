#include "gk/groups.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "gk/errors.hpp"
#include "gk/numtheory.hpp"

namespace gk {

namespace {

u64 checked_mul(u64 a, u64 b, const char* what) {
    __uint128_t r = static_cast<__uint128_t>(a) * b;
    if (r > ~u64{0}) throw CapacityError(std::string(what) + ": order overflows 64 bits");
    return static_cast<u64>(r);
}

u64 lcm_checked(u64 a, u64 b) {
    u64 g = std::gcd(a, b);
    return checked_mul(a / g, b, "lcm");
}

}  // namespace

u64 group_order(const GroupSpec& spec) {
    return std::visit(
        [](const auto& s) -> u64 {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, Cyclic>) {
                return s.order;
            } else if constexpr (std::is_same_v<T, DirectProduct>) {
                u64 n = 1;
                for (const auto& f : s.factors) n = checked_mul(n, group_order(f), "product");
                return n;
            } else if constexpr (std::is_same_v<T, Semidirect>) {
                u64 n = 1;
                for (u64 q : s.qs) n = checked_mul(n, q, "semidirect");
                for (u64 p : s.ps) n = checked_mul(n, p, "semidirect");
                return n;
            } else {
                return s.q * (s.q * s.q - 1) / 2;
            }
        },
        spec.value);
}

void validate_spec(const GroupSpec& spec) {
    std::visit(
        [](const auto& s) {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, Cyclic>) {
                if (s.order < 1) throw std::invalid_argument("cyclic: order must be >= 1");
            } else if constexpr (std::is_same_v<T, DirectProduct>) {
                for (const auto& f : s.factors) validate_spec(f);
            } else if constexpr (std::is_same_v<T, Semidirect>) {
                if (s.qs.empty() || s.ps.empty())
                    throw std::invalid_argument("semidirect: qs and ps must be nonempty");
                for (u64 q : s.qs)
                    if (!is_prime(q)) throw std::invalid_argument("semidirect: qs must be prime");
                for (u64 p : s.ps)
                    if (!is_prime(p)) throw std::invalid_argument("semidirect: ps must be prime");
                std::vector<u64> all(s.qs);
                all.insert(all.end(), s.ps.begin(), s.ps.end());
                std::sort(all.begin(), all.end());
                if (std::adjacent_find(all.begin(), all.end()) != all.end())
                    throw std::invalid_argument("semidirect: primes must be pairwise distinct");
                if (s.action.size() != s.ps.size())
                    throw std::invalid_argument("semidirect: action needs one row per p");
                for (size_t j = 0; j < s.ps.size(); j++) {
                    if (s.action[j].size() != s.qs.size())
                        throw std::invalid_argument("semidirect: action row size mismatch");
                    for (size_t k = 0; k < s.qs.size(); k++) {
                        u64 a = s.action[j][k];
                        if (a < 1 || a >= s.qs[k])
                            throw std::invalid_argument("semidirect: action entry out of range");
                        if (a != 1 && pow_mod(a, s.ps[j], s.qs[k]) != 1)
                            throw std::invalid_argument(
                                "semidirect: action entry is not of order p mod q");
                    }
                }
            } else {
                if (s.q < 5 || !is_prime(s.q) || s.q % 2 == 0)
                    throw std::invalid_argument("psl2: q must be an odd prime >= 5");
            }
        },
        spec.value);
}

namespace {

// (prod C_qk) : (prod C_pj); elements are residue vectors, kernel digits
// first.  Orders come from walking cyclic subgroups: every element of <g>
// has order dividing |<g>|, and each divisor occurs, so one walk per
// uncovered generator records divisors(L) and covers all powers.
class SemidirectEnum {
public:
    explicit SemidirectEnum(const Semidirect& s) : qs_(s.qs), ps_(s.ps) {
        nq_ = qs_.size();
        np_ = ps_.size();
        size_ = 1;
        for (u64 q : qs_) size_ *= q;
        tsize_ = 1;
        for (u64 p : ps_) tsize_ *= p;
        size_ *= tsize_;
        act_.assign(tsize_, std::vector<u64>(nq_, 1));
        for (u64 tr = 0; tr < tsize_; tr++) {
            u64 rest = tr;
            for (size_t j = 0; j < np_; j++) {
                u64 tj = rest % ps_[j];
                rest /= ps_[j];
                for (size_t k = 0; k < nq_; k++)
                    act_[tr][k] = (act_[tr][k] * pow_mod(s.action[j][k], tj, qs_[k])) % qs_[k];
            }
        }
    }

    u64 size() const { return size_; }

    std::vector<u64> decode(u64 rank) const {
        std::vector<u64> e(nq_ + np_);
        for (size_t k = 0; k < nq_; k++) {
            e[k] = rank % qs_[k];
            rank /= qs_[k];
        }
        for (size_t j = 0; j < np_; j++) {
            e[nq_ + j] = rank % ps_[j];
            rank /= ps_[j];
        }
        return e;
    }

    u64 rank(const std::vector<u64>& e) const {
        u64 r = 0, stride = 1;
        for (size_t k = 0; k < nq_; k++) {
            r += e[k] * stride;
            stride *= qs_[k];
        }
        for (size_t j = 0; j < np_; j++) {
            r += e[nq_ + j] * stride;
            stride *= ps_[j];
        }
        return r;
    }

    u64 trank(const std::vector<u64>& e) const {
        u64 r = 0, stride = 1;
        for (size_t j = 0; j < np_; j++) {
            r += e[nq_ + j] * stride;
            stride *= ps_[j];
        }
        return r;
    }

    // x * g
    std::vector<u64> mul(const std::vector<u64>& x, const std::vector<u64>& g) const {
        std::vector<u64> out(nq_ + np_);
        const std::vector<u64>& a = act_[trank(x)];
        for (size_t k = 0; k < nq_; k++) out[k] = (x[k] + a[k] * g[k]) % qs_[k];
        for (size_t j = 0; j < np_; j++) out[nq_ + j] = (x[nq_ + j] + g[nq_ + j]) % ps_[j];
        return out;
    }

private:
    std::vector<u64> qs_, ps_;
    size_t nq_, np_;
    u64 size_ = 1, tsize_ = 1;
    std::vector<std::vector<u64>> act_;
};

EoSet semidirect_orders(const Semidirect& s) {
    SemidirectEnum g(s);
    if (g.size() > kSemidirectEnumerationCap)
        throw CapacityError("semidirect enumeration cap exceeded: |G| = " +
                            std::to_string(g.size()));
    EoSet orders{1};
    std::vector<bool> covered(g.size(), false);
    covered[0] = true;
    for (u64 r = 1; r < g.size(); r++) {
        if (covered[r]) continue;
        std::vector<u64> gen = g.decode(r);
        std::vector<u64> x = gen;
        u64 len = 1;
        while (true) {
            u64 xr = g.rank(x);
            if (xr == 0) break;
            covered[xr] = true;
            x = g.mul(x, gen);
            len++;
        }
        for (u64 d : divisors(len)) orders.insert(d);
    }
    return orders;
}

struct Mat2 {
    u64 a, b, c, d;
    bool operator==(const Mat2&) const = default;
};

Mat2 matmul(const Mat2& x, const Mat2& y, u64 q) {
    return {(x.a * y.a + x.b * y.c) % q, (x.a * y.b + x.b * y.d) % q,
            (x.c * y.a + x.d * y.c) % q, (x.c * y.b + x.d * y.d) % q};
}

// Walks SL(2,q) modulo the identification M ~ -M.  Calls fn once per
// projective element with its order.
template <typename Fn>
void psl2_scan(u64 q, Fn&& fn) {
    if (q < 5 || q % 2 == 0 || !is_prime(q))
        throw std::invalid_argument("psl2: q must be an odd prime >= 5");
    if (q > kPslMatrixCap)
        throw CapacityError("psl2 matrix enumeration cap exceeded: q = " + std::to_string(q));
    const Mat2 id{1, 0, 0, 1};
    const Mat2 neg_id{q - 1, 0, 0, q - 1};
    for (u64 a = 0; a < q; a++)
        for (u64 b = 0; b < q; b++)
            for (u64 c = 0; c < q; c++)
                for (u64 d = 0; d < q; d++) {
                    if ((a * d + q * q - b * c) % q != 1) continue;
                    // keep the lexicographically smaller of M, -M
                    std::array<u64, 4> m{a, b, c, d};
                    std::array<u64, 4> neg{(q - a) % q, (q - b) % q, (q - c) % q, (q - d) % q};
                    if (neg < m) continue;
                    Mat2 mat{a, b, c, d};
                    Mat2 pw = mat;
                    u64 order = 1;
                    while (!(pw == id) && !(pw == neg_id)) {
                        pw = matmul(pw, mat, q);
                        order++;
                        if (order > 2 * q + 2) throw std::logic_error("psl2: runaway order");
                    }
                    fn(order);
                }
}

}  // namespace

std::uint64_t psl2_element_count(std::uint64_t q) {
    u64 count = 0;
    psl2_scan(q, [&](u64) { count++; });
    return count;
}

EoSet element_orders(const GroupSpec& spec) {
    validate_spec(spec);
    EoSet out = std::visit(
        [](const auto& s) -> EoSet {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, Cyclic>) {
                auto divs = divisors(s.order);
                return EoSet(divs.begin(), divs.end());
            } else if constexpr (std::is_same_v<T, DirectProduct>) {
                EoSet acc{1};
                for (const auto& f : s.factors) {
                    EoSet feo = element_orders(f);
                    EoSet next;
                    for (u64 a : acc)
                        for (u64 b : feo) next.insert(lcm_checked(a, b));
                    acc = std::move(next);
                }
                return acc;
            } else if constexpr (std::is_same_v<T, Semidirect>) {
                return semidirect_orders(s);
            } else {
                EoSet orders;
                psl2_scan(s.q, [&](u64 o) { orders.insert(o); });
                return orders;
            }
        },
        spec.value);
    // divisor closure is structural; a violation means the enumeration broke
    for (u64 m : out)
        for (u64 d : divisors(m))
            if (!out.count(d)) throw std::logic_error("element_orders: set not divisor-closed");
    return out;
}

EoSet dickson_eo(std::uint64_t q) {
    if (q < 5 || q % 2 == 0 || !is_prime(q))
        throw std::invalid_argument("dickson_eo: q must be an odd prime >= 5");
    EoSet out;
    for (u64 base : {q, (q - 1) / 2, (q + 1) / 2})
        for (u64 d : divisors(base)) out.insert(d);
    return out;
}

PrimeLabeledGraph prime_graph_of_orders(const EoSet& orders) {
    std::set<u64> primes;
    std::vector<std::vector<u64>> order_primes;
    for (u64 m : orders) {
        auto ps = factorize(m).primes();
        for (u64 p : ps) primes.insert(p);
        order_primes.push_back(std::move(ps));
    }
    PrimeLabeledGraph out;
    for (u64 p : primes) {
        out.graph.add_vertex(std::to_string(p));
        out.labels.push_back(p);
    }
    for (const auto& ps : order_primes)
        for (size_t i = 0; i < ps.size(); i++)
            for (size_t j = i + 1; j < ps.size(); j++)
                out.graph.add_edge(out.vertex_of(ps[i]), out.vertex_of(ps[j]));
    return out;
}

PrimeLabeledGraph prime_graph_of(const GroupSpec& spec) {
    EoSet orders = element_orders(spec);
    PrimeLabeledGraph pg = prime_graph_of_orders(orders);
    // for the enumerating variants the vertex set must equal pi(|G|)
    bool enumerated = std::holds_alternative<Semidirect>(spec.value) ||
                      std::holds_alternative<Psl2>(spec.value);
    if (enumerated) {
        auto expected = factorize(group_order(spec)).primes();
        if (expected != pg.labels)
            throw std::logic_error("prime_graph_of: vertex set disagrees with pi(|G|)");
    }
    return pg;
}

}  // namespace gk

#include "thf/knots.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>

namespace thf {

ThinKnotSpec twist_knot_spec(long n) {
    if (n <= 0) fail("spec", "twist_knot_spec expects n > 0");
    ThinKnotSpec s;
    s.alexander = {n, 1 - 2 * n, n};
    s.sigma = -2;
    return s;
}

static void validate_spec(const ThinKnotSpec& spec) {
    if (spec.alexander.empty() || spec.alexander.size() % 2 == 0)
        fail("spec", "alexander list must have odd length 2g+1");
    long g = spec.genus();
    for (long s = 1; s <= g; ++s)
        if (spec.a(s) != spec.a(-s)) fail("spec", "alexander coefficients not symmetric");
    if (spec.sigma % 2 != 0) fail("spec", "sigma must be even");
    long at1 = 0;
    for (long s = -g; s <= g; ++s) at1 += spec.a(s);
    if (at1 != 1 && at1 != -1) fail("spec", "Delta(1) must be +-1");
    if (std::labs(spec.tau()) > g) fail("spec", "|tau| exceeds the genus");
    // thin sign rule: a_s = eps * (-1)^(s + sigma/2) * |a_s| for a fixed eps
    int eps = 0;
    for (long s = -g; s <= g; ++s) {
        long a = spec.a(s);
        if (a == 0) continue;
        int expect = ((s + spec.sigma / 2) % 2 + 2) % 2 == 0 ? 1 : -1;
        int e = (a > 0 ? 1 : -1) * expect;
        if (eps == 0)
            eps = e;
        else if (eps != e)
            fail("spec", "alexander signs inconsistent with a thin complex");
    }
}

KnotComplex build_thin_complex(const ThinKnotSpec& spec) {
    validate_spec(spec);
    long g = spec.genus(), tau = spec.tau(), half = spec.sigma / 2;
    long at = std::labs(tau);

    // remaining generator counts once the length-(2|tau|+1) staircase is placed
    std::map<long, long> rem;
    for (long s = -g; s <= g; ++s) rem[s] = std::labs(spec.a(s)) - (std::labs(s) <= at ? 1 : 0);
    // boxes centered at s contribute counts (1,2,1) at (s+1, s, s-1)
    std::map<long, long> boxes;
    for (long s = -g + 1; s <= g - 1; ++s) boxes[s] = 0;
    auto b = [&](long s) { return boxes.count(s) ? boxes[s] : 0; };
    for (long u = g; u >= -g + 2; --u) {
        long need = rem[u] - 2 * b(u) - b(u + 1);
        if (need < 0) fail("spec", "not realizable as staircase plus boxes");
        boxes[u - 1] = need;
    }
    for (long u = -g + 1; u >= -g; --u)
        if (rem.count(u) && rem[u] != 2 * b(u) + b(u + 1) + b(u - 1))
            fail("spec", "not realizable as staircase plus boxes");

    KnotComplex k;
    k.genus = g;
    k.sigma = spec.sigma;
    // staircase a1..a_{2|tau|+1}, A ascending from -|tau|
    std::size_t base = 0;
    for (long i = 1; i <= 2 * at + 1; ++i) {
        long A = -at + (i - 1);
        k.gens.push_back({"a" + std::to_string(i), A, A + half});
    }
    if (tau > 0) {
        for (long e = 2; e <= 2 * at; e += 2) {
            k.arrows.push_back({base + e - 1, base + e - 2, 0, 1});  // vertical down
            k.arrows.push_back({base + e - 1, base + e, 1, 0});      // horizontal up
        }
    } else if (tau < 0) {
        for (long e = 2; e <= 2 * at; e += 2) {
            k.arrows.push_back({base + e, base + e - 1, 0, 1});      // a_{e+1} -> a_e vertical
            k.arrows.push_back({base + e - 2, base + e - 1, 1, 0});  // a_{e-1} -> a_e horizontal
        }
    }
    // boxes x_i -> {y_i horizontal, z_i vertical}, {y_i vertical, z_i horizontal} -> w_i
    long idx = 1;
    for (long s = -g + 1; s <= g - 1; ++s) {
        for (long c = 0; c < b(s); ++c, ++idx) {
            std::size_t x = k.gens.size();
            std::string suf = std::to_string(idx);
            k.gens.push_back({"x" + suf, s, s + half});
            k.gens.push_back({"y" + suf, s + 1, s + 1 + half});
            k.gens.push_back({"z" + suf, s - 1, s - 1 + half});
            k.gens.push_back({"w" + suf, s, s + half});
            k.arrows.push_back({x, x + 1, 1, 0});      // x -> y horizontal
            k.arrows.push_back({x, x + 2, 0, 1});      // x -> z vertical
            k.arrows.push_back({x + 1, x + 3, 0, 1});  // y -> w vertical
            k.arrows.push_back({x + 2, x + 3, 1, 0});  // z -> w horizontal
        }
    }
    validate_knot_complex(k);
    return k;
}

void validate_knot_complex(const KnotComplex& k) {
    for (const auto& a : k.arrows) {
        const KnotGen& u = k.gens[a.from];
        const KnotGen& v = k.gens[a.to];
        bool horiz = a.i_drop == 1 && a.j_drop == 0;
        bool vert = a.i_drop == 0 && a.j_drop == 1;
        if (!horiz && !vert) fail("invalid-complex", "arrow drops must be (1,0) or (0,1)");
        long dA = horiz ? 1 : -1;
        if (v.A != u.A + dA || v.M != u.M + dA)
            fail("invalid-complex", "arrow breaks the (A,M) translation rules");
    }
    // d^2 = 0 in CFK-infinity: two-step paths cancel mod 2 per (target, drops)
    std::map<std::tuple<std::size_t, std::size_t, int, int>, int> paths;
    for (const auto& a : k.arrows)
        for (const auto& b : k.arrows) {
            if (b.from != a.to) continue;
            auto key = std::make_tuple(a.from, b.to, a.i_drop + b.i_drop, a.j_drop + b.j_drop);
            paths[key] ^= 1;
        }
    for (const auto& [key, parity] : paths)
        if (parity) fail("invalid-complex", "d^2 != 0 in the knot complex");
}

std::map<std::pair<long, long>, long> hfk_hat(const KnotComplex& k) {
    std::map<std::pair<long, long>, long> dims;
    for (const auto& g : k.gens) ++dims[{g.A, g.M}];
    return dims;
}

namespace {

// position of the unique copy of each generator in C{max(i, j-s) = 0}
std::pair<long, long> hat_position(long A, long s) {
    if (A <= s) return {0, A};
    return {s - A, s};
}

}  // namespace

ChainComplex<F2> hat_subquotient(const KnotComplex& k, long s) {
    ChainComplex<F2> c;
    std::vector<std::pair<long, long>> pos;
    for (const auto& g : k.gens) {
        auto [i, j] = hat_position(g.A, s);
        pos.push_back({i, j});
        c.gens.push_back({g.name, Rational(g.M + 2 * i)});
    }
    c.diff = Matrix<F2>(k.gens.size(), k.gens.size());
    for (const auto& a : k.arrows) {
        long ti = pos[a.from].first - a.i_drop;
        long tj = pos[a.from].second - a.j_drop;
        if (ti == pos[a.to].first && tj == pos[a.to].second)
            c.diff.at(a.to, a.from) = c.diff.at(a.to, a.from) + F2(1);
    }
    check_d_squared(c);
    return c;
}

ChainComplex<F2> vertical_column(const KnotComplex& k) {
    ChainComplex<F2> c;
    for (const auto& g : k.gens) c.gens.push_back({g.name, Rational(g.M)});
    c.diff = Matrix<F2>(k.gens.size(), k.gens.size());
    for (const auto& a : k.arrows)
        if (a.i_drop == 0) c.diff.at(a.to, a.from) = c.diff.at(a.to, a.from) + F2(1);
    check_d_squared(c);
    return c;
}

std::map<long, long> graded_euler_characteristic(const KnotComplex& k) {
    std::map<long, long> chi;
    for (const auto& g : k.gens) chi[g.A] += (g.M % 2 == 0) ? 1 : -1;
    for (auto it = chi.begin(); it != chi.end();)
        it = (it->second == 0) ? chi.erase(it) : std::next(it);
    return chi;
}

namespace {

// graded dimensions of the N-truncated plus-flavor subquotient
GradedDims plus_truncated_dims(const KnotComplex& k, long s, long N) {
    ChainComplex<F2> c;
    std::map<std::pair<std::size_t, long>, std::size_t> index;  // (gen, i) -> position
    for (std::size_t gi = 0; gi < k.gens.size(); ++gi) {
        const auto& g = k.gens[gi];
        long lo = (g.A <= s) ? 0 : s - g.A;
        for (long i = lo; i <= lo + N; ++i) {
            index[{gi, i}] = c.gens.size();
            c.gens.push_back({g.name + "@" + std::to_string(i), Rational(g.M + 2 * i)});
        }
    }
    c.diff = Matrix<F2>(c.gens.size(), c.gens.size());
    for (const auto& [key, col] : index) {
        auto [gi, i] = key;
        for (const auto& a : k.arrows) {
            if (a.from != gi) continue;
            auto it = index.find({a.to, i - a.i_drop});
            if (it == index.end()) continue;
            c.diff.at(it->second, col) = c.diff.at(it->second, col) + F2(1);
        }
    }
    check_d_squared(c);
    return homology_field(c, RingTag::F2);
}

}  // namespace

GradedModule large_surgery(const KnotComplex& k, const SurgeryRequest& req) {
    if (req.p < 2 * k.genus - 1)
        fail("formula-out-of-range", "large surgery requires p >= 2g-1");
    if (2 * std::labs(req.s) > req.p)
        fail("formula-out-of-range", "large surgery requires |s| <= p/2");

    GradedModule out;
    if (req.flavor == SurgeryRequest::Hat) {
        GradedDims h = homology_field(hat_subquotient(k, req.s), RingTag::F2);
        for (const auto& [g, d] : h.dims)
            out.summands.push_back(GradedModule::free_field(RingTag::F2, d, g));
        out.normalize();
        return out;
    }

    long N = (req.truncation > 0) ? req.truncation : 2 * k.genus + 4;
    for (int attempt = 0; attempt < 6; ++attempt, N *= 2) {
        GradedDims d1 = plus_truncated_dims(k, req.s, N);
        GradedDims d2 = plus_truncated_dims(k, req.s, 2 * N);
        if (d1.empty()) return out;
        // truncation artifacts live near the top; compare below the cut
        Rational cut = d1.dims.rbegin()->first - Rational(2);
        bool agree = true;
        for (const auto& [g, dim] : d1.dims)
            if (!(cut < g) && d2.at(g) != dim) agree = false;
        for (const auto& [g, dim] : d2.dims)
            if (!(cut < g) && d1.at(g) != dim) agree = false;
        if (!agree) continue;
        // a single tower: top lattice parity, bottom = start of the unbroken
        // run of positive dimensions ending at the cut
        Rational top = cut;
        while (d2.at(top) == 0) top = top - Rational(1);
        Rational bottom = top;
        while (d2.at(bottom - Rational(2)) > 0) bottom = bottom - Rational(2);
        out.summands.push_back(GradedModule::tower(bottom));
        GradedDims rest = d2;
        for (Rational g = bottom; !(cut < g); g = g + Rational(2)) rest.add(g, -1);
        for (const auto& [g, dim] : rest.dims)
            if (!(cut < g)) out.summands.push_back(GradedModule::free_field(RingTag::F2, dim, g));
        out.normalize();
        return out;
    }
    fail("truncation", "plus-flavor output did not stabilize; raise the truncation");
}

}  // namespace thf

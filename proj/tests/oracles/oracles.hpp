#pragma once

// Brute-force reference implementations used by the tests. They work on raw
// Cayley tables and re-derive everything from the definitions, sharing no
// code with the library beyond reading its tables.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <numeric>
#include <vector>

#include "schreier/monoid.hpp"

namespace oracle {

struct Raw {
    int n = 0;
    int e = 0;
    std::vector<int> t;

    int mul(int a, int b) const { return t[std::size_t(a) * n + b]; }
};

inline Raw raw(const schreier::FiniteMonoid& m) {
    Raw r;
    r.n = int(m.order());
    r.e = int(m.identity());
    r.t.assign(m.flat_table().begin(), m.flat_table().end());
    return r;
}

inline std::vector<int> raw_map(const schreier::MonoidHom& h) { return {h.map().begin(), h.map().end()}; }

inline bool associative(const Raw& m) {
    for (int a = 0; a < m.n; ++a)
        for (int b = 0; b < m.n; ++b)
            for (int c = 0; c < m.n; ++c)
                if (m.mul(m.mul(a, b), c) != m.mul(a, m.mul(b, c))) return false;
    return true;
}

inline int inverse(const Raw& m, int a) {
    for (int b = 0; b < m.n; ++b)
        if (m.mul(a, b) == m.e && m.mul(b, a) == m.e) return b;
    return -1;
}

inline std::vector<int> unit_list(const Raw& m) {
    std::vector<int> u;
    for (int a = 0; a < m.n; ++a)
        if (inverse(m, a) >= 0) u.push_back(a);
    return u;
}

// Order of a group element; 0 if the powers never return to the identity.
inline int element_order(const Raw& m, int a) {
    int x = a;
    for (int k = 1; k <= m.n; ++k) {
        if (x == m.e) return k;
        x = m.mul(x, a);
    }
    return 0;
}

inline bool is_hom(const Raw& s, const Raw& t, const std::vector<int>& f) {
    if (f[s.e] != t.e) return false;
    for (int a = 0; a < s.n; ++a)
        for (int b = 0; b < s.n; ++b)
            if (f[s.mul(a, b)] != t.mul(f[a], f[b])) return false;
    return true;
}

// Every bijection s -> t that is a homomorphism (small orders only).
inline std::vector<std::vector<int>> all_isos(const Raw& s, const Raw& t) {
    std::vector<std::vector<int>> out;
    if (s.n != t.n) return out;
    std::vector<int> p(s.n);
    std::iota(p.begin(), p.end(), 0);
    do {
        if (is_hom(s, t, p)) out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

inline bool isomorphic(const Raw& s, const Raw& t) { return !all_isos(s, t).empty(); }

// Literal definitions over sigma: m -> nn.
inline bool precartesian(const Raw& m, const Raw& nn, const std::vector<int>& sigma, int x) {
    for (int z = 0; z < m.n; ++z) {
        if (sigma[z] != sigma[x]) continue;
        int count = 0;
        for (int y = 0; y < m.n; ++y)
            if (sigma[y] == nn.e && m.mul(x, y) == z) ++count;
        if (count != 1) return false;
    }
    return true;
}

inline bool cartesian(const Raw& m, const Raw& nn, const std::vector<int>& sigma, int x) {
    for (int z = 0; z < m.n; ++z) {
        for (int v = 0; v < nn.n; ++v) {
            if (sigma[z] != nn.mul(sigma[x], v)) continue;
            int count = 0;
            for (int y = 0; y < m.n; ++y)
                if (sigma[y] == v && m.mul(x, y) == z) ++count;
            if (count != 1) return false;
        }
    }
    return true;
}

inline std::vector<int> pcar_set(const Raw& m, const Raw& nn, const std::vector<int>& s) {
    std::vector<int> out;
    for (int x = 0; x < m.n; ++x)
        if (precartesian(m, nn, s, x)) out.push_back(x);
    return out;
}

inline std::vector<int> car_set(const Raw& m, const Raw& nn, const std::vector<int>& s) {
    std::vector<int> out;
    for (int x = 0; x < m.n; ++x)
        if (cartesian(m, nn, s, x)) out.push_back(x);
    return out;
}

inline bool covers_base(const Raw& nn, const std::vector<int>& s, const std::vector<int>& xs) {
    std::vector<bool> hit(nn.n, false);
    for (int x : xs) hit[s[x]] = true;
    return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

// Kernel-preserving automorphisms that map precartesians to precartesians.
inline std::vector<std::vector<int>> aut_A(const Raw& m, const Raw& nn, const std::vector<int>& s) {
    const auto pc = pcar_set(m, nn, s);
    auto in_pc = [&](int x) { return std::binary_search(pc.begin(), pc.end(), x); };
    std::vector<std::vector<int>> out;
    for (const auto& p : all_isos(m, m)) {
        bool ok = true;
        for (int x = 0; x < m.n && ok; ++x) {
            if ((s[x] == nn.e) != (s[p[x]] == nn.e)) ok = false;
            if (in_pc(x) && !in_pc(p[x])) ok = false;
        }
        if (ok) out.push_back(p);
    }
    return out;
}

// A commutative module: phi[a*|N| + n] = phi_n(a).
struct Module {
    Raw nn;
    Raw a;
    std::vector<int> phi;

    int act(int n, int x) const { return phi[std::size_t(x) * nn.n + n]; }
};

using Gamma = std::vector<int>; // row m, column n

inline bool cocycle(const Module& md, const Gamma& g) {
    const auto& N = md.nn;
    const auto& A = md.a;
    auto G = [&](int m, int n) { return g[std::size_t(m) * N.n + n]; };
    for (int m = 0; m < N.n; ++m)
        if (G(N.e, m) != A.e || G(m, N.e) != A.e) return false;
    for (int m = 0; m < N.n; ++m)
        for (int n = 0; n < N.n; ++n)
            for (int k = 0; k < N.n; ++k)
                if (A.mul(G(N.mul(m, n), k), md.act(k, G(m, n))) != A.mul(G(m, N.mul(n, k)), G(n, k)))
                    return false;
    return true;
}

// Every table with values in `values` on non-identity cells, filtered by the cocycle identity.
inline std::vector<Gamma> cocycles(const Module& md, bool regular) {
    const auto& N = md.nn;
    std::vector<int> values;
    for (int x = 0; x < md.a.n; ++x)
        if (!regular || inverse(md.a, x) >= 0) values.push_back(x);
    std::vector<std::size_t> cells;
    for (int m = 0; m < N.n; ++m)
        for (int n = 0; n < N.n; ++n)
            if (m != N.e && n != N.e) cells.push_back(std::size_t(m) * N.n + n);
    std::vector<Gamma> out;
    Gamma g(std::size_t(N.n) * N.n, md.a.e);
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == cells.size()) {
            if (cocycle(md, g)) out.push_back(g);
            return;
        }
        for (int v : values) {
            g[cells[i]] = v;
            rec(i + 1);
        }
    };
    rec(0);
    return out;
}

// Pointed maps N -> A^x.
inline std::vector<std::vector<int>> pointed_unit_maps(const Raw& N, const Raw& A) {
    const auto u = unit_list(A);
    std::vector<std::vector<int>> out;
    std::vector<int> f(N.n, A.e);
    std::function<void(int)> rec = [&](int i) {
        if (i == N.n) {
            out.push_back(f);
            return;
        }
        if (i == N.e) {
            rec(i + 1);
            return;
        }
        for (int v : u) {
            f[i] = v;
            rec(i + 1);
        }
    };
    rec(0);
    return out;
}

struct UnionFind {
    std::vector<int> p;
    explicit UnionFind(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
    void unite(int a, int b) { p[find(a)] = find(b); }
    int components() {
        int c = 0;
        for (int i = 0; i < int(p.size()); ++i)
            if (find(i) == i) ++c;
        return c;
    }
};

// Number of classes of cocycles under gamma ~ gamma tau(mn) (tau(n) phi_n(tau(m)))^-1.
inline int h2_count(const Module& md, const std::vector<Gamma>& cs) {
    const auto& N = md.nn;
    const auto& A = md.a;
    UnionFind uf(int(cs.size()));
    for (std::size_t i = 0; i < cs.size(); ++i) {
        for (const auto& tau : pointed_unit_maps(N, A)) {
            Gamma g2(cs[i].size());
            for (int m = 0; m < N.n; ++m)
                for (int n = 0; n < N.n; ++n) {
                    const int denom = A.mul(tau[n], md.act(n, tau[m]));
                    g2[std::size_t(m) * N.n + n] =
                        A.mul(A.mul(cs[i][std::size_t(m) * N.n + n], tau[N.mul(m, n)]), inverse(A, denom));
                }
            const auto it = std::find(cs.begin(), cs.end(), g2);
            if (it != cs.end()) uf.unite(int(i), int(it - cs.begin()));
        }
    }
    return uf.components();
}

// Total monoid on pairs (n,a) -> n*|A|+a with (m,a)(n,b) = (mn, g_{m,n} phi_n(a) b).
inline Raw extension(const Module& md, const Gamma& g) {
    const auto& N = md.nn;
    const auto& A = md.a;
    Raw r;
    r.n = N.n * A.n;
    r.e = N.e * A.n + A.e;
    r.t.resize(std::size_t(r.n) * r.n);
    for (int m = 0; m < N.n; ++m)
        for (int a = 0; a < A.n; ++a)
            for (int n = 0; n < N.n; ++n)
                for (int b = 0; b < A.n; ++b) {
                    const int c = A.mul(A.mul(g[std::size_t(m) * N.n + n], md.act(n, a)), b);
                    r.t[std::size_t(m * A.n + a) * r.n + n * A.n + b] = N.mul(m, n) * A.n + c;
                }
    return r;
}

// Congruence classes among the extensions of the given cocycles, by scanning
// every bijection fixing the kernel pointwise and lying over the base.
inline int congruence_count(const Module& md, const std::vector<Gamma>& cs) {
    const int an = md.a.n;
    std::vector<Raw> ext;
    for (const auto& g : cs) ext.push_back(extension(md, g));
    UnionFind uf(int(cs.size()));
    for (std::size_t i = 0; i < cs.size(); ++i) {
        for (std::size_t j = i + 1; j < cs.size(); ++j) {
            if (uf.find(int(i)) == uf.find(int(j))) continue;
            const Raw& s = ext[i];
            const Raw& t = ext[j];
            std::vector<int> p(s.n);
            std::iota(p.begin(), p.end(), 0);
            bool found = false;
            do {
                bool ok = true;
                for (int x = 0; x < s.n && ok; ++x) {
                    if (p[x] / an != x / an) ok = false;
                    if (x / an == md.nn.e && p[x] != x) ok = false;
                }
                if (ok && is_hom(s, t, p)) found = true;
            } while (!found && std::next_permutation(p.begin(), p.end()));
            if (found) uf.unite(int(i), int(j));
        }
    }
    return uf.components();
}

// Pointed unit-valued xi with xi(mn) = phi_n(xi(m)) xi(n).
inline int z1_count(const Module& md) {
    int c = 0;
    for (const auto& xi : pointed_unit_maps(md.nn, md.a)) {
        bool ok = true;
        for (int m = 0; m < md.nn.n && ok; ++m)
            for (int n = 0; n < md.nn.n && ok; ++n)
                if (xi[md.nn.mul(m, n)] != md.a.mul(md.act(n, xi[m]), xi[n])) ok = false;
        if (ok) ++c;
    }
    return c;
}

} // namespace oracle

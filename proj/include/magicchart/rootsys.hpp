#pragma once

// Exact root-system engine: positive roots, Weyl dimension formula,
// Freudenthal multiplicities, full weight multisets, and symmetric/exterior
// power decomposition. This module is the independent oracle for every
// closed-form dimension check; it never calls into dimform.
//
// Conventions: Bourbaki labeling throughout. Weights are integer coordinate
// vectors in the fundamental-weight basis; roots are kept in simple-root
// coordinates internally.

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "magicchart/rational.hpp"

namespace magicchart {

using Weight = std::vector<long long>;  // fundamental coordinates

// A possibly reducible module: list of (highest weight, multiplicity) pairs.
using ModuleSpec = std::vector<std::pair<Weight, long long>>;

inline std::string weight_to_string(const Weight& w) {
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(w[i]);
    }
    return s;
}

inline Weight weight_from_string(const std::string& s) {
    Weight w;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) w.push_back(std::stoll(tok));
    return w;
}

class RootSystem {
  public:
    char tag;  // 'A', 'B', 'C', 'D', 'E', 'F', 'G'
    int rank;

    // Gram matrix (alpha_i, alpha_j); d[i] = (alpha_i, alpha_i) / 2;
    // cartan[i][j] = 2 (alpha_i, alpha_j) / (alpha_i, alpha_i) = <alpha_j, alpha_i^v>.
    std::vector<std::vector<Rat>> gram;
    std::vector<Rat> d;
    std::vector<std::vector<long long>> cartan;
    std::vector<std::vector<Rat>> cartan_inv;
    std::vector<std::vector<long long>> positive_roots;  // simple-root coordinates

    static RootSystem build(char tag, int rank) { return RootSystem(tag, rank); }

    // ---- basic linear algebra on weights ------------------------------

    Weight rho() const { return Weight(rank, 1); }

    // fundamental coordinates of a root given in simple-root coordinates
    Weight root_to_fund(const std::vector<long long>& r) const {
        Weight f(rank, 0);
        for (int i = 0; i < rank; ++i)
            for (int j = 0; j < rank; ++j) f[i] += cartan[i][j] * r[j];
        return f;
    }

    // (lambda, alpha) for lambda in fundamental coords, alpha in root coords
    Rat ip_weight_root(const Weight& lam, const std::vector<long long>& r) const {
        Rat s = 0;
        for (int j = 0; j < rank; ++j) s += Rat(r[j]) * Rat(lam[j]) * d[j];
        return s;
    }

    // simple-root coordinates of a weight (rational in general)
    std::vector<Rat> fund_to_root(const Weight& w) const {
        std::vector<Rat> c(rank, 0);
        for (int i = 0; i < rank; ++i)
            for (int j = 0; j < rank; ++j) c[i] += cartan_inv[i][j] * Rat(w[j]);
        return c;
    }

    // (x, y) for two weights in fundamental coordinates
    Rat ip_weights(const Weight& x, const Weight& y) const {
        auto c = fund_to_root(y);
        Rat s = 0;
        for (int j = 0; j < rank; ++j) s += c[j] * Rat(x[j]) * d[j];
        return s;
    }

    bool is_dominant(const Weight& w) const {
        return std::all_of(w.begin(), w.end(), [](long long v) { return v >= 0; });
    }

    // true iff w lies in the nonnegative integer root lattice Q+
    bool in_positive_root_lattice(const Weight& w) const {
        auto c = fund_to_root(w);
        for (const auto& v : c)
            if (!is_integer(v) || v < 0) return false;
        return true;
    }

    // height of a Q+ element (sum of root coordinates); rational for generality
    Rat height(const Weight& w) const {
        auto c = fund_to_root(w);
        Rat s = 0;
        for (const auto& v : c) s += v;
        return s;
    }

    // conjugate a weight into the dominant chamber by simple reflections
    Weight dominantize(Weight w) const {
        bool changed = true;
        while (changed) {
            changed = false;
            for (int i = 0; i < rank; ++i) {
                if (w[i] < 0) {
                    long long wi = w[i];
                    for (int k = 0; k < rank; ++k) w[k] -= wi * cartan[k][i];
                    changed = true;
                }
            }
        }
        return w;
    }

    // ---- Weyl dimension formula ---------------------------------------

    Int weyl_dim(const Weight& lam) const {
        if (static_cast<int>(lam.size()) != rank)
            throw std::invalid_argument("weyl_dim: weight rank mismatch");
        if (!is_dominant(lam)) throw std::invalid_argument("weyl_dim: non-dominant weight");
        Rat prod = 1;
        Weight lr(lam);
        for (int i = 0; i < rank; ++i) lr[i] += 1;  // lambda + rho
        for (const auto& a : positive_roots) {
            prod *= ip_weight_root(lr, a) / ip_weight_root(rho(), a);
        }
        return to_int(prod);
    }

    Int module_dim(const ModuleSpec& m) const {
        Int s = 0;
        for (const auto& [w, mult] : m) s += Int(mult) * weyl_dim(w);
        return s;
    }

    // dim of the Cartan product: weyl_dim(sum of exponents times weights)
    Int cartan_power_dim(const std::vector<Weight>& parts,
                         const std::vector<long long>& exps) const {
        if (parts.size() != exps.size())
            throw std::invalid_argument("cartan_power_dim: length mismatch");
        Weight s(rank, 0);
        for (std::size_t p = 0; p < parts.size(); ++p)
            for (int i = 0; i < rank; ++i) s[i] += exps[p] * parts[p][i];
        return weyl_dim(s);
    }

    // ---- weight systems and Freudenthal multiplicities ----------------

    // the full (Weyl-saturated) weight set of the irreducible module V_lam
    std::set<Weight> weight_set(const Weight& lam) const {
        std::set<Weight> seen{lam};
        std::vector<Weight> frontier{lam};
        while (!frontier.empty()) {
            std::vector<Weight> next;
            for (const auto& w : frontier) {
                for (int i = 0; i < rank; ++i) {
                    if (w[i] <= 0) continue;
                    Weight v = w;
                    for (long long k = 1; k <= w[i]; ++k) {
                        for (int t = 0; t < rank; ++t) v[t] -= cartan[t][i];
                        if (seen.insert(v).second) next.push_back(v);
                    }
                }
            }
            frontier = std::move(next);
        }
        return seen;
    }

    // multiplicity of the dominant weight mu in V_lam (Freudenthal recursion)
    Int freudenthal_mult(const Weight& lam, const Weight& mu,
                         std::map<Weight, Int>& memo) const {
        if (mu == lam) return 1;
        if (auto it = memo.find(mu); it != memo.end()) return it->second;
        Weight diff(rank);
        for (int i = 0; i < rank; ++i) diff[i] = lam[i] - mu[i];
        if (!in_positive_root_lattice(diff)) return memo[mu] = 0;
        Rat num = 0;
        for (const auto& a : positive_roots) {
            Weight af = root_to_fund(a);
            Weight v = mu;
            for (long long k = 1;; ++k) {
                Weight rem(rank);
                bool ok = true;
                for (int i = 0; i < rank; ++i) {
                    v[i] += af[i];
                    rem[i] = lam[i] - v[i];
                }
                if (!in_positive_root_lattice(rem)) ok = false;
                if (!ok) break;
                Weight dom = dominantize(v);
                Int m = freudenthal_mult(lam, dom, memo);
                if (m != 0) num += 2 * Rat(m) * ip_weight_root(v, a);
            }
        }
        Weight lr = lam, mr = mu;
        for (int i = 0; i < rank; ++i) {
            lr[i] += 1;
            mr[i] += 1;
        }
        Rat den = ip_weights(lr, lr) - ip_weights(mr, mr);
        return memo[mu] = to_int(num / den);
    }

    // all dominant weights of V_lam with their multiplicities
    std::map<Weight, Int> freudenthal_mults(const Weight& lam) const {
        if (!is_dominant(lam))
            throw std::invalid_argument("freudenthal_mults: non-dominant weight");
        std::map<Weight, Int> memo;
        std::map<Weight, Int> out;
        for (const auto& w : weight_set(lam)) {
            if (is_dominant(w)) out[w] = freudenthal_mult(lam, w, memo);
        }
        return out;
    }

    // full weight multiset (weight -> multiplicity) of a possibly reducible module
    std::map<Weight, Int> full_character(const ModuleSpec& m) const {
        std::map<Weight, Int> out;
        for (const auto& [lam, mult] : m) {
            std::map<Weight, Int> memo;
            for (const auto& w : weight_set(lam)) {
                Int k = freudenthal_mult(lam, dominantize(w), memo);
                if (k != 0) out[w] += Int(mult) * k;
            }
        }
        return out;
    }

  private:
    RootSystem(char t, int n) : tag(t), rank(n) {
        build_gram();
        d.resize(rank);
        for (int i = 0; i < rank; ++i) d[i] = gram[i][i] / 2;
        cartan.assign(rank, std::vector<long long>(rank));
        for (int i = 0; i < rank; ++i)
            for (int j = 0; j < rank; ++j) cartan[i][j] = to_ll(gram[i][j] / d[i]);
        invert_cartan();
        enumerate_positive_roots();
    }

    void build_gram() {
        auto bad = [&] { throw std::invalid_argument("invalid root system type/rank"); };
        int n = rank;
        if (n < 1) bad();
        gram.assign(n, std::vector<Rat>(n, 0));
        auto edge = [&](int i, int j, const Rat& v) { gram[i][j] = gram[j][i] = v; };
        switch (tag) {
            case 'A':
                for (int i = 0; i < n; ++i) gram[i][i] = 2;
                for (int i = 0; i + 1 < n; ++i) edge(i, i + 1, -1);
                break;
            case 'B':
                if (n < 2) bad();
                for (int i = 0; i < n; ++i) gram[i][i] = (i == n - 1) ? 1 : 2;
                for (int i = 0; i + 1 < n; ++i) edge(i, i + 1, -1);
                break;
            case 'C':
                if (n < 2) bad();
                for (int i = 0; i < n; ++i) gram[i][i] = (i == n - 1) ? 4 : 2;
                for (int i = 0; i + 2 < n; ++i) edge(i, i + 1, -1);
                edge(n - 2, n - 1, -2);
                break;
            case 'D':
                if (n < 3) bad();
                for (int i = 0; i < n; ++i) gram[i][i] = 2;
                for (int i = 0; i + 2 < n; ++i) edge(i, i + 1, -1);
                edge(n - 3, n - 1, -1);
                break;
            case 'E': {
                if (n < 6 || n > 8) bad();
                for (int i = 0; i < n; ++i) gram[i][i] = 2;
                // Bourbaki: chain 1-3-4-5-6(-7)(-8), node 2 attached to 4.
                edge(0, 2, -1);
                edge(2, 3, -1);
                edge(3, 4, -1);
                edge(4, 5, -1);
                if (n >= 7) edge(5, 6, -1);
                if (n >= 8) edge(6, 7, -1);
                edge(1, 3, -1);
                break;
            }
            case 'F':
                if (n != 4) bad();
                gram[0][0] = gram[1][1] = 2;
                gram[2][2] = gram[3][3] = 1;
                edge(0, 1, -1);
                edge(1, 2, -1);
                edge(2, 3, Rat(-1, 2));
                break;
            case 'G':
                if (n != 2) bad();
                gram[0][0] = 2;
                gram[1][1] = 6;
                edge(0, 1, -3);
                break;
            default:
                bad();
        }
    }

    void invert_cartan() {
        int n = rank;
        std::vector<std::vector<Rat>> m(n, std::vector<Rat>(2 * n, 0));
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) m[i][j] = Rat(cartan[i][j]);
            m[i][n + i] = 1;
        }
        for (int col = 0; col < n; ++col) {
            int piv = -1;
            for (int r = col; r < n; ++r)
                if (m[r][col] != 0) {
                    piv = r;
                    break;
                }
            if (piv < 0) throw std::logic_error("singular Cartan matrix");
            std::swap(m[col], m[piv]);
            Rat f = m[col][col];
            for (int c2 = 0; c2 < 2 * n; ++c2) m[col][c2] /= f;
            for (int r = 0; r < n; ++r) {
                if (r == col || m[r][col] == 0) continue;
                Rat g = m[r][col];
                for (int c2 = 0; c2 < 2 * n; ++c2) m[r][c2] -= g * m[col][c2];
            }
        }
        cartan_inv.assign(n, std::vector<Rat>(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) cartan_inv[i][j] = m[i][n + j];
    }

    void enumerate_positive_roots() {
        // Height-by-height construction with root strings:
        // beta + alpha_i is a root iff p - <beta, alpha_i^v> > 0 where
        // p = max{k : beta - k alpha_i is a root}.
        std::set<std::vector<long long>> roots;
        std::vector<std::vector<long long>> layer;
        for (int i = 0; i < rank; ++i) {
            std::vector<long long> e(rank, 0);
            e[i] = 1;
            roots.insert(e);
            layer.push_back(e);
        }
        while (!layer.empty()) {
            std::vector<std::vector<long long>> next;
            for (const auto& b : layer) {
                for (int i = 0; i < rank; ++i) {
                    long long pairing = 0;
                    for (int j = 0; j < rank; ++j) pairing += cartan[i][j] * b[j];
                    long long p = 0;
                    std::vector<long long> down = b;
                    while (true) {
                        down[i] -= 1;
                        if (!roots.count(down)) break;
                        ++p;
                    }
                    if (p - pairing > 0) {
                        std::vector<long long> up = b;
                        up[i] += 1;
                        if (roots.insert(up).second) next.push_back(up);
                    }
                }
            }
            layer = std::move(next);
        }
        positive_roots.assign(roots.begin(), roots.end());
        // deterministic order: by height, then lexicographic
        std::sort(positive_roots.begin(), positive_roots.end(),
                  [](const auto& x, const auto& y) {
                      long long hx = 0, hy = 0;
                      for (auto v : x) hx += v;
                      for (auto v : y) hy += v;
                      if (hx != hy) return hx < hy;
                      return x < y;
                  });
    }
};

inline RootSystem build_root_system(char tag, int rank) { return RootSystem::build(tag, rank); }

// ------------------------------------------------------- power decomposition

enum class PowerKind { Sym, Alt };

struct PowerBounds {
    Int max_dim = 64;
    int max_degree = 3;
};

// Decompose a weight multiset into irreducible characters by repeated
// subtraction of the full Weyl character at the lexicographically-largest
// dominant weight of maximal height. A negative intermediate multiplicity
// aborts: the input was not a genuine character (internal bug signal).
inline ModuleSpec decompose_character(const RootSystem& rs, std::map<Weight, Int> counts) {
    ModuleSpec out;
    auto prune = [&] {
        for (auto it = counts.begin(); it != counts.end();) {
            if (it->second == 0)
                it = counts.erase(it);
            else
                ++it;
        }
    };
    prune();
    while (!counts.empty()) {
        bool found = false;
        Weight best;
        Rat best_h = 0;
        // reference point for heights: any fixed weight in the multiset
        const Weight& ref = counts.begin()->first;
        for (const auto& [w, m] : counts) {
            if (!rs.is_dominant(w)) continue;
            Weight diff(rs.rank);
            for (int i = 0; i < rs.rank; ++i) diff[i] = w[i] - ref[i];
            Rat h = rs.height(diff);
            if (!found || h > best_h || (h == best_h && w > best)) {
                found = true;
                best = w;
                best_h = h;
            }
        }
        if (!found)
            throw std::logic_error("decompose_character: non-decomposable residue");
        Int mult = counts[best];
        if (mult < 0)
            throw std::logic_error("decompose_character: negative multiplicity at " +
                                   weight_to_string(best));
        auto ch = rs.full_character({{best, 1}});
        for (const auto& [w, k] : ch) {
            counts[w] -= mult * k;
            if (counts[w] < 0)
                throw std::logic_error("decompose_character: negative multiplicity at " +
                                       weight_to_string(w));
        }
        out.emplace_back(best, static_cast<long long>(mult));
        prune();
    }
    return out;
}

// Degree-d symmetric or exterior power of the module, decomposed into
// irreducibles. The weight multiset of m is expanded in full, the power
// multiset is formed combinatorially, and the result is decomposed by
// highest-weight subtraction.
inline ModuleSpec power_decompose(const RootSystem& rs, const ModuleSpec& m, int deg,
                                  PowerKind kind, const PowerBounds& bounds = {}) {
    if (deg < 1) throw std::invalid_argument("power_decompose: degree must be positive");
    if (deg > bounds.max_degree)
        throw std::invalid_argument("power_decompose: degree bound exceeded");
    Int dim = rs.module_dim(m);
    if (dim > bounds.max_dim)
        throw std::invalid_argument("power_decompose: dimension bound exceeded");

    // flatten the weight multiset into individual basis-vector weights
    std::vector<Weight> flat;
    for (const auto& [w, k] : rs.full_character(m)) {
        for (Int c = 0; c < k; ++c) flat.push_back(w);
    }

    std::map<Weight, Int> counts;
    std::vector<std::size_t> idx(deg);
    // enumerate non-decreasing (Sym) or strictly increasing (Alt) index tuples
    auto rec = [&](auto&& self, int pos, std::size_t start, Weight acc) -> void {
        if (pos == deg) {
            counts[acc] += 1;
            return;
        }
        for (std::size_t i = start; i < flat.size(); ++i) {
            Weight nxt = acc;
            for (int t = 0; t < rs.rank; ++t) nxt[t] += flat[i][t];
            self(self, pos + 1, kind == PowerKind::Sym ? i : i + 1, std::move(nxt));
        }
    };
    rec(rec, 0, 0, Weight(rs.rank, 0));

    ModuleSpec out = decompose_character(rs, std::move(counts));

    // total-dimension audit: C(dim + d - 1, d) for Sym, C(dim, d) for Alt
    Int expect = kind == PowerKind::Sym ? int_binom(dim + deg - 1, unsigned(deg))
                                        : int_binom(dim, unsigned(deg));
    if (rs.module_dim(out) != expect)
        throw std::logic_error("power_decompose: total dimension mismatch");
    return out;
}

}  // namespace magicchart

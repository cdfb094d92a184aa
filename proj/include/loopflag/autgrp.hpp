#pragma once

#include "loopflag/affine.hpp"
#include "loopflag/rootsys.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace loopflag {

/// Extended Cartan matrix on nodes {0,...,rank}, with node 0 carried by
/// alpha_0 = delta - theta. The delta part pairs to zero against everything,
/// so all pairings reduce to those of -theta and the finite simple roots.
inline std::vector<std::vector<long long>> extended_cartan(const RootSystem& rs) {
    const int n = rs.rank() + 1;
    std::vector<Vec> node(n);
    node[0] = vec_scale(Rat(-1), rs.theta());
    for (int i = 1; i < n; ++i) node[std::size_t(i)] = rs.simple_root(i);
    std::vector<std::vector<long long>> a(n, std::vector<long long>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Rat v = 2 * dot(node[std::size_t(i)], node[std::size_t(j)]) /
                    dot(node[std::size_t(i)], node[std::size_t(i)]);
            if (denominator(v) != 1)
                throw std::logic_error("extended Cartan entry not an integer");
            a[std::size_t(i)][std::size_t(j)] = static_cast<long long>(numerator(v));
        }
    return a;
}

/// A permutation of the extended node set preserving the extended Cartan
/// matrix (edges, multiplicities and arrow directions all at once).
struct DiagramAutomorphism {
    std::vector<int> perm;  // perm[i] = image of node i

    int apply(int node) const { return perm[std::size_t(node)]; }

    int apply_inverse(int node) const {
        for (int i = 0; i < static_cast<int>(perm.size()); ++i)
            if (perm[std::size_t(i)] == node) return i;
        throw std::logic_error("not a permutation");
    }

    DiagramAutomorphism compose(const DiagramAutomorphism& then) const {
        // (this . then)(i) = this(then(i))
        std::vector<int> p(perm.size());
        for (std::size_t i = 0; i < perm.size(); ++i)
            p[i] = perm[std::size_t(then.perm[i])];
        return DiagramAutomorphism{p};
    }

    DiagramAutomorphism inverse() const {
        std::vector<int> p(perm.size());
        for (std::size_t i = 0; i < perm.size(); ++i) p[std::size_t(perm[i])] = int(i);
        return DiagramAutomorphism{p};
    }

    bool is_identity() const {
        for (std::size_t i = 0; i < perm.size(); ++i)
            if (perm[i] != static_cast<int>(i)) return false;
        return true;
    }

    bool operator==(const DiagramAutomorphism& o) const { return perm == o.perm; }
    bool operator<(const DiagramAutomorphism& o) const { return perm < o.perm; }
};

/// Exhaustive search with adjacency pruning: nodes are assigned images one at
/// a time and every already-assigned pairing is checked before descending.
inline std::vector<DiagramAutomorphism> automorphism_group(const RootSystem& rs) {
    const auto a = extended_cartan(rs);
    const int n = static_cast<int>(a.size());
    std::vector<int> perm(std::size_t(n), -1);
    std::vector<bool> used(std::size_t(n), false);
    std::vector<DiagramAutomorphism> out;

    auto consistent = [&](int i, int img) {
        for (int j = 0; j < n; ++j) {
            if (perm[std::size_t(j)] < 0) continue;
            int jm = perm[std::size_t(j)];
            if (a[std::size_t(img)][std::size_t(jm)] != a[std::size_t(i)][std::size_t(j)])
                return false;
            if (a[std::size_t(jm)][std::size_t(img)] != a[std::size_t(j)][std::size_t(i)])
                return false;
        }
        return true;
    };

    auto rec = [&](auto&& self, int i) -> void {
        if (i == n) {
            out.push_back(DiagramAutomorphism{perm});
            return;
        }
        for (int img = 0; img < n; ++img) {
            if (used[std::size_t(img)]) continue;
            if (a[std::size_t(img)][std::size_t(img)] != a[std::size_t(i)][std::size_t(i)])
                continue;
            if (!consistent(i, img)) continue;
            perm[std::size_t(i)] = img;
            used[std::size_t(img)] = true;
            self(self, i + 1);
            perm[std::size_t(i)] = -1;
            used[std::size_t(img)] = false;
        }
    };
    rec(rec, 0);
    return out;
}

/// (sigma . c)(i) = c(sigma^{-1}(i)); crossings move along with the nodes.
inline Crossing act_on_crossing(const DiagramAutomorphism& sigma, const Crossing& c) {
    if (sigma.perm.size() != c.values.size())
        throw std::invalid_argument("automorphism and crossing node sets differ");
    Crossing out = c;
    for (std::size_t i = 0; i < c.values.size(); ++i)
        out.values[std::size_t(sigma.perm[i])] = c.values[i];
    return out;
}

/// Searches the automorphism group for an element moving some crossed node
/// onto node 0, turning the parabolic into a standard one.
inline std::optional<DiagramAutomorphism> standardizable(const RootSystem& rs,
                                                         const Crossing& c) {
    if (!c.any_crossed())
        throw std::invalid_argument("improper crossing has no parabolic to standardize");
    for (const auto& sigma : automorphism_group(rs))
        if (act_on_crossing(sigma, c).at(0) == 1) return sigma;
    return std::nullopt;
}

/// The D-family criterion: the uncrossed set must not contain all four of
/// the end nodes {0, 1, rank-1, rank}.
inline bool d_type_criterion(const RootSystem& rs, const Crossing& c) {
    if (rs.family() != Family::D)
        throw std::invalid_argument("criterion applies to family D only");
    const int r = rs.rank();
    return c.at(0) == 1 || c.at(1) == 1 || c.at(r - 1) == 1 || c.at(r) == 1;
}

}  // namespace loopflag

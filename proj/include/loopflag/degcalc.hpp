#pragma once

#include "loopflag/affine.hpp"
#include "loopflag/rootsys.hpp"

#include <map>
#include <set>
#include <stdexcept>
#include <vector>

namespace loopflag {

/// Integer degree vector indexed by the crossed nodes of a crossing.
struct MultiDegree {
    std::map<int, long long> by_node;

    static MultiDegree for_crossing(const Crossing& c, const std::vector<long long>& ks) {
        auto nodes = c.crossed_nodes();
        if (nodes.size() != ks.size())
            throw std::invalid_argument("degree vector length does not match crossed nodes");
        MultiDegree d;
        for (std::size_t i = 0; i < nodes.size(); ++i) d.by_node[nodes[i]] = ks[i];
        return d;
    }
};

/// Projection constants of the Levi factor cut out by the uncrossed finite
/// nodes delta0: lambda_i (i in delta0) projects orthogonally to the span of
/// the Levi simple roots, and n_ij records the fundamental-weight coefficients
/// removed in the process; N_j sums them per crossed node j.
struct LeviConstants {
    std::vector<int> delta0;                 // uncrossed finite nodes, sorted
    std::vector<int> crossed;                // finite crossed nodes, sorted
    std::map<std::pair<int, int>, Rat> n_ij; // (i in delta0, j crossed)
    std::map<int, Rat> N_j;                  // per crossed finite node
};

inline LeviConstants levi_constants(const RootSystem& rs, const std::set<int>& delta0) {
    const int r = rs.rank();
    for (int i : delta0)
        if (i < 1 || i > r)
            throw std::invalid_argument("delta0 must consist of finite nodes 1..rank");

    LeviConstants lc;
    lc.delta0.assign(delta0.begin(), delta0.end());
    for (int j = 1; j <= r; ++j)
        if (!delta0.count(j)) lc.crossed.push_back(j);
    for (int j : lc.crossed) lc.N_j[j] = 0;
    if (lc.delta0.empty()) return lc;

    // Gram system of the Levi simple roots, shared by every projection.
    const std::size_t m = lc.delta0.size();
    Mat gram(m, Vec(m));
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b)
            gram[a][b] = dot(rs.simple_root(lc.delta0[a]), rs.simple_root(lc.delta0[b]));

    for (int i : lc.delta0) {
        Vec rhs(m);
        for (std::size_t a = 0; a < m; ++a)
            rhs[a] = dot(rs.fundamental_weight(i), rs.simple_root(lc.delta0[a]));
        Vec x = solve_linear(gram, rhs);
        Vec hat(std::size_t(rs.dim()), 0);
        for (std::size_t a = 0; a < m; ++a)
            hat = vec_add(hat, vec_scale(x[a], rs.simple_root(lc.delta0[a])));
        // lambda_i - hat(lambda_i) = sum_j n_ij lambda_j over the crossed j,
        // with coefficients read off through the coroot pairing.
        for (int j : lc.crossed) {
            Rat nij = -rs.coroot_pair(hat, rs.simple_root(j));
            lc.n_ij[{i, j}] = nij;
            lc.N_j[j] += nij;
        }
        // sanity: hat is the Levi fundamental weight for node i
        for (int k : lc.delta0) {
            Rat p = rs.coroot_pair(hat, rs.simple_root(k));
            if (p != (k == i ? 1 : 0))
                throw std::logic_error("Levi projection lost duality with the coroots");
        }
    }
    return lc;
}

/// Node-0 constants: n_i0 are the comarks, N_0 their sum, and
/// 1 + N_0 = h_vee = 1/<theta,theta> under the Killing form.
struct AffineNodeConstants {
    std::vector<long long> n_i0;
    Rat N_0;
};

inline AffineNodeConstants affine_node_constants(const RootSystem& rs) {
    AffineNodeConstants out;
    out.n_i0 = rs.comarks();
    out.N_0 = 0;
    for (long long c : out.n_i0) out.N_0 += c;
    Rat theta2 = rs.killing_pair(rs.theta(), rs.theta());
    if ((1 + out.N_0) * theta2 != 1)
        throw std::logic_error("affine node constants: 1 + N_0 != 1/<theta,theta>");
    return out;
}

/// d = 4 sum over crossed nodes i of (1 + N_i) k_i. Node 0 uses the comark
/// sum; the finite crossed nodes use the Levi projection over the uncrossed
/// finite node set. The total is asserted to be an integer.
inline long long formal_degree(const RootSystem& rs, const Crossing& c,
                               const MultiDegree& k) {
    if (c.rank() != rs.rank())
        throw std::invalid_argument("crossing does not match the root system");
    {
        auto nodes = c.crossed_nodes();
        std::set<int> want(nodes.begin(), nodes.end());
        std::set<int> have;
        for (const auto& [node, deg] : k.by_node) have.insert(node);
        if (want != have)
            throw std::invalid_argument("multi-degree index set must equal the crossed nodes");
    }
    std::set<int> delta0;
    for (int j : c.uncrossed_nodes())
        if (j >= 1) delta0.insert(j);
    LeviConstants lc = levi_constants(rs, delta0);

    Rat d = 0;
    for (const auto& [node, deg] : k.by_node) {
        Rat Ni = (node == 0) ? affine_node_constants(rs).N_0 : lc.N_j.at(node);
        d += 4 * (1 + Ni) * deg;
    }
    if (denominator(d) != 1)
        throw std::logic_error("formal degree did not evaluate to an integer");
    return static_cast<long long>(numerator(d));
}

/// Dimension of the framed charge-k moduli: 4 h_vee k = 4k/<theta,theta>.
inline long long instanton_dimension(const RootSystem& rs, long long k) {
    if (k < 0) throw std::invalid_argument("charge must be nonnegative");
    return 4 * rs.dual_coxeter() * k;
}

/// Degrees (k_1,...,k_n) from a charge k and flag quotient degrees j_1..j_{n-1}:
/// k_i = k + j_1 + ... + j_i, and the last entry is k itself.
inline std::vector<long long> charges(long long k, const std::vector<long long>& j) {
    std::vector<long long> out;
    long long acc = k;
    for (long long ji : j) {
        acc += ji;
        out.push_back(acc);
    }
    out.push_back(k);
    return out;
}

/// Cyclic shift (k_1,...,k_n) -> (k_n, k_1, ..., k_{n-1}).
inline std::vector<long long> hecke_degree_action(int n,
                                                  const std::vector<long long>& k) {
    if (n < 2) throw std::invalid_argument("degree permutation needs n >= 2");
    if (k.size() != static_cast<std::size_t>(n))
        throw std::invalid_argument("degree vector length must be n");
    std::vector<long long> out(k.size());
    out[0] = k.back();
    for (std::size_t i = 1; i < k.size(); ++i) out[i] = k[i - 1];
    return out;
}

}  // namespace loopflag

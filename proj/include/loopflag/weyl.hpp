#pragma once

#include "loopflag/affine.hpp"
#include "loopflag/rootsys.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace loopflag {

using IMat = std::vector<std::vector<long long>>;

/// Real affine root n*delta + alpha; alpha is a finite root (or zero for the
/// imaginary direction) over the simple-root basis.
struct AffineRoot {
    long long n;
    RootCoeffs alpha;

    bool operator==(const AffineRoot& o) const { return n == o.n && alpha == o.alpha; }
    bool operator<(const AffineRoot& o) const {
        if (n != o.n) return n < o.n;
        return alpha < o.alpha;
    }
};

inline bool affine_root_positive(const AffineRoot& r) {
    if (r.n > 0) return true;
    if (r.n < 0) return false;
    return RootSystem::is_positive_coeffs(r.alpha);
}

/// Element t_lambda * w of the affine Weyl group W x T^vee: a finite Weyl
/// part acting on the root and coroot lattices by integer matrices, composed
/// with a translation by the coroot-lattice vector lambda.
struct AffineWeylElement {
    IMat root_mat;    // action on the root lattice, columns are images
    IMat coroot_mat;  // action on the coroot lattice
    std::vector<long long> translation;  // lambda over the simple coroots

    bool operator==(const AffineWeylElement& o) const {
        return root_mat == o.root_mat && translation == o.translation;
    }
};

/// The affine Weyl group of a finite root system, generated by the simple
/// reflections sigma_0, ..., sigma_r with sigma_0 = t_{theta^vee} s_theta.
class WeylGroup {
public:
    explicit WeylGroup(RootSystem rs) : rs_(std::move(rs)) {
        const int r = rs_.rank();
        cartan_.assign(std::size_t(r), std::vector<long long>(std::size_t(r)));
        for (int i = 1; i <= r; ++i)
            for (int j = 1; j <= r; ++j)
                cartan_[std::size_t(i - 1)][std::size_t(j - 1)] = rs_.cartan(i, j);
    }

    const RootSystem& root_system() const { return rs_; }
    int rank() const { return rs_.rank(); }

    AffineWeylElement identity() const {
        const std::size_t r = std::size_t(rank());
        AffineWeylElement e;
        e.root_mat = int_identity(r);
        e.coroot_mat = int_identity(r);
        e.translation.assign(r, 0);
        return e;
    }

    /// Simple reflection for extended node i in 0..rank.
    AffineWeylElement generator(int i) const {
        const int r = rank();
        if (i < 0 || i > r) throw std::invalid_argument("generator index out of 0..rank");
        AffineWeylElement e = identity();
        if (i >= 1) {
            const std::size_t k = std::size_t(i - 1);
            for (std::size_t j = 0; j < std::size_t(r); ++j) {
                e.root_mat[k][j] -= cartan_[k][j];
                e.coroot_mat[k][j] -= cartan_[j][k];
            }
            return e;
        }
        // sigma_0 = t_{theta^vee} s_theta
        const auto& marks = rs_.theta_coeffs();
        const auto& comarks = rs_.comarks();
        for (std::size_t j = 0; j < std::size_t(r); ++j) {
            long long pr = 0;  // <alpha_j, theta^vee>
            long long pc = 0;  // <alpha_j^vee, theta>
            for (std::size_t k = 0; k < std::size_t(r); ++k) {
                pr += comarks[k] * cartan_[k][j];
                pc += marks[k] * cartan_[j][k];
            }
            for (std::size_t k = 0; k < std::size_t(r); ++k) {
                e.root_mat[k][j] -= pr * marks[k];
                e.coroot_mat[k][j] -= pc * comarks[k];
            }
        }
        e.translation.assign(comarks.begin(), comarks.end());
        return e;
    }

    /// Group law: (t_l w)(t_m v) = t_{l + w m} (w v).
    AffineWeylElement multiply(const AffineWeylElement& a, const AffineWeylElement& b) const {
        AffineWeylElement e;
        e.root_mat = int_mul(a.root_mat, b.root_mat);
        e.coroot_mat = int_mul(a.coroot_mat, b.coroot_mat);
        e.translation = int_apply(a.coroot_mat, b.translation);
        for (std::size_t i = 0; i < e.translation.size(); ++i)
            e.translation[i] += a.translation[i];
        return e;
    }

    AffineWeylElement inverse(const AffineWeylElement& a) const {
        AffineWeylElement e;
        e.root_mat = int_inverse(a.root_mat);
        e.coroot_mat = int_inverse(a.coroot_mat);
        auto neg = int_apply(e.coroot_mat, a.translation);
        for (auto& v : neg) v = -v;
        e.translation = std::move(neg);
        return e;
    }

    /// t_lambda w sends (n, alpha) to (n - <lambda, w alpha>, w alpha); the
    /// imaginary direction alpha = 0 is fixed.
    AffineRoot act(const AffineWeylElement& w, const AffineRoot& r) const {
        AffineRoot out;
        out.alpha = int_apply(w.root_mat, r.alpha);
        out.n = r.n - coroot_root_pair(w.translation, out.alpha);
        return out;
    }

    /// Extended simple root as an affine root: node 0 is delta - theta.
    AffineRoot simple_affine_root(int i) const {
        const int r = rank();
        if (i < 0 || i > r) throw std::invalid_argument("node index out of 0..rank");
        if (i == 0) {
            RootCoeffs neg = RootSystem::negate(rs_.theta_coeffs());
            return AffineRoot{1, neg};
        }
        RootCoeffs e(std::size_t(r), 0);
        e[std::size_t(i - 1)] = 1;
        return AffineRoot{0, e};
    }

    /// Number of positive real affine roots sent to negative ones. The scan
    /// over the delta-coefficient is complete: an inversion (n, alpha) needs
    /// n <= <lambda, w alpha>, which is bounded by max_beta |<lambda, beta>|.
    long long length(const AffineWeylElement& w) const {
        long long count = 0;
        for_each_inversion(w, [&](const AffineRoot&) { ++count; });
        return count;
    }

    std::vector<AffineRoot> inversion_set(const AffineWeylElement& w) const {
        std::vector<AffineRoot> out;
        for_each_inversion(w, [&](const AffineRoot& r) { out.push_back(r); });
        std::sort(out.begin(), out.end());
        return out;
    }

    /// All elements of length at most max_len, grouped by length; BFS over
    /// right multiplication by the generators, deduplicated on the canonical
    /// (matrix, translation) form. Lengths are BFS word lengths.
    std::map<long long, std::vector<AffineWeylElement>> enumerate_by_length(
        long long max_len) const {
        if (max_len < 0) throw std::invalid_argument("negative length bound");
        if (max_len > kMaxEnumerationLength)
            throw std::invalid_argument("length bound exceeds the enumeration cap");
        std::map<std::vector<long long>, long long> seen;
        std::map<long long, std::vector<AffineWeylElement>> out;
        std::vector<AffineWeylElement> frontier{identity()};
        seen[canonical_key(frontier[0])] = 0;
        out[0] = frontier;
        for (long long len = 1; len <= max_len; ++len) {
            std::vector<AffineWeylElement> next;
            for (const auto& w : frontier) {
                for (int i = 0; i <= rank(); ++i) {
                    AffineWeylElement cand = multiply(w, generator(i));
                    auto key = canonical_key(cand);
                    if (seen.emplace(std::move(key), len).second) next.push_back(cand);
                }
            }
            if (next.empty()) break;
            out[len] = next;
            frontier = std::move(next);
        }
        return out;
    }

    /// Minimal-length representatives of the cosets w W_P, where W_P is
    /// generated by the reflections of the uncrossed nodes: w is minimal iff
    /// it sends every uncrossed simple affine root to a positive root.
    bool is_hasse(const Crossing& c, const AffineWeylElement& w) const {
        check_crossing(c);
        for (int j : c.uncrossed_nodes())
            if (!affine_root_positive(act(w, simple_affine_root(j)))) return false;
        return true;
    }

    std::vector<AffineWeylElement> hasse_elements(const Crossing& c,
                                                  long long max_len) const {
        check_crossing(c);
        if (!c.any_crossed())
            throw std::invalid_argument("improper crossing defines no parabolic");
        std::vector<AffineWeylElement> out;
        for (const auto& [len, elems] : enumerate_by_length(max_len))
            for (const auto& w : elems)
                if (is_hasse(c, w)) out.push_back(w);
        return out;
    }

    /// Unique factorization w = w1 w2 with w1 in the Hasse set of c and w2 in
    /// W_P; peels reflections that shorten w from the right.
    std::pair<AffineWeylElement, AffineWeylElement> coset_decompose(
        const Crossing& c, const AffineWeylElement& w) const {
        check_crossing(c);
        AffineWeylElement w1 = w;
        AffineWeylElement w2 = identity();
        bool progress = true;
        while (progress) {
            progress = false;
            for (int j : c.uncrossed_nodes()) {
                if (!affine_root_positive(act(w1, simple_affine_root(j)))) {
                    w1 = multiply(w1, generator(j));
                    w2 = multiply(generator(j), w2);
                    progress = true;
                    break;
                }
            }
        }
        return {w1, w2};
    }

    /// The finite Weyl group W_P of the parabolic's Levi factor, by generator
    /// closure over the uncrossed nodes.
    std::vector<AffineWeylElement> levi_weyl_group(const Crossing& c) const {
        check_crossing(c);
        if (!c.any_crossed())
            throw std::invalid_argument(
                "improper crossing: the Levi Weyl group is the whole affine group");
        std::map<std::vector<long long>, bool> seen;
        std::vector<AffineWeylElement> group{identity()};
        seen[canonical_key(group[0])] = true;
        std::vector<AffineWeylElement> frontier = group;
        while (!frontier.empty()) {
            std::vector<AffineWeylElement> next;
            for (const auto& w : frontier) {
                for (int j : c.uncrossed_nodes()) {
                    AffineWeylElement cand = multiply(w, generator(j));
                    if (seen.emplace(canonical_key(cand), true).second) {
                        group.push_back(cand);
                        next.push_back(cand);
                    }
                }
            }
            if (group.size() > kLeviGroupCap)
                throw std::logic_error("Levi Weyl group closure exceeded its cap");
            frontier = std::move(next);
        }
        return group;
    }

    /// Birkhoff stratum bookkeeping: both the stratum codimension and the
    /// transverse cell dimension equal the length.
    long long stratum_codimension(const AffineWeylElement& w) const { return length(w); }
    long long cell_dimension(const AffineWeylElement& w) const { return length(w); }

    static std::vector<long long> canonical_key(const AffineWeylElement& w) {
        std::vector<long long> key;
        for (const auto& row : w.root_mat) key.insert(key.end(), row.begin(), row.end());
        key.insert(key.end(), w.translation.begin(), w.translation.end());
        return key;
    }

    static constexpr long long kMaxEnumerationLength = 24;

private:
    static constexpr std::size_t kLeviGroupCap = 1u << 20;

    static IMat int_identity(std::size_t n) {
        IMat m(n, std::vector<long long>(n, 0));
        for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
        return m;
    }

    static IMat int_mul(const IMat& a, const IMat& b) {
        const std::size_t n = a.size();
        IMat r(n, std::vector<long long>(n, 0));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k) {
                if (a[i][k] == 0) continue;
                for (std::size_t j = 0; j < n; ++j) r[i][j] += a[i][k] * b[k][j];
            }
        return r;
    }

    static std::vector<long long> int_apply(const IMat& m, const std::vector<long long>& v) {
        std::vector<long long> r(m.size(), 0);
        for (std::size_t i = 0; i < m.size(); ++i)
            for (std::size_t j = 0; j < v.size(); ++j) r[i] += m[i][j] * v[j];
        return r;
    }

    static IMat int_inverse(const IMat& m) {
        const std::size_t n = m.size();
        Mat a(n, Vec(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) a[i][j] = Rat(m[i][j]);
        Mat inv = mat_inverse(a);
        IMat r(n, std::vector<long long>(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                if (denominator(inv[i][j]) != 1)
                    throw std::logic_error("lattice matrix inverse not integral");
                r[i][j] = static_cast<long long>(numerator(inv[i][j]));
            }
        return r;
    }

    /// <lambda, beta> with lambda over simple coroots and beta over simple
    /// roots; reduces to the Cartan pairing.
    long long coroot_root_pair(const std::vector<long long>& lambda,
                               const RootCoeffs& beta) const {
        long long s = 0;
        for (std::size_t i = 0; i < lambda.size(); ++i) {
            if (lambda[i] == 0) continue;
            for (std::size_t j = 0; j < beta.size(); ++j)
                s += lambda[i] * beta[j] * cartan_[i][j];
        }
        return s;
    }

    template <typename F>
    void for_each_inversion(const AffineWeylElement& w, F&& fn) const {
        long long bound = 0;
        for (const auto& beta : rs_.all_roots()) {
            long long p = coroot_root_pair(w.translation, beta);
            bound = std::max(bound, p < 0 ? -p : p);
        }
        const auto all = rs_.all_roots();
        for (long long n = 0; n <= bound; ++n) {
            for (const auto& alpha : all) {
                AffineRoot r{n, alpha};
                if (!affine_root_positive(r)) continue;
                if (!affine_root_positive(act(w, r))) fn(r);
            }
        }
    }

    void check_crossing(const Crossing& c) const {
        if (c.rank() != rank())
            throw std::invalid_argument("crossing does not match the root system");
    }

    RootSystem rs_;
    IMat cartan_;
};

}  // namespace loopflag

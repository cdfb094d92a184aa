#pragma once

#include "loopflag/rational.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace loopflag {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D' };

inline char family_letter(Family f) { return static_cast<char>(f); }

inline Family family_from_letter(char c) {
    switch (c) {
        case 'A': return Family::A;
        case 'B': return Family::B;
        case 'C': return Family::C;
        case 'D': return Family::D;
        default: throw std::invalid_argument(std::string("unknown family '") + c + "'");
    }
}

// Integer coefficient vector of a root over the simple roots.
using RootCoeffs = std::vector<long long>;

/// Classical finite root system in standard coordinates, with all pairings
/// exact. Two normalisations of the bilinear form are carried around: the
/// one with <theta,theta> = 2, and the true Killing-induced form obtained
/// from it by the factor killing_scale = 1/(2 h_vee).
class RootSystem {
public:
    RootSystem(Family family, int rank) : family_(family), rank_(rank) {
        validate_rank();
        build_simple_roots();
        build_cartan();
        positive_ = positive_roots_by_reflections();
        find_theta();
        build_weights();
        build_comarks();
    }

    Family family() const { return family_; }
    int rank() const { return rank_; }
    int dim() const { return static_cast<int>(simple_[0].size()); }

    /// Simple root alpha_i in ambient coordinates, node index 1..rank.
    const Vec& simple_root(int i) const { return simple_[check_node(i) - 1]; }

    /// Cartan matrix entry a_{ij} = <alpha_j, alpha_i^vee>, nodes 1..rank.
    long long cartan(int i, int j) const {
        return cartan_[check_node(i) - 1][check_node(j) - 1];
    }

    const std::vector<RootCoeffs>& positive_roots() const { return positive_; }
    std::size_t num_positive_roots() const { return positive_.size(); }

    /// All roots, positives followed by their negatives.
    std::vector<RootCoeffs> all_roots() const {
        std::vector<RootCoeffs> out = positive_;
        for (const auto& r : positive_) out.push_back(negate(r));
        return out;
    }

    const RootCoeffs& theta_coeffs() const { return theta_coeffs_; }
    const Vec& theta() const { return theta_; }
    const Vec& fundamental_weight(int i) const { return weights_[check_node(i) - 1]; }
    const Vec& rho() const { return rho_; }

    const std::vector<long long>& comarks() const { return comarks_; }
    long long dual_coxeter() const { return h_vee_; }
    Rat killing_scale() const { return killing_scale_; }

    /// Pairing normalised so that <theta,theta> = 2.
    Rat theta_pair(const Vec& v, const Vec& w) const {
        check_dim(v);
        check_dim(w);
        return dot(v, w) * norm_scale_;
    }

    /// The Killing form itself: theta_pair rescaled by 1/(2 h_vee).
    Rat killing_pair(const Vec& v, const Vec& w) const {
        return theta_pair(v, w) * killing_scale_;
    }

    /// <v, alpha^vee> for a root alpha, independent of form normalisation.
    Rat coroot_pair(const Vec& v, const Vec& alpha) const {
        return 2 * dot(v, alpha) / dot(alpha, alpha);
    }

    Vec ambient(const RootCoeffs& coeffs) const {
        if (coeffs.size() != static_cast<std::size_t>(rank_))
            throw std::invalid_argument("ambient: coefficient vector has wrong length");
        Vec v(dim(), 0);
        for (int i = 0; i < rank_; ++i)
            for (int d = 0; d < dim(); ++d) v[d] += Rat(coeffs[i]) * simple_[i][d];
        return v;
    }

    bool is_root(const RootCoeffs& coeffs) const {
        return root_set_.count(coeffs) || root_set_.count(negate(coeffs));
    }

    /// Looks a root up by its ambient coordinates (all roots of the classical
    /// families have integer ambient coordinates).
    std::optional<RootCoeffs> find_root_ambient(const std::vector<long long>& amb) const {
        auto it = ambient_index_.find(amb);
        if (it == ambient_index_.end()) return std::nullopt;
        return it->second;
    }

    Vec half_sum_positive_roots() const {
        Vec v(dim(), 0);
        for (const auto& r : positive_) v = vec_add(v, ambient(r));
        return vec_scale(Rat(1, 2), v);
    }

    /// Independent route to the positive roots: saturate upwards by height
    /// using root strings, starting from the simple roots alone.
    std::vector<RootCoeffs> positive_roots_by_saturation() const {
        std::set<RootCoeffs> known;
        std::vector<RootCoeffs> frontier;
        for (int i = 0; i < rank_; ++i) {
            RootCoeffs e(rank_, 0);
            e[i] = 1;
            known.insert(e);
            frontier.push_back(e);
        }
        while (!frontier.empty()) {
            std::vector<RootCoeffs> next;
            for (const auto& beta : frontier) {
                for (int i = 0; i < rank_; ++i) {
                    // alpha_i-string through beta: q = p - <beta, alpha_i^vee>
                    long long pair = 0;
                    for (int j = 0; j < rank_; ++j) pair += cartan_[i][j] * beta[j];
                    long long p = 0;
                    RootCoeffs down = beta;
                    while (true) {
                        down[i] -= 1;
                        bool neg = std::all_of(down.begin(), down.end(),
                                               [](long long c) { return c <= 0; });
                        RootCoeffs probe = neg ? negate(down) : down;
                        if (is_zero(down) || !known.count(probe)) break;
                        ++p;
                    }
                    if (p - pair >= 1) {
                        RootCoeffs up = beta;
                        up[i] += 1;
                        if (known.insert(up).second) next.push_back(up);
                    }
                }
            }
            frontier = std::move(next);
        }
        std::vector<RootCoeffs> out(known.begin(), known.end());
        sort_roots(out);
        return out;
    }

    static RootCoeffs negate(const RootCoeffs& r) {
        RootCoeffs n(r.size());
        for (std::size_t i = 0; i < r.size(); ++i) n[i] = -r[i];
        return n;
    }

    static long long height(const RootCoeffs& r) {
        return std::accumulate(r.begin(), r.end(), 0LL);
    }

    static bool is_positive_coeffs(const RootCoeffs& r) {
        bool nonzero = false;
        for (long long c : r) {
            if (c < 0) return false;
            if (c > 0) nonzero = true;
        }
        return nonzero;
    }

private:
    static bool is_zero(const RootCoeffs& r) {
        return std::all_of(r.begin(), r.end(), [](long long c) { return c == 0; });
    }

    static void sort_roots(std::vector<RootCoeffs>& v) {
        std::sort(v.begin(), v.end(), [](const RootCoeffs& a, const RootCoeffs& b) {
            long long ha = height(a), hb = height(b);
            if (ha != hb) return ha < hb;
            return a < b;
        });
    }

    void validate_rank() const {
        const int r = rank_;
        switch (family_) {
            case Family::A:
                if (r < 1) throw std::invalid_argument("family A requires rank >= 1");
                break;
            case Family::B:
                if (r < 2) throw std::invalid_argument("family B requires rank >= 2");
                break;
            case Family::C:
                if (r < 2) throw std::invalid_argument("family C requires rank >= 2");
                break;
            case Family::D:
                if (r < 4) throw std::invalid_argument("family D requires rank >= 4");
                break;
        }
    }

    void build_simple_roots() {
        const int r = rank_;
        const int d = (family_ == Family::A) ? r + 1 : r;
        simple_.assign(r, Vec(d, 0));
        for (int i = 0; i < r - 1; ++i) {  // e_i - e_{i+1} chains shared by all four families
            simple_[i][i] = 1;
            simple_[i][i + 1] = -1;
        }
        switch (family_) {
            case Family::A:
                simple_[r - 1][r - 1] = 1;
                simple_[r - 1][r] = -1;
                break;
            case Family::B:
                simple_[r - 1][r - 1] = 1;
                break;
            case Family::C:
                simple_[r - 1][r - 1] = 2;
                break;
            case Family::D:
                simple_[r - 1][r - 2] = 1;
                simple_[r - 1][r - 1] = 1;
                break;
        }
    }

    void build_cartan() {
        cartan_.assign(rank_, std::vector<long long>(rank_, 0));
        for (int i = 0; i < rank_; ++i)
            for (int j = 0; j < rank_; ++j) {
                Rat v = 2 * dot(simple_[i], simple_[j]) / dot(simple_[i], simple_[i]);
                if (denominator(v) != 1)
                    throw std::logic_error("cartan entry not an integer");
                cartan_[i][j] = static_cast<long long>(numerator(v));
            }
    }

    std::vector<RootCoeffs> positive_roots_by_reflections() const {
        std::set<RootCoeffs> seen;
        std::vector<RootCoeffs> frontier;
        for (int i = 0; i < rank_; ++i) {
            RootCoeffs e(rank_, 0);
            e[i] = 1;
            seen.insert(e);
            frontier.push_back(e);
        }
        while (!frontier.empty()) {
            std::vector<RootCoeffs> next;
            for (const auto& beta : frontier) {
                for (int i = 0; i < rank_; ++i) {
                    long long pair = 0;
                    for (int j = 0; j < rank_; ++j) pair += cartan_[i][j] * beta[j];
                    RootCoeffs img = beta;
                    img[i] -= pair;
                    if (seen.insert(img).second) next.push_back(img);
                }
            }
            frontier = std::move(next);
        }
        std::vector<RootCoeffs> out;
        for (const auto& r : seen)
            if (is_positive_coeffs(r)) out.push_back(r);
        sort_roots(out);
        return out;
    }

    void find_theta() {
        theta_coeffs_ = positive_.back();  // unique root of maximal height
        for (const auto& r : positive_)
            if (height(r) == height(theta_coeffs_) && r != theta_coeffs_)
                throw std::logic_error("highest root is not unique");
        theta_ = ambient(theta_coeffs_);
        // theta + alpha_i must never be a root
        for (int i = 0; i < rank_; ++i) {
            RootCoeffs up = theta_coeffs_;
            up[i] += 1;
            if (is_root(up)) throw std::logic_error("theta + simple root is a root");
        }
        norm_scale_ = Rat(2) / dot(theta_, theta_);
        // index roots by ambient coordinates (always integral here)
        for (const auto& rc : all_roots_build()) {
            Vec amb = ambient(rc);
            std::vector<long long> key(amb.size());
            for (std::size_t d = 0; d < amb.size(); ++d) {
                if (denominator(amb[d]) != 1)
                    throw std::logic_error("root with non-integer ambient coordinates");
                key[d] = static_cast<long long>(numerator(amb[d]));
            }
            ambient_index_.emplace(std::move(key), rc);
        }
        for (const auto& r : positive_) root_set_.insert(r);
    }

    std::vector<RootCoeffs> all_roots_build() const {
        std::vector<RootCoeffs> out = positive_;
        for (const auto& r : positive_) out.push_back(negate(r));
        return out;
    }

    void build_weights() {
        // lambda_i = sum_k x_k alpha_k with <lambda_i, alpha_j^vee> = delta_ij,
        // i.e. Cartan^T x = e_i over the simple-root basis.
        weights_.assign(rank_, Vec());
        Mat sys(rank_, Vec(rank_));
        for (int j = 0; j < rank_; ++j)
            for (int k = 0; k < rank_; ++k) sys[j][k] = Rat(cartan_[j][k]);
        for (int i = 0; i < rank_; ++i) {
            Vec rhs(rank_, 0);
            rhs[i] = 1;
            Vec x = solve_linear(sys, rhs);
            Vec w(dim(), 0);
            for (int k = 0; k < rank_; ++k)
                for (int d = 0; d < dim(); ++d) w[d] += x[k] * simple_[k][d];
            weights_[i] = std::move(w);
        }
        rho_.assign(dim(), 0);
        for (const auto& w : weights_) rho_ = vec_add(rho_, w);
    }

    void build_comarks() {
        comarks_.assign(rank_, 0);
        h_vee_ = 1;
        for (int i = 0; i < rank_; ++i) {
            Rat c = 2 * dot(theta_, weights_[i]) / dot(theta_, theta_);
            if (denominator(c) != 1) throw std::logic_error("comark not an integer");
            comarks_[i] = static_cast<long long>(numerator(c));
            h_vee_ += comarks_[i];
        }
        killing_scale_ = Rat(1, 2 * h_vee_);
    }

    int check_node(int i) const {
        if (i < 1 || i > rank_)
            throw std::invalid_argument("node index out of range 1..rank");
        return i;
    }

    void check_dim(const Vec& v) const {
        if (v.size() != static_cast<std::size_t>(dim()))
            throw std::invalid_argument("vector does not live in the weight space");
    }

    Family family_;
    int rank_;
    std::vector<Vec> simple_;
    std::vector<std::vector<long long>> cartan_;
    std::vector<RootCoeffs> positive_;
    std::set<RootCoeffs> root_set_;
    std::map<std::vector<long long>, RootCoeffs> ambient_index_;
    RootCoeffs theta_coeffs_;
    Vec theta_;
    std::vector<Vec> weights_;
    Vec rho_;
    std::vector<long long> comarks_;
    long long h_vee_ = 0;
    Rat norm_scale_;
    Rat killing_scale_;
};

inline RootSystem build_root_system(Family family, int rank) {
    return RootSystem(family, rank);
}

inline Rat killing_pair(const RootSystem& rs, const Vec& v, const Vec& w) {
    return rs.killing_pair(v, w);
}

inline std::pair<std::vector<long long>, long long> comarks_and_dual_coxeter(
    const RootSystem& rs) {
    return {rs.comarks(), rs.dual_coxeter()};
}

/// 2<rho,theta> + <theta,theta> under the Killing form; equals 1 exactly.
inline Rat strange_identity(const RootSystem& rs) {
    return 2 * rs.killing_pair(rs.rho(), rs.theta()) +
           rs.killing_pair(rs.theta(), rs.theta());
}

}  // namespace loopflag

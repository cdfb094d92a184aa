#pragma once

#include "loopflag/rootsys.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace loopflag {

/// A 0/1 marking of the extended diagram nodes {0,1,...,rank}. Value 1 at a
/// node means the node is crossed, i.e. the chi-function takes value 1 on the
/// corresponding simple root.
struct Crossing {
    std::vector<int> values;  // size rank+1, index = node

    static Crossing none(int rank) { return Crossing{std::vector<int>(rank + 1, 0)}; }

    static Crossing all(int rank) { return Crossing{std::vector<int>(rank + 1, 1)}; }

    static Crossing of_nodes(int rank, const std::vector<int>& nodes) {
        Crossing c = none(rank);
        for (int n : nodes) {
            if (n < 0 || n > rank)
                throw std::invalid_argument("crossed node index out of range 0..rank");
            c.values[std::size_t(n)] = 1;
        }
        return c;
    }

    int rank() const { return static_cast<int>(values.size()) - 1; }

    int at(int node) const {
        if (node < 0 || node >= static_cast<int>(values.size()))
            throw std::invalid_argument("node index out of range 0..rank");
        return values[std::size_t(node)];
    }

    bool any_crossed() const {
        return std::any_of(values.begin(), values.end(), [](int v) { return v != 0; });
    }

    std::vector<int> crossed_nodes() const {
        std::vector<int> out;
        for (int i = 0; i < static_cast<int>(values.size()); ++i)
            if (values[std::size_t(i)]) out.push_back(i);
        return out;
    }

    std::vector<int> uncrossed_nodes() const {
        std::vector<int> out;
        for (int i = 0; i < static_cast<int>(values.size()); ++i)
            if (!values[std::size_t(i)]) out.push_back(i);
        return out;
    }

    bool operator==(const Crossing& o) const { return values == o.values; }
    bool operator<(const Crossing& o) const { return values < o.values; }
};

enum class ParabolicClass { Standard, Exotic, Improper };

inline const char* parabolic_class_name(ParabolicClass k) {
    switch (k) {
        case ParabolicClass::Standard: return "standard";
        case ParabolicClass::Exotic: return "exotic";
        case ParabolicClass::Improper: return "improper";
    }
    return "?";
}

inline bool is_zero_coeffs(const RootCoeffs& r) {
    return std::all_of(r.begin(), r.end(), [](long long c) { return c == 0; });
}

/// chi of a finite root (or the zero weight) given by its expansion over the
/// finite simple roots.
inline long long chi_finite(const Crossing& c, const RootSystem& rs,
                            const RootCoeffs& alpha) {
    if (c.rank() != rs.rank())
        throw std::invalid_argument("crossing does not match the root system");
    if (!is_zero_coeffs(alpha) && !rs.is_root(alpha))
        throw std::invalid_argument("chi: vector is not a root of the system");
    long long v = 0;
    for (int i = 0; i < rs.rank(); ++i) v += c.at(i + 1) * alpha[std::size_t(i)];
    return v;
}

/// chi of the affine root n*delta + alpha, extended Z-linearly from the
/// extended node values: chi(n delta + alpha) = n chi(alpha_0) + n chi(theta)
/// + chi(alpha).
inline long long chi_affine(const Crossing& c, const RootSystem& rs, long long n,
                            const RootCoeffs& alpha) {
    long long chi_theta = chi_finite(c, rs, rs.theta_coeffs());
    return n * c.at(0) + n * chi_theta + chi_finite(c, rs, alpha);
}

/// chi(delta) = chi(alpha_0) + chi(theta).
inline long long chi_delta(const Crossing& c, const RootSystem& rs) {
    return c.at(0) + chi_finite(c, rs, rs.theta_coeffs());
}

struct AffineParabolic {
    Crossing crossing;
    ParabolicClass klass;
    std::vector<int> delta_chi;                     // uncrossed node indices
    std::vector<RootCoeffs> finite_parabolic_roots; // {alpha : chi(alpha) >= 0}
    std::vector<RootCoeffs> q_chi_roots;            // {alpha : chi(alpha) = chi(delta)}
};

inline AffineParabolic classify_parabolic(const Crossing& c, const RootSystem& rs) {
    if (c.rank() != rs.rank())
        throw std::invalid_argument("crossing does not match the root system");
    AffineParabolic p;
    p.crossing = c;
    p.delta_chi = c.uncrossed_nodes();
    if (!c.any_crossed())
        p.klass = ParabolicClass::Improper;
    else if (c.at(0) == 1)
        p.klass = ParabolicClass::Standard;
    else
        p.klass = ParabolicClass::Exotic;

    const long long cd = chi_delta(c, rs);
    for (const auto& alpha : rs.all_roots()) {
        long long v = chi_finite(c, rs, alpha);
        if (v >= 0) p.finite_parabolic_roots.push_back(alpha);
        if (v == cd) p.q_chi_roots.push_back(alpha);
    }
    std::sort(p.finite_parabolic_roots.begin(), p.finite_parabolic_roots.end());
    std::sort(p.q_chi_roots.begin(), p.q_chi_roots.end());

    if (p.klass == ParabolicClass::Standard && !p.q_chi_roots.empty())
        throw std::logic_error("standard parabolic with nonempty q_chi");
    return p;
}

/// The level-n graded piece of the parabolic: root set plus a flag recording
/// whether the Cartan summand is present at this level.
struct GradedComponent {
    std::vector<RootCoeffs> roots;
    bool cartan = false;

    bool operator==(const GradedComponent& o) const {
        return roots == o.roots && cartan == o.cartan;
    }
};

/// Direct evaluation over all roots and the zero weight.
inline GradedComponent graded_component(const AffineParabolic& p, const RootSystem& rs,
                                        long long n) {
    GradedComponent g;
    for (const auto& alpha : rs.all_roots())
        if (chi_affine(p.crossing, rs, n, alpha) >= 0) g.roots.push_back(alpha);
    std::sort(g.roots.begin(), g.roots.end());
    RootCoeffs zero(std::size_t(rs.rank()), 0);
    g.cartan = chi_affine(p.crossing, rs, n, zero) >= 0;
    return g;
}

/// Case analysis of the graded pieces: empty below level -1, the q_chi piece
/// at level -1, the finite parabolic at level 0, everything above. The
/// improper crossing is the whole algebra at every level.
inline GradedComponent graded_component_closed_form(const AffineParabolic& p,
                                                    const RootSystem& rs, long long n) {
    GradedComponent g;
    auto all = rs.all_roots();
    std::sort(all.begin(), all.end());
    if (p.klass == ParabolicClass::Improper) {
        g.roots = all;
        g.cartan = true;
        return g;
    }
    if (n <= -2) {
        g.cartan = false;
    } else if (n == -1) {
        g.roots = p.q_chi_roots;
        g.cartan = false;
    } else if (n == 0) {
        g.roots = p.finite_parabolic_roots;
        g.cartan = true;
    } else {
        g.roots = all;
        g.cartan = true;
    }
    return g;
}

}  // namespace loopflag

#pragma once

#include "loopflag/affine.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace loopflag {

enum class SheafFamily { GlSl, SoEven, SoOdd, Sp };

inline const char* sheaf_family_name(SheafFamily f) {
    switch (f) {
        case SheafFamily::GlSl: return "gl";
        case SheafFamily::SoEven: return "so_even";
        case SheafFamily::SoOdd: return "so_odd";
        case SheafFamily::Sp: return "sp";
    }
    return "?";
}

/// Position label within one period of the nested sequence; tag is the +/-
/// decoration carried by the even-orthogonal labels at positions n and 2n.
struct SheafLabel {
    int j;
    int tag = 0;  // -1, 0, +1

    bool operator==(const SheafLabel& o) const { return j == o.j && tag == o.tag; }
    bool operator<(const SheafLabel& o) const {
        if (j != o.j) return j < o.j;
        return tag < o.tag;
    }
};

struct SheafIndex {
    long long i = 0;
    SheafLabel label;

    bool operator==(const SheafIndex& o) const { return i == o.i && label == o.label; }
};

inline int sheaf_rank(SheafFamily f, int n) {
    switch (f) {
        case SheafFamily::GlSl: return n;
        case SheafFamily::SoEven: return 2 * n;
        case SheafFamily::SoOdd: return 2 * n + 1;
        case SheafFamily::Sp: return 2 * n;
    }
    return 0;
}

inline bool label_valid(SheafFamily f, int n, const SheafLabel& l) {
    switch (f) {
        case SheafFamily::GlSl:
            return l.tag == 0 && l.j >= 1 && l.j <= n;
        case SheafFamily::SoEven:
            if (l.j == n || l.j == 2 * n) return l.tag == 1 || l.tag == -1;
            return l.tag == 0 && l.j >= 1 && l.j <= 2 * n - 1;
        case SheafFamily::SoOdd:
            return l.tag == 0 && l.j >= 1 && l.j <= 2 * n + 1;
        case SheafFamily::Sp:
            return l.tag == 0 && l.j >= 1 && l.j <= 2 * n;
    }
    return false;
}

inline void check_label(SheafFamily f, int n, const SheafLabel& l) {
    if (!label_valid(f, n, l))
        throw std::invalid_argument("label outside the family's index set");
}

/// Degree of the sheaf at (i, j): rank*(i-1) + j, with the family's rank in
/// place of n outside the general linear case.
inline long long sheaf_degree(SheafFamily f, int n, const SheafIndex& idx) {
    check_label(f, n, idx.label);
    return static_cast<long long>(sheaf_rank(f, n)) * (idx.i - 1) + idx.label.j;
}

/// One period of the deletion pattern cut out by a crossing, together with
/// the surviving labels in sequence order.
struct SequenceSpec {
    SheafFamily family;
    int n = 0;
    std::vector<SheafLabel> surviving;
    Crossing source_crossing;
};

/// Crossed nodes keep their flag data, uncrossed nodes delete it. Finite node
/// j keeps position j together with its mirror; node 0 keeps the top position.
/// For the even-orthogonal family the decorated positions are attached to the
/// fork nodes, and the determined positions n-1, n+1 (resp. 1, 2n-1) survive
/// exactly when both members of the corresponding +/- pair do.
inline SequenceSpec sequence_spec_from_crossing(SheafFamily f, int n, const Crossing& c) {
    SequenceSpec spec;
    spec.family = f;
    spec.n = n;
    spec.source_crossing = c;
    auto keep = [&](int j, int tag = 0) { spec.surviving.push_back({j, tag}); };

    switch (f) {
        case SheafFamily::GlSl: {
            if (c.rank() != n - 1)
                throw std::invalid_argument("crossing rank must be n-1 for gl");
            for (int j = 1; j <= n - 1; ++j)
                if (c.at(j)) keep(j);
            if (c.at(0)) keep(n);
            break;
        }
        case SheafFamily::SoOdd: {
            if (c.rank() != n) throw std::invalid_argument("crossing rank must be n");
            for (int j = 1; j <= n; ++j)
                if (c.at(j)) {
                    keep(j);
                    keep(2 * n + 1 - j);
                }
            if (c.at(0)) keep(2 * n + 1);
            break;
        }
        case SheafFamily::Sp: {
            if (c.rank() != n) throw std::invalid_argument("crossing rank must be n");
            for (int j = 1; j <= n; ++j)
                if (c.at(j)) {
                    keep(j);
                    if (j != n) keep(2 * n - j);
                }
            if (c.at(0)) keep(2 * n);
            break;
        }
        case SheafFamily::SoEven: {
            if (c.rank() != n) throw std::invalid_argument("crossing rank must be n");
            if (n < 4) throw std::invalid_argument("even orthogonal labels need n >= 4");
            for (int j = 2; j <= n - 2; ++j)
                if (c.at(j)) {
                    keep(j);
                    keep(2 * n - j);
                }
            if (c.at(n)) keep(n, +1);
            if (c.at(n - 1)) keep(n, -1);
            if (c.at(n) && c.at(n - 1)) {
                keep(n - 1);
                keep(n + 1);
            }
            if (c.at(0)) keep(2 * n, +1);
            if (c.at(1)) keep(2 * n, -1);
            if (c.at(0) && c.at(1)) {
                keep(1);
                keep(2 * n - 1);
            }
            break;
        }
    }
    std::sort(spec.surviving.begin(), spec.surviving.end());
    return spec;
}

/// Dimensions of the successive skyscraper quotients over one period,
/// (j_2-j_1, ..., j_k-j_{k-1}, n+j_1-j_k); they sum to n.
inline std::vector<long long> quotient_sizes(const SequenceSpec& spec) {
    if (spec.family != SheafFamily::GlSl)
        throw std::invalid_argument("quotient sizes are computed for the gl family");
    if (spec.surviving.empty())
        throw std::invalid_argument("no surviving labels: the sequence is empty");
    std::vector<long long> out;
    const auto& s = spec.surviving;
    for (std::size_t l = 0; l + 1 < s.size(); ++l) out.push_back(s[l + 1].j - s[l].j);
    out.push_back(spec.n + s.front().j - s.back().j);
    return out;
}

/// The index action of the family's Hecke transform on one sheaf position.
inline SheafIndex hecke_index_shift(SheafFamily f, int n, const SheafIndex& idx) {
    check_label(f, n, idx.label);
    SheafIndex out = idx;
    switch (f) {
        case SheafFamily::GlSl:
            if (idx.label.j < n) {
                out.label.j += 1;
            } else {
                out.i += 1;
                out.label.j = 1;
            }
            break;
        case SheafFamily::Sp:
            if (idx.label.j <= n) {
                out.label.j += n;
            } else {
                out.i += 1;
                out.label.j -= n;
            }
            break;
        case SheafFamily::SoOdd:
            if (idx.label.j == 2 * n + 1) {
                out.i += 1;
                out.label.j = 1;
            } else if (idx.label.j == 1) {
                out.i -= 1;
                out.label.j = 2 * n + 1;
            }
            break;
        case SheafFamily::SoEven:
            if (idx.label.j <= n) {
                out.label.j += n;
            } else {
                out.i += 1;
                out.label.j -= n;
            }
            break;
    }
    return out;
}

/// The two even-orthogonal label swaps, permuting the +/- decorations at
/// positions n and 2n respectively and fixing every other label.
inline SheafIndex so_swap_half(int n, const SheafIndex& idx) {
    check_label(SheafFamily::SoEven, n, idx.label);
    SheafIndex out = idx;
    if (idx.label.j == n) out.label.tag = -idx.label.tag;
    return out;
}

inline SheafIndex so_swap_full(int n, const SheafIndex& idx) {
    check_label(SheafFamily::SoEven, n, idx.label);
    SheafIndex out = idx;
    if (idx.label.j == 2 * n) out.label.tag = -idx.label.tag;
    return out;
}

/// z-valuations of the induced pairing on the n hyperbolic pairs of the
/// even-orthogonal sheaf at (i, j), read off the adapted basis
/// z^{-i}e_1,...,z^{-i}e_j, z^{-i+1}e_{j+1},...,z^{-i+1}e_{2n}: pair a is
/// matched with 2n+1-a and picks up the sum of the two exponents.
inline std::vector<long long> quad_form_valuations(int n, const SheafIndex& idx) {
    if (idx.label.tag != 0)
        throw std::invalid_argument(
            "decorated labels carry a conformal structure, not a valuation");
    if (idx.label.j < 1 || idx.label.j > 2 * n)
        throw std::invalid_argument("position out of range 1..2n");
    const long long i = idx.i;
    const int j = idx.label.j;
    auto exponent = [&](int a) { return (a <= j) ? -i : -i + 1; };
    std::vector<long long> out;
    out.reserve(std::size_t(n));
    for (int a = 1; a <= n; ++a) out.push_back(exponent(a) + exponent(2 * n + 1 - a));
    return out;
}

}  // namespace loopflag

#pragma once

#include "loopflag/affine.hpp"
#include "loopflag/rootsys.hpp"

#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

namespace loopflag {

/// Exact-rational Laurent polynomial in a formal variable w, stored sparsely
/// as exponent -> coefficient.
struct LaurentPoly {
    std::map<long long, Rat> coeffs;

    static LaurentPoly monomial(long long exp, const Rat& c) {
        LaurentPoly p;
        if (c != 0) p.coeffs[exp] = c;
        return p;
    }

    bool is_zero() const { return coeffs.empty(); }

    Rat coeff(long long exp) const {
        auto it = coeffs.find(exp);
        return it == coeffs.end() ? Rat(0) : it->second;
    }

    LaurentPoly& operator+=(const LaurentPoly& o) {
        for (const auto& [e, c] : o.coeffs) {
            Rat v = coeffs[e] += c;
            if (v == 0) coeffs.erase(e);
        }
        return *this;
    }

    LaurentPoly operator+(const LaurentPoly& o) const {
        LaurentPoly r = *this;
        r += o;
        return r;
    }

    LaurentPoly operator-() const {
        LaurentPoly r;
        for (const auto& [e, c] : coeffs) r.coeffs[e] = -c;
        return r;
    }

    LaurentPoly operator-(const LaurentPoly& o) const { return *this + (-o); }

    LaurentPoly operator*(const LaurentPoly& o) const {
        LaurentPoly r;
        for (const auto& [e1, c1] : coeffs)
            for (const auto& [e2, c2] : o.coeffs) {
                Rat v = r.coeffs[e1 + e2] += c1 * c2;
                if (v == 0) r.coeffs.erase(e1 + e2);
            }
        return r;
    }

    /// Multiplies every exponent by k (substitution w -> w^k).
    LaurentPoly stretch(long long k) const {
        LaurentPoly r;
        for (const auto& [e, c] : coeffs) r.coeffs[e * k] = c;
        return r;
    }

    bool operator==(const LaurentPoly& o) const { return coeffs == o.coeffs; }
};

/// Square matrix of Laurent polynomials in w with declared root order m,
/// w = z^{1/m}; integer loops have every exponent divisible by m.
struct LaurentMatrix {
    int size = 0;
    long long root_order = 1;
    std::vector<std::vector<LaurentPoly>> entries;

    static LaurentMatrix zero(int n, long long m = 1) {
        LaurentMatrix g;
        g.size = n;
        g.root_order = m;
        g.entries.assign(std::size_t(n), std::vector<LaurentPoly>(std::size_t(n)));
        return g;
    }

    static LaurentMatrix identity(int n, long long m = 1) {
        LaurentMatrix g = zero(n, m);
        for (int i = 0; i < n; ++i)
            g.entries[std::size_t(i)][std::size_t(i)] = LaurentPoly::monomial(0, 1);
        return g;
    }

    LaurentPoly& at(int r, int c) { return entries[std::size_t(r)][std::size_t(c)]; }
    const LaurentPoly& at(int r, int c) const {
        return entries[std::size_t(r)][std::size_t(c)];
    }

    /// Adds c * z^level at entry (r, c); the matrix must be z-based.
    void add_z_term(int r, int c, long long level, const Rat& v) {
        at(r, c) += LaurentPoly::monomial(level * root_order, v);
    }

    bool is_integer_powered() const {
        for (const auto& row : entries)
            for (const auto& p : row)
                for (const auto& [e, c] : p.coeffs)
                    if (e % root_order != 0) return false;
        return true;
    }

    /// Coefficient matrix of z^level.
    Mat z_coefficient(long long level) const {
        Mat m(std::size_t(size), Vec(std::size_t(size), 0));
        for (int r = 0; r < size; ++r)
            for (int c = 0; c < size; ++c)
                m[std::size_t(r)][std::size_t(c)] = at(r, c).coeff(level * root_order);
        return m;
    }

    std::pair<long long, long long> z_level_range() const {
        bool any = false;
        long long lo = 0, hi = 0;
        for (const auto& row : entries)
            for (const auto& p : row)
                for (const auto& [e, c] : p.coeffs) {
                    long long lvl = e >= 0 ? e / root_order
                                           : -((-e + root_order - 1) / root_order);
                    if (!any) {
                        lo = hi = lvl;
                        any = true;
                    }
                    lo = std::min(lo, lvl);
                    hi = std::max(hi, lvl);
                }
        return {lo, hi};
    }

    /// Re-expresses the matrix at a finer root order (m must be a multiple).
    LaurentMatrix lifted(long long m) const {
        if (m % root_order != 0)
            throw std::invalid_argument("root orders are not compatible");
        const long long k = m / root_order;
        LaurentMatrix g = zero(size, m);
        for (int r = 0; r < size; ++r)
            for (int c = 0; c < size; ++c) g.at(r, c) = at(r, c).stretch(k);
        return g;
    }

    /// Collapses an integer-powered matrix back to root order 1.
    LaurentMatrix to_z() const {
        if (!is_integer_powered())
            throw std::logic_error("matrix has genuine fractional powers");
        LaurentMatrix g = zero(size, 1);
        for (int r = 0; r < size; ++r)
            for (int c = 0; c < size; ++c) {
                for (const auto& [e, v] : at(r, c).coeffs)
                    g.at(r, c).coeffs[e / root_order] = v;
            }
        return g;
    }

    LaurentMatrix operator*(const LaurentMatrix& o) const {
        if (size != o.size || root_order != o.root_order)
            throw std::invalid_argument("matrix shapes or root orders differ");
        LaurentMatrix r = zero(size, root_order);
        for (int i = 0; i < size; ++i)
            for (int k = 0; k < size; ++k) {
                if (at(i, k).is_zero()) continue;
                for (int j = 0; j < size; ++j) {
                    if (o.at(k, j).is_zero()) continue;
                    r.at(i, j) += at(i, k) * o.at(k, j);
                }
            }
        return r;
    }

    LaurentMatrix operator+(const LaurentMatrix& o) const {
        if (size != o.size || root_order != o.root_order)
            throw std::invalid_argument("matrix shapes or root orders differ");
        LaurentMatrix r = *this;
        for (int i = 0; i < size; ++i)
            for (int j = 0; j < size; ++j) r.at(i, j) += o.at(i, j);
        return r;
    }

    LaurentMatrix operator-() const {
        LaurentMatrix r = *this;
        for (auto& row : r.entries)
            for (auto& p : row) p = -p;
        return r;
    }

    LaurentMatrix operator-(const LaurentMatrix& o) const { return *this + (-o); }

    bool operator==(const LaurentMatrix& o) const {
        if (size != o.size) return false;
        long long m = std::lcm(root_order, o.root_order);
        return lifted(m).entries == o.lifted(m).entries;
    }
};

inline LaurentMatrix bracket(const LaurentMatrix& g, const LaurentMatrix& h) {
    return g * h - h * g;
}

enum class OuterKind { FlipSl2, ShiftSln, SlipSo2n, PermSo, PermSoShifted };

inline const char* outer_kind_name(OuterKind k) {
    switch (k) {
        case OuterKind::FlipSl2: return "flip_sl2";
        case OuterKind::ShiftSln: return "shift_sln";
        case OuterKind::SlipSo2n: return "slip_so2n";
        case OuterKind::PermSo: return "perm_so";
        case OuterKind::PermSoShifted: return "perm_so_shifted";
    }
    return "?";
}

namespace detail {

/// Conjugator and its inverse at the kind's root order.
inline std::pair<LaurentMatrix, LaurentMatrix> outer_conjugator(OuterKind kind, int size) {
    switch (kind) {
        case OuterKind::FlipSl2: {
            if (size != 2) throw std::invalid_argument("flip acts on 2x2 loops");
            LaurentMatrix x = LaurentMatrix::zero(2, 2);
            x.at(0, 1) = LaurentPoly::monomial(-1, 1);
            x.at(1, 0) = LaurentPoly::monomial(1, 1);
            return {x, x};
        }
        case OuterKind::ShiftSln: {
            if (size < 2) throw std::invalid_argument("shift needs size >= 2");
            const long long n = size;
            LaurentMatrix a = LaurentMatrix::zero(size, n);
            LaurentMatrix inv = LaurentMatrix::zero(size, n);
            a.at(0, size - 1) = LaurentPoly::monomial(1 - n, 1);
            inv.at(size - 1, 0) = LaurentPoly::monomial(n - 1, 1);
            for (int i = 1; i < size; ++i) {
                a.at(i, i - 1) = LaurentPoly::monomial(1, 1);
                inv.at(i - 1, i) = LaurentPoly::monomial(-1, 1);
            }
            return {a, inv};
        }
        case OuterKind::SlipSo2n: {
            if (size < 4 || size % 2 != 0)
                throw std::invalid_argument("slip acts on even size >= 4");
            const int n = size / 2;
            LaurentMatrix x = LaurentMatrix::zero(size, 2);
            for (int i = 0; i < n; ++i) {
                x.at(i, n + i) = LaurentPoly::monomial(1, 1);
                x.at(n + i, i) = LaurentPoly::monomial(-1, 1);
            }
            return {x, x};
        }
        case OuterKind::PermSo: {
            if (size < 4 || size % 2 != 0)
                throw std::invalid_argument("row swap acts on even size >= 4");
            const int n = size / 2;
            LaurentMatrix x = LaurentMatrix::identity(size, 1);
            x.at(n - 1, n - 1) = LaurentPoly();
            x.at(n, n) = LaurentPoly();
            x.at(n - 1, n) = LaurentPoly::monomial(0, 1);
            x.at(n, n - 1) = LaurentPoly::monomial(0, 1);
            return {x, x};
        }
        case OuterKind::PermSoShifted: {
            if (size < 4 || size % 2 != 0)
                throw std::invalid_argument("shifted swap acts on even size >= 4");
            LaurentMatrix x = LaurentMatrix::identity(size, 1);
            x.at(0, 0) = LaurentPoly();
            x.at(size - 1, size - 1) = LaurentPoly();
            x.at(0, size - 1) = LaurentPoly::monomial(1, 1);
            x.at(size - 1, 0) = LaurentPoly::monomial(-1, 1);
            return {x, x};
        }
    }
    throw std::logic_error("unreachable");
}

}  // namespace detail

/// Conjugation by the outer automorphism's matrix, computed over the kind's
/// root order. The result must come back integer-powered; a fractional power
/// surviving the conjugation signals an implementation bug, since these
/// automorphisms preserve the loop algebra.
inline LaurentMatrix conjugate_outer(const LaurentMatrix& g, OuterKind kind) {
    if (g.root_order != 1 || !g.is_integer_powered())
        throw std::invalid_argument("conjugation expects an integer-powered z-loop");
    auto [x, xinv] = detail::outer_conjugator(kind, g.size);
    LaurentMatrix lifted = g.lifted(x.root_order);
    LaurentMatrix res = x * lifted * xinv;
    if (!res.is_integer_powered())
        throw std::logic_error("outer conjugation produced fractional powers");
    return res.to_z();
}

/// The integer loop matrix realizing the unit shift of the infinite matrix
/// basis, e_m -> e_{m+1}: components rotate upward and the last wraps with a
/// factor z. Conjugation by it translates every infinite-matrix entry by
/// (+1, +1) exactly; the fractional-power conjugator of ShiftSln agrees with
/// it up to conjugation by a diagonal torus loop.
inline LaurentMatrix shift_operator(int n) {
    if (n < 2) throw std::invalid_argument("shift operator needs size >= 2");
    LaurentMatrix s = LaurentMatrix::zero(n, 1);
    for (int a = 0; a + 1 < n; ++a) s.at(a + 1, a) = LaurentPoly::monomial(0, 1);
    s.at(0, n - 1) = LaurentPoly::monomial(1, 1);
    return s;
}

inline LaurentMatrix shift_operator_inverse(int n) {
    LaurentMatrix s = LaurentMatrix::zero(n, 1);
    for (int a = 0; a + 1 < n; ++a) s.at(a, a + 1) = LaurentPoly::monomial(0, 1);
    s.at(n - 1, 0) = LaurentPoly::monomial(-1, 1);
    return s;
}

/// Window of the infinite block matrix of a loop: block (i,j) is the
/// coefficient matrix of z^{i-j}, so the blocks are constant along diagonals.
struct MatrixWindow {
    int block_size = 0;
    long long lo = 0, hi = 0;
    std::map<std::pair<long long, long long>, Mat> blocks;

    const Mat& block(long long i, long long j) const { return blocks.at({i, j}); }

    /// Entry of the infinite matrix at absolute indices (a, b), indices taken
    /// over Z with block row i covering a in [i*n, (i+1)*n).
    Rat entry(long long a, long long b) const {
        auto fdiv = [](long long x, long long n) {
            long long q = x / n, r = x % n;
            return (r < 0) ? q - 1 : q;
        };
        const long long n = block_size;
        long long i = fdiv(a, n), j = fdiv(b, n);
        return block(i, j)[std::size_t(a - i * n)][std::size_t(b - j * n)];
    }
};

inline MatrixWindow window(const LaurentMatrix& g, long long lo, long long hi) {
    if (lo > hi) throw std::invalid_argument("window range is empty");
    if (!g.is_integer_powered())
        throw std::invalid_argument("window expects an integer-powered loop");
    MatrixWindow w;
    w.block_size = g.size;
    w.lo = lo;
    w.hi = hi;
    for (long long i = lo; i <= hi; ++i)
        for (long long j = lo; j <= hi; ++j) w.blocks[{i, j}] = g.z_coefficient(i - j);
    return w;
}

enum class MatrixAlgebra { SlN, SoEven, SoOdd, Sp };

/// Entry-level symmetry relations of the orthogonal and symplectic loop
/// algebras with the antidiagonal pairings.
inline bool symmetry_check(const LaurentMatrix& g, MatrixAlgebra family) {
    const int n = g.size;
    auto sgn = [&](int a) { return (a <= n / 2) ? 1 : -1; };  // 1-based halves
    switch (family) {
        case MatrixAlgebra::SoEven:
        case MatrixAlgebra::SoOdd: {
            if (family == MatrixAlgebra::SoEven && (n < 2 || n % 2 != 0))
                throw std::invalid_argument("even orthogonal loops have even size");
            if (family == MatrixAlgebra::SoOdd && (n < 3 || n % 2 != 1))
                throw std::invalid_argument("odd orthogonal loops have odd size");
            for (int p = 1; p <= n; ++p)
                for (int q = 1; q <= n; ++q) {
                    const LaurentPoly& a = g.at(p - 1, q - 1);
                    const LaurentPoly& b = g.at(n - q, n - p);  // (n+1-q, n+1-p)
                    if (!(a == -b)) return false;
                }
            return true;
        }
        case MatrixAlgebra::Sp: {
            if (n < 2 || n % 2 != 0)
                throw std::invalid_argument("symplectic loops have even size");
            for (int p = 1; p <= n; ++p)
                for (int q = 1; q <= n; ++q) {
                    const LaurentPoly& a = g.at(p - 1, q - 1);
                    LaurentPoly b = g.at(n - q, n - p);
                    if (sgn(p) * sgn(q) > 0) b = -b;
                    if (!(a == b)) return false;
                }
            return true;
        }
        case MatrixAlgebra::SlN: {
            // trace-free at every level
            LaurentPoly tr;
            for (int i = 0; i < n; ++i) tr += g.at(i, i);
            return tr.is_zero();
        }
    }
    return false;
}

namespace detail {

/// Weight of basis vector a (1-based) of the defining representation, as an
/// integer ambient vector of the root system.
inline bool defining_weight(const RootSystem& rs, int size, int a,
                            std::vector<long long>& out) {
    out.assign(std::size_t(rs.dim()), 0);
    switch (rs.family()) {
        case Family::A:
            out[std::size_t(a - 1)] = 1;
            return true;
        case Family::B: {
            const int n = rs.rank();
            if (a <= n) {
                out[std::size_t(a - 1)] = 1;
            } else if (a == n + 1) {
                // zero weight
            } else {
                out[std::size_t(size - a)] = -1;  // -e_{2n+2-a}
            }
            return true;
        }
        case Family::C:
        case Family::D: {
            const int n = rs.rank();
            if (a <= n)
                out[std::size_t(a - 1)] = 1;
            else
                out[std::size_t(size - a)] = -1;  // -e_{2n+1-a}
            return true;
        }
    }
    return false;
}

inline int defining_size(const RootSystem& rs) {
    switch (rs.family()) {
        case Family::A: return rs.rank() + 1;
        case Family::B: return 2 * rs.rank() + 1;
        case Family::C: return 2 * rs.rank();
        case Family::D: return 2 * rs.rank();
    }
    return 0;
}

inline MatrixAlgebra algebra_of(const RootSystem& rs) {
    switch (rs.family()) {
        case Family::A: return MatrixAlgebra::SlN;
        case Family::B: return MatrixAlgebra::SoOdd;
        case Family::C: return MatrixAlgebra::Sp;
        case Family::D: return MatrixAlgebra::SoEven;
    }
    return MatrixAlgebra::SlN;
}

}  // namespace detail

/// True iff every z-coefficient of g decomposes into root vectors (plus
/// Cartan at admissible levels) of the graded pieces of the parabolic cut out
/// by the crossing. Non-algebra input simply fails the decomposition.
inline bool parabolic_membership(const LaurentMatrix& g, const RootSystem& rs,
                                 const Crossing& c) {
    const int size = detail::defining_size(rs);
    if (size == 0) throw std::invalid_argument("no matrix model for this family");
    if (g.size != size)
        throw std::invalid_argument("loop size does not match the defining representation");
    if (g.root_order != 1 || !g.is_integer_powered())
        throw std::invalid_argument("membership expects an integer-powered z-loop");
    if (!symmetry_check(g, detail::algebra_of(rs))) return false;

    auto parab = classify_parabolic(c, rs);
    auto [lo, hi] = g.z_level_range();
    for (long long level = lo; level <= hi; ++level) {
        Mat m = g.z_coefficient(level);
        bool any = false;
        for (const auto& row : m)
            for (const auto& v : row) any = any || v != 0;
        if (!any) continue;
        GradedComponent allowed = graded_component(parab, rs, level);
        std::set<RootCoeffs> allowed_roots(allowed.roots.begin(), allowed.roots.end());
        for (int p = 1; p <= size; ++p)
            for (int q = 1; q <= size; ++q) {
                if (m[std::size_t(p - 1)][std::size_t(q - 1)] == 0) continue;
                if (p == q) {
                    if (!allowed.cartan) return false;
                    continue;
                }
                std::vector<long long> wp, wq;
                detail::defining_weight(rs, size, p, wp);
                detail::defining_weight(rs, size, q, wq);
                std::vector<long long> root(wp.size());
                for (std::size_t d = 0; d < wp.size(); ++d) root[d] = wp[d] - wq[d];
                auto coeffs = rs.find_root_ambient(root);
                if (!coeffs) return false;  // not a root vector of the algebra
                if (!allowed_roots.count(*coeffs)) return false;
            }
    }
    return true;
}

}  // namespace loopflag

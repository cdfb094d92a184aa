#pragma once

#include "loopflag/rational.hpp"

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace loopflag {

/// ADHM four-tuple (A, B, C, D) with A, B of size k x k, C of size k x n and
/// D of size n x k, subject to [A,B] + CD = 0 over exact rationals.
struct MonadData {
    int k = 0;
    int n = 0;
    Mat A, B, C, D;
};

namespace monad_detail {

inline Mat commutator(const Mat& a, const Mat& b) {
    Mat ab = mat_mul(a, b);
    Mat ba = mat_mul(b, a);
    for (std::size_t i = 0; i < ab.size(); ++i)
        for (std::size_t j = 0; j < ab[i].size(); ++j) ab[i][j] -= ba[i][j];
    return ab;
}

inline bool is_zero_mat(const Mat& m) {
    for (const auto& row : m)
        for (const auto& v : row)
            if (v != 0) return false;
    return true;
}

inline void check_shapes(const MonadData& m) {
    auto shape_ok = [](const Mat& x, int rows, int cols) {
        if (x.size() != static_cast<std::size_t>(rows)) return false;
        for (const auto& r : x)
            if (r.size() != static_cast<std::size_t>(cols)) return false;
        return true;
    };
    if (!shape_ok(m.A, m.k, m.k) || !shape_ok(m.B, m.k, m.k) ||
        !shape_ok(m.C, m.k, m.n) || !shape_ok(m.D, m.n, m.k))
        throw std::invalid_argument("monad matrices have inconsistent shapes");
}

}  // namespace monad_detail

/// True iff [A,B] + CD = 0 exactly.
inline bool validate(const MonadData& m) {
    monad_detail::check_shapes(m);
    Mat lhs = monad_detail::commutator(m.A, m.B);
    Mat cd = mat_mul(m.C, m.D);
    for (std::size_t i = 0; i < lhs.size(); ++i)
        for (std::size_t j = 0; j < lhs[i].size(); ++j) lhs[i][j] += cd[i][j];
    return monad_detail::is_zero_mat(lhs);
}

inline bool hecke_eligible(const MonadData& m) {
    monad_detail::check_shapes(m);
    return mat_det(m.A) != 0;
}

/// Deterministic random monad: A invertible, D of full column rank, and
/// C solved exactly from C D = -[A,B] through a left inverse of D. Shapes
/// with k > n cannot carry a full-column-rank D and are rejected.
inline MonadData random_monad(int k, int n, std::uint64_t seed) {
    if (n < 2 || k < 1) throw std::invalid_argument("random monad needs n >= 2, k >= 1");
    if (k > n)
        throw std::invalid_argument(
            "random monad needs k <= n for a full-column-rank D");

    // xorshift-style generator: deterministic across platforms
    std::uint64_t state = seed * 6364136223846793005ULL + 1442695040888963407ULL;
    auto next = [&]() {
        state ^= state >> 12;
        state ^= state << 25;
        state ^= state >> 27;
        return state * 2685821657736338717ULL;
    };
    auto draw = [&]() { return Rat(static_cast<long long>(next() % 9) - 4); };
    auto draw_mat = [&](int rows, int cols) {
        Mat m(static_cast<std::size_t>(rows), Vec(static_cast<std::size_t>(cols)));
        for (auto& row : m)
            for (auto& v : row) v = draw();
        return m;
    };

    for (int attempt = 0; attempt < 64; ++attempt) {
        MonadData m;
        m.k = k;
        m.n = n;
        m.A = draw_mat(k, k);
        if (mat_det(m.A) == 0) continue;
        m.B = draw_mat(k, k);
        m.D = draw_mat(n, k);
        // full column rank via the k x k Gram determinant
        Mat gram(std::size_t(k), Vec(std::size_t(k), 0));
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j)
                for (int t = 0; t < n; ++t)
                    gram[std::size_t(i)][std::size_t(j)] +=
                        m.D[std::size_t(t)][std::size_t(i)] * m.D[std::size_t(t)][std::size_t(j)];
        if (mat_det(gram) == 0) continue;
        // left inverse D+ = (D^T D)^{-1} D^T, then C = -[A,B] D+
        Mat gram_inv = mat_inverse(gram);
        Mat dt(static_cast<std::size_t>(k), Vec(static_cast<std::size_t>(n)));
        for (int i = 0; i < k; ++i)
            for (int t = 0; t < n; ++t) dt[std::size_t(i)][std::size_t(t)] = m.D[std::size_t(t)][std::size_t(i)];
        Mat dplus = mat_mul(gram_inv, dt);
        Mat comm = monad_detail::commutator(m.A, m.B);
        for (auto& row : comm)
            for (auto& v : row) v = -v;
        m.C = mat_mul(comm, dplus);
        if (!validate(m)) throw std::logic_error("random monad failed its constraint");
        return m;
    }
    throw std::domain_error("random monad generation exhausted its retries");
}

/// The Hecke transform on monad data: the first column of C and the first row
/// of D cycle to the back with A-twists, and B absorbs the rank-one piece
/// C_1 D_1 A^{-1}. The constraint is preserved exactly and A is unchanged.
inline MonadData hecke_monad(const MonadData& m) {
    monad_detail::check_shapes(m);
    if (mat_det(m.A) == 0)
        throw std::domain_error("monad is not trivial along the modification line: A is singular");
    const int k = m.k, n = m.n;
    Mat ainv = mat_inverse(m.A);

    // C_1 (k x 1) and D_1 (1 x k)
    Mat c1(std::size_t(k), Vec(1));
    for (int i = 0; i < k; ++i) c1[std::size_t(i)][0] = m.C[std::size_t(i)][0];
    Mat d1(1, Vec(std::size_t(k)));
    for (int j = 0; j < k; ++j) d1[0][std::size_t(j)] = m.D[0][std::size_t(j)];

    MonadData out;
    out.k = k;
    out.n = n;
    out.A = m.A;

    Mat correction = mat_mul(mat_mul(c1, d1), ainv);
    out.B = m.B;
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            out.B[std::size_t(i)][std::size_t(j)] -= correction[std::size_t(i)][std::size_t(j)];

    Mat ac1 = mat_mul(m.A, c1);
    out.C.assign(std::size_t(k), Vec(std::size_t(n)));
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j + 1 < n; ++j)
            out.C[std::size_t(i)][std::size_t(j)] = m.C[std::size_t(i)][std::size_t(j + 1)];
        out.C[std::size_t(i)][std::size_t(n - 1)] = ac1[std::size_t(i)][0];
    }

    Mat d1ainv = mat_mul(d1, ainv);
    out.D.assign(std::size_t(n), Vec(std::size_t(k)));
    for (int t = 0; t + 1 < n; ++t)
        for (int j = 0; j < k; ++j)
            out.D[std::size_t(t)][std::size_t(j)] = m.D[std::size_t(t + 1)][std::size_t(j)];
    for (int j = 0; j < k; ++j) out.D[std::size_t(n - 1)][std::size_t(j)] = d1ainv[0][std::size_t(j)];

    return out;
}

/// The Gl(k) action g(A,B,C,D) = (gAg^{-1}, gBg^{-1}, gC, Dg^{-1}).
inline MonadData group_act(const Mat& g, const MonadData& m) {
    monad_detail::check_shapes(m);
    Mat ginv = mat_inverse(g);
    MonadData out;
    out.k = m.k;
    out.n = m.n;
    out.A = mat_mul(mat_mul(g, m.A), ginv);
    out.B = mat_mul(mat_mul(g, m.B), ginv);
    out.C = mat_mul(g, m.C);
    out.D = mat_mul(m.D, ginv);
    return out;
}

inline bool monad_equal(const MonadData& a, const MonadData& b) {
    return a.k == b.k && a.n == b.n && a.A == b.A && a.B == b.B && a.C == b.C &&
           a.D == b.D;
}

/// True iff n applications of the Hecke transform land exactly on the
/// Gl(k)-translate of the data by g = A.
inline bool hecke_order_check(const MonadData& m) {
    MonadData cur = m;
    for (int step = 0; step < m.n; ++step) cur = hecke_monad(cur);
    return monad_equal(cur, group_act(m.A, m));
}

}  // namespace loopflag

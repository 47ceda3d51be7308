#pragma once

// Test-only helpers: independent oracles and generators.  Nothing here may
// call back into the code path it is used to check.

#include <Eigen/Dense>
#include <random>
#include <stdexcept>
#include <vector>

#include "jumpform/adjunction.hpp"
#include "jumpform/lattice.hpp"

namespace jumpform::test {

using Mat = std::vector<std::vector<Int>>;

// Cofactor-expansion determinant; fine for rank <= 9.
inline Int laplace_det(const Mat& m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    if (n == 1) return m[0][0];
    Int acc = 0;
    for (std::size_t c = 0; c < n; ++c) {
        if (m[0][c] == 0) continue;
        Mat minor;
        minor.reserve(n - 1);
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<Int> row;
            row.reserve(n - 1);
            for (std::size_t j = 0; j < n; ++j)
                if (j != c) row.push_back(m[i][j]);
            minor.push_back(std::move(row));
        }
        const Int term = m[0][c] * laplace_det(minor);
        acc += c % 2 == 0 ? term : -term;
    }
    return acc;
}

// Floating-point eigenvalue sign counts.
inline Inertia float_inertia(const IntegerForm& q) {
    const auto n = static_cast<Eigen::Index>(q.rank());
    Eigen::MatrixXd m(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j)
            m(i, j) = q.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)).convert_to<double>();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m, Eigen::EigenvaluesOnly);
    const double scale = std::max(1.0, es.eigenvalues().cwiseAbs().maxCoeff());
    Inertia out;
    for (Eigen::Index i = 0; i < n; ++i) {
        const double ev = es.eigenvalues()[i];
        if (ev > 1e-9 * scale)
            ++out.b_plus;
        else if (ev < -1e-9 * scale)
            ++out.b_minus;
        else
            ++out.b_zero;
    }
    return out;
}

inline Mat identity(std::size_t n) {
    Mat m(n, std::vector<Int>(n, 0));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

inline Mat mat_mul(const Mat& a, const Mat& b) {
    const std::size_t n = a.size(), k = b.size(), p = b.empty() ? 0 : b[0].size();
    Mat out(n, std::vector<Int>(p, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            if (a[i][j] == 0) continue;
            for (std::size_t c = 0; c < p; ++c) out[i][c] += a[i][j] * b[j][c];
        }
    return out;
}

struct UnimodularPair {
    Mat u;
    Mat u_inv;
};

// Random product of elementary matrices with the inverse tracked exactly.
inline UnimodularPair random_unimodular(std::size_t n, std::mt19937& rng, int ops = 12) {
    UnimodularPair p{identity(n), identity(n)};
    if (n == 0) return p;
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    std::uniform_int_distribution<int> coef(-2, 2);
    std::uniform_int_distribution<int> kind(0, 5);
    for (int t = 0; t < ops; ++t) {
        const std::size_t i = pick(rng);
        std::size_t j = pick(rng);
        switch (kind(rng)) {
            case 0:
            case 1:
            case 2: {  // transvection: U *= I + k e_i e_j^T
                if (n < 2) continue;
                while (j == i) j = pick(rng);
                const int k = coef(rng);
                if (k == 0) continue;
                for (std::size_t r = 0; r < n; ++r) p.u[r][j] += k * p.u[r][i];
                for (std::size_t c = 0; c < n; ++c) p.u_inv[i][c] -= k * p.u_inv[j][c];
                break;
            }
            case 3: {  // column swap
                if (i == j) continue;
                for (std::size_t r = 0; r < n; ++r) std::swap(p.u[r][i], p.u[r][j]);
                std::swap(p.u_inv[i], p.u_inv[j]);
                break;
            }
            default: {  // negate one column
                for (std::size_t r = 0; r < n; ++r) p.u[r][i] = -p.u[r][i];
                for (std::size_t c = 0; c < n; ++c) p.u_inv[i][c] = -p.u_inv[i][c];
                break;
            }
        }
    }
    return p;
}

// U^T Q U; the IntegerForm constructor re-validates symmetry.
inline IntegerForm congruent(const IntegerForm& q, const Mat& u) {
    const std::size_t n = q.rank();
    Mat qm = q.rows();
    Mat ut(n, std::vector<Int>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) ut[i][j] = u[j][i];
    return IntegerForm(mat_mul(mat_mul(ut, qm), u));
}

inline HomologyClass apply(const Mat& m, const HomologyClass& x) {
    const std::size_t n = m.size();
    HomologyClass out = HomologyClass::zero(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m[i].size(); ++j) out[i] += m[i][j] * x[j];
    return out;
}

inline IntegerForm random_symmetric_form(std::mt19937& rng, std::size_t n, int max_entry = 4) {
    std::uniform_int_distribution<int> ent(-max_entry, max_entry);
    IntegerForm q = IntegerForm::zero(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) q.set(i, j, ent(rng));
    return q;
}

inline HomologyClass random_vector(std::mt19937& rng, std::size_t n, int max_entry = 5) {
    std::uniform_int_distribution<int> ent(-max_entry, max_entry);
    HomologyClass v = HomologyClass::zero(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = ent(rng);
    return v;
}

// Deterministic geometry synthesis for the reconstruction round trip: start
// from FC = 0; when that forces a negative genus, lower FC until genus lands
// at zero (genus rises by one for each unit removed from FC).
inline SurfaceGeometry geometry_for_class(const IntegerForm& q, const HomologyClass& c1,
                                          const HomologyClass& x) {
    const Int ff = self_intersection(q, x);
    const Int c1f = pairing(q, c1, x);
    const Int num = 2 + ff - c1f;
    if (!is_even(num))
        throw std::logic_error("synthesis: 2 + F.F - c1.F is odd although c1 is characteristic");
    Int genus = num / 2;
    Int fc = 0;
    if (genus < 0) {
        fc = genus;
        genus = 0;
    }
    return SurfaceGeometry(genus, c1f, fc);
}

inline ReconstructionInput synthesize_reconstruction(const IntegerForm& q,
                                                     const HomologyClass& c1) {
    const std::size_t n = q.rank();
    ReconstructionInput in;
    for (std::size_t i = 0; i < n; ++i) {
        HomologyClass e = HomologyClass::zero(n);
        e[i] = 1;
        in.basis.push_back(geometry_for_class(q, c1, e));
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            HomologyClass e = HomologyClass::zero(n);
            e[i] = 1;
            e[j] = 1;
            in.pairs[{i, j}] = geometry_for_class(q, c1, e);
        }
    return in;
}

}  // namespace jumpform::test

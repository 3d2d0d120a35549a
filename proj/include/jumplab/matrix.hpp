#ifndef JUMPLAB_MATRIX_HPP
#define JUMPLAB_MATRIX_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <utility>

#include <Eigen/Core>

#include "jumplab/errors.hpp"
#include "jumplab/rational.hpp"

namespace jumplab {

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using RatMatrix = Matrix<Rational>;
using RatVector = Vector<Rational>;

namespace detail {

// Index of the largest |entry| in the trailing block starting at (k, k).
// For exact scalars any nonzero pivot would do; the largest keeps the
// behaviour sensible for floating-point instantiations.
template <typename Scalar>
std::pair<Eigen::Index, Eigen::Index> full_pivot(const Matrix<Scalar>& a, Eigen::Index k) {
    using std::abs;
    Eigen::Index pr = -1;
    Eigen::Index pc = -1;
    Scalar best(0);
    for (Eigen::Index i = k; i < a.rows(); ++i) {
        for (Eigen::Index j = k; j < a.cols(); ++j) {
            const Scalar v = abs(a(i, j));
            if (v != Scalar(0) && (pr < 0 || v > best)) {
                best = v;
                pr = i;
                pc = j;
            }
        }
    }
    return {pr, pc};
}

} // namespace detail

/// Solves A·X = B for square nonsingular A by Gaussian elimination with
/// full pivoting. B may have several columns. Throws SingularMatrix.
template <typename Scalar>
Matrix<Scalar> solve_linear(const Matrix<Scalar>& a, const Matrix<Scalar>& b) {
    const Eigen::Index n = a.rows();
    if (a.cols() != n || b.rows() != n) {
        throw IndexOutOfRange("solve_linear: dimension mismatch");
    }
    Matrix<Scalar> m = a;
    Matrix<Scalar> rhs = b;
    Eigen::VectorXi col_perm = Eigen::VectorXi::LinSpaced(static_cast<int>(n), 0, static_cast<int>(n) - 1);

    for (Eigen::Index k = 0; k < n; ++k) {
        const auto [pr, pc] = detail::full_pivot(m, k);
        if (pr < 0) {
            throw SingularMatrix();
        }
        m.row(k).swap(m.row(pr));
        rhs.row(k).swap(rhs.row(pr));
        m.col(k).swap(m.col(pc));
        std::swap(col_perm(k), col_perm(pc));

        const Scalar pivot = m(k, k);
        for (Eigen::Index i = k + 1; i < n; ++i) {
            if (m(i, k) == Scalar(0)) {
                continue;
            }
            const Scalar factor = m(i, k) / pivot;
            for (Eigen::Index j = k; j < n; ++j) {
                m(i, j) -= factor * m(k, j);
            }
            for (Eigen::Index j = 0; j < rhs.cols(); ++j) {
                rhs(i, j) -= factor * rhs(k, j);
            }
        }
    }

    Matrix<Scalar> y(n, rhs.cols());
    for (Eigen::Index i = n - 1; i >= 0; --i) {
        for (Eigen::Index j = 0; j < rhs.cols(); ++j) {
            Scalar acc = rhs(i, j);
            for (Eigen::Index c = i + 1; c < n; ++c) {
                acc -= m(i, c) * y(c, j);
            }
            y(i, j) = acc / m(i, i);
        }
    }

    Matrix<Scalar> x(n, rhs.cols());
    for (Eigen::Index i = 0; i < n; ++i) {
        x.row(col_perm(i)) = y.row(i);
    }
    return x;
}

template <typename Scalar>
Vector<Scalar> solve_linear(const Matrix<Scalar>& a, const Vector<Scalar>& b) {
    const Matrix<Scalar> bm = b;
    return solve_linear<Scalar>(a, bm).col(0);
}

template <typename Scalar>
Matrix<Scalar> inverse(const Matrix<Scalar>& a) {
    const Matrix<Scalar> identity = Matrix<Scalar>::Identity(a.rows(), a.cols());
    return solve_linear<Scalar>(a, identity);
}

/// Exact rank by fraction-based row reduction.
template <typename Scalar>
Eigen::Index rank(Matrix<Scalar> m) {
    Eigen::Index r = 0;
    for (Eigen::Index k = 0; k < std::min(m.rows(), m.cols()); ++k) {
        const auto [pr, pc] = detail::full_pivot(m, k);
        if (pr < 0) {
            break;
        }
        m.row(k).swap(m.row(pr));
        m.col(k).swap(m.col(pc));
        for (Eigen::Index i = k + 1; i < m.rows(); ++i) {
            if (m(i, k) == Scalar(0)) {
                continue;
            }
            const Scalar factor = m(i, k) / m(k, k);
            m.row(i) -= factor * m.row(k);
        }
        ++r;
    }
    return r;
}

/// True iff all four Penrose identities hold exactly for the pair (a, p).
template <typename Scalar>
bool penrose_identities_hold(const Matrix<Scalar>& a, const Matrix<Scalar>& p) {
    if (p.rows() != a.cols() || p.cols() != a.rows()) {
        return false;
    }
    const Matrix<Scalar> ap = a * p;
    const Matrix<Scalar> pa = p * a;
    return Matrix<Scalar>(ap * a) == a && Matrix<Scalar>(pa * p) == p &&
           Matrix<Scalar>(ap.transpose()) == ap && Matrix<Scalar>(pa.transpose()) == pa;
}

/// Counters for the optional Penrose audit of laplacian_pseudoinverse.
struct PenroseAuditCounts {
    std::uint64_t checked = 0;
    std::uint64_t failed = 0;
};

/// When enabled, every laplacian_pseudoinverse call re-verifies the four
/// Penrose identities and records the outcome. Off by default.
void set_penrose_audit(bool enabled);
bool penrose_audit_enabled();
PenroseAuditCounts penrose_audit_counts();
void reset_penrose_audit();

/// Moore-Penrose pseudoinverse of the Laplacian of a connected network,
/// computed as (L + J/n)^-1 - J/n with J the all-ones matrix. Throws
/// DisconnectedNetwork when the kernel of L is larger than the constants.
RatMatrix laplacian_pseudoinverse(const RatMatrix& laplacian);

} // namespace jumplab

#endif // JUMPLAB_MATRIX_HPP

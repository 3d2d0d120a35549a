#ifndef JUMPLAB_PSD_HPP
#define JUMPLAB_PSD_HPP

#include <optional>
#include <vector>

#include "jumplab/errors.hpp"
#include "jumplab/matrix.hpp"

namespace jumplab {

/// Outcome of an exact positive semi-definiteness test.
///
/// When `psd` holds, A = P^T L D L^T P with L unit lower triangular, D >= 0
/// diagonal and P the permutation taking original index `permutation[i]` to
/// position i. Otherwise `witness` is a vector x with x^T A x < 0.
template <typename Scalar>
struct PsdCertificate {
    bool psd = true;
    std::vector<Eigen::Index> permutation;
    Matrix<Scalar> unit_lower;
    Vector<Scalar> diagonal;
    std::optional<Vector<Scalar>> witness;
};

template <typename Scalar>
bool is_symmetric(const Matrix<Scalar>& a) {
    return a.rows() == a.cols() && Matrix<Scalar>(a.transpose()) == a;
}

/// Symmetric-pivoted LDL^T elimination. Negative diagonals and 2x2 minors
/// that fail along the diagonal are reported with the obvious short witness
/// before any elimination happens. Throws NotSymmetric.
template <typename Scalar>
PsdCertificate<Scalar> ldlt_psd(const Matrix<Scalar>& a) {
    using std::abs;
    if (!is_symmetric(a)) {
        throw NotSymmetric();
    }
    const Eigen::Index n = a.rows();
    const Scalar zero(0);
    PsdCertificate<Scalar> cert;

    auto fail_with = [&](Vector<Scalar> x) {
        cert.psd = false;
        cert.witness = std::move(x);
        return cert;
    };

    for (Eigen::Index i = 0; i < n; ++i) {
        if (a(i, i) < zero) {
            return fail_with(Vector<Scalar>::Unit(n, i));
        }
    }
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = i + 1; j < n; ++j) {
            if (a(i, i) + a(j, j) < Scalar(2) * abs(a(i, j))) {
                Vector<Scalar> x = Vector<Scalar>::Zero(n);
                x(i) = Scalar(1);
                x(j) = a(i, j) > zero ? Scalar(-1) : Scalar(1);
                return fail_with(std::move(x));
            }
        }
    }

    Matrix<Scalar> s = a;
    Matrix<Scalar> l = Matrix<Scalar>::Identity(n, n);
    Vector<Scalar> d = Vector<Scalar>::Zero(n);
    std::vector<Eigen::Index> perm(static_cast<std::size_t>(n));
    for (Eigen::Index i = 0; i < n; ++i) {
        perm[static_cast<std::size_t>(i)] = i;
    }

    // x = L^-T y maps a vector of the trailing Schur complement back to the
    // permuted coordinates, then to the original ones.
    auto lift = [&](Eigen::Index k, const Vector<Scalar>& w) {
        Vector<Scalar> y = Vector<Scalar>::Zero(n);
        y.tail(n - k) = w;
        Vector<Scalar> x = y;
        for (Eigen::Index i = n - 1; i >= 0; --i) {
            Scalar acc = y(i);
            for (Eigen::Index r = i + 1; r < n; ++r) {
                acc -= l(r, i) * x(r);
            }
            x(i) = acc;
        }
        Vector<Scalar> original(n);
        for (Eigen::Index i = 0; i < n; ++i) {
            original(perm[static_cast<std::size_t>(i)]) = x(i);
        }
        return original;
    };

    for (Eigen::Index k = 0; k < n; ++k) {
        Eigen::Index pivot = -1;
        for (Eigen::Index i = k; i < n; ++i) {
            if (s(i, i) < zero) {
                return fail_with(lift(k, Vector<Scalar>::Unit(n - k, i - k)));
            }
            if (pivot < 0 && s(i, i) > zero) {
                pivot = i;
            }
        }
        if (pivot < 0) {
            // Zero diagonal: PSD iff the remaining block vanishes.
            for (Eigen::Index i = k; i < n; ++i) {
                for (Eigen::Index j = i + 1; j < n; ++j) {
                    if (s(i, j) != zero) {
                        Vector<Scalar> w = Vector<Scalar>::Zero(n - k);
                        w(i - k) = Scalar(1);
                        w(j - k) = s(i, j) > zero ? Scalar(-1) : Scalar(1);
                        return fail_with(lift(k, w));
                    }
                }
            }
            break;
        }
        if (pivot != k) {
            s.row(k).swap(s.row(pivot));
            s.col(k).swap(s.col(pivot));
            l.block(k, 0, 1, k).swap(l.block(pivot, 0, 1, k));
            std::swap(perm[static_cast<std::size_t>(k)], perm[static_cast<std::size_t>(pivot)]);
        }
        const Scalar dk = s(k, k);
        d(k) = dk;
        for (Eigen::Index i = k + 1; i < n; ++i) {
            l(i, k) = s(i, k) / dk;
        }
        for (Eigen::Index i = k + 1; i < n; ++i) {
            if (l(i, k) == zero) {
                continue;
            }
            for (Eigen::Index j = k + 1; j < n; ++j) {
                s(i, j) -= l(i, k) * s(k, j);
            }
        }
    }

    cert.permutation = std::move(perm);
    cert.unit_lower = std::move(l);
    cert.diagonal = std::move(d);
    return cert;
}

/// Rebuilds P^T L D L^T P from a positive certificate.
template <typename Scalar>
Matrix<Scalar> reconstruct(const PsdCertificate<Scalar>& cert) {
    const Matrix<Scalar> permuted = cert.unit_lower * cert.diagonal.asDiagonal() * cert.unit_lower.transpose();
    const auto n = permuted.rows();
    Matrix<Scalar> out(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            out(cert.permutation[static_cast<std::size_t>(i)], cert.permutation[static_cast<std::size_t>(j)]) =
                permuted(i, j);
        }
    }
    return out;
}

} // namespace jumplab

#endif // JUMPLAB_PSD_HPP

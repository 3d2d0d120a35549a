#include "jumplab/matrix.hpp"

#include <atomic>

namespace jumplab {

namespace {

std::atomic<bool> g_audit_enabled{false};
std::atomic<std::uint64_t> g_audit_checked{0};
std::atomic<std::uint64_t> g_audit_failed{0};

} // namespace

void set_penrose_audit(bool enabled) {
    g_audit_enabled.store(enabled);
}

bool penrose_audit_enabled() {
    return g_audit_enabled.load();
}

PenroseAuditCounts penrose_audit_counts() {
    return {g_audit_checked.load(), g_audit_failed.load()};
}

void reset_penrose_audit() {
    g_audit_checked.store(0);
    g_audit_failed.store(0);
}

RatMatrix laplacian_pseudoinverse(const RatMatrix& laplacian) {
    const Eigen::Index n = laplacian.rows();
    if (laplacian.cols() != n) {
        throw IndexOutOfRange("laplacian_pseudoinverse: matrix is not square");
    }
    if (n == 0) {
        return RatMatrix(0, 0);
    }
    const Rational inv_n(1, n);
    const RatMatrix j_over_n = RatMatrix::Constant(n, n, inv_n);

    RatMatrix result;
    try {
        result = inverse<Rational>(laplacian + j_over_n) - j_over_n;
    } catch (const SingularMatrix&) {
        throw DisconnectedNetwork();
    }

    if (g_audit_enabled.load(std::memory_order_relaxed)) {
        g_audit_checked.fetch_add(1);
        if (!penrose_identities_hold<Rational>(laplacian, result)) {
            g_audit_failed.fetch_add(1);
        }
    }
    return result;
}

} // namespace jumplab

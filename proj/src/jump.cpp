#include "jumplab/jump.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "jumplab/errors.hpp"

namespace jumplab {

std::int64_t SectionDivisor::degree() const {
    std::int64_t total = 0;
    for (const auto& [v, c] : supports) {
        total += c;
    }
    return total;
}

CombinatorialDivisor to_combinatorial(const SectionDivisor& d, const MultiGraph& g) {
    if (d.degree() != 0) {
        throw NonZeroDegree("section divisor has degree " + std::to_string(d.degree()));
    }
    RatVector w = RatVector::Zero(static_cast<Eigen::Index>(g.vertex_count()));
    for (const auto& [v, c] : d.supports) {
        if (v >= g.vertex_count()) {
            throw UnknownVertex("section divisor supported on vertex " + std::to_string(v));
        }
        w(static_cast<Eigen::Index>(v)) += Rational(static_cast<long>(c));
    }
    return CombinatorialDivisor(std::move(w));
}

namespace {

std::vector<GreenOperator> single_operators(const LabelledGraph& lg, const OrderVector& orders) {
    std::vector<GreenOperator> ops;
    ops.reserve(lg.basis.size());
    for (std::size_t i = 0; i < lg.basis.size(); ++i) {
        const std::size_t index[] = {i};
        ops.emplace_back(lg.graph, pullback_orders(restrict_labelling(lg, index), orders));
    }
    return ops;
}

const LabelledGraph& checked(const LabelledGraph& lg) {
    lg.validate();
    return lg;
}

} // namespace

JumpForm::JumpForm(const LabelledGraph& lg, const OrderVector& orders)
    : vertex_count_(lg.graph.vertex_count()),
      alignment_(is_aligned(checked(lg))),
      full_(lg.graph, pullback_orders(lg, orders)),
      single_(single_operators(lg, orders)) {}

JumpResult JumpForm::evaluate(const CombinatorialDivisor& x, const CombinatorialDivisor& y) const {
    if (!x.has_zero_degree() || !y.has_zero_degree()) {
        throw NonZeroDegree("jump divisors must have degree zero");
    }
    JumpResult out;
    out.full = full_(x, y);
    out.value = out.full;
    for (const GreenOperator& op : single_) {
        out.single.push_back(op(x, y));
        out.value -= out.single.back();
    }
    out.alignment = alignment_;
    return out;
}

Rational JumpForm::operator()(const CombinatorialDivisor& x, const CombinatorialDivisor& y) const {
    return evaluate(x, y).value;
}

RatMatrix JumpForm::gram() const {
    RatMatrix form = full_.form();
    for (const GreenOperator& op : single_) {
        form -= op.form();
    }
    const auto n = static_cast<Eigen::Index>(vertex_count_);
    if (n <= 1) {
        return RatMatrix(0, 0);
    }
    // Basis change to x_i = 1_{u_i} - 1_{u_0}.
    RatMatrix basis = RatMatrix::Zero(n, n - 1);
    for (Eigen::Index i = 1; i < n; ++i) {
        basis(i, i - 1) = Rational(1);
        basis(0, i - 1) = Rational(-1);
    }
    return basis.transpose() * form * basis;
}

JumpResult height_jump(const LabelledGraph& lg, const CombinatorialDivisor& d, const CombinatorialDivisor& e,
                       const OrderVector& orders) {
    return JumpForm(lg, orders).evaluate(d, e);
}

JumpResult height_jump(const LabelledGraph& lg, const SectionDivisor& d, const SectionDivisor& e,
                       const OrderVector& orders) {
    return height_jump(lg, to_combinatorial(d, lg.graph), to_combinatorial(e, lg.graph), orders);
}

Rational height_jump_block_additive(const LabelledGraph& lg, VertexIndex u, VertexIndex v, const OrderVector& orders) {
    lg.validate();
    const BlockDecomposition blocks = biconnected_blocks(lg.graph);
    Rational total(0);
    for (const BlockSegment& seg : block_path(blocks, u, v)) {
        const Subgraph sub = edge_subgraph(lg.graph, blocks.blocks[seg.block].edges);
        LabelledGraph local{sub.graph, lg.basis, {}};
        for (const EdgeIndex e : sub.edges) {
            local.labels.push_back(lg.labels[e]);
        }
        const auto x = CombinatorialDivisor::point_difference(sub.graph.vertex_count(), sub.local_vertex(seg.entry),
                                                              sub.local_vertex(seg.exit));
        total += height_jump(local, x, x, orders).value;
    }
    return total;
}

RatMatrix jump_gram(const LabelledGraph& lg, const OrderVector& orders) {
    return JumpForm(lg, orders).gram();
}

PsdCertificate<Rational> check_psd(const RatMatrix& gram) {
    return ldlt_psd<Rational>(gram);
}

namespace {

// All vectors in {lo..hi}^r in lexicographic order.
std::vector<std::vector<std::int64_t>> grid(std::size_t r, std::int64_t lo, std::int64_t hi) {
    std::vector<std::vector<std::int64_t>> out;
    std::vector<std::int64_t> m(r, lo);
    while (true) {
        out.push_back(m);
        std::size_t i = r;
        while (i > 0 && m[i - 1] == hi) {
            m[i - 1] = lo;
            --i;
        }
        if (i == 0) {
            return out;
        }
        ++m[i - 1];
    }
}

} // namespace

SweepResult sweep(const LabelledGraph& lg, const SectionDivisor& d, const SectionDivisor& e, std::int64_t max_order,
                  unsigned threads) {
    if (max_order < 1) {
        throw std::invalid_argument("sweep: max_order must be at least 1");
    }
    lg.validate();
    const CombinatorialDivisor x = to_combinatorial(d, lg.graph);
    const CombinatorialDivisor y = to_combinatorial(e, lg.graph);
    const std::size_t r = lg.basis.size();

    SweepResult result;
    result.alignment = is_aligned(lg);

    auto points = grid(r, 0, max_order);
    std::vector<Rational> values(points.size());
    auto evaluate = [&](const std::vector<std::int64_t>& m) {
        return JumpForm(lg, OrderVector(lg.basis, m))(x, y);
    };

    if (threads == 0) {
        threads = std::max(1U, std::thread::hardware_concurrency());
    }
    threads = std::min<unsigned>(threads, static_cast<unsigned>(points.size()));
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (std::size_t i = next.fetch_add(1); i < points.size(); i = next.fetch_add(1)) {
            try {
                values[i] = evaluate(points[i]);
            } catch (...) {
                const std::lock_guard lock(failure_mutex);
                if (!failure) {
                    failure = std::current_exception();
                }
            }
        }
    };
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t) {
            pool.emplace_back(worker);
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }

    bool first = true;
    for (std::size_t i = 0; i < points.size(); ++i) {
        const bool interior = std::all_of(points[i].begin(), points[i].end(), [](std::int64_t m) { return m > 0; });
        if (!interior) {
            result.faces.push_back({points[i], values[i]});
            continue;
        }
        const Rational& v = values[i];
        if (first || v < result.summary.min) {
            result.summary.min = v;
        }
        if (first || v > result.summary.max) {
            result.summary.max = v;
        }
        first = false;
        result.summary.all_nonnegative = result.summary.all_nonnegative && v.sign() >= 0;
        result.summary.all_zero = result.summary.all_zero && v.is_zero();
        if (v.is_zero()) {
            result.zero_locus.push_back(points[i]);
        }
        result.interior.push_back({points[i], v});
    }

    // Spot-check j(lambda m) = lambda j(m) at the grid corners.
    std::vector<const SweepRow*> probes{&result.interior.front()};
    if (result.interior.size() > 1) {
        probes.push_back(&result.interior.back());
    }
    for (const SweepRow* row : probes) {
        for (const std::int64_t lambda : {2, 3}) {
            std::vector<std::int64_t> scaled = row->orders;
            for (auto& m : scaled) {
                m *= lambda;
            }
            ++result.homogeneity_checks;
            if (evaluate(scaled) != Rational(static_cast<long>(lambda)) * row->value) {
                result.homogeneous = false;
            }
        }
    }
    return result;
}

} // namespace jumplab

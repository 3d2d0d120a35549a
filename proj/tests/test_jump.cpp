#include <doctest.h>

#include "jumplab/errors.hpp"
#include "jumplab/jump.hpp"
#include "support/generators.hpp"

using namespace jumplab;

namespace {

LabelledGraph two_gon(Label a, Label b) {
    MultiGraph g;
    g.add_vertex("u");
    g.add_vertex("v");
    g.add_edge("e1", "u", "v");
    g.add_edge("e2", "u", "v");
    return {g, testkit::basis_of(a.size()), {std::move(a), std::move(b)}};
}

const SectionDivisor kUminusV{{{0, 1}, {1, -1}}};

} // namespace

TEST_CASE("to_combinatorial") {
    const auto g = two_gon(Label({1}), Label({1})).graph;
    CHECK(to_combinatorial(kUminusV, g) == CombinatorialDivisor::point_difference(2, 0, 1));
    const SectionDivisor doubled{{{0, 1}, {0, 1}, {1, -2}}};
    CHECK(to_combinatorial(doubled, g) == Rational(2) * CombinatorialDivisor::point_difference(2, 0, 1));
    const SectionDivisor cancel{{{0, 1}, {0, -1}}};
    CHECK(to_combinatorial(cancel, g).is_zero());
    const SectionDivisor lopsided{{{0, 1}}};
    CHECK_THROWS_AS(to_combinatorial(lopsided, g), NonZeroDegree);
    const SectionDivisor off_graph{{{5, 1}, {0, -1}}};
    CHECK_THROWS_AS(to_combinatorial(off_graph, g), UnknownVertex);
}

TEST_CASE("height jump examples") {
    const auto golden = two_gon(Label({1, 0}), Label({0, 1}));
    SUBCASE("golden 2-gon at (1,1)") {
        const auto j = height_jump(golden, kUminusV, kUminusV, OrderVector(golden.basis, {1, 1}));
        CHECK(j.value == Rational(1, 2));
        CHECK(j.full == Rational(1, 2));
        CHECK(j.single == std::vector<Rational>{0, 0});
        CHECK_FALSE(j.alignment.aligned);
    }
    SUBCASE("golden 2-gon closed form") {
        for (std::int64_t m1 = 1; m1 <= 6; ++m1) {
            for (std::int64_t m2 = 1; m2 <= 6; ++m2) {
                const auto j = height_jump(golden, kUminusV, kUminusV, OrderVector(golden.basis, {m1, m2}));
                CHECK(j.value == testkit::parallel(Rational(m1), Rational(m2)));
            }
        }
    }
    SUBCASE("aligned 2-gon vanishes") {
        const auto lg = two_gon(Label({1, 0}), Label({1, 0}));
        const SectionDivisor e{{{1, 3}, {0, -3}}};
        for (const std::vector<std::int64_t>& m : {std::vector<std::int64_t>{1, 1}, {4, 2}, {0, 3}}) {
            CHECK(height_jump(lg, kUminusV, e, OrderVector(lg.basis, m)).value == Rational(0));
        }
    }
    SUBCASE("tree vanishes") {
        testkit::Rng rng(53);
        for (int trial = 0; trial < 10; ++trial) {
            const auto lg = testkit::random_labelled(rng, testkit::random_connected(rng, 5, 4), 3, 3);
            const auto d = testkit::random_divisor(rng, 5);
            const auto e = testkit::random_divisor(rng, 5);
            CHECK(height_jump(lg, d, e, testkit::random_orders(rng, lg.basis, 0, 5)).value == Rational(0));
        }
    }
    SUBCASE("errors") {
        const SectionDivisor lopsided{{{0, 1}}};
        CHECK_THROWS_AS(height_jump(golden, lopsided, kUminusV, OrderVector(golden.basis, {1, 1})), NonZeroDegree);
        CHECK_THROWS_AS(height_jump(golden, kUminusV, kUminusV, OrderVector(BoundaryBasis({"a", "b"}), {1, 1})),
                        BasisMismatch);
        auto split = golden;
        split.graph.add_vertex("w");
        CHECK_THROWS_AS(height_jump(split, kUminusV, kUminusV, OrderVector(golden.basis, {1, 1})),
                        DisconnectedNetwork);
    }
}

TEST_CASE("jump properties on random instances") {
    testkit::Rng rng(59);
    for (int trial = 0; trial < 80; ++trial) {
        const auto n = static_cast<std::size_t>(testkit::uniform(rng, 1, 6));
        const auto r = static_cast<std::size_t>(testkit::uniform(rng, 1, 3));
        const auto g = testkit::random_connected(rng, n, static_cast<std::size_t>(testkit::uniform(rng, n - 1, 8)));
        const bool make_aligned = trial % 3 == 0;
        const auto lg = make_aligned ? testkit::random_aligned(rng, g, r, 3) : testkit::random_labelled(rng, g, r, 3);
        const auto m = testkit::random_orders(rng, lg.basis, 0, 5);
        const auto d = testkit::random_divisor(rng, n);
        const auto e = testkit::random_divisor(rng, n);

        const JumpForm form(lg, m);
        const auto x = to_combinatorial(d, lg.graph);
        const auto y = to_combinatorial(e, lg.graph);
        const JumpResult j = form.evaluate(x, y);

        Rational expected = j.full;
        for (const Rational& s : j.single) expected -= s;
        CHECK(j.value == expected);
        CHECK(j.value == height_jump(lg, d, e, m).value);
        CHECK(form(x, x).sign() >= 0);
        CHECK(form(x, y) == form(y, x));
        CHECK(form(x, y) * form(x, y) <= form(x, x) * form(y, y));
        CHECK(height_jump(lg, d, e, m.scaled(4)).value == Rational(4) * j.value);
        if (make_aligned) {
            CHECK(j.alignment.aligned);
            CHECK(j.value == Rational(0));
        }

        const RatMatrix gram = jump_gram(lg, m);
        CHECK(is_symmetric<Rational>(gram));
        const auto cert = check_psd(gram);
        CHECK(cert.psd);
        if (cert.psd) {
            CHECK(reconstruct(cert) == gram);
        }
        // gram entries agree with direct evaluation
        for (Eigen::Index i = 0; i < gram.rows(); ++i) {
            for (Eigen::Index k = 0; k < gram.cols(); ++k) {
                const auto xi = CombinatorialDivisor::point_difference(n, static_cast<VertexIndex>(i + 1), 0);
                const auto xk = CombinatorialDivisor::point_difference(n, static_cast<VertexIndex>(k + 1), 0);
                CHECK(gram(i, k) == height_jump(lg, xi, xk, m).value);
            }
        }
    }
}

TEST_CASE("block additivity of the jump") {
    testkit::Rng rng(61);
    for (int trial = 0; trial < 40; ++trial) {
        const auto n = static_cast<std::size_t>(testkit::uniform(rng, 2, 6));
        const auto lg = testkit::random_labelled(
            rng, testkit::random_connected(rng, n, static_cast<std::size_t>(testkit::uniform(rng, n - 1, 9))), 2, 3);
        const auto m = testkit::random_orders(rng, lg.basis, 1, 4);
        const auto u = static_cast<VertexIndex>(testkit::uniform(rng, 0, static_cast<std::int64_t>(n) - 1));
        const auto v = static_cast<VertexIndex>(testkit::uniform(rng, 0, static_cast<std::int64_t>(n) - 1));
        const auto x = CombinatorialDivisor::point_difference(n, u, v);
        CHECK(height_jump_block_additive(lg, u, v, m) == height_jump(lg, x, x, m).value);
    }
}

TEST_CASE("jump gram examples") {
    const auto golden = two_gon(Label({1, 0}), Label({0, 1}));
    const RatMatrix g = jump_gram(golden, OrderVector(golden.basis, {1, 1}));
    REQUIRE(g.rows() == 1);
    CHECK(g(0, 0) == Rational(1, 2));
    const auto aligned = two_gon(Label({1, 2}), Label({2, 4}));
    CHECK(jump_gram(aligned, OrderVector(aligned.basis, {3, 1})).isZero());
    MultiGraph point;
    point.add_vertex("p");
    const LabelledGraph lone{point, testkit::basis_of(1), {}};
    CHECK(jump_gram(lone, OrderVector(lone.basis, {1})).rows() == 0);
}

TEST_CASE("psd check") {
    RatMatrix half(1, 1);
    half(0, 0) = Rational(1, 2);
    CHECK(check_psd(half).psd);

    RatMatrix bad(2, 2);
    bad << Rational(1), Rational(2), Rational(2), Rational(1);
    const auto cert = check_psd(bad);
    CHECK_FALSE(cert.psd);
    REQUIRE(cert.witness.has_value());
    const RatVector w = *cert.witness;
    CHECK(w(0) == Rational(1));
    CHECK(w(1) == Rational(-1));
    CHECK(Rational(w.dot(bad * w)) == Rational(-2));

    CHECK(check_psd(RatMatrix::Zero(3, 3)).psd);
    RatMatrix asym(2, 2);
    asym << Rational(1), Rational(2), Rational(3), Rational(1);
    CHECK_THROWS_AS(check_psd(asym), NotSymmetric);

    SUBCASE("random symmetric matrices: certificates are valid") {
        testkit::Rng rng(67);
        for (int trial = 0; trial < 200; ++trial) {
            const Eigen::Index n = testkit::uniform(rng, 1, 5);
            const Eigen::Index k = testkit::uniform(rng, 0, n);
            RatMatrix b(n, std::max<Eigen::Index>(k, 1));
            for (Eigen::Index i = 0; i < b.rows(); ++i)
                for (Eigen::Index j = 0; j < b.cols(); ++j) b(i, j) = Rational(testkit::uniform(rng, -3, 3));
            RatMatrix a = b * b.transpose();
            if (trial % 2) {
                const Eigen::Index i = testkit::uniform(rng, 0, n - 1);
                a(i, i) -= Rational(testkit::uniform(rng, 1, 4));
            }
            const auto c = check_psd(a);
            if (c.psd) {
                CHECK(reconstruct(c) == a);
                for (Eigen::Index i = 0; i < n; ++i) CHECK(c.diagonal(i).sign() >= 0);
            } else {
                REQUIRE(c.witness.has_value());
                CHECK(Rational(c.witness->dot(a * *c.witness)).sign() < 0);
            }
            if (trial % 2 == 0) {
                CHECK(c.psd);
            }
        }
    }
}

TEST_CASE("sweep") {
    const auto golden = two_gon(Label({1, 0}), Label({0, 1}));
    SUBCASE("golden 2-gon, max 3") {
        const auto s = sweep(golden, kUminusV, kUminusV, 3, 2);
        REQUIRE(s.interior.size() == 9);
        CHECK(s.interior.front().orders == std::vector<std::int64_t>{1, 1});
        CHECK(s.interior.front().value == Rational(1, 2));
        CHECK(s.summary.min == Rational(1, 2));
        CHECK(s.summary.max == Rational(3, 2));
        CHECK(s.summary.all_nonnegative);
        CHECK_FALSE(s.summary.all_zero);
        CHECK(s.zero_locus.empty());
        CHECK(s.homogeneous);
        CHECK(s.faces.size() == 16 - 9);
        for (const SweepRow& row : s.interior) {
            CHECK(row.value == testkit::parallel(Rational(row.orders[0]), Rational(row.orders[1])));
        }
    }
    SUBCASE("aligned input is all zero") {
        const auto lg = two_gon(Label({2, 1}), Label({4, 2}));
        CHECK(sweep(lg, kUminusV, kUminusV, 3).summary.all_zero);
    }
    SUBCASE("max 1") { CHECK(sweep(golden, kUminusV, kUminusV, 1).interior.size() == 1); }
    SUBCASE("invalid max") { CHECK_THROWS_AS(sweep(golden, kUminusV, kUminusV, 0), std::invalid_argument); }
    SUBCASE("result does not depend on thread count") {
        testkit::Rng rng(71);
        const auto lg = testkit::random_labelled(rng, testkit::random_connected(rng, 4, 6), 2, 2);
        const auto d = testkit::random_divisor(rng, 4);
        const auto one = sweep(lg, d, d, 3, 1);
        const auto four = sweep(lg, d, d, 3, 4);
        REQUIRE(one.interior.size() == four.interior.size());
        for (std::size_t i = 0; i < one.interior.size(); ++i) {
            CHECK(one.interior[i].value == four.interior[i].value);
        }
    }
    SUBCASE("faces match the specialised graph") {
        testkit::Rng rng(73);
        for (int trial = 0; trial < 10; ++trial) {
            const auto lg = testkit::random_labelled(rng, testkit::random_connected(rng, 4, 6), 2, 2);
            const auto d = testkit::random_divisor(rng, 4);
            const auto s = sweep(lg, d, d, 2, 1);
            for (const SweepRow& row : s.faces) {
                std::vector<std::size_t> units;
                for (std::size_t i = 0; i < row.orders.size(); ++i) {
                    if (row.orders[i] == 0) units.push_back(i);
                }
                const auto sp = specialize(lg, units);
                const auto x = to_combinatorial(d, lg.graph).push_forward(sp.contraction.vertex_map,
                                                                           sp.labelled.graph.vertex_count());
                // labels of the specialisation may become units only on contracted edges
                CHECK(height_jump(sp.labelled, x, x, OrderVector(lg.basis, row.orders)).value == row.value);
            }
        }
    }
    SUBCASE("a non-aligned graph has a positive jump somewhere") {
        testkit::Rng rng(79);
        int checked = 0;
        for (int trial = 0; trial < 60 && checked < 15; ++trial) {
            const auto lg = testkit::random_labelled(rng, testkit::random_connected(rng, 4, 6), 2, 2);
            const auto v = is_aligned(lg);
            if (v.aligned) continue;
            ++checked;
            const Edge& e = lg.graph.edge(v.witness->first);
            const SectionDivisor pq{{{e.u, 1}, {e.v, -1}}};
            CHECK(sweep(lg, pq, pq, 2, 1).summary.max.sign() > 0);
        }
        CHECK(checked > 0);
    }
}

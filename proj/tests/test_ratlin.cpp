#include <doctest.h>

#include <random>
#include <sstream>

#include "jumplab/errors.hpp"
#include "jumplab/laplacian.hpp"
#include "jumplab/matrix.hpp"
#include "jumplab/rational.hpp"
#include "support/generators.hpp"

using namespace jumplab;

namespace {

RatMatrix mat(std::initializer_list<std::initializer_list<Rational>> rows) {
    RatMatrix m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.begin()->size()));
    Eigen::Index i = 0;
    for (const auto& row : rows) {
        Eigen::Index j = 0;
        for (const auto& x : row) {
            m(i, j++) = x;
        }
        ++i;
    }
    return m;
}

RatVector vec(std::initializer_list<Rational> xs) {
    RatVector v(static_cast<Eigen::Index>(xs.size()));
    Eigen::Index i = 0;
    for (const auto& x : xs) {
        v(i++) = x;
    }
    return v;
}

Rational q(std::int64_t p, std::int64_t d = 1) { return Rational(p, d); }

} // namespace

TEST_CASE("rational values stay in lowest terms") {
    CHECK(q(2, 4) == q(1, 2));
    CHECK(q(2, 4).str() == "1/2");
    CHECK(q(3, -6).str() == "-1/2");
    CHECK(q(6, 3).str() == "2");
    CHECK(q(0, 5).str() == "0");
    CHECK(q(6, 3).is_integer());
    CHECK(q(-6, 4).denominator() == 2);
    CHECK(Rational::parse("10/4") == q(5, 2));
    CHECK(Rational::parse("-7") == q(-7));
    CHECK_THROWS(Rational::parse("1/0"));
    CHECK_THROWS(Rational::parse("abc"));
    CHECK_THROWS_AS(q(1) / q(0), std::domain_error);
    std::ostringstream os;
    os << q(-1, 3);
    CHECK(os.str() == "-1/3");
    CHECK(q(1, 3) < q(1, 2));
    CHECK(abs(q(-2, 3)) == q(2, 3));
}

TEST_CASE("solve_linear") {
    SUBCASE("identity") {
        const RatVector x = solve_linear<Rational>(RatMatrix::Identity(3, 3), vec({1, 2, 3}));
        CHECK(x == vec({1, 2, 3}));
    }
    SUBCASE("diagonal") {
        CHECK(solve_linear<Rational>(mat({{2, 0}, {0, 4}}), vec({1, 1})) == vec({q(1, 2), q(1, 4)}));
    }
    SUBCASE("by substitution") {
        const RatMatrix a = mat({{1, 1}, {1, 2}});
        const RatVector x = solve_linear<Rational>(a, vec({3, 5}));
        CHECK(x == vec({1, 2}));
        CHECK(RatVector(a * x) == vec({3, 5}));
    }
    SUBCASE("singular") {
        CHECK_THROWS_AS(solve_linear<Rational>(mat({{1, 2}, {2, 4}}), vec({1, 1})), SingularMatrix);
    }
    SUBCASE("random systems solve exactly") {
        testkit::Rng rng(7);
        for (int trial = 0; trial < 30; ++trial) {
            const Eigen::Index n = testkit::uniform(rng, 1, 6);
            RatMatrix a(n, n);
            RatVector b(n);
            for (Eigen::Index i = 0; i < n; ++i) {
                b(i) = q(testkit::uniform(rng, -9, 9), testkit::uniform(rng, 1, 4));
                for (Eigen::Index j = 0; j < n; ++j) {
                    a(i, j) = q(testkit::uniform(rng, -5, 5), testkit::uniform(rng, 1, 3));
                }
            }
            if (rank<Rational>(a) < n) {
                CHECK_THROWS_AS(solve_linear<Rational>(a, b), SingularMatrix);
                continue;
            }
            const RatVector x = solve_linear<Rational>(a, b);
            CHECK(RatVector(a * x) == b);
            CHECK(RatMatrix(a * inverse<Rational>(a)) == RatMatrix::Identity(n, n));
        }
    }
}

TEST_CASE("laplacian") {
    SUBCASE("single edge") {
        MultiGraph g;
        g.add_vertex("u");
        g.add_vertex("v");
        g.add_edge("e", "u", "v");
        const std::vector<Rational> mu{5};
        CHECK(laplacian<Rational>(g, mu) == mat({{q(1, 5), q(-1, 5)}, {q(-1, 5), q(1, 5)}}));
    }
    SUBCASE("parallel edges add conductances") {
        MultiGraph g;
        g.add_vertex("u");
        g.add_vertex("v");
        g.add_edge("e1", "u", "v");
        g.add_edge("e2", "u", "v");
        const std::vector<Rational> mu{2, 3};
        CHECK(laplacian<Rational>(g, mu) == mat({{q(5, 6), q(-5, 6)}, {q(-5, 6), q(5, 6)}}));
    }
    SUBCASE("loop is ignored") {
        MultiGraph g;
        g.add_vertex("u");
        g.add_edge("l", "u", "u");
        const std::vector<Rational> mu{7};
        CHECK(laplacian<Rational>(g, mu) == mat({{0}}));
    }
    SUBCASE("nonpositive resistance") {
        MultiGraph g;
        g.add_vertex("u");
        g.add_vertex("v");
        g.add_edge("e", "u", "v");
        const std::vector<Rational> zero{0};
        const std::vector<Rational> neg{-1};
        CHECK_THROWS_AS(laplacian<Rational>(g, zero), NonPositiveResistance);
        CHECK_THROWS_AS(laplacian<Rational>(g, neg), NonPositiveResistance);
    }
    SUBCASE("symmetric with zero row sums") {
        testkit::Rng rng(11);
        for (int trial = 0; trial < 20; ++trial) {
            const auto g = testkit::random_connected(rng, 5, 8);
            const auto mu = testkit::random_resistances(rng, g.edge_count());
            const RatMatrix l = laplacian<Rational>(g, mu);
            CHECK(RatMatrix(l.transpose()) == l);
            for (Eigen::Index i = 0; i < l.rows(); ++i) {
                CHECK(l.row(i).sum() == Rational(0));
            }
        }
    }
}

TEST_CASE("laplacian pseudoinverse") {
    SUBCASE("unit edge") {
        const RatMatrix l = mat({{1, -1}, {-1, 1}});
        const RatMatrix p = laplacian_pseudoinverse(l);
        CHECK(p == mat({{q(1, 4), q(-1, 4)}, {q(-1, 4), q(1, 4)}}));
        CHECK(penrose_identities_hold<Rational>(l, p));
    }
    SUBCASE("one vertex") {
        CHECK(laplacian_pseudoinverse(mat({{0}})) == mat({{0}}));
    }
    SUBCASE("unit triangle: every pair has resistance 2/3") {
        const RatMatrix l = mat({{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}});
        const RatMatrix p = laplacian_pseudoinverse(l);
        for (int u = 0; u < 3; ++u) {
            for (int v = u + 1; v < 3; ++v) {
                CHECK(p(u, u) - 2 * p(u, v) + p(v, v) == q(2, 3));
            }
        }
        CHECK(penrose_identities_hold<Rational>(l, p));
    }
    SUBCASE("disconnected") {
        CHECK_THROWS_AS(laplacian_pseudoinverse(RatMatrix::Zero(2, 2)), DisconnectedNetwork);
    }
    SUBCASE("Penrose identities, symmetry, zero row sums on random networks") {
        testkit::Rng rng(13);
        for (int trial = 0; trial < 25; ++trial) {
            const auto n = static_cast<std::size_t>(testkit::uniform(rng, 1, 7));
            const auto g = testkit::random_connected(rng, n, n + static_cast<std::size_t>(testkit::uniform(rng, 0, 5)));
            const auto mu = testkit::random_resistances(rng, g.edge_count());
            const RatMatrix l = laplacian<Rational>(g, mu);
            const RatMatrix p = laplacian_pseudoinverse(l);
            CHECK(penrose_identities_hold<Rational>(l, p));
            CHECK(RatMatrix(p.transpose()) == p);
            for (Eigen::Index i = 0; i < p.rows(); ++i) {
                CHECK(p.row(i).sum() == Rational(0));
            }
        }
    }
    SUBCASE("Penrose check rejects a wrong candidate") {
        const RatMatrix l = mat({{1, -1}, {-1, 1}});
        CHECK_FALSE(penrose_identities_hold<Rational>(l, mat({{1, 0}, {0, 1}})));
    }
}

TEST_CASE("rank") {
    CHECK(rank<Rational>(mat({{1, 2}, {2, 4}})) == 1);
    CHECK(rank<Rational>(RatMatrix::Identity(4, 4)) == 4);
    CHECK(rank<Rational>(RatMatrix::Zero(3, 3)) == 0);
}

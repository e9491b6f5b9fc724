#include <doctest.h>

#include "nw/error.hpp"
#include "nw/random.hpp"
#include "nw/struct_algebra.hpp"

using namespace nw;

namespace {

Rational R(long n, long d = 1) { return Rational(Integer(n), Integer(d)); }

AlgElement elem(std::initializer_list<Rational> c) { return AlgElement(RatVector(c)); }

/// Quaternion product from the Hamilton-style formulas, written out by hand for (a, b).
AlgElement quat_mul(const AlgElement& x, const AlgElement& y, const Rational& a, const Rational& b) {
    const auto& p = x.c;
    const auto& q = y.c;
    return elem({p[0] * q[0] + a * p[1] * q[1] + b * p[2] * q[2] - a * b * p[3] * q[3],
                 p[0] * q[1] + p[1] * q[0] - b * p[2] * q[3] + b * p[3] * q[2],
                 p[0] * q[2] + p[2] * q[0] + a * p[1] * q[3] - a * p[3] * q[1],
                 p[0] * q[3] + p[3] * q[0] + p[1] * q[2] - p[2] * q[1]});
}

AlgElement random_elem(Rng& rng, std::size_t dim) {
    RatVector c(dim);
    for (auto& x : c) x = Rational(uniform_int(rng, -3, 3));
    return AlgElement(c);
}

}  // namespace

TEST_CASE("quaternion multiplication") {
    const auto h = quaternion(-1, -1);
    const StructAlgebra& A = *h.algebra;
    const AlgElement one = A.basis(0), i = A.basis(1), j = A.basis(2), k = A.basis(3);
    CHECK(A.mul(i, j) == k);
    CHECK(A.mul(j, j) == -one);
    CHECK(A.mul(one, k) == k);
    CHECK(A.one() == one);
    CHECK(A.format(elem({1, 2, 0, R(-1, 2)})) == "1 + 2i - (1/2)k");
    CHECK(A.format(A.zero()) == "0");
    CHECK(h.subfield.validate(A).empty());
    CHECK_THROWS_AS(quaternion(0, 1), PreconditionError);
    const auto split = quaternion(1, 1);
    CHECK(split.algebra->dim() == 4);
}

TEST_CASE("quaternion products match the closed formula") {
    Rng rng(91);
    for (int t = 0; t < 200; ++t) {
        const Rational a = Rational(uniform_int(rng, -5, 5) * 2 + 1), b = Rational(uniform_int(rng, -5, 5) * 2 + 1);
        const auto q = quaternion(a, b);
        const AlgElement x = random_elem(rng, 4), y = random_elem(rng, 4);
        CHECK(q.algebra->mul(x, y) == quat_mul(x, y, a, b));
    }
}

TEST_CASE("inverse") {
    const auto h = quaternion(-1, -1);
    const StructAlgebra& A = *h.algebra;
    const auto inv = A.inverse(elem({1, 1, 0, 0}));
    REQUIRE(inv);
    CHECK(*inv == elem({R(1, 2), R(-1, 2), 0, 0}));
    CHECK_FALSE(A.inverse(A.zero()));
    CHECK(*A.inverse(A.basis(2)) == -A.basis(2));
    const auto split = quaternion(1, 1);
    CHECK_FALSE(split.algebra->inverse(elem({1, 1, 0, 0})));  // (1 + i)(1 - i) = 0
    Rng rng(92);
    for (int t = 0; t < 100; ++t) {
        const AlgElement x = random_elem(rng, 4);
        const auto y = A.inverse(x);
        CHECK(y.has_value() == !x.is_zero());
        if (y) {
            CHECK(A.mul(x, *y) == A.one());
            CHECK(A.mul(*y, x) == A.one());
        }
    }
    CHECK(A.pow(A.basis(1), -3) == A.basis(1));
}

TEST_CASE("structure constant validation") {
    StructAlgebra::Dense bad(2, std::vector<RatVector>(2, RatVector(2, Rational(0))));
    // e0 e0 = e1, everything else zero: associative but without a unit.
    bad[0][0][1] = 1;
    CHECK_THROWS_AS(StructAlgebra(bad, {"a", "b"}), PreconditionError);
    StructAlgebra::Dense nonassoc(2, std::vector<RatVector>(2, RatVector(2, Rational(0))));
    nonassoc[0][0][0] = 1;
    nonassoc[0][1][1] = 1;
    nonassoc[1][0][1] = 1;
    nonassoc[1][1][0] = 1;
    nonassoc[1][1][1] = 1;  // e1 e1 = 1 + e1 is fine; break it below
    StructAlgebra ok(nonassoc, {"1", "x"});
    CHECK(ok.one() == ok.basis(0));
    nonassoc[1][1] = RatVector{0, 0};
    nonassoc[0][1] = RatVector{1, 1};
    CHECK_THROWS_AS(StructAlgebra(nonassoc, {"1", "x"}), PreconditionError);
}

TEST_CASE("tensor product") {
    const auto t = tensor(quaternion(-1, -1), quaternion(-3, -1));
    const StructAlgebra& A = *t.algebra;
    CHECK(A.dim() == 16);
    CHECK(A.one() == A.basis(0));
    CHECK(A.labels()[1] == "i'");
    CHECK(A.labels()[4] == "i");
    CHECK(A.labels()[5] == "ii'");
    CHECK(t.subfield.validate(A).empty());
    CHECK(t.subfield.basis.size() == 4);
    // (i (x) 1)^2 = -1, (1 (x) i')^2 = -3, and the two commute.
    CHECK(A.mul(A.basis(4), A.basis(4)) == R(-1) * A.one());
    CHECK(A.mul(A.basis(1), A.basis(1)) == R(-3) * A.one());
    CHECK(A.commute(A.basis(4), A.basis(1)));
    CHECK(A.commute(A.basis(8), A.basis(2)));  // j (x) 1 and 1 (x) j'
}

TEST_CASE("centralizer") {
    const auto h = quaternion(-1, -1);
    const auto c = centralizer(*h.algebra, h.subfield);
    REQUIRE(c.basis.size() == 2);
    CHECK(c.basis[0] == h.algebra->basis(0));
    CHECK(c.basis[1] == h.algebra->basis(1));
    CHECK(c.dimension_identity);

    SubfieldSpec trivial{{h.algebra->one()}, {}, {}};
    const auto all = centralizer(*h.algebra, trivial);
    CHECK(all.basis.size() == 4);
    CHECK(all.dimension_identity);

    const auto t = tensor(quaternion(-1, -1), quaternion(-3, -1));
    const auto ct = centralizer(*t.algebra, t.subfield);
    CHECK(ct.basis.size() == 4);
    CHECK(ct.dimension_identity);
    for (const auto& x : ct.basis)
        for (const auto& k : t.subfield.basis) CHECK(t.algebra->commute(x, k));
}

TEST_CASE("skolem_noether_unit") {
    const auto h = quaternion(-1, -1);
    const StructAlgebra& A = *h.algebra;
    const AlgElement u = skolem_noether_unit(A, h.subfield, h.subfield.generators[0]);
    CHECK(u == A.basis(2));
    CHECK(A.mul(A.mul(*A.inverse(u), A.basis(1)), u) == -A.basis(1));
    CHECK(skolem_noether_unit(A, h.subfield, h.subfield.identity()) == A.one());

    const auto t = tensor(quaternion(-1, -1), quaternion(-3, -1));
    const StructAlgebra& T = *t.algebra;
    const AlgElement us = skolem_noether_unit(T, t.subfield, t.subfield.generators[0]);
    CHECK(us == T.basis(8));  // j (x) 1
    CHECK(T.format(us) == "j");
    for (std::size_t g = 0; g < 2; ++g) {
        const AlgElement w = skolem_noether_unit(T, t.subfield, t.subfield.generators[g]);
        const AlgElement winv = *T.inverse(w);
        for (std::size_t b = 0; b < t.subfield.basis.size(); ++b)
            CHECK(T.mul(T.mul(winv, t.subfield.basis[b]), w) == t.subfield.generators[g].images[b]);
    }
    // A map that is not a field automorphism has no conjugating unit.
    SubfieldMap scale{{A.one(), R(2) * A.basis(1)}};
    CHECK_THROWS_AS(skolem_noether_unit(A, h.subfield, scale), PreconditionError);
}

TEST_CASE("subfield validation") {
    const auto h = quaternion(-1, -1);
    SubfieldSpec noncomm{{h.algebra->one(), h.algebra->basis(1), h.algebra->basis(2)}, {}, {}};
    CHECK_FALSE(noncomm.validate(*h.algebra).empty());
    SubfieldSpec wrong_order = h.subfield;
    wrong_order.generator_orders = {3};
    CHECK_FALSE(wrong_order.validate(*h.algebra).empty());
}

TEST_CASE("algebra axioms on random elements") {
    Rng rng(93);
    const auto t = tensor(quaternion(-1, -1), quaternion(-3, -1));
    const StructAlgebra& A = *t.algebra;
    for (int i = 0; i < 50; ++i) {
        const AlgElement x = random_elem(rng, 16), y = random_elem(rng, 16), z = random_elem(rng, 16);
        CHECK(A.mul(A.mul(x, y), z) == A.mul(x, A.mul(y, z)));
        CHECK(A.mul(x, y + z) == A.mul(x, y) + A.mul(x, z));
        CHECK(A.mul(A.one(), x) == x);
        CHECK(A.mul(x, A.one()) == x);
    }
}

#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "repdim/linalg/sparse.hpp"

using namespace repdim;

TEST_CASE("rational fast path stays exact across the int64 boundary")
{
    const Rational big(INT64_MAX);
    const Rational sum = big + Rational(1);
    CHECK_FALSE(sum.is_small());
    CHECK(sum.to_mpq() == mpq_class("9223372036854775808"));
    // Coming back down normalizes to the small representation.
    const Rational back = sum - Rational(1);
    CHECK(back.is_small());
    CHECK(back == big);

    const Rational third(1, 3);
    CHECK((third + third + third) == Rational(1));
    CHECK((Rational(2, 4)) == Rational(1, 2));
    CHECK(Rational(3, -6).str() == "-1/2");
    CHECK(Rational(LONG_MIN).to_mpq() == mpq_class(LONG_MIN));
    CHECK((Rational(LONG_MIN) * Rational(-1)).to_mpq() == -mpq_class(LONG_MIN));

    const Rational huge = big * big;
    CHECK(huge.to_mpq() == mpq_class(INT64_MAX) * mpq_class(INT64_MAX));
    CHECK((huge * huge.inverse()) == Rational(1));
}

TEST_CASE("rational arithmetic agrees with mpq on random operands")
{
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> small(-50, 50);
    std::uniform_int_distribution<long> wide(-(1L << 62), 1L << 62);
    for (int t = 0; t < 2000; ++t) {
        auto pick = [&] {
            const long n = (t % 3 == 0) ? wide(rng) : small(rng);
            long d = (t % 5 == 0) ? wide(rng) : small(rng);
            if (d == 0)
                d = 1;
            return Rational(n, d);
        };
        const Rational a = pick(), b = pick();
        const mpq_class qa = a.to_mpq(), qb = b.to_mpq();
        CHECK((a + b).to_mpq() == qa + qb);
        CHECK((a - b).to_mpq() == qa - qb);
        CHECK((a * b).to_mpq() == qa * qb);
        if (!b.is_zero())
            CHECK(b.inverse().to_mpq() == 1 / qb);
        CHECK(((a + b) == (b + a)));
    }
}

TEST_CASE("field specs")
{
    CHECK(FieldSpec::parse("q").is_rational());
    CHECK(FieldSpec::parse("f2").prime == 2);
    CHECK(FieldSpec::parse("fp:7").prime == 7);
    CHECK(FieldSpec::parse("fp:2147483647").prime == 2147483647u);
    CHECK_THROWS_AS(FieldSpec::parse("fp:8"), std::invalid_argument);
    CHECK_THROWS_AS(FieldSpec::parse("fp:"), std::invalid_argument);
    CHECK_THROWS_AS(FieldSpec::parse("fp:4294967311"), std::invalid_argument);
    CHECK_THROWS_AS(FieldSpec::parse("r"), std::invalid_argument);
    CHECK_THROWS_AS(PrimeField(1), std::invalid_argument);
    CHECK(PrimeField(2).name() == "f2");
    CHECK(PrimeField(5).name() == "fp:5");
}

TEST_CASE("prime field arithmetic")
{
    const PrimeField f(7);
    CHECK(f.from_int(-1) == 6);
    CHECK(f.mul(f.inv(3), 3) == 1);
    CHECK(f.sub(2, 5) == 4);
    CHECK_THROWS_AS(f.inv(0), std::domain_error);
    const PrimeField big(2147483647);
    CHECK(big.mul(big.inv(123456789), 123456789) == 1);
    CHECK(big.add(2147483646, 2147483646) == 2147483645);
}

TEST_CASE("rref, rank and nullspace on a fixed matrix")
{
    const Rationals q;
    const auto m = Matrix<Rationals>::from_ints(q, {{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
    const auto red = rref(m);
    CHECK(red.rank == 2);
    CHECK(red.pivots == std::vector<std::size_t>{0, 1});
    const auto ns = nullspace(m);
    REQUIRE(ns.size() == 1);
    // Normalized to 1 at the free column.
    CHECK(ns[0][2] == Rational(1));
    CHECK((m * ns[0]) == Vec<Rationals>(3, Rational()));
    CHECK_FALSE(invert(m).has_value());
}

TEST_CASE_TEMPLATE("matrix properties on random inputs", K, Rationals, PrimeField)
{
    const K f = [] {
        if constexpr (std::is_same_v<K, Rationals>)
            return Rationals{};
        else
            return PrimeField(3);
    }();
    std::mt19937_64 rng(11);
    for (int t = 0; t < 150; ++t) {
        const std::size_t r = 1 + rng() % 7, c = 1 + rng() % 7;
        const auto a = oracle::random_matrix(rng, f, r, c);
        const std::size_t rk = rank(a);
        CHECK(rk == oracle::rank(a));
        CHECK(rk == rank(a.transpose()));
        const auto ns = nullspace(a);
        CHECK(ns.size() == c - rk);
        for (const auto& v : ns)
            CHECK((a * v) == Vec<K>(r, f.zero()));
        CHECK(span_rank(f, c, ns) == ns.size());

        // Sparse echelon sees the same row space.
        SparseEchelon<K> ech(f, c);
        for (std::size_t i = 0; i < r; ++i) {
            Vec<K> row(c);
            for (std::size_t j = 0; j < c; ++j)
                row[j] = a(i, j);
            ech.insert(row);
        }
        CHECK(ech.rank() == rk);
        const auto sns = ech.nullspace();
        CHECK(sns.size() == c - rk);
        for (const auto& v : sns)
            CHECK((a * v) == Vec<K>(r, f.zero()));
        for (std::size_t i = 0; i < r; ++i) {
            Vec<K> row(c);
            for (std::size_t j = 0; j < c; ++j)
                row[j] = a(i, j);
            CHECK(ech.contains(row));
        }

        const std::size_t n = 1 + rng() % 6;
        const auto g = oracle::random_invertible(rng, f, n);
        const auto gi = invert(g);
        REQUIRE(gi.has_value());
        CHECK((g * *gi).is_identity());
        CHECK((*gi * g).is_identity());
        const auto h = oracle::random_matrix(rng, f, n, n);
        CHECK((g * h).transpose() == h.transpose() * g.transpose());
        CHECK(h.power(3) == h * h * h);
        CHECK(h.power(0).is_identity());
    }
}

TEST_CASE("sparse echelon insert reports dependence")
{
    const Rationals q;
    SparseEchelon<Rationals> e(q, 3);
    CHECK(e.insert(Vec<Rationals>{Rational(1), Rational(2), Rational()}));
    CHECK(e.insert(Vec<Rationals>{Rational(), Rational(1), Rational(1)}));
    CHECK_FALSE(e.insert(Vec<Rationals>{Rational(2), Rational(5), Rational(1)}));
    CHECK(e.rank() == 2);
    const auto basis = e.basis();
    REQUIRE(basis.size() == 2);
    // Fully reduced: pivot columns are unit vectors.
    CHECK(basis[0][1] == Rational());
    CHECK(basis[1][0] == Rational());
}

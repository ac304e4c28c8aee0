#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "stadirac/complex_multivector.hpp"

using namespace stadirac;

namespace {
const Multivector g0 = Multivector::basis_vector(0);
const Multivector g1 = Multivector::basis_vector(1);
const Multivector g2 = Multivector::basis_vector(2);
const Multivector one = Multivector::scalar(1.0);
const Multivector ps = Multivector::pseudoscalar();

double delta(const ComplexMultivector& a, const ComplexMultivector& b) {
    return (a - b).max_abs_coefficient();
}
}  // namespace

TEST_CASE("j squares to minus one and commutes with blades") {
    const ComplexMultivector j = ComplexMultivector::unit_j();
    CHECK(delta(j * j, ComplexMultivector{-one}) == 0.0);
    std::mt19937_64 rng(21);
    const ComplexMultivector a = oracles::random_complex(rng);
    CHECK(delta(j * a, a * j) == 0.0);
}

TEST_CASE("complex product layout") {
    std::mt19937_64 rng(22);
    const Multivector a = oracles::random_multivector(rng);
    const Multivector b = oracles::random_multivector(rng);
    const Multivector c = oracles::random_multivector(rng);
    const Multivector d = oracles::random_multivector(rng);
    const ComplexMultivector prod = ComplexMultivector{a, b} * ComplexMultivector{c, d};
    CHECK((prod.re - (a * c - b * d)).max_abs_coefficient() == 0.0);
    CHECK((prod.im - (a * d + b * c)).max_abs_coefficient() == 0.0);
}

TEST_CASE("j conjugation") {
    const ComplexMultivector x{one, g0};
    const ComplexMultivector want{one, -g0};
    CHECK(delta(j_conjugate(x), want) == 0.0);

    const ComplexMultivector real_only{g1 + 2.0 * one};
    CHECK(delta(j_conjugate(real_only), real_only) == 0.0);

    // multiplicative over products
    std::mt19937_64 rng(23);
    const ComplexMultivector a = oracles::random_complex(rng);
    const ComplexMultivector b = oracles::random_complex(rng);
    CHECK(delta(j_conjugate(a * b), j_conjugate(a) * j_conjugate(b)) <= 1e-14);
}

TEST_CASE("grade involution equals -I (.) I") {
    CHECK(delta(grade_involute(ComplexMultivector{g0}), ComplexMultivector{-g0}) == 0.0);
    const ComplexMultivector even{2.0 * one + 0.5 * ps};
    CHECK(delta(grade_involute(even), even) == 0.0);

    // the two code paths agree: sign table vs geometric products
    std::mt19937_64 rng(24);
    const ComplexMultivector a = oracles::random_complex(rng);
    const ComplexMultivector sandwich{-1.0 * (ps * a.re * ps), -1.0 * (ps * a.im * ps)};
    CHECK(delta(grade_involute(a), sandwich) == 0.0);

    const Multivector g21 = g2 * g1;
    CHECK((grade_involution(g21) - (-1.0 * (ps * g21 * ps))).max_abs_coefficient() == 0.0);
}

TEST_CASE("geometric complex conjugation matches entrywise matrix conjugation") {
    // single gamma matrices: only g2 is imaginary in the Dirac basis
    CHECK(delta(complex_conjugate_geometric(ComplexMultivector{g2}), ComplexMultivector{-g2}) ==
          0.0);
    CHECK(delta(complex_conjugate_geometric(ComplexMultivector{g0}), ComplexMultivector{g0}) ==
          0.0);

    // the naive g2 (.) g2 rule fails on products; the full rule does not
    const Multivector g01 = g0 * g1;
    const auto naive = oracles::image(g2 * g01 * g2);
    const auto full = oracles::image(g2 * ps * g01 * ps * g2);
    const auto conj = oracles::conj_entrywise(oracles::image(g01));
    CHECK(oracles::max_abs_diff(naive, conj) > 0.5);
    CHECK(oracles::max_abs_diff(full, conj) == 0.0);

    std::mt19937_64 rng(25);
    double worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        const ComplexMultivector a = oracles::random_complex(rng);
        worst = std::max(worst,
                         oracles::max_abs_diff(oracles::image(complex_conjugate_geometric(a)),
                                               oracles::conj_entrywise(oracles::image(a))));
    }
    CHECK(worst <= 1e-13);
}

TEST_CASE("field values enforce constituent parity") {
    CHECK_THROWS_AS(DiracFieldValue::from_constituents(g0, Multivector::zero()),
                    std::domain_error);
    CHECK_THROWS_AS(DiracFieldValue::from_constituents(one, one), std::domain_error);
    CHECK_NOTHROW(DiracFieldValue::from_constituents(one + 0.5 * ps, g0));
}

TEST_CASE("flattened form and component views agree") {
    std::mt19937_64 rng(26);
    const DiracFieldValue v = oracles::random_field_value(rng);

    const ComplexMultivector flat = v.flattened();
    CHECK((flat.re - (v.even1() - v.odd2())).max_abs_coefficient() == 0.0);
    CHECK((flat.im - (v.odd1() + v.even2())).max_abs_coefficient() == 0.0);

    const DiracFieldValue back = DiracFieldValue::from_flattened(flat);
    CHECK((back - v).max_abs_coefficient() == 0.0);

    const DiracFieldValue from_parts =
        DiracFieldValue::from_components(v.component1(), v.component2());
    CHECK((from_parts - v).max_abs_coefficient() == 0.0);
}

TEST_CASE("charge conjugation") {
    std::mt19937_64 rng(27);
    const DiracFieldValue v = oracles::random_field_value(rng);

    // involution
    CHECK((charge_conjugate(charge_conjugate(v)) - v).max_abs_coefficient() == 0.0);

    // uncharged sector is a fixed point
    const DiracFieldValue unch = DiracFieldValue::from_constituents(v.even1(), v.odd1());
    CHECK((charge_conjugate(unch) - unch).max_abs_coefficient() == 0.0);

    // (c1, c2) = (1, 1) -> (1, -1)
    const DiracFieldValue both =
        DiracFieldValue::from_components(ComplexMultivector{one}, ComplexMultivector{one});
    const DiracFieldValue conj = charge_conjugate(both);
    CHECK((conj.component1().re - one).max_abs_coefficient() == 0.0);
    CHECK((conj.component2().re + one).max_abs_coefficient() == 0.0);
}

TEST_CASE("j-flip of the field equals -I psi^c I") {
    std::mt19937_64 rng(28);
    double worst = 0.0;
    for (int trial = 0; trial < 50; ++trial) {
        const DiracFieldValue v = oracles::random_field_value(rng);
        const ComplexMultivector lhs = j_conjugate(v).flattened();
        // also the j-flip of the flattened field
        worst = std::max(worst, delta(lhs, j_conjugate(v.flattened())));
        const ComplexMultivector inner = charge_conjugate(v).flattened();
        const ComplexMultivector rhs{-1.0 * (ps * inner.re * ps), -1.0 * (ps * inner.im * ps)};
        worst = std::max(worst, delta(lhs, rhs));
    }
    CHECK(worst <= 1e-13);
}

TEST_CASE("even/odd closure of the product") {
    for (unsigned a = 0; a < 16; ++a) {
        for (unsigned b = 0; b < 16; ++b) {
            const Multivector p = Multivector::basis_blade(a) * Multivector::basis_blade(b);
            if ((blade_grade(a) + blade_grade(b)) % 2 == 0) {
                REQUIRE(odd_part(p).max_abs_coefficient() == 0.0);
            } else {
                REQUIRE(even_part(p).max_abs_coefficient() == 0.0);
            }
        }
    }
}

TEST_CASE("left and right multiplication demand even factors") {
    std::mt19937_64 rng(29);
    const DiracFieldValue v = oracles::random_field_value(rng);
    CHECK_THROWS_AS(left_multiply(g0, v), std::domain_error);
    const Multivector even_factor = one + 0.3 * (g1 * g2);
    const DiracFieldValue lv = left_multiply(even_factor, v);
    CHECK((lv.even1() - even_factor * v.even1()).max_abs_coefficient() == 0.0);
    CHECK((lv.odd2() - even_factor * v.odd2()).max_abs_coefficient() == 0.0);
    const DiracFieldValue rv = right_multiply(v, even_factor);
    CHECK((rv.odd1() - v.odd1() * even_factor).max_abs_coefficient() == 0.0);
}

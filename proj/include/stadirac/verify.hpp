#pragma once

// Named machine-checkable identity suites. Every check reports its measured
// error against a pinned tolerance; the CLI turns the results into a JSON
// report. A fault-injection hook exists so the harness can prove the checks
// actually bite.

#include <cmath>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "stadirac/bilinears.hpp"
#include "stadirac/symmetry.hpp"

namespace stadirac {

struct CheckResult {
    std::string name;
    double measured = 0.0;
    double tolerance = 0.0;
    bool passed = false;
};

enum class FaultInjection { none, blade_sign };

namespace detail {

inline Multivector random_multivector(std::mt19937_64& rng) {
    Multivector m;
    for (unsigned mask = 0; mask < 16; ++mask)
        m.set_coefficient(mask, presets::symmetric_unit(rng));
    return m;
}

inline ComplexMultivector random_complex(std::mt19937_64& rng) {
    return {random_multivector(rng), random_multivector(rng)};
}

inline DiracFieldValue random_field_value(std::mt19937_64& rng) {
    const Multivector a = random_multivector(rng);
    const Multivector b = random_multivector(rng);
    return DiracFieldValue::from_constituents(even_part(a), odd_part(a), even_part(b),
                                              odd_part(b));
}

}  // namespace detail

inline std::vector<CheckResult> run_verification(FaultInjection fault = FaultInjection::none,
                                                 std::uint64_t seed = 20240915ull) {
    std::vector<CheckResult> results;
    const auto record = [&results](std::string name, double measured, double tolerance) {
        results.push_back({std::move(name), measured, tolerance,
                           measured <= tolerance && std::isfinite(measured)});
    };
    std::mt19937_64 rng(seed);
    const RepTable& rep = rep_table();
    const Multivector one = Multivector::scalar(1.0);

    // The product used by the axiom checks; the fault hook flips the sign of
    // the g1 g2 basis product to prove the checks are live.
    const auto product = [fault](const Multivector& a, const Multivector& b) {
        Multivector p = a * b;
        if (fault == FaultInjection::blade_sign) {
            p += -2.0 * a[2] * b[4] * Multivector::basis_blade(6);
        }
        return p;
    };

    // --- algebra axioms -----------------------------------------------------
    {
        double worst = 0.0;
        for (int mu = 0; mu < 4; ++mu)
            for (int nu = 0; nu < 4; ++nu) {
                const Multivector anti = product(Multivector::basis_vector(mu),
                                                 Multivector::basis_vector(nu)) +
                                         product(Multivector::basis_vector(nu),
                                                 Multivector::basis_vector(mu));
                const Multivector want =
                    Multivector::scalar(mu == nu ? 2.0 * metric_diag[mu] : 0.0);
                worst = std::max(worst, (anti - want).max_abs_coefficient());
            }
        record("anticommutation", worst, 0.0);
    }
    {
        // structure constants against the 4x4 Dirac images
        double worst = 0.0;
        for (unsigned a = 0; a < 16; ++a)
            for (unsigned b = 0; b < 16; ++b) {
                const Mat4c lhs = rep.dirac_image(product(Multivector::basis_blade(a),
                                                          Multivector::basis_blade(b)));
                const Mat4c rhs = rep.dirac[a] * rep.dirac[b];
                worst = std::max(worst, lhs.max_abs_diff(rhs));
            }
        record("blade-table-matrix-oracle", worst, 0.0);
    }
    {
        double worst = 0.0;
        for (int trial = 0; trial < 1000; ++trial) {
            const Multivector a = detail::random_multivector(rng);
            const Multivector b = detail::random_multivector(rng);
            const Multivector c = detail::random_multivector(rng);
            const Multivector lhs = (a * b) * c;
            const Multivector rhs = a * (b * c);
            const double scale = std::max(1.0, lhs.max_abs_coefficient());
            worst = std::max(worst, (lhs - rhs).max_abs_coefficient() / scale);
        }
        record("associativity", worst, 1e-13);
    }
    {
        double worst = 0.0;
        for (unsigned a = 0; a < 16; ++a)
            for (unsigned b = 0; b < 16; ++b) {
                const Multivector lhs =
                    reverse(Multivector::basis_blade(a) * Multivector::basis_blade(b));
                const Multivector rhs =
                    reverse(Multivector::basis_blade(b)) * reverse(Multivector::basis_blade(a));
                worst = std::max(worst, (lhs - rhs).max_abs_coefficient());
            }
        record("reversal-antiautomorphism", worst, 0.0);
    }
    {
        const Multivector ps = Multivector::pseudoscalar();
        double worst = (ps * ps + one).max_abs_coefficient();
        for (unsigned mask = 0; mask < 16; ++mask) {
            const Multivector b = Multivector::basis_blade(mask);
            const Multivector comm = blade_grade(mask) % 2 == 0 ? ps * b - b * ps
                                                                : ps * b + b * ps;
            worst = std::max(worst, comm.max_abs_coefficient());
        }
        record("pseudoscalar-grade-commutation", worst, 0.0);
    }
    {
        double worst = 0.0;
        for (int trial = 0; trial < 200; ++trial) {
            const Multivector a = detail::random_multivector(rng);
            const Multivector b = detail::random_multivector(rng);
            worst = std::max(worst, std::abs(scalar_part(a * b) - scalar_part(b * a)));
        }
        record("scalar-cyclicity", worst, 1e-13);
    }
    {
        double worst = 0.0;
        for (int trial = 0; trial < 50; ++trial) {
            Multivector gen;
            for (int mu = 0; mu < 4; ++mu)
                for (int nu = mu + 1; nu < 4; ++nu)
                    gen.set_bivector_component(mu, nu, presets::symmetric_unit(rng));
            const Multivector r = exp_bivector(gen);
            worst = std::max(worst, (r * reverse(r) - one).max_abs_coefficient());
        }
        record("exp-bivector-inverse", worst, 1e-12);
    }

    // --- representations ------------------------------------------------------
    {
        double worst = 0.0;
        for (unsigned a = 0; a < 16; ++a)
            for (unsigned b = 0; b < 16; ++b) {
                const Mat16 lhs = rep.real16[a] * rep.real16[b];
                const Mat16 rhs = rep.real16_image(Multivector::basis_blade(a) *
                                                   Multivector::basis_blade(b));
                for (int i = 0; i < 256; ++i)
                    worst = std::max(worst, std::abs(lhs.m[i] - rhs.m[i]));
            }
        record("real16-homomorphism", worst, 0.0);
    }
    {
        double worst = 0.0;
        for (unsigned mask = 0; mask < 16; ++mask) {
            const Mat16& m = rep.real16[mask];
            int nonzero = 0;
            for (int i = 0; i < 256; ++i) {
                const double v = m.m[i];
                if (v != 0.0) {
                    ++nonzero;
                    worst = std::max(worst, std::abs(std::abs(v) - 1.0));
                }
            }
            worst = std::max(worst, static_cast<double>(std::abs(nonzero - 16)));
        }
        record("real16-orthogonality", worst, 0.0);
    }
    {
        // projection relations: g0 w = w and g2g1 w = i w in the 4x4 rep; in
        // the real rep both g2g1 and the j generator square to -1 on w16 but
        // act through different planes.
        const Bispinor4 w = rep.w4;
        const Bispinor4 g0w = rep.dirac[1] * w;
        const Multivector g21 = Multivector::basis_vector(2) * Multivector::basis_vector(1);
        const Bispinor4 g21w = rep.dirac_image(g21) * w;
        double worst = 0.0;
        for (int k = 0; k < 4; ++k) {
            worst = std::max(worst, std::abs(g0w[k] - w[k]));
            worst = std::max(worst, std::abs(g21w[k] - complex_d{0.0, 1.0} * w[k]));
        }
        const Mat16 g21_16 = rep.real16_image(g21);
        const Bispinor16 g0w16 = rep.real16[1] * rep.w16;
        const Bispinor16 g21sq = g21_16 * (g21_16 * rep.w16);
        const Bispinor16 jsq = rep.j_real16 * (rep.j_real16 * rep.w16);
        const Bispinor16 g21w16 = g21_16 * rep.w16;
        const Bispinor16 jw16 = rep.j_real16 * rep.w16;
        double separation = 0.0;
        for (int k = 0; k < 16; ++k) {
            worst = std::max(worst, std::abs(g0w16[k] - rep.w16[k]));
            worst = std::max(worst, std::abs(g21sq[k] + rep.w16[k]));
            worst = std::max(worst, std::abs(jsq[k] + rep.w16[k]));
            separation += std::abs(g21w16[k] - jw16[k]);
        }
        if (separation < 0.5) worst = std::max(worst, 1.0);
        record("projection-relations", worst, 0.0);
    }
    {
        // only 1, g0, g2g1, g2g1g0 have a nonzero (1,1) entry
        double worst = 0.0;
        for (unsigned mask = 0; mask < 16; ++mask) {
            const bool corner = std::abs(rep.dirac[mask](0, 0)) > 0.0;
            const bool expected = (mask == 0 || mask == 1 || mask == 6 || mask == 7);
            if (corner != expected) worst = 1.0;
        }
        record("corner-blade-scan", worst, 0.0);
    }
    {
        // w16^T image w16 = Re< blade (1 + g0) > for all blades
        double worst = 0.0;
        for (unsigned mask = 0; mask < 16; ++mask) {
            const double lhs = rep.real16[mask](0, 0);
            const double rhs =
                scalar_part(Multivector::basis_blade(mask) * (one + Multivector::basis_vector(0)));
            worst = std::max(worst, std::abs(lhs - rhs));
        }
        record("real-corner-identity", worst, 0.0);
    }
    {
        double worst = 0.0;
        const Multivector g0 = Multivector::basis_vector(0);
        for (unsigned mask = 0; mask < 16; ++mask) {
            const Multivector m = Multivector::basis_blade(mask);
            worst = std::max(worst, rep.dirac_image(g0 * reverse(m) * g0)
                                        .max_abs_diff(rep.dirac[mask].adjoint()));
        }
        record("hermitian-conjugate-identity", worst, 0.0);
    }
    {
        // spinor column of the even multivector with unit components
        double worst = 0.0;
        const auto column = [&worst, &rep](const Multivector& m, const Bispinor4& want) {
            const Bispinor4 got = rep.dirac_image(m) * rep.w4;
            for (int k = 0; k < 4; ++k) worst = std::max(worst, std::abs(got[k] - want[k]));
        };
        Multivector m;
        m.set_scalar_component(1.0);
        column(m, Bispinor4{complex_d{1.0}, complex_d{}, complex_d{}, complex_d{}});
        m = Multivector{};
        m.set_bivector_component(1, 2, 1.0);
        column(m, Bispinor4{complex_d{0.0, -1.0}, complex_d{}, complex_d{}, complex_d{}});
        m = Multivector{};
        m.set_pseudoscalar_component(1.0);
        column(m, Bispinor4{complex_d{}, complex_d{}, complex_d{0.0, 1.0}, complex_d{}});
        m = Multivector{};
        m.set_bivector_component(0, 1, 1.0);
        column(m, Bispinor4{complex_d{}, complex_d{}, complex_d{}, complex_d{1.0, 0.0}});
        record("spinor-column-map", worst, 0.0);
    }
    {
        double worst = 0.0;
        for (int trial = 0; trial < 100; ++trial) {
            Bispinor4 s;
            for (auto& c : s)
                c = complex_d{presets::symmetric_unit(rng), presets::symmetric_unit(rng)};
            const Bispinor4 back = multivector_to_spinor(spinor_to_multivector(s));
            for (int k = 0; k < 4; ++k) worst = std::max(worst, std::abs(back[k] - s[k]));
        }
        record("spinor-roundtrip", worst, 1e-14);
    }
    {
        double worst = 0.0;
        for (int trial = 0; trial < 50; ++trial) {
            const ComplexMultivector M = detail::random_complex(rng);
            const ComplexMultivector l = detail::random_complex(rng);
            const ComplexMultivector r = detail::random_complex(rng);
            // bilinear_extract throws beyond 1e-10; measure the spread directly
            const complex_d via = bilinear_extract(M, l, r);
            const Multivector g0 = Multivector::basis_vector(0);
            const ComplexMultivector x = g0 * j_conjugate(reverse(l)) * M * r;
            const complex_d corner = rep.dirac_image(x)(0, 0);
            worst = std::max(worst, std::abs(via - corner));
        }
        record("bilinear-extract-routes", worst, 1e-10);
    }

    // --- bilinears -------------------------------------------------------------
    {
        double worst = 0.0, positivity = 0.0, phase = 0.0;
        for (int trial = 0; trial < 100; ++trial) {
            const DiracFieldValue v = detail::random_field_value(rng);
            const auto j = current(v);
            const auto j4 = current_via_dirac(v);
            const auto j16 = current_via_real16(v);
            const auto sg = spin_geometric(v);
            const auto sg4 = spin_geometric_via_dirac(v);
            const auto sg16 = spin_geometric_via_real16(v);
            const auto sn = spin_nongeometric(v);
            const auto sn4 = spin_nongeometric_via_dirac(v);
            const auto sn16 = spin_nongeometric_via_real16(v);
            for (int mu = 0; mu < 4; ++mu)
                worst = std::max({worst, std::abs(j[mu] - j4[mu]), std::abs(j[mu] - j16[mu])});
            for (int k = 0; k < 3; ++k)
                worst = std::max({worst, std::abs(sg[k] - sg4[k]), std::abs(sg[k] - sg16[k]),
                                  std::abs(sn[k] - sn4[k]), std::abs(sn[k] - sn16[k])});
            positivity = std::min(positivity, j[0]);
            // global j-phase rotation mixes the two component pairs
            const double th = presets::symmetric_unit(rng) * M_PI;
            const double c = std::cos(th), s = std::sin(th);
            const DiracFieldValue rotated = DiracFieldValue::from_constituents(
                c * v.even1() - s * v.even2(), c * v.odd1() - s * v.odd2(),
                s * v.even1() + c * v.even2(), s * v.odd1() + c * v.odd2());
            const auto jr = current(rotated);
            for (int mu = 0; mu < 4; ++mu) phase = std::max(phase, std::abs(jr[mu] - j[mu]));
        }
        record("bilinear-triple-agreement", worst, 1e-12);
        record("current-positivity", std::max(0.0, -positivity), 1e-15);
        record("current-j-phase-invariance", phase, 1e-12);
    }
    {
        // closed forms: current of the even sector and the spin z-component
        double worst = 0.0;
        for (int trial = 0; trial < 100; ++trial) {
            Multivector even = even_part(detail::random_multivector(rng));
            const DiracFieldValue v = DiracFieldValue::from_constituents(even, Multivector::zero());
            const double f = even.scalar_component(), g = even.pseudoscalar_component();
            double e2 = 0.0, b2 = 0.0;
            std::array<double, 3> E{}, B{};
            for (int i = 1; i <= 3; ++i) {
                E[i - 1] = even.electric(i);
                B[i - 1] = even.magnetic(i);
                e2 += E[i - 1] * E[i - 1];
                b2 += B[i - 1] * B[i - 1];
            }
            const std::array<double, 3> cross{E[1] * B[2] - E[2] * B[1],
                                              E[2] * B[0] - E[0] * B[2],
                                              E[0] * B[1] - E[1] * B[0]};
            const auto j = current(v);
            worst = std::max(worst, std::abs(j[0] - (f * f + g * g + e2 + b2)));
            for (int i = 0; i < 3; ++i)
                worst = std::max(worst,
                                 std::abs(j[i + 1] + 2.0 * (f * E[i] + g * B[i] + cross[i])));
            const auto s = spin_geometric(v);
            const double s012 =
                0.5 * (f * f + g * g - e2 - b2 + 2.0 * E[2] * E[2] + 2.0 * B[2] * B[2]);
            worst = std::max(worst, std::abs(s[0] - s012));
        }
        record("closed-form-bilinears", worst, 1e-12);
    }
    {
        double worst = 0.0;
        for (int trial = 0; trial < 20; ++trial) {
            std::array<std::array<double, 4>, 4> omega{};
            for (int mu = 0; mu < 4; ++mu)
                for (int nu = mu + 1; nu < 4; ++nu) {
                    omega[mu][nu] = 0.5 * presets::symmetric_unit(rng);
                    omega[nu][mu] = -omega[mu][nu];
                }
            const Rotor r = Rotor::from_parameters(omega);
            const DiracFieldValue v = detail::random_field_value(rng);
            const auto j = current(v);
            Multivector jmv;
            for (int mu = 0; mu < 4; ++mu) jmv.set_vector_component(mu, j[mu]);
            const Multivector jrot = r.sandwich(jmv);
            const auto jt = current(left_multiply(r.value(), v));
            for (int mu = 0; mu < 4; ++mu)
                worst = std::max(worst, std::abs(jt[mu] - jrot.vector_component(mu)));
        }
        record("lorentz-covariance-current", worst, 1e-10);
    }

    // --- symmetry -----------------------------------------------------------
    {
        double unit = 0.0, grade = 0.0, boost = 0.0;
        for (int trial = 0; trial < 20; ++trial) {
            Multivector gen;
            for (int mu = 0; mu < 4; ++mu)
                for (int nu = mu + 1; nu < 4; ++nu)
                    gen.set_bivector_component(mu, nu, 0.5 * presets::symmetric_unit(rng));
            const Rotor r = Rotor::from_generator(gen);
            unit = std::max(unit, (r.value() * r.reversed() - one).max_abs_coefficient());
            const Multivector m = detail::random_multivector(rng);
            for (int k = 0; k <= 4; ++k) {
                const Multivector a = grade_project(r.sandwich(m), k);
                const Multivector b = r.sandwich(grade_project(m, k));
                grade = std::max(grade, (a - b).max_abs_coefficient());
            }
        }
        const Rotor b = Rotor::boost(1, 0.3);
        const Multivector g0b = b.sandwich(Multivector::basis_vector(0));
        boost = std::max(std::abs(g0b.vector_component(0) - std::cosh(0.3)),
                         std::abs(g0b.vector_component(1) - std::sinh(0.3)));
        boost = std::max({boost, std::abs(g0b.vector_component(2)),
                          std::abs(g0b.vector_component(3))});
        record("rotor-unitarity", unit, 1e-12);
        record("rotor-grade-preservation", grade, 1e-12);
        record("boost-closed-form", boost, 1e-12);
    }
    {
        double worst = 0.0;
        for (int trial = 0; trial < 100; ++trial) {
            const ComplexMultivector a = detail::random_complex(rng);
            const ComplexMultivector conj = complex_conjugate_geometric(a);
            const Mat4c lhs = rep.dirac_image(conj);
            Mat4c rhs = rep.dirac_image(a);
            for (auto& c : rhs.m) c = std::conj(c);
            worst = std::max(worst, lhs.max_abs_diff(rhs));
        }
        record("complex-conjugation-matrix", worst, 1e-13);
    }
    {
        double worst = 0.0;
        const Multivector ps = Multivector::pseudoscalar();
        for (int trial = 0; trial < 100; ++trial) {
            const DiracFieldValue v = detail::random_field_value(rng);
            const DiracFieldValue cc = charge_conjugate(charge_conjugate(v));
            worst = std::max(worst, (cc - v).max_abs_coefficient());
            // psibar = -I psi^c I, compared on the flattened fields
            const ComplexMultivector lhs = j_conjugate(v).flattened();
            const ComplexMultivector inner = charge_conjugate(v).flattened();
            const ComplexMultivector rhs{-1.0 * (ps * inner.re * ps),
                                         -1.0 * (ps * inner.im * ps)};
            worst = std::max(worst, (lhs - rhs).max_abs_coefficient());
        }
        record("conjugation-identities", worst, 1e-13);
    }
    {
        double worst = 0.0;
        const Multivector ps = Multivector::pseudoscalar();
        for (int trial = 0; trial < 100; ++trial) {
            const DiracFieldValue v = detail::random_field_value(rng);
            const DiracFieldValue composed =
                apply_T_value(parity_conjugate(charge_conjugate(v)));
            const DiracFieldValue direct = cpt_conjugate(v);
            worst = std::max(worst, (composed - direct).max_abs_coefficient());
        }
        record("cpt-composition", worst, 1e-12);
    }
    {
        // even/odd closure of the geometric product
        double worst = 0.0;
        for (unsigned a = 0; a < 16; ++a)
            for (unsigned b = 0; b < 16; ++b) {
                const Multivector p =
                    Multivector::basis_blade(a) * Multivector::basis_blade(b);
                const bool even_expected = (blade_grade(a) + blade_grade(b)) % 2 == 0;
                const Multivector bad = even_expected ? odd_part(p) : even_part(p);
                worst = std::max(worst, bad.max_abs_coefficient());
            }
        record("even-odd-closure", worst, 0.0);
    }

    return results;
}

inline bool all_passed(const std::vector<CheckResult>& results) {
    for (const auto& r : results)
        if (!r.passed) return false;
    return true;
}

}  // namespace stadirac

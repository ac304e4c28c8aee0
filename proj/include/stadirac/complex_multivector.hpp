#pragma once

// Complexified spacetime algebra C (x) Cl(1,3). The imaginary unit j is a
// commuting scalar with no geometric meaning; it is kept strictly separate
// from the geometric square roots of -1 inside Cl(1,3).

#include <stdexcept>

#include "stadirac/multivector.hpp"

namespace stadirac {

struct ComplexMultivector {
    Multivector re;
    Multivector im;  // coefficient of j

    constexpr ComplexMultivector() = default;
    constexpr ComplexMultivector(const Multivector& r, const Multivector& i) : re(r), im(i) {}
    explicit constexpr ComplexMultivector(const Multivector& r) : re(r), im() {}

    static constexpr ComplexMultivector unit_j() {
        return {Multivector::zero(), Multivector::scalar(1.0)};
    }

    constexpr ComplexMultivector& operator+=(const ComplexMultivector& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    constexpr ComplexMultivector& operator-=(const ComplexMultivector& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    constexpr ComplexMultivector& operator*=(double s) {
        re *= s;
        im *= s;
        return *this;
    }
    friend constexpr ComplexMultivector operator+(ComplexMultivector a, const ComplexMultivector& b) { return a += b; }
    friend constexpr ComplexMultivector operator-(ComplexMultivector a, const ComplexMultivector& b) { return a -= b; }
    friend constexpr ComplexMultivector operator*(ComplexMultivector a, double s) { return a *= s; }
    friend constexpr ComplexMultivector operator*(double s, ComplexMultivector a) { return a *= s; }
    constexpr ComplexMultivector operator-() const { return {-re, -im}; }

    // (a + jb)(c + jd) = (ac - bd) + j(ad + bc)
    friend constexpr ComplexMultivector operator*(const ComplexMultivector& a, const ComplexMultivector& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend constexpr ComplexMultivector operator*(const Multivector& a, const ComplexMultivector& b) {
        return {a * b.re, a * b.im};
    }
    friend constexpr ComplexMultivector operator*(const ComplexMultivector& a, const Multivector& b) {
        return {a.re * b, a.im * b};
    }

    constexpr double max_abs_coefficient() const {
        const double r = re.max_abs_coefficient();
        const double i = im.max_abs_coefficient();
        return r > i ? r : i;
    }
};

/// j -> -j.
inline constexpr ComplexMultivector j_conjugate(const ComplexMultivector& a) {
    return {a.re, -a.im};
}

inline constexpr ComplexMultivector reverse(const ComplexMultivector& a) {
    return {reverse(a.re), reverse(a.im)};
}

/// Negates odd grades of both parts; equals -I a I under geometric products.
inline constexpr ComplexMultivector grade_involute(const ComplexMultivector& a) {
    return {grade_involution(a.re), grade_involution(a.im)};
}

inline constexpr ComplexMultivector grade_project(const ComplexMultivector& a, int k) {
    return {grade_project(a.re, k), grade_project(a.im, k)};
}

/// The conjugation whose 4x4 Dirac-basis image is entrywise complex
/// conjugation: gamma^2 I jbar(a) I gamma^2.
inline constexpr ComplexMultivector complex_conjugate_geometric(const ComplexMultivector& a) {
    const Multivector g2 = Multivector::basis_vector(2);
    const Multivector ps = Multivector::pseudoscalar();
    const ComplexMultivector jc = j_conjugate(a);
    return {g2 * ps * jc.re * ps * g2, g2 * ps * jc.im * ps * g2};
}

// ---------------------------------------------------------------------------
// DiracFieldValue: the charged field's four real constituents. Component 1
// is (even1 + j odd1), component 2 is (even2 + j odd2); the full field is
// component1 + j component2, which flattens in C (x) Cl(1,3) to
// (even1 - odd2) + j(odd1 + even2).
// ---------------------------------------------------------------------------

class DiracFieldValue {
public:
    constexpr DiracFieldValue() = default;

    static constexpr DiracFieldValue from_constituents(const Multivector& even1,
                                                       const Multivector& odd1,
                                                       const Multivector& even2 = Multivector::zero(),
                                                       const Multivector& odd2 = Multivector::zero()) {
        check_even(even1);
        check_odd(odd1);
        check_even(even2);
        check_odd(odd2);
        DiracFieldValue v;
        v.e1_ = even1;
        v.o1_ = odd1;
        v.e2_ = even2;
        v.o2_ = odd2;
        return v;
    }

    /// From the two complex components psi_1 = even1 + j odd1 and
    /// psi_2 = even2 + j odd2; each must have an even real part and an odd
    /// j part.
    static constexpr DiracFieldValue from_components(const ComplexMultivector& c1,
                                                     const ComplexMultivector& c2 = {}) {
        return from_constituents(c1.re, c1.im, c2.re, c2.im);
    }

    /// Split a general element of C (x) Cl(1,3) by grade parity.
    static constexpr DiracFieldValue from_flattened(const ComplexMultivector& c) {
        DiracFieldValue v;
        v.e1_ = even_part(c.re);
        v.o2_ = -odd_part(c.re);
        v.o1_ = odd_part(c.im);
        v.e2_ = even_part(c.im);
        return v;
    }

    constexpr const Multivector& even1() const { return e1_; }
    constexpr const Multivector& odd1() const { return o1_; }
    constexpr const Multivector& even2() const { return e2_; }
    constexpr const Multivector& odd2() const { return o2_; }

    constexpr ComplexMultivector component1() const { return {e1_, o1_}; }
    constexpr ComplexMultivector component2() const { return {e2_, o2_}; }

    /// The field as one element of C (x) Cl(1,3).
    constexpr ComplexMultivector flattened() const {
        return {e1_ - o2_, o1_ + e2_};
    }

    constexpr bool is_uncharged_sector() const {
        return e2_.max_abs_coefficient() == 0.0 && o2_.max_abs_coefficient() == 0.0;
    }

    constexpr DiracFieldValue& operator+=(const DiracFieldValue& o) {
        e1_ += o.e1_;
        o1_ += o.o1_;
        e2_ += o.e2_;
        o2_ += o.o2_;
        return *this;
    }
    constexpr DiracFieldValue& operator-=(const DiracFieldValue& o) {
        e1_ -= o.e1_;
        o1_ -= o.o1_;
        e2_ -= o.e2_;
        o2_ -= o.o2_;
        return *this;
    }
    constexpr DiracFieldValue& operator*=(double s) {
        e1_ *= s;
        o1_ *= s;
        e2_ *= s;
        o2_ *= s;
        return *this;
    }
    friend constexpr DiracFieldValue operator+(DiracFieldValue a, const DiracFieldValue& b) { return a += b; }
    friend constexpr DiracFieldValue operator-(DiracFieldValue a, const DiracFieldValue& b) { return a -= b; }
    friend constexpr DiracFieldValue operator*(DiracFieldValue a, double s) { return a *= s; }
    friend constexpr DiracFieldValue operator*(double s, DiracFieldValue a) { return a *= s; }

    constexpr double max_abs_coefficient() const {
        double m = e1_.max_abs_coefficient();
        double x = o1_.max_abs_coefficient();
        if (x > m) m = x;
        x = e2_.max_abs_coefficient();
        if (x > m) m = x;
        x = o2_.max_abs_coefficient();
        if (x > m) m = x;
        return m;
    }

    /// Applies a pure multivector map to all four constituents. The map must
    /// preserve grade parity.
    template <typename Fn>
    constexpr DiracFieldValue map_constituents(Fn&& fn) const {
        return from_constituents(fn(e1_), fn(o1_), fn(e2_), fn(o2_));
    }

private:
    static constexpr void check_even(const Multivector& m) {
        if (!m.has_only_grades((1u << 0) | (1u << 2) | (1u << 4)))
            throw std::domain_error("DiracFieldValue: even constituent has odd-grade coefficients");
    }
    static constexpr void check_odd(const Multivector& m) {
        if (!m.has_only_grades((1u << 1) | (1u << 3)))
            throw std::domain_error("DiracFieldValue: odd constituent has even-grade coefficients");
    }

    Multivector e1_, o1_, e2_, o2_;
};

/// psi^c: flips the sign of component 2, turning a charge-e solution into a
/// charge-(-e) solution.
inline constexpr DiracFieldValue charge_conjugate(const DiracFieldValue& v) {
    return DiracFieldValue::from_constituents(v.even1(), v.odd1(), -v.even2(), -v.odd2());
}

/// Flips every factor of j in the nested component form: (e1,-o1,-e2,o2).
/// Satisfies j_bar(v).flattened() == j_conjugate(v.flattened()).
inline constexpr DiracFieldValue j_conjugate(const DiracFieldValue& v) {
    return DiracFieldValue::from_constituents(v.even1(), -v.odd1(), -v.even2(), v.odd2());
}

/// Left-multiplies every constituent by an even multivector. With a rotor
/// this is the spinor-picture Lorentz action (fixed projection spinor).
inline constexpr DiracFieldValue left_multiply(const Multivector& even_factor,
                                               const DiracFieldValue& v) {
    if (!even_factor.has_only_grades((1u << 0) | (1u << 2) | (1u << 4)))
        throw std::domain_error("left_multiply: factor must be even-graded");
    return v.map_constituents([&](const Multivector& m) { return even_factor * m; });
}

inline constexpr DiracFieldValue right_multiply(const DiracFieldValue& v,
                                                const Multivector& even_factor) {
    if (!even_factor.has_only_grades((1u << 0) | (1u << 2) | (1u << 4)))
        throw std::domain_error("right_multiply: factor must be even-graded");
    return v.map_constituents([&](const Multivector& m) { return m * even_factor; });
}

}  // namespace stadirac

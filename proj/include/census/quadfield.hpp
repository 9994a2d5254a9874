#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "census/rational.hpp"

namespace census {

enum class FieldTag { eisenstein, gaussian };

// An imaginary quadratic field Q(lambda) presented by lambda^2 = p*lambda + q.
// Only two instances occur: the Eisenstein field (lambda = rho, a primitive
// cube root of unity, rho^2 = -rho - 1) and the Gaussian field (lambda = i).
struct QuadraticField {
    FieldTag tag;
    Int p;
    Int q;

    static QuadraticField eisenstein() { return {FieldTag::eisenstein, -1, -1}; }
    static QuadraticField gaussian() { return {FieldTag::gaussian, 0, -1}; }

    friend bool operator==(const QuadraticField& f, const QuadraticField& g) {
        return f.tag == g.tag;
    }
    friend bool operator!=(const QuadraticField& f, const QuadraticField& g) {
        return !(f == g);
    }
};

// a + b*lambda with exact rational coefficients.
struct FieldElement {
    Rat a;
    Rat b;
    QuadraticField field;

    FieldElement(Rat a_, Rat b_, QuadraticField f)
        : a(std::move(a_)), b(std::move(b_)), field(f) {}

    bool is_zero() const { return a == 0 && b == 0; }
    bool is_rational() const { return b == 0; }

    friend bool operator==(const FieldElement& x, const FieldElement& y) {
        return x.field == y.field && x.a == y.a && x.b == y.b;
    }
    friend bool operator!=(const FieldElement& x, const FieldElement& y) {
        return !(x == y);
    }
    // lexicographic on (a, b); used only to make sets and reports deterministic
    friend bool operator<(const FieldElement& x, const FieldElement& y) {
        if (x.a != y.a) return x.a < y.a;
        return x.b < y.b;
    }
};

inline void require_same_field(const FieldElement& x, const FieldElement& y) {
    if (x.field != y.field)
        throw std::invalid_argument("mixed-field arithmetic rejected");
}

inline FieldElement fe_zero(const QuadraticField& f) { return {Rat(0), Rat(0), f}; }
inline FieldElement fe_one(const QuadraticField& f) { return {Rat(1), Rat(0), f}; }
inline FieldElement fe_lambda(const QuadraticField& f) { return {Rat(0), Rat(1), f}; }
inline FieldElement fe_rat(const Rat& r, const QuadraticField& f) { return {r, Rat(0), f}; }

// zeta = e^{i*pi/3} = 1 + rho; the paper-facing identity zeta - 1 = zeta^2 = rho
// holds exactly in this representation.
inline FieldElement fe_zeta(const QuadraticField& f) {
    if (f.tag != FieldTag::eisenstein)
        throw std::invalid_argument("zeta is an Eisenstein-field element");
    return {Rat(1), Rat(1), f};
}

inline FieldElement operator+(const FieldElement& x, const FieldElement& y) {
    require_same_field(x, y);
    return {x.a + y.a, x.b + y.b, x.field};
}

inline FieldElement operator-(const FieldElement& x, const FieldElement& y) {
    require_same_field(x, y);
    return {x.a - y.a, x.b - y.b, x.field};
}

inline FieldElement operator-(const FieldElement& x) { return {-x.a, -x.b, x.field}; }

inline FieldElement operator*(const FieldElement& x, const FieldElement& y) {
    require_same_field(x, y);
    // (a + b*l)(c + d*l) = ac + q*bd + (ad + bc + p*bd) * l
    Rat p(x.field.p), q(x.field.q);
    Rat bd = x.b * y.b;
    return {x.a * y.a + q * bd, x.a * y.b + x.b * y.a + p * bd, x.field};
}

inline FieldElement operator*(const Rat& s, const FieldElement& x) {
    return {s * x.a, s * x.b, x.field};
}

// The other root of lambda^2 = p*lambda + q is p - lambda.
inline FieldElement conj(const FieldElement& x) {
    return {x.a + Rat(x.field.p) * x.b, -x.b, x.field};
}

// N(a + b*lambda) = a^2 + p*ab - q*b^2, a nonnegative rational for both fields.
inline Rat norm(const FieldElement& x) {
    return x.a * x.a + Rat(x.field.p) * x.a * x.b - Rat(x.field.q) * x.b * x.b;
}

inline FieldElement operator/(const FieldElement& x, const FieldElement& y) {
    require_same_field(x, y);
    if (y.is_zero()) throw std::domain_error("division by zero");
    Rat n = norm(y);
    FieldElement t = x * conj(y);
    return {t.a / n, t.b / n, x.field};
}

inline FieldElement inverse(const FieldElement& x) {
    return fe_one(x.field) / x;
}

inline FieldElement fe_pow(FieldElement x, unsigned long e) {
    FieldElement r = fe_one(x.field);
    for (; e; --e) r = r * x;
    return r;
}

// Re and Im refer to the standard embedding (rho = e^{2 pi i/3}, i upward);
// the real part of a + b*lambda is a + b*p/2, always rational.
inline Rat real_part(const FieldElement& x) {
    return x.a + Rat(x.field.p) * x.b / 2;
}

// Units of the ring of integers Z[lambda], as a fixed deterministic list:
// powers of zeta (six) for Eisenstein, powers of i (four) for Gaussian.
std::vector<FieldElement> ring_units(const QuadraticField& f);

// True iff x lies in Z[lambda] and is invertible there.
bool is_ring_unit(const FieldElement& x);

std::string fe_str(const FieldElement& x);

}  // namespace census

#pragma once

#include <gmpxx.h>

#include <string>

namespace pentact {

// Element a + b*sqrt(5) of Q(sqrt 5) with exact rational parts.
class Q5 {
public:
    Q5() = default;
    Q5(long a) : a_(a) {}
    Q5(mpq_class a, mpq_class b = 0);

    static Q5 phi();

    const mpq_class& a() const { return a_; }
    const mpq_class& b() const { return b_; }

    Q5& operator+=(const Q5& o);
    Q5& operator-=(const Q5& o);
    Q5& operator*=(const Q5& o);
    Q5& operator/=(const Q5& o);

    friend Q5 operator+(Q5 x, const Q5& y) { return x += y; }
    friend Q5 operator-(Q5 x, const Q5& y) { return x -= y; }
    friend Q5 operator*(Q5 x, const Q5& y) { return x *= y; }
    friend Q5 operator/(Q5 x, const Q5& y) { return x /= y; }
    Q5 operator-() const { return Q5(-a_, -b_); }

    friend bool operator==(const Q5& x, const Q5& y) { return x.a_ == y.a_ && x.b_ == y.b_; }
    friend bool operator!=(const Q5& x, const Q5& y) { return !(x == y); }

    bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
    // a^2 - 5 b^2
    mpq_class norm() const { return a_ * a_ - 5 * b_ * b_; }
    Q5 conjugate() const { return Q5(a_, -b_); }
    Q5 inverse() const;

    // -1, 0 or +1, decided exactly.
    int sign() const;
    double to_double() const;

    std::string to_string() const;

private:
    mpq_class a_ = 0;
    mpq_class b_ = 0;
};

inline int sign(const Q5& x) { return x.sign(); }
inline double to_float(const Q5& x) { return x.to_double(); }

}  // namespace pentact

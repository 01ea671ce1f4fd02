#include "pentact/q5.hpp"

#include "pentact/error.hpp"

#include <mpfr.h>

#include <cmath>

namespace pentact {

Q5::Q5(mpq_class a, mpq_class b) : a_(std::move(a)), b_(std::move(b)) {
    a_.canonicalize();
    b_.canonicalize();
}

Q5 Q5::phi() { return Q5(mpq_class(1, 2), mpq_class(1, 2)); }

Q5& Q5::operator+=(const Q5& o) {
    a_ += o.a_;
    b_ += o.b_;
    return *this;
}

Q5& Q5::operator-=(const Q5& o) {
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
}

Q5& Q5::operator*=(const Q5& o) {
    if (sgn(b_) == 0 && sgn(o.b_) == 0) {
        a_ *= o.a_;
        return *this;
    }
    mpq_class na = a_ * o.a_ + 5 * b_ * o.b_;
    mpq_class nb = a_ * o.b_ + b_ * o.a_;
    a_ = std::move(na);
    b_ = std::move(nb);
    return *this;
}

Q5 Q5::inverse() const {
    if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
    if (sgn(b_) == 0) return Q5(1 / a_);
    mpq_class n = norm();
    return Q5(a_ / n, -b_ / n);
}

Q5& Q5::operator/=(const Q5& o) {
    if (o.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by zero");
    if (sgn(o.b_) == 0) {
        a_ /= o.a_;
        b_ /= o.a_;
        return *this;
    }
    return *this *= o.inverse();
}

int Q5::sign() const {
    int sa = sgn(a_);
    int sb = sgn(b_);
    if (sb == 0) return sa;
    if (sa == 0 || sa == sb) return sb;
    // opposite signs: compare a^2 with 5 b^2
    int c = cmp(a_ * a_, 5 * b_ * b_);
    if (c == 0) return 0;  // unreachable: sqrt 5 is irrational
    return c > 0 ? sa : sb;
}

namespace {

struct Mpfr {
    mpfr_t v;
    explicit Mpfr(mpfr_prec_t p) { mpfr_init2(v, p); }
    ~Mpfr() { mpfr_clear(v); }
    Mpfr(const Mpfr&) = delete;
    Mpfr& operator=(const Mpfr&) = delete;
};

}  // namespace

double Q5::to_double() const {
    if (sgn(b_) == 0) {
        Mpfr r(64);
        mpfr_set_q(r.v, a_.get_mpq_t(), MPFR_RNDN);
        double d = mpfr_get_d(r.v, MPFR_RNDN);
        if (std::isinf(d)) throw Error(ErrorKind::Overflow, "value exceeds double range");
        return d;
    }
    const mpfr_prec_t prec = 256;
    Mpfr s5(prec), t(prec), u(prec);
    mpfr_set_ui(s5.v, 5, MPFR_RNDN);
    mpfr_sqrt(s5.v, s5.v, MPFR_RNDN);
    if (sgn(a_) * sgn(b_) >= 0) {
        mpfr_mul_q(t.v, s5.v, b_.get_mpq_t(), MPFR_RNDN);
        mpfr_add_q(t.v, t.v, a_.get_mpq_t(), MPFR_RNDN);
    } else {
        // a + b sqrt5 = (a^2 - 5b^2) / (a - b sqrt5), denominator without cancellation
        mpq_class n = norm();
        mpfr_mul_q(u.v, s5.v, b_.get_mpq_t(), MPFR_RNDN);
        mpfr_neg(u.v, u.v, MPFR_RNDN);
        mpfr_add_q(u.v, u.v, a_.get_mpq_t(), MPFR_RNDN);
        mpfr_set_q(t.v, n.get_mpq_t(), MPFR_RNDN);
        mpfr_div(t.v, t.v, u.v, MPFR_RNDN);
    }
    double d = mpfr_get_d(t.v, MPFR_RNDN);
    if (std::isinf(d)) throw Error(ErrorKind::Overflow, "value exceeds double range");
    return d;
}

std::string Q5::to_string() const {
    if (sgn(b_) == 0) return a_.get_str();
    return a_.get_str() + (sgn(b_) < 0 ? " - " : " + ") + mpq_class(abs(b_)).get_str() + "*sqrt5";
}

}  // namespace pentact

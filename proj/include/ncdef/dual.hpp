#pragma once

#include "ncdef/rational.hpp"

namespace ncdef {

// Dual number a + b*eps with eps^2 = 0, over Rational. Carrier of the
// first-order deformation parameter hbar in relation paths.
class Dual {
public:
    Dual() : val_(0), eps_(0) {}
    Dual(long n) : val_(n), eps_(0) {}
    Dual(int n) : val_(n), eps_(0) {}
    Dual(Rational v) : val_(std::move(v)), eps_(0) {}
    Dual(Rational v, Rational e) : val_(std::move(v)), eps_(std::move(e)) {}

    static Dual epsilon() { return Dual(Rational(0), Rational(1)); }

    const Rational& value() const { return val_; }
    const Rational& eps() const { return eps_; }

    bool is_zero() const { return val_.is_zero() && eps_.is_zero(); }
    // Units of the dual-number ring are exactly the elements with
    // invertible value part.
    bool is_unit() const { return !val_.is_zero(); }
    bool is_one() const { return val_.is_one() && eps_.is_zero(); }

    Dual operator-() const { return Dual(-val_, -eps_); }
    Dual& operator+=(const Dual& o) { val_ += o.val_; eps_ += o.eps_; return *this; }
    Dual& operator-=(const Dual& o) { val_ -= o.val_; eps_ -= o.eps_; return *this; }
    Dual& operator*=(const Dual& o) {
        // (a + b eps)(c + d eps) = ac + (ad + bc) eps
        eps_ = val_ * o.eps_ + eps_ * o.val_;
        val_ *= o.val_;
        return *this;
    }
    Dual& operator/=(const Dual& o) { return *this *= o.inv(); }

    Dual inv() const {
        // (a + b eps)^{-1} = 1/a - (b/a^2) eps
        Rational ia = val_.inv();
        return Dual(ia, -eps_ * ia * ia);
    }

    friend Dual operator+(Dual a, const Dual& b) { return a += b; }
    friend Dual operator-(Dual a, const Dual& b) { return a -= b; }
    friend Dual operator*(Dual a, const Dual& b) { return a *= b; }
    friend Dual operator/(Dual a, const Dual& b) { return a /= b; }
    friend bool operator==(const Dual& a, const Dual& b) {
        return a.val_ == b.val_ && a.eps_ == b.eps_;
    }
    friend bool operator!=(const Dual& a, const Dual& b) { return !(a == b); }

    std::string pretty() const {
        return val_.pretty() + " + " + eps_.pretty() + "*eps";
    }

private:
    Rational val_, eps_;
};

}  // namespace ncdef

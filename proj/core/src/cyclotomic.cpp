#include "lame/cyclotomic.hpp"

namespace lame {

QPoly cyclotomic_poly(int m)
{
    if (m < 1) throw DomainError("cyclotomic_poly: m >= 1");
    QPoly p = QPoly::monomial(m) - QPoly::constant(1);
    for (int d = 1; d < m; ++d)
        if (m % d == 0) p = divmod(p, cyclotomic_poly(d)).first;
    return p;
}

Cyclotomic::Cyclotomic(QPoly v, std::shared_ptr<const QPoly> mod) : v_(std::move(v)), mod_(std::move(mod))
{
    if (mod_) v_ = divmod(v_, *mod_).second;
}

Cyclotomic Cyclotomic::generator(int m)
{
    auto mod = std::make_shared<const QPoly>(cyclotomic_poly(m));
    return Cyclotomic(QPoly::monomial(1), mod);
}

std::shared_ptr<const QPoly> Cyclotomic::pick(const Cyclotomic& a, const Cyclotomic& b) { return a.mod_ ? a.mod_ : b.mod_; }

Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) { return Cyclotomic(a.v_ + b.v_, Cyclotomic::pick(a, b)); }
Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) { return Cyclotomic(a.v_ - b.v_, Cyclotomic::pick(a, b)); }
Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) { return Cyclotomic(a.v_ * b.v_, Cyclotomic::pick(a, b)); }
Cyclotomic operator-(const Cyclotomic& a) { return Cyclotomic(-a.v_, a.mod_); }

Cyclotomic Cyclotomic::inverse() const
{
    if (v_.is_zero()) throw DomainError("division by zero in cyclotomic field");
    if (!mod_ || v_.degree() == 0) return Cyclotomic(QPoly::constant(Rational(1) / v_[0]), mod_);
    QPoly r0 = *mod_, r1 = v_;
    QPoly s0, s1 = QPoly::constant(1);
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        QPoly next = s0 - q * s1;
        s0 = std::move(s1);
        s1 = std::move(next);
    }
    // r0 is a nonzero constant since Phi_m is irreducible
    return Cyclotomic(s0 * (Rational(1) / r0[0]), mod_);
}

Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b)
{
    Cyclotomic bb = b;
    if (!bb.mod_) bb.mod_ = a.mod_;
    return a * bb.inverse();
}

} // namespace lame

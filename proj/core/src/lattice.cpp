#include "lame/lattice.hpp"

#include <cmath>
#include <numbers>

namespace lame {

namespace {

constexpr double pi = std::numbers::pi;
const cx I(0.0, 1.0);

long round_half_down(double x) { return static_cast<long>(std::floor(x + 0.5)); }

// sum_{k>=1} sigma_p(k) x^k, truncated once terms are negligible
cx divisor_series(cx x, int p)
{
    cx acc = 0.0;
    cx xk = 1.0;
    for (int k = 1; k < 400; ++k) {
        xk *= x;
        if (std::abs(xk) < 1e-22) break;
        double sig = 0.0;
        for (int d = 1; d <= k; ++d)
            if (k % d == 0) sig += std::pow(static_cast<double>(d), p);
        acc += sig * xk;
    }
    return acc;
}

} // namespace

Lattice::Lattice(cx omega1, cx omega2) : w1_(omega1), w2_(omega2)
{
    if (omega1 == cx(0.0) || !(std::imag(omega2 / omega1) > 0.0))
        throw OrientationError("lattice basis must satisfy Im(omega2/omega1) > 0");

    r1_ = w1_;
    r2_ = w2_;
    for (int guard = 0; guard < 10000; ++guard) {
        const long k = std::lround(std::real(r2_ / r1_));
        if (k != 0) {
            r2_ -= static_cast<double>(k) * r1_;
            a_ += k * b_;
            c_ += k * d_;
        }
        if (std::abs(r2_ / r1_) < 1.0 - 1e-14) {
            const cx old1 = r1_;
            r1_ = r2_;
            r2_ = -old1;
            const long na = b_, nb = -a_, nc = d_, nd = -c_;
            a_ = na;
            b_ = nb;
            c_ = nc;
            d_ = nd;
            continue;
        }
        break;
    }
    rtau_ = r2_ / r1_;

    const double im = std::imag(rtau_);
    int kmax = 2;
    while (pi * im * kmax * kmax < 46.0) ++kmax;
    nome_terms_.clear();
    // stored as logs to keep large-Im(tau) evaluations in range
    for (int k = 0; k <= kmax; ++k) {
        const double h = k + 0.5;
        nome_terms_.push_back(std::log(2.0) + I * pi * rtau_ * h * h + I * pi * static_cast<double>(k));
    }
    cx d1 = 0.0, d3 = 0.0;
    for (int k = 0; k <= kmax; ++k) {
        const double a = 2.0 * k + 1.0;
        const cx t = std::exp(nome_terms_[static_cast<std::size_t>(k)]);
        d1 += t * a;
        d3 -= t * a * a * a;
    }
    th1p0_ = d1;
    reta1_ = -pi * pi * d3 / (3.0 * r1_ * d1);
    reta2_ = 2.0 * zeta_cell(r2_ / 2.0);

    eta1_ = static_cast<double>(a_) * reta1_ + static_cast<double>(b_) * reta2_;
    eta2_ = static_cast<double>(c_) * reta1_ + static_cast<double>(d_) * reta2_;

    const cx qq = std::exp(2.0 * pi * I * rtau_);
    const cx E4 = 1.0 + 240.0 * divisor_series(qq, 3);
    const cx E6 = 1.0 - 504.0 * divisor_series(qq, 5);
    const cx u = 2.0 * pi / r1_;
    const cx u2 = u * u;
    g2_ = u2 * u2 * E4 / 12.0;
    g3_ = u2 * u2 * u2 * E6 / 216.0;

    e_[0] = wp(w1_ / 2.0);
    e_[1] = wp(w2_ / 2.0);
    e_[2] = wp(omega3() / 2.0);
    scale_ = std::max({std::abs(e_[0]), std::abs(e_[1]), std::abs(e_[2])});
}

cx Lattice::q() const { return std::exp(2.0 * pi * I * tau()); }

Coords Lattice::coords(cx z) const
{
    const cx x = z / w1_;
    const cx tt = tau();
    const double t = std::imag(x) / std::imag(tt);
    return {std::real(x) - t * std::real(tt), t};
}

Coords Lattice::canonical_coords(cx z) const
{
    Coords c = coords(z);
    c.s -= std::floor(c.s);
    c.t -= std::floor(c.t);
    if (c.s >= 1.0) c.s = 0.0;
    if (c.t >= 1.0) c.t = 0.0;
    return c;
}

cx Lattice::canonical(cx z) const
{
    const Coords c = coords(z);
    return z - std::floor(c.s) * w1_ - std::floor(c.t) * w2_;
}

cx Lattice::centered(cx z) const
{
    const Coords c = coords(z);
    return z - static_cast<double>(round_half_down(c.s)) * w1_ - static_cast<double>(round_half_down(c.t)) * w2_;
}

bool Lattice::on_lattice(cx z, double tol) const
{
    const Coords c = coords(z);
    return std::abs(c.s - std::round(c.s)) < tol && std::abs(c.t - std::round(c.t)) < tol;
}

cx Lattice::eta_of(cx omega) const
{
    const Coords c = coords(omega);
    const double m = std::round(c.s), n = std::round(c.t);
    const double tol = 1e-9 * std::max({1.0, std::abs(m), std::abs(n)});
    if (std::abs(c.s - m) > tol || std::abs(c.t - n) > tol) throw DomainError("eta_of: argument is not a lattice vector");
    return eta_of(static_cast<long>(m), static_cast<long>(n));
}

cx Lattice::eta_real(cx z) const
{
    const Coords c = coords(z);
    return c.s * eta1_ + c.t * eta2_;
}

Lattice::Split Lattice::split(cx z) const
{
    const cx x = z / r1_;
    const double t = std::imag(x) / std::imag(rtau_);
    const double s = std::real(x) - t * std::real(rtau_);
    Split sp;
    sp.m = round_half_down(s);
    sp.n = round_half_down(t);
    sp.z0 = z - static_cast<double>(sp.m) * r1_ - static_cast<double>(sp.n) * r2_;
    return sp;
}

Lattice::Theta Lattice::theta(cx v) const
{
    cx th = 0.0, d1 = 0.0, d2 = 0.0, d3 = 0.0;
    for (std::size_t k = 0; k < nome_terms_.size(); ++k) {
        const double a = 2.0 * static_cast<double>(k) + 1.0;
        const cx ep = std::exp(nome_terms_[k] + I * a * v);
        const cx em = std::exp(nome_terms_[k] - I * a * v);
        const cx s = (ep - em) / (2.0 * I);
        const cx c = (ep + em) / 2.0;
        th += s;
        d1 += a * c;
        d2 -= a * a * s;
        d3 -= a * a * a * c;
    }
    Theta r;
    r.th = th;
    r.l1 = d1 / th;
    const cx q2 = d2 / th;
    r.l2 = q2 - r.l1 * r.l1;
    r.l3 = d3 / th - 3.0 * r.l1 * q2 + 2.0 * r.l1 * r.l1 * r.l1;
    return r;
}

void Lattice::check_pole(const Split& sp, const char* what) const
{
    if (std::abs(sp.z0) <= 1e-14 * std::abs(r1_)) throw PoleError(std::string(what) + " evaluated at a lattice point");
}

cx Lattice::zeta_cell(cx z0) const
{
    const Theta t = theta(pi * z0 / r1_);
    return reta1_ * z0 / r1_ + (pi / r1_) * t.l1;
}

Lattice::Values Lattice::all(cx z) const
{
    const Split sp = split(z);
    check_pole(sp, "wp/zeta");
    const Theta t = theta(pi * sp.z0 / r1_);
    const cx k = pi / r1_;
    Values v;
    v.wp = -reta1_ / r1_ - k * k * t.l2;
    v.wp_prime = -k * k * k * t.l3;
    v.zeta = reta1_ * sp.z0 / r1_ + k * t.l1 + static_cast<double>(sp.m) * reta1_ + static_cast<double>(sp.n) * reta2_;
    return v;
}

cx Lattice::wp(cx z) const
{
    const Split sp = split(z);
    check_pole(sp, "wp");
    const Theta t = theta(pi * sp.z0 / r1_);
    const cx k = pi / r1_;
    return -reta1_ / r1_ - k * k * t.l2;
}

cx Lattice::wp_prime(cx z) const
{
    const Split sp = split(z);
    check_pole(sp, "wp'");
    const Theta t = theta(pi * sp.z0 / r1_);
    const cx k = pi / r1_;
    return -k * k * k * t.l3;
}

cx Lattice::zeta(cx z) const
{
    const Split sp = split(z);
    check_pole(sp, "zeta");
    return zeta_cell(sp.z0) + static_cast<double>(sp.m) * reta1_ + static_cast<double>(sp.n) * reta2_;
}

cx Lattice::log_sigma_cell(cx z0) const
{
    const Theta t = theta(pi * z0 / r1_);
    return std::log(r1_ / pi) + reta1_ * z0 * z0 / (2.0 * r1_) + std::log(t.th) - std::log(th1p0_);
}

cx Lattice::log_sigma(cx z) const
{
    const Split sp = split(z);
    check_pole(sp, "log sigma");
    const cx w = static_cast<double>(sp.m) * r1_ + static_cast<double>(sp.n) * r2_;
    const cx ew = static_cast<double>(sp.m) * reta1_ + static_cast<double>(sp.n) * reta2_;
    cx out = log_sigma_cell(sp.z0) + ew * (sp.z0 + w / 2.0);
    if (sigma_sign(sp.m, sp.n) < 0) out += I * pi;
    return out;
}

cx Lattice::sigma(cx z) const
{
    const Split sp = split(z);
    if (std::abs(sp.z0) == 0.0) return 0.0;
    const cx w = static_cast<double>(sp.m) * r1_ + static_cast<double>(sp.n) * r2_;
    const cx ew = static_cast<double>(sp.m) * reta1_ + static_cast<double>(sp.n) * reta2_;
    const Theta t = theta(pi * sp.z0 / r1_);
    const cx cell = (r1_ / pi) * std::exp(reta1_ * sp.z0 * sp.z0 / (2.0 * r1_)) * t.th / th1p0_;
    return sigma_sign(sp.m, sp.n) * std::exp(ew * (sp.z0 + w / 2.0)) * cell;
}

double addition_residual(cx z, cx u, const Lattice& L)
{
    const double tol = 1e-9;
    if (L.on_lattice(z, tol) || L.on_lattice(u, tol) || L.on_lattice(z - u, tol) || L.on_lattice(z + u, tol))
        throw DomainError("addition_residual: z, u, z-u and z+u must avoid the lattice");
    const cx lhs = L.wp_prime(u) / (L.wp(z) - L.wp(u));
    const cx rhs = L.zeta(z - u) - L.zeta(z + u) + 2.0 * L.zeta(u);
    return std::abs(lhs - rhs);
}

std::vector<cx> wp_laurent(const Lattice& L, int kmax)
{
    std::vector<cx> c(static_cast<std::size_t>(std::max(kmax, 3)) + 1, cx(0.0));
    c[2] = L.g2() / 20.0;
    c[3] = L.g3() / 28.0;
    for (int k = 4; k <= kmax; ++k) {
        cx acc = 0.0;
        for (int m = 2; m <= k - 2; ++m) acc += c[static_cast<std::size_t>(m)] * c[static_cast<std::size_t>(k - m)];
        c[static_cast<std::size_t>(k)] = 3.0 / ((2.0 * k + 1.0) * (k - 3.0)) * acc;
    }
    c.resize(static_cast<std::size_t>(kmax) + 1);
    return c;
}

cx eisenstein(const Lattice& L, int k)
{
    if (k < 2) throw DomainError("eisenstein: k >= 2 required");
    return wp_laurent(L, k)[static_cast<std::size_t>(k)] / (2.0 * k - 1.0);
}

} // namespace lame

#include "lame/hauptmodul.hpp"

#include <cmath>
#include <numbers>

namespace lame {

namespace {

constexpr double pi = std::numbers::pi;
const cx I(0.0, 1.0);

} // namespace

PowerSeries::PowerSeries(std::vector<cx> c, char var) : c_(std::move(c)), var_(var)
{
    if (c_.empty()) c_.push_back(0.0);
}

cx PowerSeries::operator()(cx x) const
{
    cx acc = 0.0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b)
{
    const int K = std::min(a.truncation(), b.truncation());
    PowerSeries out(K, a.variable());
    for (int k = 0; k <= K; ++k) out[k] = a[k] + b[k];
    return out;
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b)
{
    const int K = std::min(a.truncation(), b.truncation());
    PowerSeries out(K, a.variable());
    for (int i = 0; i <= K; ++i)
        for (int j = 0; i + j <= K; ++j) out[i + j] += a[i] * b[j];
    return out;
}

PowerSeries compose(const PowerSeries& a, const PowerSeries& b)
{
    if (b[0] != cx(0.0)) throw DomainError("compose: inner series must vanish at 0");
    const int K = std::min(a.truncation(), b.truncation());
    // Horner in series arithmetic
    PowerSeries out(K, b.variable());
    for (int k = a.truncation(); k >= 0; --k) {
        out = out * b;
        out[0] += a[k];
    }
    return out;
}

DevMap4Pi::DevMap4Pi(cx tau) : tau_(tau), L_(1.0, tau)
{
    wq_ = L_.wp(0.25);
    wqt_ = L_.wp(0.25 + tau / 2.0);
    const cx w = L_.wp(tau / 4.0);
    A_ = (w - wqt_) / (w - wq_);
}

cx DevMap4Pi::operator()(cx z) const
{
    const cx h = z / 2.0;
    if (L_.on_lattice(h, 1e-15)) return A_;
    const cx P = L_.wp(h);
    const cx den = P - wqt_;
    const cx out = A_ * (P - wq_) / den;
    if (den == cx(0.0) || !std::isfinite(out.real()) || !std::isfinite(out.imag()))
        throw PoleError("f4pi: z is a pole");
    return out;
}

cx DevMap4Pi::sigma_form(cx z) const
{
    const cx h = z / 2.0;
    const cx num = L_.log_sigma(h - 0.25) + L_.log_sigma(h + 0.25);
    const cx den = L_.log_sigma(h - 0.25 - tau_ / 2.0) + L_.log_sigma(h + 0.25 + tau_ / 2.0);
    return -std::exp(0.25 * L_.eta2() * (1.0 + tau_) + num - den);
}

double DevMap4Pi::pole_distance() const
{
    // poles at +-(1/2 + tau) + 2 Lambda; distance = 2 min |(1/2 + tau)/2 + lambda|
    const cx p = (0.5 + tau_) / 2.0;
    const cx r1 = L_.reduced_omega1(), r2 = L_.reduced_omega2();
    const double det = std::imag(std::conj(r1) * r2);
    const double s = std::imag(std::conj(p) * r2) / det;
    const double t = std::imag(std::conj(r1) * p) / det;
    const double s0 = std::round(s), t0 = std::round(t);
    double best = INFINITY;
    for (int i = -2; i <= 2; ++i)
        for (int j = -2; j <= 2; ++j) best = std::min(best, std::abs(p - (s0 + i) * r1 - (t0 + j) * r2));
    return 2.0 * best;
}

cx f4pi(cx z, cx tau) { return DevMap4Pi(tau)(z); }
cx hauptmodul(cx tau) { return DevMap4Pi(tau).at_zero(); }

Mobius mobius_of(Transform which)
{
    if (which == Transform::T) return {std::polar(1.0, pi / 4.0), 0.0, 0.0, std::polar(1.0, -pi / 4.0)};
    const cx s = I / std::sqrt(2.0);
    return {-s, s, s, s};
}

cx act(const Mobius& m, cx f) { return (m[0] * f + m[1]) / (m[2] * f + m[3]); }

namespace {

Mobius mul(const Mobius& a, const Mobius& b)
{
    return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3], a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

std::pair<cx, cx> step(Transform t, cx z, cx tau)
{
    if (t == Transform::T) return {z, tau + 1.0};
    return {-z / tau, -1.0 / tau};
}

double rel(cx a, cx b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

} // namespace

double transform_check(cx tau, Transform which)
{
    if (!(tau.imag() > 0.0)) throw DomainError("transform_check: Im tau > 0 required");
    const DevMap4Pi f(tau);
    const DevMap4Pi g(step(which, 0.0, tau).second);
    const Mobius m = mobius_of(which);
    static const double pts[][2] = {{0.17, 0.11}, {0.31, -0.23}, {-0.42, 0.19}, {0.07, 0.38}, {0.23, 0.29},
                                    {-0.13, -0.33}, {0.36, 0.04}, {-0.27, 0.41}, {0.44, -0.12}, {0.02, -0.47}};
    double worst = 0.0;
    int used = 0;
    for (const auto& c : pts) {
        const cx z = f.lattice().from_coords(c[0], c[1]);
        try {
            const cx fz = f(z);
            const cx lhs = g(step(which, z, tau).first);
            if (std::abs(fz) > 1e6 || std::abs(lhs) > 1e6 || std::abs(fz + 1.0) < 1e-6) continue;
            worst = std::max(worst, rel(lhs, act(m, fz)));
            ++used;
        } catch (const PoleError&) {
        }
    }
    if (used < 5) throw NumericsError("transform_check: too few usable sample points");
    return worst;
}

WordReport word_check(cx tau, cx z, const std::string& word)
{
    const cx f0 = f4pi(z, tau);
    WordReport r{tau, z, {1.0, 0.0, 0.0, 1.0}, 0.0};
    for (char ch : word) {
        Transform t;
        if (ch == 'T') t = Transform::T;
        else if (ch == 'S') t = Transform::S;
        else throw DomainError(std::string("word_check: unknown letter ") + ch);
        const auto next = step(t, r.z_end, r.tau_end);
        r.z_end = next.first;
        r.tau_end = next.second;
        r.action = mul(mobius_of(t), r.action);
    }
    r.residual = rel(f4pi(r.z_end, r.tau_end), act(r.action, f0));
    return r;
}

PowerSeries a_coeffs(cx tau, int K)
{
    if (K < 0 || K > 32) throw DomainError("a_coeffs: 0 <= K <= 32");
    const DevMap4Pi f(tau);
    constexpr int M = 256;
    double r = 0.5 * f.pole_distance();
    for (int attempt = 0; attempt < 6; ++attempt, r *= 0.5) {
        std::vector<cx> vals(M);
        bool ok = true;
        for (int m = 0; m < M && ok; ++m) {
            try {
                vals[static_cast<std::size_t>(m)] = f(std::polar(r, 2.0 * pi * m / M));
            } catch (const PoleError&) {
                ok = false;
            }
            const cx v = vals[static_cast<std::size_t>(m)];
            ok = ok && std::isfinite(v.real()) && std::isfinite(v.imag());
        }
        if (!ok) continue;
        PowerSeries out(K, 'z');
        for (int k = 0; k <= K; ++k) {
            cx a = 0.0;
            for (int m = 0; m < M; ++m) a += vals[static_cast<std::size_t>(m)] * std::polar(1.0, -2.0 * pi * k * m / M);
            out[k] = a / static_cast<double>(M) / std::pow(r, k);
        }
        return out;
    }
    throw NumericsError("a_coeffs: contour keeps meeting a pole");
}

} // namespace lame

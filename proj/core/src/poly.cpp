#include "lame/poly.hpp"

#include <cmath>
#include <numbers>

#include <Eigen/Dense>

namespace lame {

CxPoly chop(const CxPoly& p, double rel)
{
    std::vector<cx> c = p.coeffs();
    double big = 0.0;
    for (const auto& v : c) big = std::max(big, std::abs(v));
    while (!c.empty() && std::abs(c.back()) <= rel * big) c.pop_back();
    return CxPoly(std::move(c));
}

namespace {

// p and p' at x via Horner
std::pair<cx, cx> eval_with_derivative(const std::vector<cx>& c, cx x)
{
    cx p = 0.0, dp = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        dp = dp * x + p;
        p = p * x + *it;
    }
    return {p, dp};
}

} // namespace

std::vector<cx> roots(const CxPoly& poly)
{
    if (poly.is_zero()) throw DomainError("roots of the zero polynomial");
    std::vector<cx> c = poly.coeffs();
    std::vector<cx> out;
    // roots at the origin are exact; strip them so the iteration sees a nonzero constant term
    std::size_t zeros = 0;
    while (zeros < c.size() && c[zeros] == cx(0.0)) ++zeros;
    out.assign(zeros, cx(0.0));
    c.erase(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(zeros));
    const int n = static_cast<int>(c.size()) - 1;
    if (n <= 0) return out;
    const cx lead = c.back();
    for (auto& v : c) v /= lead;
    if (n == 1) {
        out.push_back(-c[0]);
        return out;
    }

    // Fujiwara-type radius to place the starting circle
    double radius = 0.0;
    for (int k = 0; k < n; ++k)
        radius = std::max(radius, std::pow(std::abs(c[static_cast<std::size_t>(k)]), 1.0 / (n - k)));
    radius = std::max(radius, 1e-300);

    std::vector<cx> z(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        const double ang = 2.0 * std::numbers::pi * (k + 0.25) / n + 0.4;
        z[static_cast<std::size_t>(k)] = std::polar(radius, ang);
    }

    bool converged = false;
    for (int iter = 0; iter < 2000 && !converged; ++iter) {
        converged = true;
        for (int i = 0; i < n; ++i) {
            auto& zi = z[static_cast<std::size_t>(i)];
            auto [p, dp] = eval_with_derivative(c, zi);
            if (p == cx(0.0)) continue;
            const cx ratio = p / dp;
            cx sum = 0.0;
            for (int j = 0; j < n; ++j)
                if (j != i) sum += 1.0 / (zi - z[static_cast<std::size_t>(j)]);
            cx w = ratio / (1.0 - ratio * sum);
            if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) w = ratio;
            zi -= w;
            if (std::abs(w) > 1e-15 * std::max(1.0, std::abs(zi))) converged = false;
        }
    }

    // Newton polish against the undeflated polynomial; keep only steps that help
    for (auto& zi : z) {
        for (int k = 0; k < 4; ++k) {
            auto [p, dp] = eval_with_derivative(c, zi);
            if (dp == cx(0.0)) break;
            const cx cand = zi - p / dp;
            if (std::abs(eval_with_derivative(c, cand).first) < std::abs(p)) zi = cand;
            else break;
        }
    }
    if (!converged) {
        // multiple roots converge only linearly; accept if the residual is tiny anyway
        double scale = 0.0;
        for (const auto& v : c) scale = std::max(scale, std::abs(v));
        for (const auto& zi : z) {
            const double mag = std::pow(std::max(1.0, std::abs(zi)), n);
            if (std::abs(eval_with_derivative(c, zi).first) > 1e-8 * scale * mag)
                throw NumericsError("polynomial root finder did not converge");
        }
    }
    out.insert(out.end(), z.begin(), z.end());
    return out;
}

std::vector<std::pair<cx, int>> cluster_roots(const std::vector<cx>& rs, double radius)
{
    const std::size_t n = rs.size();
    std::vector<int> label(n, -1);
    int next = 0;
    // single-linkage: flood fill over the "closer than radius" graph
    for (std::size_t i = 0; i < n; ++i) {
        if (label[i] >= 0) continue;
        label[i] = next;
        std::vector<std::size_t> stack{i};
        while (!stack.empty()) {
            const std::size_t a = stack.back();
            stack.pop_back();
            for (std::size_t b = 0; b < n; ++b)
                if (label[b] < 0 && std::abs(rs[a] - rs[b]) < radius) {
                    label[b] = next;
                    stack.push_back(b);
                }
        }
        ++next;
    }
    std::vector<std::pair<cx, int>> out(static_cast<std::size_t>(next), {cx(0.0), 0});
    for (std::size_t i = 0; i < n; ++i) {
        auto& slot = out[static_cast<std::size_t>(label[i])];
        slot.first += rs[i];
        slot.second += 1;
    }
    for (auto& [v, m] : out) v /= static_cast<double>(m);
    return out;
}

cx resultant(const CxPoly& a, const CxPoly& b)
{
    const int m = a.degree();
    const int n = b.degree();
    if (m < 0 || n < 0) return 0.0;
    if (m == 0) return std::pow(a.leading(), n);
    if (n == 0) return std::pow(b.leading(), m);
    const int size = m + n;
    Eigen::MatrixXcd s = Eigen::MatrixXcd::Zero(size, size);
    for (int r = 0; r < n; ++r)
        for (int k = 0; k <= m; ++k) s(r, r + k) = a[m - k];
    for (int r = 0; r < m; ++r)
        for (int k = 0; k <= n; ++k) s(n + r, r + k) = b[n - k];
    return s.partialPivLu().determinant();
}

cx discriminant(const CxPoly& p)
{
    const int d = p.degree();
    if (d < 1) throw DomainError("discriminant needs degree >= 1");
    if (d == 1) return 1.0;
    // Res(p, p') = lead^(d-1) * prod p'(r_i); the product form keeps a nearly
    // repeated root accurate where the Sylvester determinant cancels badly
    const CxPoly dp = p.derivative();
    cx prod = 1.0;
    for (const auto& r : roots(p)) prod *= dp(r);
    const double sign = ((d * (d - 1) / 2) % 2 == 0) ? 1.0 : -1.0;
    return sign * std::pow(p.leading(), d - 2) * prod;
}

CxPoly from_roots(const std::vector<cx>& rs)
{
    CxPoly out = CxPoly::constant(1.0);
    for (const auto& r : rs) out = out * CxPoly{-r, 1.0};
    return out;
}

} // namespace lame

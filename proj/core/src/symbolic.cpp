#include "lame/symbolic.hpp"

#include <sstream>
#include <vector>

namespace lame {

SymPoly::SymPoly(const Rational& c)
{
    if (c != 0) t_[{0, 0, 0}] = c;
}

SymPoly SymPoly::var(int which)
{
    SymPoly p;
    Monomial m{0, 0, 0};
    m[static_cast<std::size_t>(which)] = 1;
    p.t_[m] = 1;
    return p;
}

Rational SymPoly::coeff(int b, int i, int j) const
{
    auto it = t_.find({b, i, j});
    return it == t_.end() ? Rational(0) : it->second;
}

int SymPoly::degree_in_B() const
{
    int d = -1;
    for (const auto& [m, c] : t_) d = std::max(d, m[0]);
    return d;
}

SymPoly& SymPoly::operator+=(const SymPoly& o)
{
    for (const auto& [m, c] : o.t_) {
        Rational& slot = t_[m];
        slot += c;
        if (slot == 0) t_.erase(m);
    }
    return *this;
}

SymPoly& SymPoly::operator-=(const SymPoly& o)
{
    for (const auto& [m, c] : o.t_) {
        Rational& slot = t_[m];
        slot -= c;
        if (slot == 0) t_.erase(m);
    }
    return *this;
}

SymPoly& SymPoly::operator*=(const Rational& s)
{
    if (s == 0) {
        t_.clear();
        return *this;
    }
    for (auto& [m, c] : t_) c *= s;
    return *this;
}

SymPoly operator*(const SymPoly& a, const SymPoly& b)
{
    SymPoly r;
    for (const auto& [ma, ca] : a.t_)
        for (const auto& [mb, cb] : b.t_) {
            const SymPoly::Monomial m{ma[0] + mb[0], ma[1] + mb[1], ma[2] + mb[2]};
            Rational& slot = r.t_[m];
            slot += ca * cb;
            if (slot == 0) r.t_.erase(m);
        }
    return r;
}

cx SymPoly::eval(cx b, cx g2, cx g3) const
{
    cx acc = 0.0;
    for (const auto& [m, c] : t_)
        acc += static_cast<double>(c) * std::pow(b, m[0]) * std::pow(g2, m[1]) * std::pow(g3, m[2]);
    return acc;
}

CxPoly SymPoly::in_B(cx g2, cx g3) const
{
    const int d = degree_in_B();
    if (d < 0) return {};
    std::vector<cx> c(static_cast<std::size_t>(d) + 1, cx(0.0));
    for (const auto& [m, coef] : t_)
        c[static_cast<std::size_t>(m[0])] += static_cast<double>(coef) * std::pow(g2, m[1]) * std::pow(g3, m[2]);
    return CxPoly(std::move(c));
}

SymPoly SymPoly::leading_in_B() const
{
    const int d = degree_in_B();
    SymPoly r;
    for (const auto& [m, c] : t_)
        if (m[0] == d) r.t_[{0, m[1], m[2]}] = c;
    return r;
}

std::string SymPoly::to_string() const
{
    if (t_.empty()) return "0";
    // descending in B, then in g2
    std::vector<std::pair<Monomial, Rational>> items(t_.begin(), t_.end());
    std::sort(items.begin(), items.end(), [](const auto& x, const auto& y) {
        if (x.first[0] != y.first[0]) return x.first[0] > y.first[0];
        if (x.first[1] != y.first[1]) return x.first[1] < y.first[1];
        return x.first[2] < y.first[2];
    });
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : items) {
        Rational mag = c < 0 ? Rational(-c) : c;
        if (first) os << (c < 0 ? "-" : "");
        else os << (c < 0 ? " - " : " + ");
        first = false;
        const bool bare = (m[0] + m[1] + m[2]) > 0 && mag == 1;
        std::string factors;
        auto add = [&](const char* name, int e) {
            if (e == 0) return;
            if (!factors.empty()) factors += "*";
            factors += name;
            if (e > 1) factors += "^" + std::to_string(e);
        };
        add("g2", m[1]);
        add("g3", m[2]);
        add("B", m[0]);
        if (bare) os << factors;
        else {
            os << mag;
            if (!factors.empty()) os << "*" << factors;
        }
    }
    return os.str();
}

} // namespace lame

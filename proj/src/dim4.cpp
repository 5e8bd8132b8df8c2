#include "sympcheck/dim4.hpp"

#include "sympcheck/linalg.hpp"
#include "sympcheck/rational.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <stdexcept>

namespace sympcheck::dim4 {

namespace {

RationalMatrix to_rational(const IntMatrix& m)
{
    RationalMatrix out(m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
        for (long v : m[i])
            out[i].emplace_back(v);
    return out;
}

int mod2(long x)
{
    return static_cast<int>(((x % 2) + 2) % 2);
}

/// Solves (Q mod 2) c = w over F2; Q is invertible mod 2 when unimodular.
std::vector<int> characteristic_parity(const IntMatrix& q, const std::vector<int>& w)
{
    const int n = static_cast<int>(q.size());
    std::vector<std::vector<int>> m(n, std::vector<int>(n + 1));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j)
            m[i][j] = mod2(q[i][j]);
        m[i][n] = w[i];
    }
    for (int c = 0; c < n; ++c) {
        int p = c;
        while (p < n && m[p][c] == 0)
            ++p;
        if (p == n)
            throw Error(ErrorCode::InvalidLattice, "form is singular mod 2");
        std::swap(m[p], m[c]);
        for (int i = 0; i < n; ++i)
            if (i != c && m[i][c])
                for (int k = c; k <= n; ++k)
                    m[i][k] ^= m[c][k];
    }
    std::vector<int> out(n);
    for (int i = 0; i < n; ++i)
        out[i] = m[i][n];
    return out;
}

/// Candidate values for one coordinate, in search order 0, 1, -1, 2, -2, ...
std::vector<long> ordered_candidates(long lo, long hi, int parity)
{
    std::vector<long> out;
    for (long v = lo; v <= hi; ++v)
        if (mod2(v) == parity)
            out.push_back(v);
    std::sort(out.begin(), out.end(), [](long a, long b) {
        if (std::labs(a) != std::labs(b))
            return std::labs(a) < std::labs(b);
        return a > b;
    });
    return out;
}

struct DefiniteSearch {
    int n;
    std::vector<Rational> d;               // square weights
    std::vector<std::vector<Rational>> mu;  // mu[i][j], j < i
    std::vector<int> parity;
    Rational target;
    std::vector<long> c;

    bool run(int i, const Rational& used)
    {
        if (i == n)
            return used == target;
        Rational shift = 0;
        for (int j = 0; j < i; ++j)
            shift += mu[i][j] * c[j];
        const Rational budget = target - used;
        if (sgn(budget) < 0)
            return false;
        double radius = std::sqrt(Rational(budget / d[i]).get_d());
        double centre = -shift.get_d();
        long lo = static_cast<long>(std::floor(centre - radius)) - 1;
        long hi = static_cast<long>(std::ceil(centre + radius)) + 1;
        for (long v : ordered_candidates(lo, hi, parity[i])) {
            Rational y = Rational(v) + shift;
            Rational term = d[i] * y * y;
            if (term > budget)
                continue;
            c[i] = v;
            if (run(i + 1, used + term))
                return true;
        }
        return false;
    }
};

struct BoxSearch {
    const IntMatrix& q;
    std::vector<int> parity;
    long target;
    int radius;
    std::vector<long> c;

    bool run(int i, long partial)
    {
        const int n = static_cast<int>(q.size());
        if (i == n)
            return partial == target;
        for (long v : ordered_candidates(-radius, radius, parity[i])) {
            long delta = q[i][i] * v * v;
            for (int j = 0; j < i; ++j)
                delta += 2 * q[i][j] * c[j] * v;
            c[i] = v;
            if (run(i + 1, partial + delta))
                return true;
        }
        return false;
    }
};

}  // namespace

IntersectionLattice::IntersectionLattice(IntMatrix form, std::vector<int> w2, int b1)
    : form_(std::move(form)), w2_(std::move(w2)), b1_(b1)
{
    const int n = b2();
    if (b1_ < 0)
        throw Error(ErrorCode::InvalidLattice, "b1 must be non-negative");
    if (static_cast<int>(w2_.size()) != n)
        throw Error(ErrorCode::InvalidLattice, "w2 length differs from rank of the form");
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(form_[i].size()) != n)
            throw Error(ErrorCode::InvalidLattice, "form is not square");
        for (int j = 0; j < i; ++j)
            if (form_[i][j] != form_[j][i])
                throw Error(ErrorCode::InvalidLattice, "form is not symmetric");
    }
    for (int i = 0; i < n; ++i) {
        if (w2_[i] != 0 && w2_[i] != 1)
            throw Error(ErrorCode::InvalidLattice, "w2 entries must be 0 or 1");
        if (mod2(form_[i][i]) != w2_[i])
            throw Error(ErrorCode::InvalidLattice,
                        "w2 is not characteristic: x.x != x.w2 (mod 2) at basis vector " + std::to_string(i));
    }
    auto q = to_rational(form_);
    if (n > 0 && abs(linalg::determinant(q)) != 1)
        throw Error(ErrorCode::InvalidLattice, "form is not unimodular");
    b2_plus_ = linalg::inertia(std::move(q)).positive;
}

IntersectionLattice IntersectionLattice::cp2()
{
    return IntersectionLattice({{1}}, {1});
}

IntersectionLattice IntersectionLattice::cp2_bar()
{
    return IntersectionLattice({{-1}}, {1});
}

IntersectionLattice IntersectionLattice::hyperbolic()
{
    return IntersectionLattice({{0, 1}, {1, 0}}, {0, 0});
}

long IntersectionLattice::evaluate(std::span<const long> c) const
{
    long total = 0;
    for (int i = 0; i < b2(); ++i)
        for (int j = 0; j < b2(); ++j)
            total += c[i] * form_[i][j] * c[j];
    return total;
}

int b2_plus(const IntersectionLattice& l)
{
    return l.b2_plus();
}

int b2_minus(const IntersectionLattice& l)
{
    return l.b2_minus();
}

IntersectionLattice connected_sum_lattice(const IntersectionLattice& a, const IntersectionLattice& b)
{
    const int na = a.b2(), nb = b.b2();
    IntMatrix q(na + nb, std::vector<long>(na + nb, 0));
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < na; ++j)
            q[i][j] = a.form()[i][j];
    for (int i = 0; i < nb; ++i)
        for (int j = 0; j < nb; ++j)
            q[na + i][na + j] = b.form()[i][j];
    std::vector<int> w2 = a.w2();
    w2.insert(w2.end(), b.w2().begin(), b.w2().end());
    return IntersectionLattice(std::move(q), std::move(w2), a.b1() + b.b1());
}

std::string_view to_string(WuStatus s)
{
    switch (s) {
    case WuStatus::Found: return "found";
    case WuStatus::NoneDefinite: return "none-definite";
    case WuStatus::NoneWithinRadius: return "none-within-radius";
    }
    return "unknown";
}

int default_search_radius(const IntersectionLattice& l)
{
    return static_cast<int>(std::labs(l.wu_target())) + 3;
}

WuResult find_characteristic_vector(const IntersectionLattice& l, long target, int search_radius)
{
    const int n = l.b2();
    WuResult result;
    result.target = target;
    result.radius = search_radius;
    const auto parity = characteristic_parity(l.form(), l.w2());

    std::optional<std::vector<long>> found;
    if (l.definite()) {
        result.status = WuStatus::NoneDefinite;
        // Search the positive definite form sQ for value s·target.
        const int s = l.b2_plus() == n ? 1 : -1;
        RationalMatrix a = to_rational(l.form());
        for (auto& row : a)
            for (auto& x : row)
                x *= s;
        DefiniteSearch search{n, std::vector<Rational>(n), std::vector<std::vector<Rational>>(n, RationalVector(n)),
                              parity, Rational(s * target), std::vector<long>(n, 0)};
        // Complete squares from the last coordinate down, so term i involves c_0..c_i only.
        for (int i = n - 1; i >= 0; --i) {
            search.d[i] = a[i][i];
            for (int j = 0; j < i; ++j)
                search.mu[i][j] = a[i][j] / a[i][i];
            for (int j = 0; j < i; ++j)
                for (int k = 0; k < i; ++k)
                    a[j][k] -= a[j][i] * a[i][k] / a[i][i];
        }
        if (search.run(0, Rational(0)))
            found = search.c;
    } else {
        result.status = WuStatus::NoneWithinRadius;
        BoxSearch search{l.form(), parity, target, search_radius, std::vector<long>(n, 0)};
        if (search.run(0, 0))
            found = search.c;
    }

    if (found) {
        WuSolution sol{*found, l.evaluate(*found)};
        for (int i = 0; i < n; ++i) {
            long qc = 0;
            for (int j = 0; j < n; ++j)
                qc += l.form()[i][j] * sol.c[j];
            if (mod2(qc) != l.w2()[i])
                throw std::logic_error("characteristic vector search returned a non-characteristic vector");
        }
        if (sol.self_intersection != target)
            throw std::logic_error("characteristic vector search returned the wrong square");
        result.status = WuStatus::Found;
        result.solution = std::move(sol);
    }
    return result;
}

WuResult wu_almost_complex(const IntersectionLattice& l, int search_radius)
{
    if (search_radius < 1)
        throw Error(ErrorCode::InvalidArgument, "search radius must be positive");
    return find_characteristic_vector(l, l.wu_target(), search_radius);
}

std::string_view to_string(SWVerdict v)
{
    return v == SWVerdict::NotSymplectic ? "not-symplectic" : "rule-not-applicable";
}

SeibergWittenResult seiberg_witten_verdict(std::span<const IntersectionLattice> summands)
{
    if (summands.size() < 2)
        throw Error(ErrorCode::ListTooShort, "a connected-sum decomposition needs at least two summands");
    int total = 0;
    bool each_positive = true;
    for (const auto& l : summands) {
        total += l.b2_plus();
        each_positive = each_positive && l.b2_plus() >= 1;
    }
    SeibergWittenResult r;
    // With two or more summands each of b2+ >= 1 the total is automatically > 1.
    if (each_positive) {
        r.verdict = SWVerdict::NotSymplectic;
        r.justification =
            "no symplectic structure compatible with this decomposition's orientation: b2+ = " +
            std::to_string(total) +
            " > 1, so a compatible symplectic form would give a nonvanishing Seiberg-Witten invariant (Taubes), "
            "but a connected sum of summands each with b2+ >= 1 has identically vanishing Seiberg-Witten "
            "invariants (Witten)";
    } else {
        r.verdict = SWVerdict::NotApplicable;
        r.justification = "rule not applicable: some summand has b2+ = 0";
    }
    return r;
}

std::string_view to_string(Ternary t)
{
    switch (t) {
    case Ternary::Yes: return "yes";
    case Ternary::No: return "no";
    case Ternary::Inconclusive: return "inconclusive";
    }
    return "unknown";
}

Dim4Report dim4_report(std::span<const IntersectionLattice> summands, std::optional<int> search_radius)
{
    Dim4Report r;
    r.sw = seiberg_witten_verdict(summands);
    r.total = summands.front();
    for (std::size_t i = 1; i < summands.size(); ++i)
        r.total = connected_sum_lattice(r.total, summands[i]);
    r.wu = wu_almost_complex(r.total, search_radius.value_or(default_search_radius(r.total)));

    const std::string target = std::to_string(r.wu.target);
    switch (r.wu.status) {
    case WuStatus::Found:
        r.almost_complex = Ternary::Yes;
        r.trace.push_back("Wu criterion: characteristic c with c.c = 2chi + 3sigma = " + target + " exists");
        break;
    case WuStatus::NoneDefinite:
        r.almost_complex = Ternary::No;
        r.trace.push_back("Wu criterion: definite form has no characteristic c with c.c = " + target);
        break;
    case WuStatus::NoneWithinRadius:
        r.almost_complex = Ternary::Inconclusive;
        r.trace.push_back("Wu criterion: no characteristic c with c.c = " + target + " and |c_i| <= " +
                          std::to_string(r.wu.radius) + " (indefinite form, inconclusive)");
        break;
    }

    if (r.almost_complex == Ternary::No) {
        r.symplectic = Ternary::No;
        r.trace.push_back("symplectic forms induce almost complex structures; none exists for this orientation");
    } else if (r.sw.verdict == SWVerdict::NotSymplectic) {
        r.symplectic = Ternary::No;
    } else {
        r.symplectic = Ternary::Inconclusive;
    }
    r.trace.push_back("Seiberg-Witten rule: " + r.sw.justification);
    return r;
}

namespace {

long parse_long(std::string_view s)
{
    while (!s.empty() && s.front() == ' ')
        s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ')
        s.remove_suffix(1);
    if (!s.empty() && s.front() == '+')
        s.remove_prefix(1);
    long v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
        throw Error(ErrorCode::InvalidLattice, "not an integer: '" + std::string(s) + "'");
    return v;
}

std::vector<long> parse_list(std::string_view s, char sep)
{
    std::vector<long> out;
    if (s.empty())
        return out;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || s[i] == sep) {
            out.push_back(parse_long(s.substr(start, i - start)));
            start = i + 1;
        }
    }
    return out;
}

}  // namespace

IntMatrix parse_form(std::string_view text)
{
    if (text.starts_with("diag:")) {
        auto values = parse_list(text.substr(5), ',');
        IntMatrix m(values.size(), std::vector<long>(values.size(), 0));
        for (std::size_t i = 0; i < values.size(); ++i)
            m[i][i] = values[i];
        return m;
    }
    if (text.starts_with("rows:")) {
        IntMatrix m;
        std::string_view rest = text.substr(5);
        while (!rest.empty()) {
            if (rest.front() != '[')
                throw Error(ErrorCode::InvalidLattice, "expected '[' in row list");
            auto close = rest.find(']');
            if (close == std::string_view::npos)
                throw Error(ErrorCode::InvalidLattice, "unterminated row");
            m.push_back(parse_list(rest.substr(1, close - 1), ','));
            rest.remove_prefix(close + 1);
            if (!rest.empty()) {
                if (rest.front() != ';')
                    throw Error(ErrorCode::InvalidLattice, "expected ';' between rows");
                rest.remove_prefix(1);
            }
        }
        return m;
    }
    throw Error(ErrorCode::InvalidLattice, "form must start with 'diag:' or 'rows:'");
}

std::vector<int> parse_w2(std::string_view text)
{
    std::vector<int> out;
    for (long v : parse_list(text, ','))
        out.push_back(static_cast<int>(v));
    return out;
}

}  // namespace sympcheck::dim4

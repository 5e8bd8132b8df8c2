#include "sympcheck/pd_algebra.hpp"

#include <set>
#include <stdexcept>

namespace sympcheck {

RationalMatrix pairing_matrix(const GradedAlgebra& a, const Rational& orientation, int k)
{
    const int n = a.top_degree();
    RationalMatrix m(a.dim(k), RationalVector(a.dim(n - k)));
    for (int i = 0; i < a.dim(k); ++i) {
        for (int j = 0; j < a.dim(n - k); ++j) {
            auto v = a.basis_product(k, i, n - k, j);
            if (!v.empty())
                m[i][j] = v.front().second * orientation;
        }
    }
    return m;
}

DualityCheck check_poincare_duality(const GradedAlgebra& a, const Rational& orientation)
{
    if (a.dim(a.top_degree()) != 1)
        throw Error(ErrorCode::TopDegreeNotOneDimensional,
                    "degree " + std::to_string(a.top_degree()) + " has dimension " + std::to_string(a.dim(a.top_degree())));
    if (sgn(orientation) == 0)
        throw Error(ErrorCode::InvalidArgument, "orientation must be nonzero");
    for (int k = 0; k <= a.top_degree(); ++k) {
        if (a.dim(k) == 0)
            continue;
        if (auto v = linalg::left_kernel_vector(pairing_matrix(a, orientation, k)))
            return DualityCheck{false, k, std::move(*v)};
    }
    return {};
}

PDAlgebra::PDAlgebra(GradedAlgebra algebra, Rational orientation)
    : algebra_(std::move(algebra)), orientation_(std::move(orientation))
{
    auto check = check_poincare_duality(algebra_, orientation_);
    if (!check.ok)
        throw Error(ErrorCode::DualityFailure, "pairing degenerate in degree " + std::to_string(check.degree));
}

Rational PDAlgebra::integrate(const Element& x) const
{
    if (x.algebra != algebra_.id())
        throw Error(ErrorCode::MixedAlgebras, "integrating an element of another algebra");
    if (x.degree != top_degree())
        return 0;
    return x.coefficients.front() * orientation_;
}

PDAlgebra PDAlgebra::with_orientation(Rational orientation) const
{
    return PDAlgebra(algebra_, std::move(orientation));
}

PDAlgebra PDAlgebra::with_label(std::string label) const
{
    PDAlgebra out = *this;
    out.algebra_ = algebra_.with_label(std::move(label));
    return out;
}

std::vector<int> betti(const GradedAlgebra& a)
{
    std::vector<int> out;
    for (int d = 0; d <= a.top_degree(); ++d)
        out.push_back(a.dim(d));
    return out;
}

int euler_characteristic(const GradedAlgebra& a)
{
    int chi = 0;
    for (int d = 0; d <= a.top_degree(); ++d)
        chi += (d % 2 == 0 ? 1 : -1) * a.dim(d);
    return chi;
}

Signature signature(const PDAlgebra& a)
{
    const int n = a.top_degree();
    if (n % 4 != 0)
        throw Error(ErrorCode::DimensionNotMultipleOfFour, "top degree " + std::to_string(n));
    Signature s;
    s.inertia = linalg::inertia(pairing_matrix(a.algebra(), a.orientation(), n / 2));
    s.value = s.inertia.signature();
    return s;
}

// ---------------------------------------------------------------------------
// Symplectic classes

namespace {

Rational factorial(int k)
{
    mpz_class f = 1;
    for (int i = 2; i <= k; ++i)
        f *= i;
    return Rational(f);
}

void expand(const PDAlgebra& a, int var, int remaining, std::vector<int>& exponents, const Element& partial,
            const Rational& denominator, Polynomial& out, int k)
{
    const int m = a.algebra().dim(2);
    if (var == m - 1) {
        exponents[var] = remaining;
        Element e = a.algebra().basis_element(2, var);
        Rational value = a.integrate(a.algebra().multiply(partial, a.algebra().power(e, remaining)));
        if (sgn(value) != 0)
            out[exponents] = factorial(k) / (denominator * factorial(remaining)) * value;
        exponents[var] = 0;
        return;
    }
    Element e = a.algebra().basis_element(2, var);
    Element current = partial;
    for (int p = 0; p <= remaining; ++p) {
        if (p > 0) {
            current = a.algebra().multiply(current, e);
            if (current.is_zero())
                break;
        }
        exponents[var] = p;
        expand(a, var + 1, remaining - p, exponents, current, denominator * factorial(p), out, k);
    }
    exponents[var] = 0;
}

/// Substitutes x_var = value.
Polynomial substitute(const Polynomial& poly, int var, long value)
{
    Polynomial out;
    for (const auto& [exps, coeff] : poly) {
        mpz_class pw;
        mpz_pow_ui(pw.get_mpz_t(), mpz_class(value).get_mpz_t(), static_cast<unsigned long>(exps[var]));
        if (pw == 0)
            continue;
        auto reduced = exps;
        reduced[var] = 0;
        out[reduced] += coeff * Rational(pw);
    }
    std::erase_if(out, [](const auto& kv) { return sgn(kv.second) == 0; });
    return out;
}

}  // namespace

Polynomial symplectic_polynomial(const PDAlgebra& a)
{
    const int n = a.top_degree();
    if (n % 2 != 0)
        throw Error(ErrorCode::OddTopDegree, "top degree " + std::to_string(n));
    const int k = n / 2;
    const int m = a.algebra().dim(2);
    Polynomial out;
    if (m == 0) {
        if (k == 0)
            out[{}] = a.integrate(a.algebra().unit());
        return out;
    }
    std::vector<int> exponents(m, 0);
    expand(a, 0, k, exponents, a.algebra().unit(), Rational(1), out, k);
    return out;
}

std::optional<SymplecticWitness> find_symplectic_class(const PDAlgebra& a)
{
    Polynomial poly = symplectic_polynomial(a);
    if (poly.empty())
        return std::nullopt;

    const int k = a.top_degree() / 2;
    const int m = a.algebra().dim(2);
    // Lexicographic first grid point: fix coordinates left to right, each to the
    // smallest value that leaves a nonzero restriction. A nonzero restriction of
    // per-variable degree <= k cannot vanish on the remaining {0..k} grid, so this
    // agrees with a full lexicographic scan.
    SymplecticWitness w;
    w.alpha.assign(m, 0);
    w.basis = a.algebra().basis(2);
    for (int var = 0; var < m; ++var) {
        bool placed = false;
        for (long v = 0; v <= k; ++v) {
            Polynomial restricted = substitute(poly, var, v);
            if (!restricted.empty()) {
                w.alpha[var] = v;
                poly = std::move(restricted);
                placed = true;
                break;
            }
        }
        if (!placed)
            throw std::logic_error("symplectic grid search lost a nonzero polynomial");
    }

    RationalVector coeffs(w.alpha.begin(), w.alpha.end());
    Element alpha = a.algebra().element(2, coeffs);
    w.power_value = a.integrate(a.algebra().power(alpha, k));
    if (sgn(w.power_value) == 0 || w.power_value != poly.begin()->second)
        throw std::logic_error("symplectic witness does not reproduce its polynomial value");
    return w;
}

// ---------------------------------------------------------------------------
// Constructions

PDAlgebra connected_sum(const PDAlgebra& a_in, const PDAlgebra& b_in)
{
    const int n = a_in.top_degree();
    if (b_in.top_degree() != n)
        throw Error(ErrorCode::DimensionMismatch,
                    "connected sum of dimensions " + std::to_string(n) + " and " + std::to_string(b_in.top_degree()));
    if (n <= 2)
        throw Error(ErrorCode::DimensionTooLow, "connected sum needs dimension >= 3");

    GradedAlgebra a = a_in.algebra(), b = b_in.algebra();
    {
        std::set<std::string> names;
        for (int d = 1; d <= n; ++d)
            names.insert(a.basis(d).begin(), a.basis(d).end());
        bool collision = false;
        for (int d = 1; d < n && !collision; ++d)
            for (const auto& name : b.basis(d))
                collision = collision || names.count(name);
        if (collision) {
            a = a.qualified(a.label() + "#1:");
            b = b.qualified(b.label() + "#2:");
        }
    }

    std::vector<std::vector<std::string>> basis(n + 1);
    basis[0] = {"1"};
    basis[n] = a.basis(n);
    for (int d = 1; d < n; ++d) {
        basis[d] = a.basis(d);
        basis[d].insert(basis[d].end(), b.basis(d).begin(), b.basis(d).end());
    }

    AlgebraBuilder builder(n, basis, a_in.label() + " # " + b_in.label());
    const Rational b_to_a = b_in.orientation() / a_in.orientation();

    for (int p = 1; p < n; ++p) {
        for (int q = p; p + q <= n; ++q) {
            for (int i = 0; i < a.dim(p); ++i)
                for (int j = (p == q ? i : 0); j < a.dim(q); ++j)
                    builder.set_product(p, i, q, j, a.basis_product(p, i, q, j));
            for (int i = 0; i < b.dim(p); ++i) {
                for (int j = (p == q ? i : 0); j < b.dim(q); ++j) {
                    SparseVector v = b.basis_product(p, i, q, j);
                    if (p + q == n) {
                        for (auto& [k, c] : v)
                            c *= b_to_a;
                    } else {
                        for (auto& [k, c] : v)
                            k += a.dim(p + q);
                    }
                    builder.set_product(p, i + a.dim(p), q, j + a.dim(q), std::move(v));
                }
            }
        }
    }
    return PDAlgebra(std::move(builder).build(), a_in.orientation());
}

PDAlgebra iterated_connected_sum(const PDAlgebra& a, int j)
{
    if (j < 1)
        throw Error(ErrorCode::NonPositiveExponent, "iterated connected sum needs j >= 1");
    if (j == 1)
        return a;
    auto copy = [&](int i) {
        return PDAlgebra(a.algebra().qualified(a.label() + "#" + std::to_string(i) + ":"), a.orientation());
    };
    PDAlgebra out = copy(1);
    for (int i = 2; i <= j; ++i)
        out = connected_sum(out, copy(i));
    return out.with_label("CS(" + std::to_string(j) + ", " + a.label() + ")");
}

PDAlgebra tensor_product(const PDAlgebra& a, const PDAlgebra& b)
{
    return PDAlgebra(tensor_product(a.algebra(), b.algebra()), a.orientation() * b.orientation());
}

PDAlgebra tensor_power(const PDAlgebra& a, int k)
{
    Rational mu = 1;
    for (int i = 0; i < k; ++i)
        mu *= a.orientation();
    return PDAlgebra(tensor_power(a.algebra(), k), mu);
}

bool structurally_equal(const GradedAlgebra& a, const GradedAlgebra& b)
{
    if (betti(a) != betti(b))
        return false;
    const int n = a.top_degree();
    for (int p = 0; p <= n; ++p)
        for (int q = 0; p + q <= n; ++q)
            for (int i = 0; i < a.dim(p); ++i)
                for (int j = 0; j < a.dim(q); ++j)
                    if (a.basis_product(p, i, q, j) != b.basis_product(p, i, q, j))
                        return false;
    return true;
}

}  // namespace sympcheck

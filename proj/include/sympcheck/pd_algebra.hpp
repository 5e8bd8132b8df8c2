#pragma once

#include "sympcheck/graded_algebra.hpp"
#include "sympcheck/linalg.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace sympcheck {

/// Pairing matrix P_k with entries μ(e_i e_j), e_i ∈ H^k, e_j ∈ H^{n-k}.
/// `orientation` is μ evaluated on the single top-degree basis element.
RationalMatrix pairing_matrix(const GradedAlgebra& a, const Rational& orientation, int k);

struct DualityCheck {
    bool ok = true;
    int degree = -1;        // first degree whose pairing has a left kernel
    RationalVector kernel;  // coefficients over H^degree
};

/// Throws TopDegreeNotOneDimensional when dim H^n != 1.
DualityCheck check_poincare_duality(const GradedAlgebra& a, const Rational& orientation);

/// Poincaré duality algebra: graded algebra plus a nonzero orientation functional.
class PDAlgebra {
public:
    /// Throws TopDegreeNotOneDimensional, InvalidArgument (μ = 0), or DualityFailure.
    explicit PDAlgebra(GradedAlgebra algebra, Rational orientation = 1);

    const GradedAlgebra& algebra() const { return algebra_; }
    const Rational& orientation() const { return orientation_; }
    int top_degree() const { return algebra_.top_degree(); }
    const std::string& label() const { return algebra_.label(); }

    /// μ applied to an element; zero unless the element has top degree.
    Rational integrate(const Element& x) const;

    PDAlgebra with_orientation(Rational orientation) const;
    PDAlgebra with_label(std::string label) const;

private:
    GradedAlgebra algebra_;
    Rational orientation_;
};

std::vector<int> betti(const GradedAlgebra& a);
inline std::vector<int> betti(const PDAlgebra& a) { return betti(a.algebra()); }
int euler_characteristic(const GradedAlgebra& a);
inline int euler_characteristic(const PDAlgebra& a) { return euler_characteristic(a.algebra()); }

struct Signature {
    int value = 0;
    /// Always true: negating μ negates the value.
    bool orientation_dependent = true;
    linalg::Inertia inertia;
};

/// Signature of Q(a,b) = μ(ab) on H^{n/2}. Throws DimensionNotMultipleOfFour.
Signature signature(const PDAlgebra& a);

/// μ((Σ x_i e_i)^k) as a polynomial in the degree-2 coordinates: exponent vector -> coefficient.
using Polynomial = std::map<std::vector<int>, Rational>;

/// Exact multinomial expansion; only nonzero coefficients are kept. Throws OddTopDegree.
Polynomial symplectic_polynomial(const PDAlgebra& a);

struct SymplecticWitness {
    std::vector<long> alpha;         // integer coordinates over H^2
    std::vector<std::string> basis;  // names of the H^2 basis
    Rational power_value;            // μ(α^{n/2}), nonzero
};

/// Returns the lexicographically first α ∈ {0,…,k}^{b₂} with μ(α^k) ≠ 0, k = n/2,
/// or nullopt iff the polynomial above vanishes identically. Throws OddTopDegree.
std::optional<SymplecticWitness> find_symplectic_class(const PDAlgebra& a);

/// Degrees 1..n-1 are direct sums, within-summand products are kept, cross
/// products vanish, and B's top degree is identified with A's through the
/// orientations. Throws DimensionMismatch, DimensionTooLow (n <= 2).
PDAlgebra connected_sum(const PDAlgebra& a, const PDAlgebra& b);

/// j-fold connected sum of `a` with itself, copies qualified "<label>#i:".
PDAlgebra iterated_connected_sum(const PDAlgebra& a, int j);

/// Tensor product with orientation μ_A·μ_B.
PDAlgebra tensor_product(const PDAlgebra& a, const PDAlgebra& b);
PDAlgebra tensor_power(const PDAlgebra& a, int k);

/// True when the two algebras agree degree by degree and product by product
/// after identifying bases positionally (names ignored).
bool structurally_equal(const GradedAlgebra& a, const GradedAlgebra& b);

// Catalog of standard algebras, all with μ = 1 on the canonical top class.
PDAlgebra point();
PDAlgebra sphere(int n);
PDAlgebra complex_projective(int m);  // real dimension 2m
PDAlgebra torus(int n);
/// "S<n>", "CP<m>", "T<n>", or products of these joined by 'x'.
/// Throws UnknownCatalogEntry.
PDAlgebra catalog(std::string_view name);

}  // namespace sympcheck

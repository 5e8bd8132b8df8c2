#pragma once

#include "sympcheck/error.hpp"
#include "sympcheck/rational.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sympcheck {

/// A named linear combination, used in raw structure-constant tables.
using Combination = std::vector<std::pair<std::string, Rational>>;

struct ProductEntry {
    std::string left;
    std::string right;
    Combination value;
};

/// Unvalidated description of a graded-commutative algebra as a user would write it.
///
/// `basis[d]` lists the names of the degree-d basis elements; `basis[0]` must be
/// exactly {"1"}. Products not listed are zero, except products with the unit which
/// default to the unit law. Either both orders of a pair or just one may be given;
/// a missing order is derived through the Koszul sign.
struct AlgebraData {
    int top_degree = 0;
    std::vector<std::vector<std::string>> basis;
    std::vector<ProductEntry> products;
    std::string label;
};

enum class Law { Structure, Unit, DegreeClosure, GradedCommutativity, Associativity };

std::string_view to_string(Law law);

struct LawCheck {
    Law law;
    bool passed = true;
    std::vector<std::string> witness;
    std::string detail;
};

struct ValidationReport {
    std::vector<LawCheck> checks;

    bool ok() const;
    /// First failed law in check order, if any.
    const LawCheck* first_failure() const;
};

/// Checks the unit law, degree closure, graded commutativity and associativity
/// (exhaustively over basis triples). Never throws on law violations.
ValidationReport validate(const AlgebraData& data);

struct Element {
    std::uint64_t algebra = 0;
    int degree = 0;
    RationalVector coefficients;

    bool is_zero() const;
    Element& operator+=(const Element& other);
    Element& operator*=(const Rational& scalar);
    friend Element operator+(Element a, const Element& b) { return a += b; }
    friend Element operator*(const Rational& s, Element a) { return a *= s; }
    friend bool operator==(const Element& a, const Element& b);
};

class AlgebraBuilder;

/// Immutable finite-dimensional graded-commutative algebra over the rationals.
///
/// Copies share storage. Products of basis elements are stored once per unordered
/// pair (lower global index on the left); the reversed order picks up (-1)^{pq}.
class GradedAlgebra {
public:
    int top_degree() const;
    int dim(int degree) const;
    int total_dimension() const;
    const std::vector<std::string>& basis(int degree) const;
    const std::string& label() const;
    std::uint64_t id() const;

    /// (degree, index) of a basis name.
    std::optional<std::pair<int, int>> find(std::string_view name) const;

    Element unit() const;
    Element zero(int degree) const;
    Element basis_element(int degree, int index) const;
    Element basis_element(std::string_view name) const;
    Element element(int degree, RationalVector coefficients) const;

    /// Product of basis elements e_{p,i} * e_{q,j}, sign included. Empty above top degree.
    SparseVector basis_product(int p, int i, int q, int j) const;

    Element multiply(const Element& a, const Element& b) const;
    Element power(const Element& a, int k) const;

    /// Full table, both orders of every nonzero product (unit products included).
    AlgebraData data() const;
    ValidationReport validate() const;

    GradedAlgebra with_label(std::string label) const;
    /// Renames every basis element except the unit to prefix + name.
    GradedAlgebra qualified(std::string_view prefix) const;

private:
    friend class AlgebraBuilder;
    struct Impl;
    explicit GradedAlgebra(std::shared_ptr<const Impl> impl);
    std::shared_ptr<const Impl> impl_;
};

/// Direct construction from canonical products without validation. Used by the
/// library's own constructions, whose output is correct by construction and is
/// checked by validate() in tests.
class AlgebraBuilder {
public:
    AlgebraBuilder(int top_degree, std::vector<std::vector<std::string>> basis, std::string label);

    /// Sets e_{p,i} * e_{q,j}; (p,i) must not come after (q,j) in degree-then-index order.
    void set_product(int p, int i, int q, int j, SparseVector value);

    GradedAlgebra build() &&;

private:
    std::shared_ptr<GradedAlgebra::Impl> impl_;
};

/// Validates and builds. Throws UnitMissing, DegreeOutOfRange, UnknownBasisName,
/// or ValidationFailure naming the first violated law and its witness.
GradedAlgebra make_algebra(const AlgebraData& data);

/// Künneth tensor product with the Koszul sign
/// (u⊗v)(u'⊗v') = (-1)^{deg v · deg u'} (uu')⊗(vv').
/// Basis names are "u*v" (unit factors dropped); colliding names are first
/// qualified as "<label>#1:" and "<label>#2:".
GradedAlgebra tensor_product(const GradedAlgebra& a, const GradedAlgebra& b);

/// k-fold tensor power with copies qualified "<label>#i:".
GradedAlgebra tensor_power(const GradedAlgebra& a, int k);

}  // namespace sympcheck

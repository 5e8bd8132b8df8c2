#include "sympcheck/graded_algebra.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <set>
#include <unordered_map>

namespace sympcheck {

namespace {

std::atomic<std::uint64_t> next_algebra_id{1};

bool odd(int x) { return (x & 1) != 0; }

std::size_t tri_index(int i, int j)
{
    // i <= j
    return static_cast<std::size_t>(j) * (j + 1) / 2 + i;
}

void add_scaled(RationalVector& acc, const SparseVector& v, const Rational& s)
{
    for (const auto& [k, c] : v)
        acc[k] += s * c;
}

SparseVector to_sparse(const RationalVector& v)
{
    SparseVector out;
    for (int k = 0; k < static_cast<int>(v.size()); ++k)
        if (sgn(v[k]) != 0)
            out.emplace_back(k, v[k]);
    return out;
}

SparseVector negated(SparseVector v)
{
    for (auto& [k, c] : v)
        c = -c;
    return v;
}

std::string join_witness(const std::vector<std::string>& w)
{
    std::string out = "(";
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i)
            out += ", ";
        out += w[i];
    }
    return out + ")";
}

struct StructuralIssue {
    ErrorCode code;
    std::string message;
};

/// Raw table resolved to global indices, plus the completed multiplication table.
struct Analysis {
    std::optional<StructuralIssue> issue;
    int n = 0;
    int size = 0;
    std::vector<int> offset;
    std::vector<int> degree_of;
    std::unordered_map<std::string, int> index;
    // full[a * size + b] = e_a * e_b in local coordinates of degree deg a + deg b
    std::vector<SparseVector> full;
};

Analysis analyze(const AlgebraData& data, ValidationReport& report)
{
    Analysis an;
    LawCheck structure{Law::Structure, true, {}, {}};
    auto fail_structure = [&](ErrorCode code, std::string msg, std::vector<std::string> witness) {
        an.issue = StructuralIssue{code, msg};
        structure.passed = false;
        structure.detail = std::move(msg);
        structure.witness = std::move(witness);
        report.checks.push_back(structure);
        return an;
    };

    if (data.top_degree < 0 || static_cast<int>(data.basis.size()) != data.top_degree + 1)
        return fail_structure(ErrorCode::DegreeOutOfRange,
                              "basis must list exactly degrees 0.." + std::to_string(data.top_degree), {});
    if (data.basis[0].size() != 1 || data.basis[0][0] != "1")
        return fail_structure(ErrorCode::UnitMissing, "degree 0 must be exactly the unit \"1\"", {});

    an.n = data.top_degree;
    an.offset.assign(an.n + 2, 0);
    for (int d = 0; d <= an.n; ++d) {
        an.offset[d + 1] = an.offset[d] + static_cast<int>(data.basis[d].size());
        for (const auto& name : data.basis[d]) {
            if (name.empty() || an.index.count(name))
                return fail_structure(ErrorCode::ValidationFailure, "empty or duplicate basis name", {name});
            an.index.emplace(name, static_cast<int>(an.degree_of.size()));
            an.degree_of.push_back(d);
        }
    }
    an.size = an.offset[an.n + 1];
    const int size = an.size;

    auto local = [&](int g) { return g - an.offset[an.degree_of[g]]; };

    LawCheck unit{Law::Unit, true, {}, {}};
    LawCheck closure{Law::DegreeClosure, true, {}, {}};
    LawCheck comm{Law::GradedCommutativity, true, {}, {}};
    LawCheck assoc{Law::Associativity, true, {}, {}};

    std::vector<std::optional<SparseVector>> supplied(static_cast<std::size_t>(size) * size);
    for (const auto& entry : data.products) {
        auto li = an.index.find(entry.left);
        auto ri = an.index.find(entry.right);
        if (li == an.index.end() || ri == an.index.end())
            return fail_structure(ErrorCode::UnknownBasisName, "unknown factor in product entry",
                                  {entry.left, entry.right});
        int a = li->second, b = ri->second;
        int target = an.degree_of[a] + an.degree_of[b];
        RationalVector dense(target <= an.n ? data.basis[target].size() : 0);
        bool closed = true;
        for (const auto& [name, coeff] : entry.value) {
            auto vi = an.index.find(name);
            if (vi == an.index.end())
                return fail_structure(ErrorCode::UnknownBasisName, "unknown basis name in product value",
                                      {entry.left, entry.right, name});
            if (sgn(coeff) == 0)
                continue;
            if (an.degree_of[vi->second] != target) {
                closed = false;
                continue;
            }
            dense[local(vi->second)] += coeff;
        }
        if (!closed && closure.passed) {
            closure.passed = false;
            closure.witness = {entry.left, entry.right};
            closure.detail = "product value leaves degree " + std::to_string(target);
        }
        auto& slot = supplied[static_cast<std::size_t>(a) * size + b];
        SparseVector value = to_sparse(dense);
        if (slot && *slot != value)
            return fail_structure(ErrorCode::ValidationFailure, "conflicting entries for the same product",
                                  {entry.left, entry.right});
        slot = std::move(value);

        if (unit.passed && (a == 0 || b == 0)) {
            int other = a == 0 ? b : a;
            SparseVector expect{{local(other), Rational(1)}};
            if (*slot != expect) {
                unit.passed = false;
                unit.witness = {entry.left, entry.right};
                unit.detail = "unit product differs from the other factor";
            }
        }
    }

    an.full.assign(static_cast<std::size_t>(size) * size, {});
    for (int a = 0; a < size; ++a) {
        for (int b = a; b < size; ++b) {
            int p = an.degree_of[a], q = an.degree_of[b];
            const auto& ab = supplied[static_cast<std::size_t>(a) * size + b];
            const auto& ba = supplied[static_cast<std::size_t>(b) * size + a];
            bool sign_flip = odd(p * q);
            if (ab && ba && comm.passed) {
                SparseVector expect = sign_flip ? negated(*ab) : *ab;
                if (*ba != expect) {
                    comm.passed = false;
                    comm.witness = {data.basis[p][local(a)], data.basis[q][local(b)]};
                    comm.detail = "e_i e_j != (-1)^{pq} e_j e_i";
                }
            }
            if (a == b && odd(p) && ab && !ab->empty() && comm.passed) {
                comm.passed = false;
                comm.witness = {data.basis[p][local(a)], data.basis[p][local(a)]};
                comm.detail = "square of an odd-degree element is nonzero";
            }
            SparseVector value;
            if (ab)
                value = *ab;
            else if (ba)
                value = sign_flip ? negated(*ba) : *ba;
            else if (a == 0)
                value = {{local(b), Rational(1)}};
            if (p + q > an.n)
                value.clear();
            an.full[static_cast<std::size_t>(b) * size + a] = sign_flip ? negated(value) : value;
            an.full[static_cast<std::size_t>(a) * size + b] = std::move(value);
        }
    }

    // Exhaustive associativity over non-unit triples.
    for (int a = 1; a < size && assoc.passed; ++a) {
        int p = an.degree_of[a];
        for (int b = 1; b < size && assoc.passed; ++b) {
            int q = an.degree_of[b];
            if (p + q > an.n)
                continue;
            const auto& ab = an.full[static_cast<std::size_t>(a) * size + b];
            for (int c = 1; c < size; ++c) {
                int r = an.degree_of[c];
                int deg = p + q + r;
                if (deg > an.n)
                    continue;
                RationalVector lhs(data.basis[deg].size()), rhs(data.basis[deg].size());
                for (const auto& [k, coeff] : ab)
                    add_scaled(lhs, an.full[static_cast<std::size_t>(an.offset[p + q] + k) * size + c], coeff);
                for (const auto& [k, coeff] : an.full[static_cast<std::size_t>(b) * size + c])
                    add_scaled(rhs, an.full[static_cast<std::size_t>(a) * size + an.offset[q + r] + k], coeff);
                if (lhs != rhs) {
                    assoc.passed = false;
                    assoc.witness = {data.basis[p][local(a)], data.basis[q][local(b)], data.basis[r][local(c)]};
                    assoc.detail = "(e_i e_j) e_k != e_i (e_j e_k)";
                    break;
                }
            }
        }
    }

    report.checks = {structure, unit, closure, comm, assoc};
    return an;
}

}  // namespace

std::string_view to_string(Law law)
{
    switch (law) {
    case Law::Structure: return "structure";
    case Law::Unit: return "unit";
    case Law::DegreeClosure: return "degree-closure";
    case Law::GradedCommutativity: return "graded-commutativity";
    case Law::Associativity: return "associativity";
    }
    return "unknown";
}

bool ValidationReport::ok() const
{
    return first_failure() == nullptr;
}

const LawCheck* ValidationReport::first_failure() const
{
    for (const auto& c : checks)
        if (!c.passed)
            return &c;
    return nullptr;
}

ValidationReport validate(const AlgebraData& data)
{
    ValidationReport report;
    analyze(data, report);
    return report;
}

// ---------------------------------------------------------------------------
// Element

bool Element::is_zero() const
{
    return std::all_of(coefficients.begin(), coefficients.end(), [](const Rational& c) { return sgn(c) == 0; });
}

Element& Element::operator+=(const Element& other)
{
    if (algebra != other.algebra)
        throw Error(ErrorCode::MixedAlgebras, "adding elements of different algebras");
    if (degree != other.degree)
        throw Error(ErrorCode::DegreeOutOfRange, "adding elements of different degrees");
    for (std::size_t i = 0; i < coefficients.size(); ++i)
        coefficients[i] += other.coefficients[i];
    return *this;
}

Element& Element::operator*=(const Rational& scalar)
{
    for (auto& c : coefficients)
        c *= scalar;
    return *this;
}

bool operator==(const Element& a, const Element& b)
{
    return a.algebra == b.algebra && a.degree == b.degree && a.coefficients == b.coefficients;
}

// ---------------------------------------------------------------------------
// GradedAlgebra

struct GradedAlgebra::Impl {
    int top_degree = 0;
    std::vector<std::vector<std::string>> basis;
    std::vector<int> offset;
    std::unordered_map<std::string, std::pair<int, int>> index;
    std::vector<SparseVector> table;
    std::string label;
    std::uint64_t id = 0;

    int global(int d, int i) const { return offset[d] + i; }

    void index_names()
    {
        index.clear();
        offset.assign(top_degree + 2, 0);
        for (int d = 0; d <= top_degree; ++d) {
            offset[d + 1] = offset[d] + static_cast<int>(basis[d].size());
            for (int i = 0; i < static_cast<int>(basis[d].size()); ++i)
                index.emplace(basis[d][i], std::make_pair(d, i));
        }
    }
};

GradedAlgebra::GradedAlgebra(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

int GradedAlgebra::top_degree() const { return impl_->top_degree; }

int GradedAlgebra::dim(int degree) const
{
    if (degree < 0 || degree > impl_->top_degree)
        return 0;
    return static_cast<int>(impl_->basis[degree].size());
}

int GradedAlgebra::total_dimension() const { return impl_->offset.back(); }

const std::vector<std::string>& GradedAlgebra::basis(int degree) const
{
    static const std::vector<std::string> empty;
    if (degree < 0 || degree > impl_->top_degree)
        return empty;
    return impl_->basis[degree];
}

const std::string& GradedAlgebra::label() const { return impl_->label; }

std::uint64_t GradedAlgebra::id() const { return impl_->id; }

std::optional<std::pair<int, int>> GradedAlgebra::find(std::string_view name) const
{
    auto it = impl_->index.find(std::string(name));
    if (it == impl_->index.end())
        return std::nullopt;
    return it->second;
}

Element GradedAlgebra::unit() const
{
    return basis_element(0, 0);
}

Element GradedAlgebra::zero(int degree) const
{
    return Element{id(), degree, RationalVector(dim(degree))};
}

Element GradedAlgebra::basis_element(int degree, int index) const
{
    if (index < 0 || index >= dim(degree))
        throw Error(ErrorCode::DegreeOutOfRange, "no basis element " + std::to_string(index) + " in degree " +
                                                     std::to_string(degree));
    Element e = zero(degree);
    e.coefficients[index] = 1;
    return e;
}

Element GradedAlgebra::basis_element(std::string_view name) const
{
    auto pos = find(name);
    if (!pos)
        throw Error(ErrorCode::UnknownBasisName, std::string(name));
    return basis_element(pos->first, pos->second);
}

Element GradedAlgebra::element(int degree, RationalVector coefficients) const
{
    if (static_cast<int>(coefficients.size()) != dim(degree))
        throw Error(ErrorCode::DegreeOutOfRange, "coefficient vector length does not match degree " +
                                                     std::to_string(degree));
    return Element{id(), degree, std::move(coefficients)};
}

SparseVector GradedAlgebra::basis_product(int p, int i, int q, int j) const
{
    if (p + q > impl_->top_degree)
        return {};
    int a = impl_->global(p, i), b = impl_->global(q, j);
    if (a <= b)
        return impl_->table[tri_index(a, b)];
    const auto& v = impl_->table[tri_index(b, a)];
    return odd(p * q) ? negated(v) : v;
}

Element GradedAlgebra::multiply(const Element& a, const Element& b) const
{
    if (a.algebra != id() || b.algebra != id())
        throw Error(ErrorCode::MixedAlgebras, "multiplying elements of different algebras");
    Element out = zero(a.degree + b.degree);
    if (a.degree + b.degree > top_degree())
        return out;
    for (int i = 0; i < static_cast<int>(a.coefficients.size()); ++i) {
        if (sgn(a.coefficients[i]) == 0)
            continue;
        for (int j = 0; j < static_cast<int>(b.coefficients.size()); ++j) {
            if (sgn(b.coefficients[j]) == 0)
                continue;
            add_scaled(out.coefficients, basis_product(a.degree, i, b.degree, j), a.coefficients[i] * b.coefficients[j]);
        }
    }
    return out;
}

Element GradedAlgebra::power(const Element& a, int k) const
{
    Element out = unit();
    for (int i = 0; i < k; ++i)
        out = multiply(out, a);
    return out;
}

AlgebraData GradedAlgebra::data() const
{
    AlgebraData d;
    d.top_degree = top_degree();
    d.basis = impl_->basis;
    d.label = label();
    for (int p = 0; p <= top_degree(); ++p) {
        for (int i = 0; i < dim(p); ++i) {
            for (int q = 0; p + q <= top_degree(); ++q) {
                for (int j = 0; j < dim(q); ++j) {
                    auto v = basis_product(p, i, q, j);
                    if (v.empty())
                        continue;
                    ProductEntry entry{basis(p)[i], basis(q)[j], {}};
                    for (const auto& [k, c] : v)
                        entry.value.emplace_back(basis(p + q)[k], c);
                    d.products.push_back(std::move(entry));
                }
            }
        }
    }
    return d;
}

ValidationReport GradedAlgebra::validate() const
{
    return sympcheck::validate(data());
}

GradedAlgebra GradedAlgebra::with_label(std::string label) const
{
    auto impl = std::make_shared<Impl>(*impl_);
    impl->label = std::move(label);
    return GradedAlgebra(std::move(impl));
}

GradedAlgebra GradedAlgebra::qualified(std::string_view prefix) const
{
    auto impl = std::make_shared<Impl>(*impl_);
    for (int d = 1; d <= impl->top_degree; ++d)
        for (auto& name : impl->basis[d])
            name = std::string(prefix) + name;
    impl->index_names();
    impl->id = next_algebra_id++;
    return GradedAlgebra(std::move(impl));
}

// ---------------------------------------------------------------------------
// AlgebraBuilder

AlgebraBuilder::AlgebraBuilder(int top_degree, std::vector<std::vector<std::string>> basis, std::string label)
    : impl_(std::make_shared<GradedAlgebra::Impl>())
{
    if (top_degree < 0 || static_cast<int>(basis.size()) != top_degree + 1)
        throw Error(ErrorCode::DegreeOutOfRange, "basis must list exactly degrees 0.." + std::to_string(top_degree));
    if (basis[0].size() != 1 || basis[0][0] != "1")
        throw Error(ErrorCode::UnitMissing, "degree 0 must be exactly the unit \"1\"");
    impl_->top_degree = top_degree;
    impl_->basis = std::move(basis);
    impl_->label = std::move(label);
    impl_->index_names();
    int n = impl_->offset.back();
    impl_->table.assign(tri_index(0, n), {});
    for (int d = 0; d <= top_degree; ++d)
        for (int i = 0; i < static_cast<int>(impl_->basis[d].size()); ++i)
            impl_->table[tri_index(0, impl_->global(d, i))] = {{i, Rational(1)}};
}

void AlgebraBuilder::set_product(int p, int i, int q, int j, SparseVector value)
{
    int a = impl_->global(p, i), b = impl_->global(q, j);
    if (a > b)
        throw Error(ErrorCode::InvalidArgument, "set_product expects canonical order");
    if (p + q > impl_->top_degree)
        return;
    std::sort(value.begin(), value.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    impl_->table[tri_index(a, b)] = std::move(value);
}

GradedAlgebra AlgebraBuilder::build() &&
{
    impl_->id = next_algebra_id++;
    return GradedAlgebra(std::move(impl_));
}

// ---------------------------------------------------------------------------

GradedAlgebra make_algebra(const AlgebraData& data)
{
    ValidationReport report;
    Analysis an = analyze(data, report);
    if (an.issue)
        throw Error(an.issue->code, an.issue->message);
    if (const auto* f = report.first_failure())
        throw Error(ErrorCode::ValidationFailure,
                    std::string(to_string(f->law)) + " violated at " + join_witness(f->witness) + ": " + f->detail);

    AlgebraBuilder builder(data.top_degree, data.basis, data.label);
    for (int a = 1; a < an.size; ++a)
        for (int b = a; b < an.size; ++b)
            builder.set_product(an.degree_of[a], a - an.offset[an.degree_of[a]], an.degree_of[b],
                                b - an.offset[an.degree_of[b]], an.full[static_cast<std::size_t>(a) * an.size + b]);
    return std::move(builder).build();
}

GradedAlgebra tensor_product(const GradedAlgebra& a_in, const GradedAlgebra& b_in)
{
    GradedAlgebra a = a_in, b = b_in;
    {
        std::set<std::string> names;
        bool collision = false;
        for (int d = 1; d <= a.top_degree(); ++d)
            names.insert(a.basis(d).begin(), a.basis(d).end());
        for (int d = 1; d <= b.top_degree() && !collision; ++d)
            for (const auto& n : b.basis(d))
                collision = collision || names.count(n);
        if (collision) {
            a = a.qualified(a.label() + "#1:");
            b = b.qualified(b.label() + "#2:");
        }
    }

    const int na = a.top_degree(), nb = b.top_degree(), n = na + nb;
    // block_offset[d][p]: position of the (p, d-p) block inside degree d
    std::vector<std::vector<int>> block_offset(n + 1, std::vector<int>(na + 1, 0));
    std::vector<std::vector<std::string>> basis(n + 1);
    for (int d = 0; d <= n; ++d) {
        int pos = 0;
        for (int p = na; p >= 0; --p) {
            block_offset[d][p] = pos;
            int q = d - p;
            if (q < 0 || q > nb)
                continue;
            for (const auto& u : a.basis(p)) {
                for (const auto& v : b.basis(q)) {
                    if (u == "1")
                        basis[d].push_back(v);
                    else if (v == "1")
                        basis[d].push_back(u);
                    else
                        basis[d].push_back(u + "*" + v);
                }
            }
            pos += a.dim(p) * b.dim(q);
        }
    }

    AlgebraBuilder builder(n, basis, a.label() + " x " + b.label());
    auto local = [&](int p, int iu, int q, int iv) { return block_offset[p + q][p] + iu * b.dim(q) + iv; };

    for (int d1 = 0; d1 <= n; ++d1) {
        for (int p1 = std::max(0, d1 - nb); p1 <= std::min(na, d1); ++p1) {
            int q1 = d1 - p1;
            for (int iu = 0; iu < a.dim(p1); ++iu) {
                for (int iv = 0; iv < b.dim(q1); ++iv) {
                    int x = local(p1, iu, q1, iv);
                    for (int d2 = d1; d1 + d2 <= n; ++d2) {
                        for (int p2 = std::max(0, d2 - nb); p2 <= std::min(na, d2); ++p2) {
                            int q2 = d2 - p2;
                            for (int ju = 0; ju < a.dim(p2); ++ju) {
                                for (int jv = 0; jv < b.dim(q2); ++jv) {
                                    int y = local(p2, ju, q2, jv);
                                    if (d1 == d2 && y < x)
                                        continue;
                                    auto uu = a.basis_product(p1, iu, p2, ju);
                                    if (uu.empty())
                                        continue;
                                    auto vv = b.basis_product(q1, iv, q2, jv);
                                    if (vv.empty())
                                        continue;
                                    Rational sign = odd(q1 * p2) ? -1 : 1;
                                    SparseVector value;
                                    for (const auto& [ku, cu] : uu)
                                        for (const auto& [kv, cv] : vv)
                                            value.emplace_back(local(p1 + p2, ku, q1 + q2, kv), sign * cu * cv);
                                    builder.set_product(d1, x, d2, y, std::move(value));
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    return std::move(builder).build();
}

GradedAlgebra tensor_power(const GradedAlgebra& a, int k)
{
    if (k < 1)
        throw Error(ErrorCode::NonPositiveExponent, "tensor power needs k >= 1");
    if (k == 1)
        return a;
    GradedAlgebra out = a.qualified(a.label() + "#1:");
    for (int i = 2; i <= k; ++i)
        out = tensor_product(out, a.qualified(a.label() + "#" + std::to_string(i) + ":"));
    return out.with_label(a.label() + "^" + std::to_string(k));
}

}  // namespace sympcheck

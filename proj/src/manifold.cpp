#include "sympcheck/manifold.hpp"

#include <algorithm>

namespace sympcheck {

std::string_view to_string(Flag f)
{
    switch (f) {
    case Flag::Yes: return "yes";
    case Flag::No: return "no";
    case Flag::Unknown: return "unknown";
    }
    return "unknown";
}

std::string_view to_string(ManifoldVerdict v)
{
    switch (v) {
    case ManifoldVerdict::NoObstructionFound: return "no-obstruction-found";
    case ManifoldVerdict::NotRealizableByAlmostComplex: return "not-realizable-by-almost-complex";
    case ManifoldVerdict::NotASymplecticAlgebra: return "not-a-symplectic-algebra";
    case ManifoldVerdict::NotAlmostComplexHenceNotSymplectic: return "not-almost-complex-hence-not-symplectic";
    }
    return "unknown";
}

bool ManifoldDescriptor::has_rule(std::string_view rule) const
{
    return std::any_of(trace.begin(), trace.end(), [&](const TraceEntry& e) { return e.rule == rule; });
}

namespace {

const char* const kAlmostComplexSpinC =
    "w2 of a (stably) almost complex manifold is the mod 2 reduction of the integral class c1, so it is spin^c";
const char* const kSpinningSphere =
    "spinning a simply connected rational homology n-sphere gives a simply connected rational homology "
    "(n+1)-sphere";
const char* const kSpinningSpinC = "a spun manifold admits a spin^c structure iff the original one does";
const char* const kConnectedSumSpinC =
    "in dimension > 2, w2 and H^2 of X # Y split over the summands, so X # Y is spin^c iff X and Y are";
const char* const kConnectedSumPi1 = "van Kampen: in dimension >= 3, pi1(X # Y) = pi1(X) * pi1(Y)";
const char* const kProductSpinC =
    "design rule: X x Y is spin^c when both factors are; a factor embeds with trivial normal bundle, so a "
    "non-spin^c factor makes the product non-spin^c";
const char* const kProductPi1 = "pi1(X x Y) = pi1(X) x pi1(Y)";

bool is_sphere_betti(const std::vector<int>& b)
{
    if (b.size() < 2 || b.front() != 1 || b.back() != 1)
        return false;
    return std::all_of(b.begin() + 1, b.end() - 1, [](int x) { return x == 0; });
}

Flag both(Flag a, Flag b)
{
    if (a == Flag::No || b == Flag::No)
        return Flag::No;
    if (a == Flag::Yes && b == Flag::Yes)
        return Flag::Yes;
    return Flag::Unknown;
}

std::string flag_pair(std::string_view what, const ManifoldDescriptor& m, const ManifoldDescriptor& n)
{
    return std::string(what) + "(" + m.name + ") = " + std::string(to_string(what == "spin_c" ? m.spin_c : m.simply_connected)) +
           ", " + std::string(what) + "(" + n.name + ") = " +
           std::string(to_string(what == "spin_c" ? n.spin_c : n.simply_connected));
}

void append_unique(std::vector<TraceEntry>& out, const std::vector<TraceEntry>& more)
{
    for (const auto& e : more)
        if (std::find(out.begin(), out.end(), e) == out.end())
            out.push_back(e);
}

ManifoldDescriptor with_homology_flag(ManifoldDescriptor d)
{
    d.q_homology_sphere = d.dim >= 1 && is_sphere_betti(betti(d.cohomology));
    return d;
}

std::string parenthesize(const std::string& name)
{
    return name.find_first_of(" #x") == std::string::npos ? name : "(" + name + ")";
}

}  // namespace

ManifoldDescriptor make_descriptor(std::string name, PDAlgebra cohomology, Flag spin_c, Flag simply_connected)
{
    ManifoldDescriptor d{name, cohomology.top_degree(), std::move(cohomology), spin_c, simply_connected, false, {}};
    d.trace.push_back({std::string(rules::assumed), "flags asserted by the caller", name,
                       "spin_c = " + std::string(to_string(spin_c)) +
                           ", simply_connected = " + std::string(to_string(simply_connected))});
    return with_homology_flag(std::move(d));
}

ManifoldDescriptor point_descriptor()
{
    ManifoldDescriptor d{"pt", 0, point(), Flag::Yes, Flag::Yes, false, {}};
    d.trace.push_back({std::string(rules::vanishing_w2), "a point has no cohomology in degree 2", "pt", "spin_c = yes"});
    d.trace.push_back({std::string(rules::catalog_pi1), "a point is simply connected", "pt", "simply_connected = yes"});
    return d;
}

ManifoldDescriptor sphere_descriptor(int n)
{
    const std::string name = "S" + std::to_string(n);
    ManifoldDescriptor d{name, n, sphere(n), Flag::Yes, n >= 2 ? Flag::Yes : Flag::No, false, {}};
    if (n == 2)
        d.trace.push_back({std::string(rules::almost_complex_spin_c), kAlmostComplexSpinC, "S2 is a complex curve",
                           "spin_c = yes"});
    else
        d.trace.push_back({std::string(rules::vanishing_w2), "spheres are stably parallelizable, so w2 = 0", name,
                           "spin_c = yes"});
    d.trace.push_back({std::string(rules::catalog_pi1),
                       n >= 2 ? "spheres of dimension >= 2 are simply connected" : "pi1(S1) = Z", name,
                       std::string("simply_connected = ") + (n >= 2 ? "yes" : "no")});
    return with_homology_flag(std::move(d));
}

ManifoldDescriptor cp_descriptor(int m)
{
    const std::string name = "CP" + std::to_string(m);
    ManifoldDescriptor d{name, 2 * m, complex_projective(m), Flag::Yes, Flag::Yes, false, {}};
    d.trace.push_back({std::string(rules::almost_complex_spin_c), kAlmostComplexSpinC,
                       name + " is a complex (Kaehler) manifold", "spin_c = yes"});
    d.trace.push_back({std::string(rules::catalog_pi1), "complex projective spaces are simply connected", name,
                       "simply_connected = yes"});
    return with_homology_flag(std::move(d));
}

ManifoldDescriptor torus_descriptor(int n)
{
    const std::string name = "T" + std::to_string(n);
    ManifoldDescriptor d{name, n, torus(n), Flag::Yes, Flag::No, false, {}};
    d.trace.push_back({std::string(rules::vanishing_w2), "tori are parallelizable, so w2 = 0", name, "spin_c = yes"});
    d.trace.push_back({std::string(rules::catalog_pi1), "pi1(T^n) = Z^n", name, "simply_connected = no"});
    return with_homology_flag(std::move(d));
}

ManifoldDescriptor wu_manifold()
{
    ManifoldDescriptor d{"Wu", 5, sphere(5).with_label("Wu"), Flag::No, Flag::Yes, false, {}};
    d.trace.push_back({std::string(rules::wu_manifold),
                       "SU(3)/SO(3) is a simply connected rational homology 5-sphere whose w2 is not the reduction "
                       "of an integral class",
                       "Wu", "spin_c = no, simply_connected = yes"});
    return with_homology_flag(std::move(d));
}

ManifoldDescriptor atom_descriptor(std::string_view name)
{
    auto number = [&](std::string_view prefix) -> std::optional<int> {
        if (!name.starts_with(prefix) || name.size() == prefix.size())
            return std::nullopt;
        int v = 0;
        for (char ch : name.substr(prefix.size())) {
            if (ch < '0' || ch > '9' || v > 100000)
                return std::nullopt;
            v = v * 10 + (ch - '0');
        }
        return v;
    };
    try {
        if (name == "Wu")
            return wu_manifold();
        if (name == "pt")
            return point_descriptor();
        if (auto m = number("CP"))
            return cp_descriptor(*m);
        if (auto n = number("S"))
            return sphere_descriptor(*n);
        if (auto n = number("T"))
            return torus_descriptor(*n);
    } catch (const Error& e) {
        if (e.code() != ErrorCode::UnknownCatalogEntry)
            throw;
    }
    throw Error(ErrorCode::UnknownAtom, std::string(name));
}

ManifoldDescriptor spin(const ManifoldDescriptor& m)
{
    if (m.simply_connected != Flag::Yes || !m.q_homology_sphere)
        throw Error(ErrorCode::HypothesesNotEstablished,
                    "spinning " + m.name + " needs a simply connected rational homology sphere (simply_connected = " +
                        std::string(to_string(m.simply_connected)) +
                        ", rational homology sphere = " + (m.q_homology_sphere ? "yes" : "no") + ")");
    const std::string name = "spin(" + m.name + ")";
    ManifoldDescriptor d{name, m.dim + 1, sphere(m.dim + 1).with_label(name), m.spin_c, Flag::Yes, true, m.trace};
    d.trace.push_back({std::string(rules::spinning_homology_sphere), kSpinningSphere, m.name,
                       name + ": simply_connected = yes, rational homology sphere of dimension " +
                           std::to_string(d.dim)});
    d.trace.push_back({std::string(rules::spinning_spin_c), kSpinningSpinC,
                       "spin_c(" + m.name + ") = " + std::string(to_string(m.spin_c)),
                       "spin_c(" + name + ") = " + std::string(to_string(d.spin_c))});
    return d;
}

ManifoldDescriptor connect_sum_desc(const ManifoldDescriptor& m, const ManifoldDescriptor& n)
{
    if (m.dim != n.dim)
        throw Error(ErrorCode::DimensionMismatch, m.name + " has dimension " + std::to_string(m.dim) + ", " + n.name +
                                                      " has dimension " + std::to_string(n.dim));
    const std::string name = m.name + " # " + n.name;
    ManifoldDescriptor d{name, m.dim, connected_sum(m.cohomology, n.cohomology).with_label(name),
                         both(m.spin_c, n.spin_c), both(m.simply_connected, n.simply_connected), false, m.trace};
    append_unique(d.trace, n.trace);
    d.trace.push_back({std::string(rules::connected_sum_spin_c), kConnectedSumSpinC, flag_pair("spin_c", m, n),
                       "spin_c(" + name + ") = " + std::string(to_string(d.spin_c))});
    d.trace.push_back({std::string(rules::connected_sum_pi1), kConnectedSumPi1, flag_pair("simply_connected", m, n),
                       "simply_connected(" + name + ") = " + std::string(to_string(d.simply_connected))});
    d = with_homology_flag(std::move(d));
    d.trace.push_back({std::string(rules::homology_sphere), "recomputed from the Betti numbers of the cohomology ring",
                       name, d.q_homology_sphere ? "rational homology sphere" : "not a rational homology sphere"});
    return d;
}

ManifoldDescriptor product_desc(const ManifoldDescriptor& m, const ManifoldDescriptor& n)
{
    const std::string name = parenthesize(m.name) + " x " + parenthesize(n.name);
    ManifoldDescriptor d{name, m.dim + n.dim, tensor_product(m.cohomology, n.cohomology).with_label(name),
                         both(m.spin_c, n.spin_c), both(m.simply_connected, n.simply_connected), false, m.trace};
    append_unique(d.trace, n.trace);
    d.trace.push_back({std::string(rules::product_spin_c), kProductSpinC, flag_pair("spin_c", m, n),
                       "spin_c(" + name + ") = " + std::string(to_string(d.spin_c))});
    d.trace.push_back({std::string(rules::product_pi1), kProductPi1, flag_pair("simply_connected", m, n),
                       "simply_connected(" + name + ") = " + std::string(to_string(d.simply_connected))});
    d = with_homology_flag(std::move(d));
    d.trace.push_back({std::string(rules::homology_sphere), "recomputed from the Betti numbers of the cohomology ring",
                       name, d.q_homology_sphere ? "rational homology sphere" : "not a rational homology sphere"});
    return d;
}

ManifoldDescriptor power_desc(const ManifoldDescriptor& m, int k)
{
    if (k < 1)
        throw Error(ErrorCode::NonPositiveExponent, "product power needs k >= 1");
    if (k == 1)
        return m;
    const std::string name = parenthesize(m.name) + "^" + std::to_string(k);
    ManifoldDescriptor d = m;
    for (int i = 2; i <= k; ++i)
        d = product_desc(d, m);
    d.name = name;
    d.cohomology = tensor_power(m.cohomology, k).with_label(name);
    return d;
}

ManifoldDescriptor iterated_connect_sum_desc(const ManifoldDescriptor& m, int j)
{
    if (j < 1)
        throw Error(ErrorCode::NonPositiveExponent, "iterated connected sum needs j >= 1");
    if (j == 1)
        return m;
    const std::string name = "CS(" + std::to_string(j) + ", " + m.name + ")";
    ManifoldDescriptor d = m;
    for (int i = 2; i <= j; ++i)
        d = connect_sum_desc(d, m);
    d.name = name;
    d.cohomology = iterated_connected_sum(m.cohomology, j).with_label(name);
    return d;
}

std::optional<SymplecticWitness> c_symplectic(const ManifoldDescriptor& m)
{
    if (m.dim % 2 != 0)
        throw Error(ErrorCode::OddDimension, m.name + " has odd dimension " + std::to_string(m.dim));
    return find_symplectic_class(m.cohomology);
}

ManifoldReport analyze_manifold(const ManifoldDescriptor& m)
{
    ManifoldReport r{m, realizability_report(m.cohomology), ManifoldVerdict::NoObstructionFound, {}, m.trace};
    switch (r.algebra.verdict) {
    case Verdict::NotASymplecticAlgebra:
        r.verdict = ManifoldVerdict::NotASymplecticAlgebra;
        r.justification = "not cohomologically symplectic: " + r.algebra.justification;
        return r;
    case Verdict::NotRealizableByAlmostComplex:
        r.verdict = ManifoldVerdict::NotRealizableByAlmostComplex;
        r.justification = r.algebra.justification;
        return r;
    case Verdict::NoObstructionFound:
        break;
    }
    if (m.spin_c == Flag::No) {
        r.verdict = ManifoldVerdict::NotAlmostComplexHenceNotSymplectic;
        r.justification = m.name + " is cohomologically symplectic but admits no spin^c structure; an almost complex "
                                   "manifold is spin^c, so it is not almost complex and hence not symplectic";
        r.trace.push_back({std::string(rules::almost_complex_spin_c), kAlmostComplexSpinC,
                           "spin_c(" + m.name + ") = no", "not almost complex, hence not symplectic"});
    } else {
        r.justification = r.algebra.justification + "; spin_c = " + std::string(to_string(m.spin_c));
    }
    return r;
}

ManifoldReport thm22_example(int n)
{
    if (n < 6 || n % 2 != 0)
        throw Error(ErrorCode::DimensionOutOfRange,
                    "needs an even dimension >= 6 (dimension 4 is handled by the intersection-form pipeline), got " +
                        std::to_string(n));
    ManifoldDescriptor m = wu_manifold();
    while (m.dim < n)
        m = spin(m);
    return analyze_manifold(connect_sum_desc(m, cp_descriptor(n / 2)));
}

}  // namespace sympcheck

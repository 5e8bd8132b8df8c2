#pragma once

#include "sympcheck/obstructions.hpp"
#include "sympcheck/pd_algebra.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sympcheck {

enum class Flag { Yes, No, Unknown };
std::string_view to_string(Flag f);

/// One application of a topological rule to descriptor flags.
struct TraceEntry {
    std::string rule;
    std::string citation;
    std::string inputs;
    std::string output;

    friend bool operator==(const TraceEntry&, const TraceEntry&) = default;
};

namespace rules {
inline constexpr std::string_view wu_manifold = "wu-manifold";
inline constexpr std::string_view almost_complex_spin_c = "almost-complex.spin-c";
inline constexpr std::string_view vanishing_w2 = "catalog.w2-vanishes";
inline constexpr std::string_view catalog_pi1 = "catalog.fundamental-group";
inline constexpr std::string_view assumed = "user-supplied";
inline constexpr std::string_view spinning_homology_sphere = "spinning.rational-homology-sphere";
inline constexpr std::string_view spinning_spin_c = "spinning.spin-c";
inline constexpr std::string_view connected_sum_spin_c = "connected-sum.spin-c";
inline constexpr std::string_view connected_sum_pi1 = "connected-sum.simply-connected";
inline constexpr std::string_view product_spin_c = "product.spin-c";
inline constexpr std::string_view product_pi1 = "product.simply-connected";
inline constexpr std::string_view homology_sphere = "betti.rational-homology-sphere";
}  // namespace rules

/// Closed connected orientable smooth manifold, known through its rational
/// cohomology ring and three-valued flags. Every flag is backed by the trace.
struct ManifoldDescriptor {
    std::string name;
    int dim = 0;
    PDAlgebra cohomology;
    Flag spin_c = Flag::Unknown;
    Flag simply_connected = Flag::Unknown;
    bool q_homology_sphere = false;
    std::vector<TraceEntry> trace;

    bool has_rule(std::string_view rule) const;
};

/// Descriptor with caller-asserted flags (recorded as user-supplied).
ManifoldDescriptor make_descriptor(std::string name, PDAlgebra cohomology, Flag spin_c, Flag simply_connected);

ManifoldDescriptor point_descriptor();
ManifoldDescriptor sphere_descriptor(int n);
ManifoldDescriptor cp_descriptor(int m);
ManifoldDescriptor torus_descriptor(int n);
/// SU(3)/SO(3): simply connected rational homology 5-sphere, not spin^c.
ManifoldDescriptor wu_manifold();

/// Atoms "S<n>", "CP<m>", "T<n>", "Wu", "pt". Throws UnknownAtom.
ManifoldDescriptor atom_descriptor(std::string_view name);

/// Requires simply_connected = yes and a rational homology sphere; throws
/// HypothesesNotEstablished otherwise. Result has dimension + 1 and the same spin^c flag.
ManifoldDescriptor spin(const ManifoldDescriptor& m);

/// Throws DimensionMismatch (and DimensionTooLow below dimension 3).
ManifoldDescriptor connect_sum_desc(const ManifoldDescriptor& m, const ManifoldDescriptor& n);
ManifoldDescriptor product_desc(const ManifoldDescriptor& m, const ManifoldDescriptor& n);
ManifoldDescriptor power_desc(const ManifoldDescriptor& m, int k);
ManifoldDescriptor iterated_connect_sum_desc(const ManifoldDescriptor& m, int j);

/// Throws OddDimension.
std::optional<SymplecticWitness> c_symplectic(const ManifoldDescriptor& m);

enum class ManifoldVerdict {
    NoObstructionFound,
    NotRealizableByAlmostComplex,
    NotASymplecticAlgebra,
    NotAlmostComplexHenceNotSymplectic,
};
std::string_view to_string(ManifoldVerdict v);

struct ManifoldReport {
    ManifoldDescriptor descriptor;
    ObstructionReport algebra;
    ManifoldVerdict verdict = ManifoldVerdict::NoObstructionFound;
    std::string justification;
    /// descriptor trace plus the rules that produced the verdict
    std::vector<TraceEntry> trace;
};

/// Algebra-level report combined with the spin^c flag: a non-spin^c manifold
/// is not almost complex, hence not symplectic.
ManifoldReport analyze_manifold(const ManifoldDescriptor& m);

/// spin^{n-5}(Wu) # CP^{n/2} for even n >= 6. Throws DimensionOutOfRange.
ManifoldReport thm22_example(int n);

}  // namespace sympcheck

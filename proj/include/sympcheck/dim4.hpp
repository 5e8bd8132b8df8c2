#pragma once

#include "sympcheck/error.hpp"

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sympcheck::dim4 {

using IntMatrix = std::vector<std::vector<long>>;

/// Intersection form of a closed oriented 4-manifold together with w₂ and b₁.
///
/// w₂ is stored as its pairing vector (w₂·e_i mod 2), which for a unimodular
/// form must equal the diagonal of Q mod 2. Construction enforces symmetry,
/// |det Q| = 1, and that compatibility.
class IntersectionLattice {
public:
    IntersectionLattice() = default;
    IntersectionLattice(IntMatrix form, std::vector<int> w2, int b1 = 0);

    static IntersectionLattice cp2();
    static IntersectionLattice cp2_bar();
    static IntersectionLattice hyperbolic();

    const IntMatrix& form() const { return form_; }
    const std::vector<int>& w2() const { return w2_; }
    int b1() const { return b1_; }
    int b2() const { return static_cast<int>(form_.size()); }

    int b2_plus() const { return b2_plus_; }
    int b2_minus() const { return b2() - b2_plus_; }
    int signature() const { return b2_plus_ - b2_minus(); }
    int euler_characteristic() const { return 2 - 2 * b1_ + b2(); }
    /// 2χ + 3σ
    long wu_target() const { return 2L * euler_characteristic() + 3L * signature(); }
    bool definite() const { return b2_plus_ == 0 || b2_plus_ == b2(); }

    long evaluate(std::span<const long> c) const;

private:
    IntMatrix form_;
    std::vector<int> w2_;
    int b1_ = 0;
    int b2_plus_ = 0;
};

int b2_plus(const IntersectionLattice& l);
int b2_minus(const IntersectionLattice& l);

/// Block sum of forms, concatenated w₂, added b₁.
IntersectionLattice connected_sum_lattice(const IntersectionLattice& a, const IntersectionLattice& b);

struct WuSolution {
    std::vector<long> c;
    long self_intersection = 0;
};

enum class WuStatus { Found, NoneDefinite, NoneWithinRadius };
std::string_view to_string(WuStatus s);

struct WuResult {
    WuStatus status = WuStatus::NoneDefinite;
    std::optional<WuSolution> solution;
    long target = 0;
    int radius = 0;  // meaningful for indefinite forms only
};

/// |2χ + 3σ| + 3
int default_search_radius(const IntersectionLattice& l);

/// Searches characteristic vectors c (Qc ≡ w₂ mod 2) with cᵀQc = target.
/// Definite forms are searched exhaustively; indefinite forms within the box
/// ‖c‖∞ <= search_radius. Each coordinate runs through 0, 1, -1, 2, -2, ... and
/// coordinates are fixed left to right, so the first solution in that
/// lexicographic order is returned.
WuResult find_characteristic_vector(const IntersectionLattice& l, long target, int search_radius);

/// Wu's almost-complex criterion: target 2χ + 3σ.
WuResult wu_almost_complex(const IntersectionLattice& l, int search_radius);

enum class SWVerdict { NotSymplectic, NotApplicable };
std::string_view to_string(SWVerdict v);

struct SeibergWittenResult {
    SWVerdict verdict = SWVerdict::NotApplicable;
    std::string justification;
};

/// Rule engine: if every summand has b₂⁺ >= 1 and the sum has b₂⁺ > 1, a
/// symplectic form inducing this orientation would give a nonvanishing
/// Seiberg–Witten invariant while the connected sum forces it to vanish.
/// Throws ListTooShort for fewer than two summands.
SeibergWittenResult seiberg_witten_verdict(std::span<const IntersectionLattice> summands);

enum class Ternary { Yes, No, Inconclusive };
std::string_view to_string(Ternary t);

struct Dim4Report {
    IntersectionLattice total;
    WuResult wu;
    SeibergWittenResult sw;
    Ternary almost_complex = Ternary::Inconclusive;
    /// No or Inconclusive ("unknown").
    Ternary symplectic = Ternary::Inconclusive;
    std::vector<std::string> trace;
};

Dim4Report dim4_report(std::span<const IntersectionLattice> summands, std::optional<int> search_radius = {});

/// "diag:a,b,c" or "rows:[a,b];[b,c]". Throws InvalidLattice.
IntMatrix parse_form(std::string_view text);
/// "1,0,1". Throws InvalidLattice.
std::vector<int> parse_w2(std::string_view text);

}  // namespace sympcheck::dim4

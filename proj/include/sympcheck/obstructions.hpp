#pragma once

#include "sympcheck/pd_algebra.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <utility>

namespace sympcheck {

enum class Outcome { Pass, Fail, NotApplicable };
std::string_view to_string(Outcome o);

/// χ ≡ (-1)^k σ (mod 4) for n = 4k, tried for both signs of σ. Fail means
/// neither orientation can carry an almost complex structure.
Outcome hirzebruch_test(const PDAlgebra& a);

struct UnimodalityResult {
    Outcome outcome = Outcome::Pass;
    /// First violated inequality b_i <= b_{i+2}, as (i, i+2).
    std::optional<std::pair<int, int>> violation;
};

/// Checks b_0 <= b_2 <= ... and b_1 <= b_3 <= ... up to half the top degree.
/// NotApplicable for odd top degree.
UnimodalityResult betti_unimodality(const GradedAlgebra& a);

/// (S²)^{2k} # j·(S¹ × S^{4k-1}), top degree 4k.
PDAlgebra theorem21_family(int k, int j);

enum class Verdict { NoObstructionFound, NotRealizableByAlmostComplex, NotASymplecticAlgebra };
std::string_view to_string(Verdict v);

struct ObstructionReport {
    std::string algebra_id;
    bool duality = true;
    DualityCheck duality_check;
    std::optional<SymplecticWitness> symplectic;
    int chi = 0;
    std::optional<int> sigma_abs;
    Outcome hirzebruch = Outcome::NotApplicable;
    UnimodalityResult unimodality;
    Verdict verdict = Verdict::NoObstructionFound;
    std::string justification;
};

ObstructionReport realizability_report(const PDAlgebra& a);
/// Same, for an algebra not yet known to satisfy duality.
ObstructionReport realizability_report(const GradedAlgebra& a, const Rational& orientation);

}  // namespace sympcheck

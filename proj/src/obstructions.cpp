#include "sympcheck/obstructions.hpp"

namespace sympcheck {

std::string_view to_string(Outcome o)
{
    switch (o) {
    case Outcome::Pass: return "pass";
    case Outcome::Fail: return "fail";
    case Outcome::NotApplicable: return "not-applicable";
    }
    return "unknown";
}

std::string_view to_string(Verdict v)
{
    switch (v) {
    case Verdict::NoObstructionFound: return "no-obstruction-found";
    case Verdict::NotRealizableByAlmostComplex: return "not-realizable-by-almost-complex";
    case Verdict::NotASymplecticAlgebra: return "not-a-symplectic-algebra";
    }
    return "unknown";
}

namespace {

int mod4(int x)
{
    return ((x % 4) + 4) % 4;
}

bool hirzebruch_holds(int chi, int sigma, int k)
{
    const int sign = k % 2 == 0 ? 1 : -1;
    return mod4(chi - sign * sigma) == 0 || mod4(chi + sign * sigma) == 0;
}

}  // namespace

Outcome hirzebruch_test(const PDAlgebra& a)
{
    const int n = a.top_degree();
    if (n == 0 || n % 4 != 0)
        return Outcome::NotApplicable;
    return hirzebruch_holds(euler_characteristic(a), signature(a).value, n / 4) ? Outcome::Pass : Outcome::Fail;
}

UnimodalityResult betti_unimodality(const GradedAlgebra& a)
{
    const int n = a.top_degree();
    if (n % 2 != 0)
        return {Outcome::NotApplicable, std::nullopt};
    const int half = n / 2;
    for (int i = 0; i + 2 <= half; ++i)
        if (a.dim(i) > a.dim(i + 2))
            return {Outcome::Fail, std::make_pair(i, i + 2)};
    return {};
}

PDAlgebra theorem21_family(int k, int j)
{
    if (k < 1 || j < 1)
        throw Error(ErrorCode::InvalidArgument, "theorem21_family needs k >= 1 and j >= 1");
    const std::string odd_sphere = "S" + std::to_string(4 * k - 1);
    PDAlgebra spheres = tensor_power(sphere(2), 2 * k);
    PDAlgebra handles = iterated_connected_sum(tensor_product(sphere(1), sphere(4 * k - 1)), j);
    return connected_sum(spheres, handles)
        .with_label("S2^" + std::to_string(2 * k) + " # CS(" + std::to_string(j) + ", S1 x " + odd_sphere + ")");
}

ObstructionReport realizability_report(const GradedAlgebra& a, const Rational& orientation)
{
    auto check = check_poincare_duality(a, orientation);
    if (check.ok)
        return realizability_report(PDAlgebra(a, orientation));

    ObstructionReport r;
    r.algebra_id = a.label();
    r.duality = false;
    r.duality_check = std::move(check);
    r.chi = euler_characteristic(a);
    r.unimodality = betti_unimodality(a);
    r.verdict = Verdict::NotASymplecticAlgebra;
    r.justification = "Poincare duality pairing is degenerate in degree " + std::to_string(r.duality_check.degree);
    return r;
}

ObstructionReport realizability_report(const PDAlgebra& a)
{
    ObstructionReport r;
    const int n = a.top_degree();
    r.algebra_id = a.label();
    r.chi = euler_characteristic(a);
    if (n % 2 == 0)
        r.symplectic = find_symplectic_class(a);
    int sigma = 0;
    if (n > 0 && n % 4 == 0) {
        sigma = signature(a).value;
        r.sigma_abs = std::abs(sigma);
    }
    r.hirzebruch = hirzebruch_test(a);
    r.unimodality = betti_unimodality(a.algebra());

    if (!r.symplectic) {
        r.verdict = Verdict::NotASymplecticAlgebra;
        r.justification = n % 2 != 0 ? "odd top degree " + std::to_string(n) + " admits no symplectic class"
                                      : "no alpha in H^2 has alpha^" + std::to_string(n / 2) +
                                            " != 0: mu((sum x_i e_i)^" + std::to_string(n / 2) +
                                            ") vanishes identically";
    } else if (r.hirzebruch == Outcome::Fail) {
        r.verdict = Verdict::NotRealizableByAlmostComplex;
        r.justification = "Hirzebruch congruence chi = (-1)^k sigma (mod 4) violated for both orientations (chi = " +
                          std::to_string(r.chi) + ", |sigma| = " + std::to_string(std::abs(sigma)) +
                          ", k = " + std::to_string(n / 4) +
                          "); no closed almost complex manifold, hence no symplectic manifold, has this cohomology";
    } else {
        r.verdict = Verdict::NoObstructionFound;
        r.justification = "duality holds, a symplectic class exists, and the Hirzebruch congruence is " +
                          std::string(r.hirzebruch == Outcome::Pass ? "satisfied" : "not applicable");
    }
    return r;
}

}  // namespace sympcheck

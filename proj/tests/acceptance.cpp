// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.
//
// All comparisons are exact (rational or integer); there are no floating-point
// tolerances.  The only timed criterion is the family sweep, budgeted at 30 s.

#include "cli_runner.hpp"
#include "corpus.hpp"
#include "oracles.hpp"

#include "sympcheck/dim4.hpp"
#include "sympcheck/expr.hpp"
#include "sympcheck/linalg.hpp"
#include "sympcheck/manifold.hpp"
#include "sympcheck/obstructions.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

using namespace sympcheck;

namespace {

struct Tally {
    bool passed = true;
    std::ostringstream detail;
    int checks = 0;

    void require(bool ok, const std::string& what)
    {
        ++checks;
        if (!ok && passed) {
            passed = false;
            detail << "first failure: " << what << "; ";
        }
    }
};

long factorial(int n)
{
    long f = 1;
    for (int i = 2; i <= n; ++i)
        f *= i;
    return f;
}

int mod4(int x)
{
    return ((x % 4) + 4) % 4;
}

std::string family_tag(int k, int j)
{
    return "k=" + std::to_string(k) + " j=" + std::to_string(j);
}

// 1. Odd-j family: sigma = 0, chi = 4^k - 2j = 2 mod 4, Hirzebruch fails, witness value (2k)!.
void family_odd(Tally& o)
{
    auto start = std::chrono::steady_clock::now();
    for (int k : {1, 2, 3}) {
        for (int j : {1, 3, 5}) {
            const auto tag = family_tag(k, j);
            auto a = theorem21_family(k, j);
            auto r = realizability_report(a);
            o.require(signature(a).value == 0, tag + " sigma");
            o.require(r.chi == (1 << (2 * k)) - 2 * j, tag + " chi");
            o.require(mod4(r.chi) == 2, tag + " chi mod 4");
            o.require(r.hirzebruch == sympcheck::Outcome::Fail, tag + " hirzebruch");
            o.require(r.symplectic && r.symplectic->power_value == factorial(2 * k), tag + " witness value");
            o.require(r.verdict == Verdict::NotRealizableByAlmostComplex, tag + " verdict");

            auto m = analyze_manifold(evaluate(*parse(corpus::family(k, j))));
            o.require(m.verdict == ManifoldVerdict::NotRealizableByAlmostComplex, tag + " expression verdict");
            o.require(structurally_equal(m.descriptor.cohomology.algebra(), a.algebra()), tag + " expression algebra");
        }
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    o.require(secs < 30.0, "runtime under 30 s");
    o.detail << "9 instances in " << secs << " s";
}

// 2. Even-j control: Hirzebruch passes and nothing is obstructed.
void family_even(Tally& o)
{
    for (int k : {1, 2}) {
        for (int j : {2, 4}) {
            const auto tag = family_tag(k, j);
            auto r = realizability_report(theorem21_family(k, j));
            o.require(r.sigma_abs == 0 && mod4(r.chi) == 0, tag + " congruence inputs");
            o.require(r.hirzebruch == sympcheck::Outcome::Pass, tag + " hirzebruch");
            o.require(r.verdict == Verdict::NoObstructionFound, tag + " verdict");
        }
    }
    o.detail << "4 instances";
}

// 3. Connected sums of 2l+1 copies of CP2.
void dimension_four(Tally& o)
{
    for (int l : {1, 2, 3}) {
        const auto tag = "l=" + std::to_string(l);
        std::vector<dim4::IntersectionLattice> parts(2 * l + 1, dim4::IntersectionLattice::cp2());
        auto rep = dim4::dim4_report(parts);
        o.require(rep.wu.status == dim4::WuStatus::Found, tag + " wu found");
        if (!rep.wu.solution)
            continue;
        const auto& c = rep.wu.solution->c;
        long norm = 0;
        for (long v : c)
            norm += v * v;
        o.require(std::all_of(c.begin(), c.end(), [](long v) { return v % 2 != 0; }), tag + " entries odd");
        o.require(norm == 10 * l + 9 && rep.total.evaluate(c) == 10 * l + 9, tag + " c.c");
        o.require(dim4::b2_plus(rep.total) == 2 * l + 1, tag + " b2+");
        o.require(rep.sw.verdict == dim4::SWVerdict::NotSymplectic, tag + " seiberg-witten");
        o.require(rep.symplectic == dim4::Ternary::No, tag + " symplectic");
        if (l == 1) {
            std::vector<long> abs_c;
            for (long v : c)
                abs_c.push_back(std::abs(v));
            std::sort(abs_c.begin(), abs_c.end());
            o.require(abs_c == std::vector<long>{1, 3, 3}, "l=1 multiset {3,3,1}");
            o.detail << "l=1 witness (" << c[0] << "," << c[1] << "," << c[2] << ")";
        }
    }
}

// 4. Spun Wu manifold summed with CP^{n/2}.
void spun_wu(Tally& o)
{
    for (int n : {6, 8, 10, 12}) {
        const auto tag = "n=" + std::to_string(n);
        auto r = thm22_example(n);
        auto cp = complex_projective(n / 2);
        o.require(r.descriptor.spin_c == Flag::No, tag + " spin_c");
        o.require(c_symplectic(r.descriptor).has_value(), tag + " c-symplectic");
        o.require(betti(r.descriptor.cohomology) == betti(cp), tag + " betti");
        o.require(structurally_equal(r.descriptor.cohomology.algebra(), cp.algebra()), tag + " ring");
        o.require(r.verdict == ManifoldVerdict::NotAlmostComplexHenceNotSymplectic, tag + " verdict");
        auto cites = [&](std::string_view rule) {
            return std::any_of(r.trace.begin(), r.trace.end(), [&](const TraceEntry& t) { return t.rule == rule; });
        };
        o.require(cites(rules::spinning_homology_sphere) && cites(rules::spinning_spin_c) &&
                      cites(rules::connected_sum_spin_c),
                  tag + " trace");
        o.require(cites(rules::almost_complex_spin_c), tag + " almost-complex citation");
    }
    o.detail << "n in {6,8,10,12}";
}

// 5. Lagrange signature against the characteristic-polynomial oracle.
void signature_oracle(Tally& o)
{
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> size(1, 8), entry(-5, 5);
    int checked = 0, indefinite = 0;
    while (checked < 250) {
        int n = size(rng);
        RationalMatrix m(n, RationalVector(n));
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j)
                m[i][j] = m[j][i] = entry(rng);
        if (sgn(linalg::determinant(m)) == 0)
            continue;
        auto in = linalg::inertia(m);
        o.require(in.nullity == 0 && in.signature() == oracle::signature(m), "matrix #" + std::to_string(checked));
        indefinite += std::abs(in.signature()) != n;
        ++checked;
    }
    o.detail << checked << " matrices, " << indefinite << " indefinite";
}

// 6. Symplectic decision against grid enumeration over {-3..3}^{b2}.
void symplectic_oracle(Tally& o)
{
    std::vector<std::string> atoms{"S1", "S2", "S3", "S4", "S5", "S6", "CP1", "CP2", "CP3", "T1", "T2", "T3", "T4"};
    std::vector<PDAlgebra> pool;
    std::function<void(std::string, int, std::size_t)> grow = [&](std::string name, int factors, std::size_t from) {
        auto a = catalog(name);
        if (a.top_degree() > 6)
            return;
        if (a.top_degree() % 2 == 0 && (a.top_degree() < 2 || a.algebra().dim(2) <= 3))
            pool.push_back(a);
        if (factors == 3)
            return;
        for (std::size_t i = from; i < atoms.size(); ++i)
            grow(name + "x" + atoms[i], factors + 1, i);
    };
    for (std::size_t i = 0; i < atoms.size(); ++i)
        grow(atoms[i], 1, i);
    const std::size_t products = pool.size();
    for (std::size_t i = 0; i < products; ++i)
        for (std::size_t j = i; j < products; ++j)
            if (pool[i].top_degree() == pool[j].top_degree() && pool[i].top_degree() >= 4) {
                auto s = connected_sum(pool[i], pool[j]);
                if (s.algebra().dim(2) <= 3)
                    pool.push_back(s);
            }

    int symplectic = 0;
    for (const auto& a : pool) {
        bool decided = find_symplectic_class(a).has_value();
        o.require(decided == oracle::symplectic_by_grid(a), a.label());
        symplectic += decided;
    }
    o.detail << pool.size() << " algebras, " << symplectic << " symplectic";
}

// 7. Euler characteristic, palindromic Betti numbers, sphere as the unit of #.
void structural(Tally& o)
{
    std::mt19937 rng(77);
    std::uniform_int_distribution<int> even(2, 3), any(1, 5), sum_dim(3, 6);
    const int trials = 60;
    for (int t = 0; t < trials; ++t) {
        int n = 2 * even(rng);
        auto a = oracle::random_algebra(n, rng), b = oracle::random_algebra(n, rng);
        o.require(euler_characteristic(connected_sum(a, b)) ==
                      euler_characteristic(a) + euler_characteristic(b) - 2,
                  "chi(A#B) " + a.label() + " / " + b.label());

        auto c = oracle::random_algebra(any(rng), rng), d = oracle::random_algebra(any(rng), rng);
        o.require(euler_characteristic(tensor_product(c, d)) == euler_characteristic(c) * euler_characteristic(d),
                  "chi(AxB) " + c.label() + " / " + d.label());

        auto e = oracle::random_algebra(any(rng) + 1, rng);
        auto be = betti(e);
        o.require(std::equal(be.begin(), be.end(), be.rbegin()), "palindrome " + e.label());

        int m = sum_dim(rng);
        auto f = oracle::random_algebra(m, rng);
        auto fs = connected_sum(f, sphere(m));
        o.require(structurally_equal(fs.algebra(), f.algebra()) && fs.orientation() == f.orientation(),
                  "A # S^n " + f.label());
    }
    o.detail << trials << " compositions per property";
}

// 8. Single-entry tamperings.
struct Tamper {
    std::string what;
    AlgebraData data;
    enum Kind { Commutativity, Associativity, Duality } kind;
};

// Replaces the stored (left, right) entry; `add` plants an entry the table lacks.
AlgebraData tampered(AlgebraData d, const std::string& left, const std::string& right, Combination value,
                     bool add = false)
{
    for (auto& e : d.products) {
        if (e.left == left && e.right == right) {
            if (add)
                break;
            e.value = std::move(value);
            return d;
        }
    }
    if (!add)
        throw std::logic_error("no stored entry (" + left + ", " + right + ")");
    d.products.push_back({left, right, std::move(value)});
    return d;
}

bool witness_is_correct(const Tamper& t, const ValidationReport& report, std::string& why)
{
    oracle::TableProduct table(t.data);
    if (t.kind == Tamper::Duality) {
        auto alg = make_algebra(t.data);
        auto check = check_poincare_duality(alg, 1);
        if (check.ok) {
            why = "duality not rejected";
            return false;
        }
        const int k = check.degree, n = alg.top_degree();
        const std::string top = alg.basis(n)[0];
        bool nonzero = false;
        for (const auto& c : check.kernel)
            nonzero = nonzero || sgn(c) != 0;
        for (const auto& v : alg.basis(n - k)) {
            Rational pairing = 0;
            for (int i = 0; i < alg.dim(k); ++i) {
                auto prod = table.multiply(table.basis(alg.basis(k)[i]), table.basis(v));
                pairing += check.kernel[i] * (prod.count(top) ? prod.at(top) : Rational(0));
            }
            if (sgn(pairing) != 0) {
                why = "kernel vector pairs nontrivially with " + v;
                return false;
            }
        }
        why = "degree " + std::to_string(k);
        return nonzero && report.ok();
    }

    const auto* f = report.first_failure();
    if (!f) {
        why = "not rejected";
        return false;
    }
    const auto& w = f->witness;
    if (t.kind == Tamper::Commutativity) {
        if (f->law != Law::GradedCommutativity || w.size() != 2)
            return false;
        auto ab = table.has(w[0], w[1]) ? table.entry(w[0], w[1]) : oracle::TableProduct::Vec{};
        auto ba = table.has(w[1], w[0]) ? table.entry(w[1], w[0]) : oracle::TableProduct::Vec{};
        const bool flip = (table.degree_of(w[0]) * table.degree_of(w[1])) % 2 != 0;
        for (auto& [_, c] : ba)
            if (flip)
                c = -c;
        why = "(" + w[0] + ", " + w[1] + ")";
        // Either the stored pair disagrees, or an odd element squares to something nonzero.
        return w[0] == w[1] ? !ab.empty() : ab != ba;
    }
    if (f->law != Law::Associativity || w.size() != 3)
        return false;
    auto x = table.basis(w[0]), y = table.basis(w[1]), z = table.basis(w[2]);
    why = "(" + w[0] + ", " + w[1] + ", " + w[2] + ")";
    return table.multiply(table.multiply(x, y), z) != table.multiply(x, table.multiply(y, z));
}

void tamperings(Tally& o)
{
    const std::string x1 = "S2#1:x", x2 = "S2#2:x", x3 = "S2#3:x";
    const std::string x12 = x1 + "*" + x2, x13 = x1 + "*" + x3, x23 = x2 + "*" + x3, x123 = x12 + "*" + x3;
    const auto s2_3_full = tensor_power(sphere(2), 3).algebra().data();
    const auto s2_3 = oracle::half_table(s2_3_full);
    const auto t2 = torus(2).algebra().data();
    const auto t3_full = torus(3).algebra().data();
    const auto t3 = oracle::half_table(t3_full);
    const auto s2s2 = tensor_power(sphere(2), 2).algebra().data();
    const auto s1s3 = tensor_product(sphere(1), sphere(3)).algebra().data();
    const auto cp1t2 = tensor_product(complex_projective(1), torus(2)).algebra().data();
    const auto s2cp2 = oracle::half_table(tensor_product(sphere(2), complex_projective(2)).algebra().data());
    const auto t2s2 = oracle::half_table(tensor_product(torus(2), sphere(2)).algebra().data());
    const auto cp2 = complex_projective(2).algebra().data();
    const auto cp3 = oracle::half_table(complex_projective(3).algebra().data());
    const std::string a = "S1#1:x", b = "S3#2:x";

    std::vector<Tamper> cases{
        {"T2 a1a2 sign", tampered(t2, "a1", "a2", {{"a1*a2", -1}}), Tamper::Commutativity},
        {"T3 a1a3 doubled", tampered(t3_full, "a1", "a3", {{"a1*a3", 2}}), Tamper::Commutativity},
        {"T3 a2.a1a3 sign", tampered(t3_full, "a2", "a1*a3", {{"a1*a2*a3", 1}}), Tamper::Commutativity},
        {"S2xS2 x1x2 sign", tampered(s2s2, x1, x2, {{x12, -1}}), Tamper::Commutativity},
        {"S1xS3 ab sign", tampered(s1s3, a, b, {{a + "*" + b, -1}}), Tamper::Commutativity},
        {"T2 odd square", tampered(t2, "a1", "a1", {{"a1*a2", 1}}, true), Tamper::Commutativity},
        {"CP1xT2 h.a1 sign", tampered(cp1t2, "h", "a1", {{"h*a1", -1}}), Tamper::Commutativity},
        {"(S2)^3 x1.x23 tripled", tampered(s2_3_full, x1, x23, {{x123, 3}}), Tamper::Commutativity},
        {"(S2)^3 x1x2 doubled", tampered(s2_3, x1, x2, {{x12, 2}}), Tamper::Associativity},
        {"(S2)^3 x3.x12 doubled", tampered(s2_3, x3, x12, {{x123, 2}}), Tamper::Associativity},
        {"(S2)^3 x1.x23 negated", tampered(s2_3, x1, x23, {{x123, -1}}), Tamper::Associativity},
        {"(S2)^3 x2.x13 zeroed", tampered(s2_3, x2, x13, {}), Tamper::Associativity},
        {"T3 a1a2 doubled", tampered(t3, "a1", "a2", {{"a1*a2", 2}}), Tamper::Associativity},
        {"S2xCP2 x.h tripled", tampered(s2cp2, "x", "h", {{"x*h", 3}}), Tamper::Associativity},
        {"T2xS2 a1.x doubled", tampered(t2s2, "a1", "x", {{"a1*x", 2}}), Tamper::Associativity},
        {"CP2 h.h zeroed", tampered(cp2, "h", "h", {}), Tamper::Duality},
        {"S2xS2 x1x2 zeroed", tampered(oracle::half_table(s2s2), x1, x2, {}), Tamper::Duality},
        {"T2 a1a2 zeroed", tampered(oracle::half_table(t2), "a1", "a2", {}), Tamper::Duality},
        {"CP3 h.h2 zeroed", tampered(cp3, "h", "h^2", {}), Tamper::Duality},
        {"S1xS3 ab zeroed", tampered(oracle::half_table(s1s3), a, b, {}), Tamper::Duality},
    };
    int rejected = 0;
    for (const auto& t : cases) {
        auto report = validate(t.data);
        std::string why;
        bool ok = witness_is_correct(t, report, why);
        o.require(ok, t.what + (why.empty() ? "" : " " + why));
        rejected += ok;
    }
    o.detail << rejected << "/" << cases.size() << " tamperings rejected with a verified witness";
}

// 9. Parser round trip and CLI exit codes.
void parser(Tally& o)
{
    for (const auto& text : corpus::expressions) {
        auto e = parse(text);
        auto printed = print(*e);
        o.require(same_tree(*parse(printed), *e) && print(*parse(printed)) == printed, "round trip: " + text);
    }
    for (const auto& m : corpus::malformed) {
        auto r = cli::run(SYMPCHECK_CLI, m.args);
        std::string line;
        for (const auto& arg : m.args)
            line += arg + " ";
        o.require(r.exit_code == m.exit_code, "exit code for: " + line + "got " + std::to_string(r.exit_code));
    }
    o.detail << corpus::expressions.size() << " expressions, " << corpus::malformed.size() << " malformed inputs";
}

}  // namespace

int main()
{
    struct Criterion {
        const char* name;
        void (*run)(Tally&);
    };
    const Criterion criteria[] = {
        {"odd-j family obstructed by the Hirzebruch congruence", family_odd},
        {"even-j family control", family_even},
        {"dimension 4: #(2l+1) CP2", dimension_four},
        {"spun Wu manifold # CP^{n/2}", spun_wu},
        {"signature oracle", signature_oracle},
        {"symplectic decision oracle", symplectic_oracle},
        {"structural properties", structural},
        {"validation tamperings", tamperings},
        {"parser round trip and exit codes", parser},
    };
    int failures = 0, index = 0;
    for (const auto& c : criteria) {
        Tally o;
        try {
            c.run(o);
        } catch (const std::exception& e) {
            o.passed = false;
            o.detail << " threw: " << e.what();
        }
        std::cout << (o.passed ? "PASS" : "FAIL") << "  criterion " << ++index << ": " << c.name << " [" << o.checks
                  << " exact checks] " << o.detail.str() << std::endl;
        failures += !o.passed;
    }
    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
    return failures == 0 ? 0 : 1;
}

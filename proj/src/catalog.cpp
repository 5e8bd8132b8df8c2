#include "sympcheck/pd_algebra.hpp"

#include <charconv>

namespace sympcheck {

PDAlgebra point()
{
    return PDAlgebra(AlgebraBuilder(0, {{"1"}}, "pt").build());
}

PDAlgebra sphere(int n)
{
    if (n < 1)
        throw Error(ErrorCode::UnknownCatalogEntry, "sphere dimension must be >= 1");
    std::vector<std::vector<std::string>> basis(n + 1);
    basis[0] = {"1"};
    basis[n] = {"x"};
    return PDAlgebra(AlgebraBuilder(n, std::move(basis), "S" + std::to_string(n)).build());
}

PDAlgebra complex_projective(int m)
{
    if (m < 1)
        throw Error(ErrorCode::UnknownCatalogEntry, "complex projective dimension must be >= 1");
    const int n = 2 * m;
    auto name = [](int power) { return power == 1 ? std::string("h") : "h^" + std::to_string(power); };
    std::vector<std::vector<std::string>> basis(n + 1);
    basis[0] = {"1"};
    for (int i = 1; i <= m; ++i)
        basis[2 * i] = {name(i)};
    AlgebraBuilder builder(n, std::move(basis), "CP" + std::to_string(m));
    for (int i = 1; i <= m; ++i)
        for (int j = i; i + j <= m; ++j)
            builder.set_product(2 * i, 0, 2 * j, 0, {{0, Rational(1)}});
    return PDAlgebra(std::move(builder).build());
}

PDAlgebra torus(int n)
{
    if (n < 1)
        throw Error(ErrorCode::UnknownCatalogEntry, "torus dimension must be >= 1");
    if (n > 16)
        throw Error(ErrorCode::UnknownCatalogEntry, "torus dimension above 16 is not supported");
    // Exterior algebra on a1..an; basis of degree d = d-subsets as bitmasks in
    // lexicographic order of their sorted index lists.
    std::vector<std::vector<unsigned>> subsets(n + 1);
    std::vector<std::vector<std::string>> basis(n + 1);
    auto visit = [&](auto&& self, unsigned mask, int next, int size) -> void {
        subsets[size].push_back(mask);
        for (int g = next; g < n; ++g)
            self(self, mask | (1u << g), g + 1, size + 1);
    };
    visit(visit, 0u, 0, 0);
    for (int d = 0; d <= n; ++d) {
        std::sort(subsets[d].begin(), subsets[d].end(), [n](unsigned x, unsigned y) {
            for (int g = 0; g < n; ++g) {
                bool bx = x & (1u << g), by = y & (1u << g);
                if (bx != by)
                    return bx;
            }
            return false;
        });
        for (unsigned mask : subsets[d]) {
            std::string name;
            for (int g = 0; g < n; ++g) {
                if (!(mask & (1u << g)))
                    continue;
                if (!name.empty())
                    name += "*";
                name += "a" + std::to_string(g + 1);
            }
            basis[d].push_back(d == 0 ? "1" : name);
        }
    }
    auto position = [&](int d, unsigned mask) {
        return static_cast<int>(std::find(subsets[d].begin(), subsets[d].end(), mask) - subsets[d].begin());
    };

    AlgebraBuilder builder(n, basis, "T" + std::to_string(n));
    for (int p = 1; p <= n; ++p) {
        for (int q = p; p + q <= n; ++q) {
            for (int i = 0; i < static_cast<int>(subsets[p].size()); ++i) {
                for (int j = (p == q ? i : 0); j < static_cast<int>(subsets[q].size()); ++j) {
                    unsigned s = subsets[p][i], t = subsets[q][j];
                    if (s & t)
                        continue;
                    // sign of the shuffle: pairs (g in s, h in t) with g > h
                    int inversions = 0;
                    for (int g = 0; g < n; ++g)
                        if (s & (1u << g))
                            for (int h = 0; h < g; ++h)
                                if (t & (1u << h))
                                    ++inversions;
                    builder.set_product(p, i, q, j, {{position(p + q, s | t), Rational(inversions % 2 ? -1 : 1)}});
                }
            }
        }
    }
    return PDAlgebra(std::move(builder).build());
}

namespace {

std::string_view trim(std::string_view s)
{
    while (!s.empty() && s.front() == ' ')
        s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ')
        s.remove_suffix(1);
    return s;
}

PDAlgebra catalog_atom(std::string_view name)
{
    auto numbered = [&](std::string_view prefix) -> std::optional<int> {
        if (name.size() <= prefix.size() || name.substr(0, prefix.size()) != prefix)
            return std::nullopt;
        int value = 0;
        auto digits = name.substr(prefix.size());
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
        if (ec != std::errc() || ptr != digits.data() + digits.size())
            return std::nullopt;
        return value;
    };
    if (name == "pt")
        return point();
    if (auto m = numbered("CP"))
        return complex_projective(*m);
    if (auto n = numbered("S"))
        return sphere(*n);
    if (auto n = numbered("T"))
        return torus(*n);
    throw Error(ErrorCode::UnknownCatalogEntry, std::string(name));
}

}  // namespace

PDAlgebra catalog(std::string_view name)
{
    std::vector<std::string_view> factors;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= name.size(); ++i) {
        if (i == name.size() || name[i] == 'x') {
            factors.push_back(trim(name.substr(start, i - start)));
            start = i + 1;
        }
    }
    PDAlgebra out = catalog_atom(factors.front());
    for (std::size_t i = 1; i < factors.size(); ++i)
        out = tensor_product(out, catalog_atom(factors[i]));
    return out;
}

}  // namespace sympcheck

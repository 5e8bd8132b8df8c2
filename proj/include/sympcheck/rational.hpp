#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

namespace sympcheck {

using Rational = mpq_class;
using RationalVector = std::vector<Rational>;
using RationalMatrix = std::vector<RationalVector>;

inline std::string to_string(const Rational& q)
{
    return q.get_str();
}

/// Sparse coordinate vector: (basis index, nonzero coefficient), sorted by index.
using SparseVector = std::vector<std::pair<int, Rational>>;

}  // namespace sympcheck

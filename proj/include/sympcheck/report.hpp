#pragma once

#include "sympcheck/dim4.hpp"
#include "sympcheck/manifold.hpp"

#include <json.hpp>

#include <string>

namespace sympcheck {

/// Integers as JSON numbers when they fit, otherwise "p/q" strings.
nlohmann::json rational_json(const Rational& q);

nlohmann::json witness_json(const std::optional<SymplecticWitness>& w);
nlohmann::json trace_json(const std::vector<TraceEntry>& trace);

/// Top-level keys: input, dimension, betti, chi, sigma_abs, symplectic_witness,
/// hirzebruch, unimodality, spin_c, verdict, trace (plus a few explanatory extras).
nlohmann::json report_json(const ManifoldReport& report, const std::string& input);

nlohmann::json dim4_json(const dim4::Dim4Report& report, const std::string& input);

}  // namespace sympcheck

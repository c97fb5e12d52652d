#pragma once

// JSON and CSV emission. nlohmann::json objects keep keys sorted, so a dump
// of the same value is byte-identical across runs.

#include <string>

#include <json.hpp>

#include "frobper/hilbert_kunz.hpp"
#include "frobper/periodicity.hpp"
#include "frobper/syzygy.hpp"

namespace frobper {

using Json = nlohmann::json;

// Exact rationals as "n/d", integers as "n".
std::string rational_string(const Rational& r);

// {degree, terms: [[i, j, k, c], ...]} listing nonzero terms of X^i Y^j Z^k
// in basis order.
Json to_json(const GradedElement& e);
Json to_json(const BinaryForm& f);
Json to_json(const SyzygySpace& s);
Json to_json(const SplittingType& t);
Json to_json(const InstabilityWitness& w);
Json to_json(const HKSummary& s);
Json to_json(const WindowResult& w);
Json to_json(const PeriodicityReport& r);
Json to_json(const DoubleCoverResult& r);
Json to_json(const Char2Result& r);

// Header plus one row per e: e,q,phi,closed_formula_or_blank,match_flag.
std::string hk_csv(const HKSummary& s);

}  // namespace frobper

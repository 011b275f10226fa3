#pragma once

#include <string>

#include "juntalab/boxes.hpp"
#include "juntalab/finite_metric.hpp"
#include "juntalab/hamming.hpp"
#include "juntalab/inequalities.hpp"
#include "juntalab/junta.hpp"
#include "juntalab/quadrature.hpp"
#include "juntalab/record.hpp"
#include "juntalab/trig_poly.hpp"

namespace juntalab {

// JSON document formats (see README for schemas). Parsing lives behind
// these functions; the public surface stays JSON-library free.

TrigPoly trigpoly_from_json(const std::string& text);
std::string trigpoly_to_json(const TrigPoly& f);

/// Loads a function input by extension: .json -> TrigPoly document,
/// .csv -> box-grid dump (piecewise-constant cube handle), anything else ->
/// the plain-text trigpoly format.
ProductFn load_function(const std::string& path);

BoxSet boxset_from_json(const std::string& text);
std::string boxset_to_json(const BoxSet& a);
BoxSet load_boxset(const std::string& path);

FiniteMetricSpace metric_space_from_json(const std::string& text);
std::string metric_space_to_json(const FiniteMetricSpace& space);

ModulusSpec modulus_from_json(const std::string& text);
std::string modulus_to_json(const ModulusSpec& omega);

/// Vector map spec: {"family":"identity"|"sine","n":N} or
/// {"family":"grid","components":[paths...],"lipschitz":L}.
VectorMap load_vector_map(const std::string& path);

SuiteSpec suite_from_json(const std::string& text);
SuiteSpec load_suite(const std::string& path);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

// Report records with the fixed field orders the CLI emits.
Record to_record(const InequalityReport& r);
Record junta_record(const JuntaApproximation& ja, std::uint64_t seed);
Record influence_record(const InfluenceProfile& prof, const QuadratureSpec& quad,
                        std::uint64_t seed);
Record oracle_record(const OracleResult& res, std::uint64_t seed);
Record hamming_record(const HammingJuntaResult& res, double epsilon, std::uint64_t seed);
Record separated_sets_record(const SeparatedSetsResult& res, std::uint64_t seed);

/// 1-based coordinate list, how all reports serialize CoordSets.
std::vector<std::int64_t> coords_one_based(const CoordSet& s);

}  // namespace juntalab

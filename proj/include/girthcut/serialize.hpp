#pragma once

// JSON forms of the library's result types. Rationals are written as
// <name>_num / <name>_den integer pairs.

#include <nlohmann/json.hpp>

#include "girthcut/constructions.hpp"
#include "girthcut/digraph.hpp"
#include "girthcut/expansion.hpp"
#include "girthcut/fas.hpp"
#include "girthcut/periodicity.hpp"

namespace girthcut {

void to_json(nlohmann::json& j, const Edge& e);
void from_json(const nlohmann::json& j, Edge& e);

void to_json(nlohmann::json& j, const GraphStats& s);
void to_json(nlohmann::json& j, const SccDecomposition& s);
void to_json(nlohmann::json& j, const CutResult& c);
void to_json(nlohmann::json& j, const SweepTrace& t);
void to_json(nlohmann::json& j, const LayerGrowthReport& r);
void to_json(nlohmann::json& j, const FasCertificate& c);
void from_json(const nlohmann::json& j, FasCertificate& c);
void to_json(nlohmann::json& j, const BoundReport& r);
void to_json(nlohmann::json& j, const PeriodReport& r);
void to_json(nlohmann::json& j, const SpectrumReport& r);
void to_json(nlohmann::json& j, const CoprimeWalk& w);
void to_json(nlohmann::json& j, const CoinRepresentation& c);
void to_json(nlohmann::json& j, const GeneratorSpec& s);
void from_json(const nlohmann::json& j, GeneratorSpec& s);

/// CutResult with its sweep levels under "trace".
nlohmann::json cut_with_trace(const CutResult& cut, const SweepTrace* trace);

/// Parses "a/b" or "a".
Rational parse_rational(std::string_view text);

}  // namespace girthcut

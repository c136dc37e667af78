#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "cspec/classes.hpp"
#include "cspec/divgraph.hpp"
#include "cspec/primes.hpp"
#include "cspec/verify.hpp"

// JSON and CSV encodings. Big integers are always decimal strings.
namespace cspec::report {

using nlohmann::json;

json decimal_array(const std::vector<BigNat>& values);
std::vector<BigNat> parse_decimal_array(const json& array);

// {"values": [...]} exactly; the wire form of a spectrum.
json spectrum_values(const Spectrum& spectrum);

json to_json(const CycleType& type);
json to_json(const ChainResult& chain);
json to_json(const OmegaData& omega);
json to_json(const OmegaCheck& check);
json to_json(const BoundReport& report);
json to_json(const std::vector<HzTableRow>& rows);
json to_json(const StrategyOutcome& outcome);
json to_json(const Certificate& cert, bool include_elapsed = true);
json summary(const ScanReport& report);
json to_json(const OmegaSweep& sweep);

std::string certificate_csv_header();
std::string to_csv_row(const Certificate& cert);

}  // namespace cspec::report

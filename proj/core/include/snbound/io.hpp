#ifndef SNBOUND_IO_HPP
#define SNBOUND_IO_HPP

#include <filesystem>
#include <string>
#include <variant>

#include "snbound/bounds.hpp"
#include "snbound/generic.hpp"
#include "snbound/states.hpp"

namespace snbound {

using StateVariant = std::variant<WeightedEnsemble, DensityMatrix>;

/// Loads a state file, either shape:
///   {"kind":"ensemble","m":..,"n":..,"members":[{"weight":..,"coeffs":[[[re,im],..],..]},..]}
///   {"kind":"density","m":..,"n":..,"matrix":[[[re,im],..],..]}
/// All module invariants are enforced; failures raise ParseError citing
/// the JSON pointer of the offending field.
StateVariant parse_state_file(const std::filesystem::path& path);
StateVariant parse_state_text(const std::string& text);

std::string to_json_text(const WeightedEnsemble& e);
std::string to_json_text(const DensityMatrix& rho);

/// Report documents carry schema_version 1 and a "kind" discriminator.
std::string report_json(const BoundReport& rep);
std::string summary_json(const TrialSummary& summary);

std::string report_text(const BoundReport& rep);
std::string summary_text(const TrialSummary& summary);

}  // namespace snbound

#endif

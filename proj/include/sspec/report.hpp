#pragma once

#include <string>

#include <json.hpp>

#include "sspec/closed_forms.hpp"
#include "sspec/cohomology.hpp"
#include "sspec/spectra.hpp"

namespace sspec {

inline constexpr const char* kToolVersion = "0.1.0";

using json = nlohmann::ordered_json;

/// {size, eigs:[{value,mult}], residual:{degree, primes, coeffs}}; coefficient
/// lists start at the constant term.
json to_json(const SpectrumSummary& s);
json to_json(const CharPolyFingerprint& f);
json to_json(const PredictedSpectrum& p);
json to_json(const OrderedCycle& c);
json to_json(const H1Report& r);
json to_json(const CheckResult& r);
json to_json(const ConferenceReport& r);

/// Factored characteristic polynomial, e.g. "x^17 (x-2)^9 * R(x) [deg 12]".
std::string format_charpoly(const SpectrumSummary& s);

}  // namespace sspec

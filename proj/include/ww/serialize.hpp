#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "ww/montecarlo.hpp"
#include "ww/oracle.hpp"
#include "ww/polytope.hpp"

namespace ww {

/// Compact hex encoding of the sign pattern: bit eps is 1 iff f(eps) = +1,
/// little-endian bit order, most significant hex digit first.
std::string sign_function_hex(const SignFunction& f);
SignFunction sign_function_from_hex(int n, const std::string& hex);

// JSON schemas, all versioned with "schema": 1.
nlohmann::json to_json(const SignFunction& f);
SignFunction sign_function_from_json(const nlohmann::json& j);

nlohmann::json to_json(const WalshSpectrum& beta);

nlohmann::json to_json(const AngleConfig& t);
AngleConfig angle_config_from_json(const nlohmann::json& j);

nlohmann::json to_json(const SpectrumResult& r);
nlohmann::json to_json(const OptimizeReport& r);

nlohmann::json to_json(const CorrelationVector& q);
CorrelationVector correlation_vector_from_json(const nlohmann::json& j);

nlohmann::json to_json(const DenseHermitian& h); // nested arrays of [re, im]

nlohmann::json to_json(const WilsonInterval& ci);
nlohmann::json to_json(const SampleRecord& r);
nlohmann::json to_json(const ScalingRow& row);
nlohmann::json to_json(const TailReport& r);
nlohmann::json to_json(const SubnormalRow& r);

/// CSV per-sample stream: sample_index,f_hex,norm,sweeps,restarts_used,converged.
std::string records_csv(const std::vector<SampleRecord>& records);

} // namespace ww

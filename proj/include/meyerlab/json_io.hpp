#pragma once

#include <nlohmann/json_fwd.hpp>
#include <string>

#include "meyerlab/autocorr.hpp"
#include "meyerlab/cutproject.hpp"
#include "meyerlab/harmonic.hpp"
#include "meyerlab/pointset.hpp"
#include "meyerlab/spectrum.hpp"

// JSON schemas:
//   PointSet         {dim, region:{lo,hi}, points:[[...]]}
//   WeightedComb     {dim, region, atoms:[{x, re, im}]}
//   CutProjectScheme {basis, d, m, window:{lo,hi}}
//   CharacterSet     {dim, eps, truncation_radius, members:[{chi, deviation}]}
//   SpectrumEstimate {dim, estimator, patch_volume, i_zero,
//                     entries:[{chi, intensity, stderr_proxy}]}
//   PeakSet          {a, b?, estimator, peaks:[{chi, intensity}]}
// Coordinates are emitted as arrays of length dim.

namespace meyerlab {

nlohmann::json to_json(const Box& box);
nlohmann::json to_json(const PointSet& ps);
nlohmann::json to_json(const WeightedComb& comb);
nlohmann::json to_json(const CutProjectScheme& scheme);
nlohmann::json to_json(const CharacterSet& cs);
nlohmann::json to_json(const SpectrumEstimate& spec);
nlohmann::json to_json(const PeakSet& peaks);
nlohmann::json to_json(const DensityEstimate& est);
nlohmann::json to_json(const MeyerCertificate& cert);

Box box_from_json(const nlohmann::json& j);
PointSet pointset_from_json(const nlohmann::json& j);
WeightedComb comb_from_json(const nlohmann::json& j);
CutProjectScheme scheme_from_json(const nlohmann::json& j);
CharacterSet character_set_from_json(const nlohmann::json& j);
SpectrumEstimate spectrum_from_json(const nlohmann::json& j);

// CSV plot data: header chi[,chi_y],intensity,stderr_proxy; %.17g floats.
std::string spectrum_to_csv(const SpectrumEstimate& spec);

}  // namespace meyerlab

#pragma once

#include <json.hpp>
#include <ostream>
#include <string>

#include "shifted_shapes/limit_shapes.hpp"
#include "shifted_shapes/partitions.hpp"
#include "shifted_shapes/profile.hpp"
#include "shifted_shapes/rsk.hpp"
#include "shifted_shapes/tableaux.hpp"

namespace shs {

using Json = nlohmann::json;

// Fewest significant digits (at least 9) that read back to the same double.
std::string format_double(double v);

void write_curve_csv(std::ostream& out, const SampledProfile& curve);
void write_family_csv(std::ostream& out, const LevelCurveFamily& family);

Json to_json(const StrictPartition& xi);
Json to_json(const ShiftedStandardTableau& t);
Json to_json(const GeneralizedShiftedTableau& t);
Json to_json(const RecordingTableau& t);
Json to_json(const TableauPair& pair);
Json to_json(const SampledProfile& curve);
Json to_json(const LevelCurveFamily& family);

std::string letter_string(const CircledLetter& letter);

}  // namespace shs

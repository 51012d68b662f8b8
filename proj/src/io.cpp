#include "shifted_shapes/io.hpp"

#include <cstdio>
#include <cstdlib>

namespace shs {

std::string format_double(double v) {
  char buf[40];
  for (int precision = 9; precision <= 17; ++precision) {
    std::snprintf(buf, sizeof buf, "%#.*g", precision, v);
    if (std::strtod(buf, nullptr) == v) break;
  }
  return buf;
}

void write_curve_csv(std::ostream& out, const SampledProfile& curve) {
  out << "z,t\n";
  for (int i = 0; i < curve.size(); ++i) out << format_double(curve.z(i)) << ',' << format_double(curve.values()[i]) << '\n';
}

void write_family_csv(std::ostream& out, const LevelCurveFamily& family) {
  out << "alpha,z,t\n";
  for (std::size_t k = 0; k < family.curves.size(); ++k) {
    const auto& c = family.curves[k];
    for (int i = 0; i < c.size(); ++i)
      out << format_double(family.alphas[k]) << ',' << format_double(c.z(i)) << ','
          << format_double(c.values()[i]) << '\n';
  }
}

Json to_json(const StrictPartition& xi) { return xi.parts(); }

namespace {

Json cell(int x, int y, int v, bool circled) { return Json{{"x", x}, {"y", y}, {"v", v}, {"circled", circled}}; }

}  // namespace

Json to_json(const ShiftedStandardTableau& t) {
  Json out = Json::array();
  for (std::size_t r = 0; r < t.rows().size(); ++r)
    for (std::size_t k = 0; k < t.rows()[r].size(); ++k) {
      const int y = static_cast<int>(r) + 1;
      out.push_back(cell(y + 1 + static_cast<int>(k), y, t.rows()[r][k], false));
    }
  return Json{{"shape", to_json(t.shape())}, {"cells", out}};
}

std::string letter_string(const CircledLetter& letter) {
  return (letter.circled ? "c" : "") + std::to_string(letter.value);
}

Json to_json(const GeneralizedShiftedTableau& t) {
  Json out = Json::array();
  for (std::size_t r = 0; r < t.rows().size(); ++r)
    for (std::size_t k = 0; k < t.rows()[r].size(); ++k) {
      const int y = static_cast<int>(r) + 1;
      const auto& letter = t.rows()[r][k];
      out.push_back(cell(y + 1 + static_cast<int>(k), y, letter.value, letter.circled));
    }
  return Json{{"shape", to_json(t.shape())}, {"cells", out}};
}

Json to_json(const RecordingTableau& t) {
  Json out = to_json(t.tableau);
  std::size_t i = 0;
  for (const auto& row : t.circled)
    for (bool c : row) out["cells"][i++]["circled"] = c;
  return out;
}

Json to_json(const TableauPair& pair) {
  return Json{{"shape", to_json(pair.P.shape())}, {"P", to_json(pair.P)}, {"Q", to_json(pair.Q)}};
}

Json to_json(const SampledProfile& curve) {
  Json z = Json::array(), t = Json::array();
  for (int i = 0; i < curve.size(); ++i) {
    z.push_back(curve.z(i));
    t.push_back(curve.values()[i]);
  }
  return Json{{"z", z}, {"t", t}};
}

Json to_json(const LevelCurveFamily& family) {
  Json members = Json::array();
  for (std::size_t k = 0; k < family.curves.size(); ++k) {
    Json m = to_json(family.curves[k]);
    m["alpha"] = family.alphas[k];
    members.push_back(m);
  }
  return Json{{"curves", members}};
}

}  // namespace shs

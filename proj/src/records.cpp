#include "quadid/records.hpp"

#include "json.hpp"

namespace quadid {

QuadRecord parse_record(std::string_view line) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(line);
  } catch (const nlohmann::json::parse_error& e) {
    throw RecordError(std::string("not a JSON object: ") + e.what());
  }
  if (!j.is_object()) throw RecordError("record must be a JSON object");

  static constexpr const char* kLabels[] = {"A", "B", "C", "D"};
  QuadRecord rec;
  for (int i = 0; i < 4; ++i) {
    const auto it = j.find(kLabels[i]);
    if (it == j.end()) throw RecordError(std::string("missing vertex ") + kLabels[i]);
    if (!it->is_array() || it->size() != 2 || !(*it)[0].is_string() || !(*it)[1].is_string()) {
      throw RecordError(std::string("vertex ") + kLabels[i] +
                        " must be a two-element array of scalar strings");
    }
    for (int k = 0; k < 2; ++k) {
      rec.coords[i][k] = (*it)[k].get<std::string>();
      parse_rational(rec.coords[i][k]);
    }
  }
  if (j.size() != 4) throw RecordError("unexpected keys in record");
  return rec;
}

std::string format_record(const QuadConfig<Rational>& q) {
  const Point2<Rational>* pts[] = {&q.a, &q.b, &q.c, &q.d};
  static constexpr char kLabels[] = {'A', 'B', 'C', 'D'};
  std::string out = "{";
  for (int i = 0; i < 4; ++i) {
    if (i) out += ',';
    out += '"';
    out += kLabels[i];
    out += "\":[\"" + pts[i]->x.str() + "\",\"" + pts[i]->y.str() + "\"]";
  }
  out += '}';
  return out;
}

}  // namespace quadid

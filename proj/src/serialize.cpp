#include "dissect/serialize.hpp"

#include <algorithm>
#include <stdexcept>

namespace dissect {

Json to_json(const Dissection& d) {
  Json diagonals = Json::array();
  for (const Chord c : d.diagonals) diagonals.push_back(Json::array({c.a, c.b}));
  return Json{{"n", d.n}, {"diagonals", std::move(diagonals)}};
}

Json to_json(const MarkedDissection& m) {
  Json j = to_json(m.base);
  j["mark"] = m.mark.vertices;
  return j;
}

Json to_json(const Rational& v) {
  return Json{{"numerator", numerator(v).str()}, {"denominator", denominator(v).str()}};
}

Json to_json(const CountReport& report) {
  Json out = Json::array();
  for (const auto& v : report.values)
    out.push_back(Json{{"n", report.n},
                       {"k", report.k},
                       {"group", std::string(to_string(report.group))},
                       {"method", std::string(to_string(v.method))},
                       {"value", to_json(v.value)},
                       {"agrees", v.agrees},
                       {"note", v.note}});
  return out;
}

namespace {

int read_int(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key) || !j.at(key).is_number_integer())
    throw std::invalid_argument(std::string("record field '") + key + "' must be an integer");
  return j.at(key).get<int>();
}

}  // namespace

Dissection dissection_from_json(const Json& j) {
  const int n = read_int(j, "n");
  if (!j.contains("diagonals") || !j.at("diagonals").is_array())
    throw std::invalid_argument("record field 'diagonals' must be an array");
  std::vector<Chord> chords;
  for (const auto& pair : j.at("diagonals")) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() || !pair[1].is_number_integer())
      throw std::invalid_argument("each diagonal must be a 2-element integer array");
    chords.emplace_back(pair[0].get<int>(), pair[1].get<int>());
  }
  return make_dissection(n, std::move(chords));
}

MarkedDissection marked_from_json(const Json& j) {
  Dissection base = dissection_from_json(j);
  if (!j.contains("mark") || !j.at("mark").is_array())
    throw std::invalid_argument("record field 'mark' must be an array");
  std::vector<int> mark;
  for (const auto& v : j.at("mark")) {
    if (!v.is_number_integer()) throw std::invalid_argument("mark entries must be integers");
    mark.push_back(v.get<int>());
  }
  std::sort(mark.begin(), mark.end());
  return MarkedDissection{std::move(base), Component{std::move(mark)}};
}

std::string dump_line(const Json& j) { return j.dump(); }

}  // namespace dissect

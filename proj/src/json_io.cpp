#include "capmatch/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace capmatch::io {

using nlohmann::json;

namespace {

std::vector<std::int64_t> int_array(const json& doc, const char* key) {
  const json& arr = doc.at(key);
  if (!arr.is_array()) throw InputError(std::string("\"") + key + "\" must be an array");
  std::vector<std::int64_t> out;
  out.reserve(arr.size());
  for (const json& v : arr) {
    if (!v.is_number_integer()) throw InputError(std::string("\"") + key + "\" must hold integers");
    out.push_back(v.get<std::int64_t>());
  }
  return out;
}

}  // namespace

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

RawInstance parse_instance(const json& doc) {
  if (!doc.is_object()) throw InputError("instance must be a JSON object");
  if (!doc.contains("s") || !doc.contains("t")) throw InputError("instance needs \"s\" and \"t\"");
  RawInstance raw;
  raw.s = int_array(doc, "s");
  raw.t = int_array(doc, "t");
  raw.alpha = doc.contains("alpha") ? int_array(doc, "alpha")
                                    : std::vector<std::int64_t>(raw.s.size(), std::int64_t(raw.t.size()));
  raw.beta = doc.contains("beta") ? int_array(doc, "beta")
                                  : std::vector<std::int64_t>(raw.t.size(), std::int64_t(raw.s.size()));
  return raw;
}

RawInstance read_instance_file(const std::string& path) { return parse_instance(read_json_file(path)); }

json instance_to_json(const RawInstance& raw) {
  return json{{"s", raw.s}, {"t", raw.t}, {"alpha", raw.alpha}, {"beta", raw.beta}};
}

Matching parse_matching(const Instance& inst, const json& doc) {
  if (!doc.is_object() || !doc.contains("pairs")) throw InputError("matching needs \"pairs\"");
  // input index -> sorted index, per side
  std::vector<std::uint32_t> s_rank(inst.size(Side::S)), t_rank(inst.size(Side::T));
  for (std::size_t i = 0; i < s_rank.size(); ++i) s_rank[inst.origin(Side::S)[i]] = static_cast<std::uint32_t>(i);
  for (std::size_t i = 0; i < t_rank.size(); ++i) t_rank[inst.origin(Side::T)[i]] = static_cast<std::uint32_t>(i);

  Matching m;
  for (const json& p : doc.at("pairs")) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_number_integer() || !p[1].is_number_integer()) {
      throw InputError("each pair must be [s_index, t_index]");
    }
    const auto si = p[0].get<std::int64_t>(), ti = p[1].get<std::int64_t>();
    // Out-of-range indices are kept so verification can report them.
    const bool ok = si >= 0 && ti >= 0 && std::size_t(si) < s_rank.size() && std::size_t(ti) < t_rank.size();
    if (ok) {
      m.pairs.emplace_back(s_rank[std::size_t(si)], t_rank[std::size_t(ti)]);
    } else {
      m.pairs.emplace_back(static_cast<std::uint32_t>(std::max<std::int64_t>(si, 0) + std::int64_t(s_rank.size())),
                           static_cast<std::uint32_t>(std::max<std::int64_t>(ti, 0) + std::int64_t(t_rank.size())));
    }
  }
  if (doc.contains("cost")) {
    if (!doc.at("cost").is_number_integer()) throw InputError("\"cost\" must be an integer");
    m.cost = doc.at("cost").get<std::int64_t>();
  } else {
    m.cost = matching_cost(inst, m.pairs);
  }
  return m;
}

Matching read_matching_file(const Instance& inst, const std::string& path) {
  return parse_matching(inst, read_json_file(path));
}

json matching_to_json(const Instance& inst, const Matching& m) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  pairs.reserve(m.pairs.size());
  for (const auto& [i, j] : m.pairs) pairs.emplace_back(inst.origin(Side::S)[i], inst.origin(Side::T)[j]);
  std::sort(pairs.begin(), pairs.end());
  json arr = json::array();
  for (const auto& [i, j] : pairs) arr.push_back({i, j});
  return json{{"cost", m.cost}, {"pairs", arr}, {"feasible", true}};
}

json infeasible_json() { return json{{"cost", nullptr}, {"pairs", json::array()}, {"feasible", false}}; }

}  // namespace capmatch::io

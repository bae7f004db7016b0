#pragma once

#include <stdexcept>
#include <string>

#include "capmatch/core.hpp"
#include "json.hpp"

// Instance and matching documents. Pair indices in documents refer to the
// caller's input order; in-memory matchings use sorted indices.
namespace capmatch::io {

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// {"s":[...],"t":[...],"alpha":[...],"beta":[...]}; a missing capacity list
// means every point of that side may take the whole opposite set.
RawInstance parse_instance(const nlohmann::json& doc);
RawInstance read_instance_file(const std::string& path);
nlohmann::json instance_to_json(const RawInstance& raw);

// {"cost":c,"pairs":[[si,ti],...]}; converted to sorted indices of `inst`.
Matching parse_matching(const Instance& inst, const nlohmann::json& doc);
Matching read_matching_file(const Instance& inst, const std::string& path);

// {"cost":c,"pairs":[[si,ti],...],"feasible":true}, pairs in input order.
nlohmann::json matching_to_json(const Instance& inst, const Matching& m);
nlohmann::json infeasible_json();

nlohmann::json read_json_file(const std::string& path);

}  // namespace capmatch::io

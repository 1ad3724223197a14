#include "sturmlex/report_json.hpp"

namespace sturmlex {

Json to_json(const Verdict& v) {
  Json j;
  j["check"] = v.check;
  j["status"] = to_string(v.status);
  j["upTo"] = v.up_to;
  j["witness"] = v.witness;
  j["saturatedLengths"] = v.saturated_lengths;
  j["n"] = v.n ? Json(*v.n) : Json(nullptr);
  return j;
}

Json to_json(const SturmianReport& r) {
  Json arr = Json::array();
  arr.push_back(to_json(r.nfop.verdict));
  if (r.balance) arr.push_back(to_json(r.balance->verdict));
  arr.push_back(to_json(r.complexity));
  if (r.hamming2) arr.push_back(to_json(*r.hamming2));
  if (r.ones) arr.push_back(to_json(*r.ones));
  arr.push_back(to_json(r.combined));
  return arr;
}

Json to_json(const ChristoffelReport& r) {
  Json j;
  j["p"] = r.ones;
  j["q"] = r.zeros;
  j["lower"] = r.pair.lower;
  j["upper"] = r.pair.upper;
  j["core"] = r.pair.core;
  j["items"] = Json::array();
  for (const auto& item : r.items) {
    Verdict v;
    v.check = "christoffel(" + item.item + ")";
    v.status = item.passed ? Status::ConsistentUpTo : Status::Violated;
    v.up_to = r.n;
    v.witness = item.witness;
    if (r.saturated) v.saturated_lengths = {r.n};
    if (!item.passed) v.n = r.n;
    j["items"].push_back(to_json(v));
  }
  return j;
}

Json to_json(const HarnessReport& r) {
  Json arr = Json::array();
  for (const auto& o : r.outcomes) {
    Json j;
    j["spec"] = o.spec;
    j["assertion"] = o.name;
    j["status"] = to_string(o.status);
    j["detail"] = o.detail;
    arr.push_back(std::move(j));
  }
  return arr;
}

}  // namespace sturmlex

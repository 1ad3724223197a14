#pragma once

#include <json.hpp>

#include "sturmlex/characterize.hpp"
#include "sturmlex/christoffel.hpp"

namespace sturmlex {

using Json = nlohmann::ordered_json;

/// Keys, in order: check, status, upTo, witness, saturatedLengths, n.
Json to_json(const Verdict& v);

/// One object per sub-check, the combined "sturmian" verdict last.
Json to_json(const SturmianReport& r);

Json to_json(const ChristoffelReport& r);

Json to_json(const HarnessReport& r);

}  // namespace sturmlex

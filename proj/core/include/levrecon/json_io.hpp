#pragma once

#include <nlohmann/json.hpp>

#include "levrecon/bigint.hpp"
#include "levrecon/channel.hpp"
#include "levrecon/decoder.hpp"
#include "levrecon/error_patterns.hpp"
#include "levrecon/oracle.hpp"
#include "levrecon/simulation.hpp"

namespace levrecon {

/// Integer as a JSON number when it fits in 64 bits, otherwise a decimal string.
nlohmann::json big_to_json(const BigInt& v);

/// {"ins": ["1","","",""], "del": "0001", "sub": {"2": 3}}; insertion parts
/// use the word text format of the alphabet.
nlohmann::json pattern_to_json(const ErrorPattern& p, Alphabet alphabet);
ErrorPattern pattern_from_json(const nlohmann::json& j, Alphabet alphabet);

/// {"kind":"multiset","items":[{"word":"11100","count":4}, ...]}
nlohmann::json collection_to_json(const OutputCollection& c);
OutputCollection collection_from_json(const nlohmann::json& j, Alphabet alphabet);

nlohmann::json report_to_json(const oracle::ConfusabilityReport& r);
nlohmann::json certificate_to_json(const Y6Certificate& c);
nlohmann::json sim_result_to_json(const SimResult& r);

}  // namespace levrecon

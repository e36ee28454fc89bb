#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "chainconic/chain.hpp"

namespace chainconic::cli {

inline constexpr int kConfigVersion = 1;

// Configuration document. Every rational is a string "p" or "p/q":
//   {"version": 1, "n": 6,
//    "carrierK": {"cx": .., "cy": .., "r": ..},
//    "carrierL": {"cx": .., "cy": .., "r": ..} | {"line": {"a": .., "b": .., "c": ..}},
//    "pParams": [..], "qStart": "p/q" | {"x": .., "y": ..}}
nlohmann::json config_to_json(const ChainConfiguration<Rational>& config);

// Throws std::invalid_argument with the offending key on schema errors.
ChainConfiguration<Rational> config_from_json(const nlohmann::json& doc);

// Canonical text form: keys sorted, two-space indent, trailing newline.
std::string dump_config(const ChainConfiguration<Rational>& config);
ChainConfiguration<Rational> parse_config(std::string_view text);

nlohmann::json point_to_json(const Point<Rational>& p);
nlohmann::json line_to_json(const Line<Rational>& l);

}  // namespace chainconic::cli

#pragma once

#include <memory>
#include <string>

#include "gb/core/problem.hpp"

namespace gb::io {

inline constexpr int kInstanceSchemaVersion = 1;

// Serializes any supported instance kind (tsp, atsp, cvrp, vrpb, nqp, bpp,
// matspspd, acvrp) to the versioned JSON schema. parse_instance is the exact
// inverse: parse(serialize(x)) reproduces x field for field, and every schema
// or invariant violation raises ParseError.
std::string serialize_instance(const Problem& problem);

std::shared_ptr<Problem> parse_instance(const std::string& json_text);

std::shared_ptr<Problem> load_instance_file(const std::string& path);

void save_instance_file(const Problem& problem, const std::string& path);

}  // namespace gb::io

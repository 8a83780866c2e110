#pragma once

#include <memory>
#include <string>

#include "gb/core/problem.hpp"

namespace gb::io {

// Resolves an instance reference to a problem:
//   *.tsp / *.atsp      TSPLIB text
//   *.json              the versioned instance schema
//   nqp:<N>             an N-queens board
//   vrpb:<path>         derive a backhaul instance from a CVRP json
//   matspspd:<path>     derive the rich multi-route instance from an ATSP file
std::shared_ptr<Problem> load_problem(const std::string& ref);

}  // namespace gb::io

#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"
#include "wittcenter/suites.hpp"

namespace wittcenter::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailures = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInternal = 3;

// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

nlohmann::ordered_json report_to_json(const Report& report);

}  // namespace wittcenter::cli

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "zlab/family.hpp"
#include "zlab/function.hpp"
#include "zlab/limit.hpp"

namespace zlab::cli {

using json = nlohmann::json;

struct Config {
  Function f;
  double alpha;
};

/// Config errors are thrown as Error(config) naming the offending field.
Config parse_config(const json& j);
Config load_config(const std::string& path);

Function parse_function(const json& j);
json function_to_json(const Function& f);

json descriptor_to_json(const FamilyDescriptor& d);
FamilyDescriptor descriptor_from_json(const json& j);
json families_to_json(const FamilySet& set);
FamilySet families_from_json(const json& j);

/// {"form": "power"|"exp"|"precomposition", ...}; precomposition uses base.
LimitFunction limit_from_json(const json& j, const Function& base);
json limit_to_json(const LimitFunction& g);

/// x rounded to 9 significant digits.
double round9(double x);
std::string format9(double x);

/// Runs one command line (args exclude the program name). Returns the exit
/// code: 0 pass, 1 numeric failure, 2 usage or config error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace zlab::cli

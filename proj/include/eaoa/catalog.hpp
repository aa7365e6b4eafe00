#pragma once

#include <string>
#include <vector>

#include "eaoa/code.hpp"

namespace eaoa {

// Built-in example codes, addressable from the CLI as catalog:<name>.
std::vector<std::string> catalog_names();
EaoaqecCode catalog_code(const std::string& name);

}  // namespace eaoa

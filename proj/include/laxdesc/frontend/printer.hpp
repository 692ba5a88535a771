#pragma once

#include <string>

#include "laxdesc/frontend/parser.hpp"

namespace laxdesc::frontend {

// Canonical text; parse(print(d)) == d.
std::string print(const Decl& d);
std::string print(const Document& doc);

}  // namespace laxdesc::frontend

#pragma once

#include <string>
#include <vector>

#include "heronfrieze/frieze.hpp"

namespace hfcli {

// One string per text row: node rows from j - i = n at the top down to 0,
// half rows interleaved for Heronian friezes, then the "/" (up) and "\"
// (down) line rows. Each entry sits in the cell of its doubled column i + j.
// A window without nodes renders as no rows at all.
std::vector<std::string> render(const hf::Frieze& z);

}  // namespace hfcli

#pragma once

#include <string>

#include "revguard/circuit.hpp"

namespace revguard {

// RevLib ".real" netlist I/O, version 2.0 subset: Toffoli gates ("t<k>")
// with positive controls only. '#' starts a comment; tokens are
// whitespace-separated. parse(write(c)) is gate-for-gate identical to c.
Circuit parse_real(const std::string& text);
std::string write_real(const Circuit& c);

Circuit read_real_file(const std::string& path);
void write_real_file(const Circuit& c, const std::string& path);

}  // namespace revguard

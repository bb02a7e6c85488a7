#pragma once

#include <iosfwd>

#include "latt14/lattice.hpp"

namespace latt {

// Lattice text format: optional `label: <text>` line, line `n`, then n rows
// of n rationals; `#` starts a comment. Bit-exact round trip.
Lattice lattice_read(std::istream& in);
Lattice lattice_read_file(const std::string& path);
void lattice_write(std::ostream& out, const Lattice& L);
void lattice_write_file(const std::string& path, const Lattice& L);

std::string data_dir();  // $LATT14_DATA or ./data

}  // namespace latt

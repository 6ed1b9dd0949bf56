#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "hnp/perm.hpp"

namespace hnp {

// Generator file format: UTF-8 text, one cycle-notation permutation per
// line, '#' starts a comment, blank lines are ignored. An optional first
// data line "degree N" fixes the degree; otherwise the degree is the largest
// point mentioned anywhere in the file.
struct GeneratorFile {
  int degree = 0;
  std::vector<Permutation> generators;
};

GeneratorFile parse_generator_file(std::istream& in);
GeneratorFile load_generator_file(const std::string& path);  // ParseError on I/O failure
void write_generator_file(std::ostream& out, int degree, const std::vector<Permutation>& gens);

}  // namespace hnp

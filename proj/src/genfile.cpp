#include "hnp/genfile.hpp"

#include <fstream>
#include <sstream>

namespace hnp {

namespace {

std::string strip(const std::string& line) {
  std::string s = line;
  auto hash = s.find('#');
  if (hash != std::string::npos) s.erase(hash);
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

int max_point(const std::string& text) {
  int best = 0;
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] >= '0' && text[i] <= '9') {
      std::size_t start = i;
      while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
      best = std::max(best, std::stoi(text.substr(start, i - start)));
    } else {
      ++i;
    }
  }
  return best;
}

}  // namespace

GeneratorFile parse_generator_file(std::istream& in) {
  std::vector<std::string> lines;
  std::string raw;
  while (std::getline(in, raw)) {
    std::string s = strip(raw);
    if (!s.empty()) lines.push_back(s);
  }

  GeneratorFile out;
  std::size_t first = 0;
  if (!lines.empty() && lines[0].rfind("degree", 0) == 0) {
    std::istringstream iss(lines[0].substr(6));
    if (!(iss >> out.degree) || out.degree < 0) throw ParseError("malformed degree line");
    first = 1;
  } else {
    for (const std::string& s : lines) out.degree = std::max(out.degree, max_point(s));
  }

  for (std::size_t i = first; i < lines.size(); ++i)
    out.generators.push_back(parse_permutation(lines[i], out.degree));
  return out;
}

GeneratorFile load_generator_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return parse_generator_file(in);
}

void write_generator_file(std::ostream& out, int degree, const std::vector<Permutation>& gens) {
  out << "degree " << degree << "\n";
  for (const Permutation& g : gens) out << g.cycle_string() << "\n";
}

}  // namespace hnp

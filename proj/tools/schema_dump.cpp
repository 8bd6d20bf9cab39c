// Writes the embedded report schemas to a directory (default: schemas/), in
// the canonical serialization the repository ships.
#include <cstdio>
#include <fstream>

#include "linelab/io.hpp"

int main(int argc, char** argv) {
  std::string dir = argc > 1 ? argv[1] : "schemas";
  for (const std::string& name : linelab::schema_names()) {
    std::string path = dir + "/" + name + ".json";
    std::ofstream out(path, std::ios::trunc);
    if (!out) {
      std::fprintf(stderr, "cannot write %s\n", path.c_str());
      return 1;
    }
    out << linelab::schema_text(name);
  }
  return 0;
}

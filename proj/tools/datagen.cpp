// Regenerates the bundled data directory from the corpus builders.

#include <iostream>

#include "exprim/corpus.hpp"
#include "exprim/error.hpp"

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: exprim_datagen OUTPUT_DIR\n";
    return 2;
  }
  try {
    const auto files = exprim::corpus::generate(argv[1], std::cerr);
    std::cout << files.size() << " files written to " << argv[1] << '\n';
  } catch (const exprim::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}

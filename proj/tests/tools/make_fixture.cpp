// Writes the bundled end-to-end WoS fixture.
//   make_fixture OUT.txt

#include <fstream>
#include <iostream>

#include "synth.hpp"

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: make_fixture OUT.txt\n";
    return 2;
  }
  std::ofstream out(argv[1], std::ios::binary);
  rpys::synth::write_golden_fixture(out);
  return out ? 0 : 4;
}

// Regenerates the Bessel reference table from the high-precision series.
//
//   make_fixture [output-path]    (default: standard output)

#include <fstream>
#include <iostream>

#include "hyperradial/oracle/series_reference.hpp"

int main(int argc, char** argv) {
  auto records = hyperradial::oracle::default_fixture_grid();
  hyperradial::oracle::fill_fixture(records, 32);
  if (argc > 1) {
    std::ofstream out(argv[1]);
    if (!out) {
      std::cerr << "cannot open " << argv[1] << "\n";
      return 1;
    }
    hyperradial::oracle::write_fixture(out, records);
  } else {
    hyperradial::oracle::write_fixture(std::cout, records);
  }
  return 0;
}

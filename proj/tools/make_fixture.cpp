// Writes the synthetic classification fixture used by the tests:
//   make_fixture <out.libsvm> [rows_per_class=250] [features=123] [groups=14] [seed=7]
#include <cstdlib>
#include <iostream>
#include <string>

#include "sgdol/oracles/dataset.hpp"
#include "sgdol/oracles/synthetic.hpp"

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: make_fixture <out.libsvm> [rows_per_class] [features] [groups] [seed]\n";
    return 1;
  }
  auto arg = [&](int i, unsigned long fallback) {
    return argc > i ? std::stoul(argv[i]) : fallback;
  };
  sgdol::RngStream rng(arg(5, 7), 0);
  const auto data = sgdol::make_synthetic_classification(arg(2, 250), arg(3, 123), arg(4, 14), rng,
                                                         /*append_bias=*/false);
  sgdol::write_libsvm(data, std::string(argv[1]));
  std::cout << data.size() << " rows written to " << argv[1] << '\n';
  return 0;
}

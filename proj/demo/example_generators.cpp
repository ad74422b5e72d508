// Prints the two generators of C2 wr C2 wr C3 wr A_n and checks that they
// generate the whole group. Usage: example_generators [n]  (odd n >= 5)

#include <cstdlib>
#include <iostream>

#include "wreathgen.hpp"

int main(int argc, char **argv)
{
  using namespace wreathgen;

  std::uint32_t n = argc > 1 ? static_cast<std::uint32_t>(std::atoi(argv[1])) : 5;
  try {
    auto [x, y] = example_generators(n);
    TowerSpec const &t = x.tower;

    std::cout << "tower " << t.to_string() << " on " << x.perm.degree() << " leaves\n";
    std::cout << "x = " << format_cycles(x.perm) << "\n";
    std::cout << "y = " << format_cycles(y.perm) << "\n";
    std::cout << "order of y: " << y.perm.order() << "\n";

    Bsgs w(PermGroup(x.perm.degree(), {x.perm, y.perm}));
    std::cout << "|<x, y>| = " << w.order() << "\n";
    std::cout << "|W|      = " << t.order() << "\n";
    std::cout << "formula d(W) = " << d_tower(t).d << "\n";
    return w.order() == t.order() ? 0 : 1;
  } catch (std::exception const &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

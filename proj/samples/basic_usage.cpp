// Builds a few groups and prints alpha(G) next to alpha(Z(G)).

#include <alphag.hpp>

#include <iostream>

int main() {
  using namespace alphag;
  for (const char* spec : {"dihedral:8", "quaternion:8", "almost-extraspecial:16", "symmetric:4",
                           "product:(almost-extraspecial:16)x(cyclic:3)"}) {
    const FiniteGroup g = build_group(spec);
    const CenterComparison c = verify_inequality(g);
    std::cout << spec << ": alpha(G) = " << c.group_value << ", alpha(Z(G)) = " << c.center_value
              << (c.group_value == c.center_value ? "  (equality)" : "") << '\n';
  }
}

#pragma once

#include "algser/automaton.hpp"

namespace algser::test {

/// Five-state automaton for the Catalan numbers mod 3, reading the ternary
/// digits of n - 1 from the least significant end. States a_1, b_1, c_2, d_0,
/// e_2 in that order; the subscript is the output.
inline Dfao catalan3_fixture() {
  Dfao d;
  d.p = 3;
  d.outputs = {1, 1, 2, 0, 2};
  d.initial = 0;
  d.transitions = {
      1, 1, 4,  // a_1
      1, 2, 3,  // b_1
      2, 1, 3,  // c_2
      3, 3, 3,  // d_0
      2, 3, 4,  // e_2
  };
  d.offset = 1;
  return d;
}

}  // namespace algser::test

// Operation tables transcribed by hand from the source tables, kept apart
// from the library's own copies so the tests compare two transcriptions.
#ifndef NEARPRIME_TESTS_TABLES_HPP_
#define NEARPRIME_TESTS_TABLES_HPP_

#include <string>
#include <vector>

#include "corpus.hpp"

namespace tables {

using Rows = std::vector<std::vector<long long>>;

inline const Rows klein_mul{{0, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 0, 2}, {0, 0, 0, 3}};
inline const Rows z3_mul{{0, 0, 0}, {0, 0, 1}, {0, 0, 2}};
inline const Rows z4_mul{{0, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 0}, {0, 1, 0, 1}};
inline const Rows z6_mul{{0, 0, 0, 0, 0, 0}, {3, 5, 1, 3, 5, 1}, {0, 4, 2, 0, 4, 2},
                         {3, 3, 3, 3, 3, 3}, {0, 2, 4, 0, 2, 4}, {3, 1, 5, 3, 1, 5}};

inline nearprime::RawRing klein4() {
  return corpus::make("klein4", corpus::klein(), klein_mul);
}
inline nearprime::RawRing z3() { return corpus::make("z3", corpus::cyclic(3), z3_mul); }
inline nearprime::RawRing z4_klein() {
  return corpus::make("z4-klein", corpus::klein(), z4_mul);
}
inline nearprime::RawRing z4_cyclic() {
  return corpus::make("z4-cyclic", corpus::cyclic(4), z4_mul);
}
inline nearprime::RawRing z6() { return corpus::make("z6", corpus::cyclic(6), z6_mul); }

inline const std::vector<std::string> dn_labels{"0",  "1",    "2",    "x",   "1+x",
                                                "2+x", "2x", "1+2x", "2+2x"};

// Row a, column b holds a o b.
inline const std::vector<std::vector<std::string>> dn_printed{
    {"0", "0", "0", "0", "0", "0", "0", "0", "0"},
    {"0", "1", "2", "x", "1+x", "2+x", "2x", "1+2x", "2+2x"},
    {"0", "2", "1", "2x", "2+2x", "1+2x", "x", "2+x", "1+x"},
    {"0", "x", "2x", "2", "1+2x", "1+x", "1", "2+2x", "2+x"},
    {"0", "1+x", "2+2x", "2+x", "2", "2x", "1+2x", "x", "1"},
    {"0", "2+x", "1+2x", "2+2x", "x", "2", "1+x", "1", "2x"},
    {"0", "2x", "x", "1", "2+x", "2+2x", "2", "1+x", "1+2x"},
    {"0", "1+2x", "2+x", "1+x", "2x", "1", "2+2x", "2", "x"},
    {"0", "2+2x", "1+x", "1+2x", "1", "x", "2+x", "2x", "2"},
};

} // namespace tables

#endif // NEARPRIME_TESTS_TABLES_HPP_

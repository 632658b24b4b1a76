#ifndef QGRING_BUILTIN_GROUPS_HPP
#define QGRING_BUILTIN_GROUPS_HPP

#include <string>
#include <vector>

#include "qgring/group.hpp"

namespace qgring {
namespace builtin {

GroupPtr cyclic(int n);                 // label "a"
GroupPtr symmetric3();                  // labels r, s
GroupPtr dihedral(int order);           // order = 2m, labels a, b
GroupPtr quaternion8();                 // labels i, j
GroupPtr frobenius21();                 // C7 x| C3, labels n, c
GroupPtr frobenius20();                 // C5 x| C4 faithful, labels n, c

// P x| D_{2^n} for P extraspecial of order p^(2r+1) and exponent p, with the
// dihedral part acting through theta_1 (y_i -> y_i^k, z_i -> z_i^q) and
// theta_2 (x -> x^-1, y_i -> z_i^-1, z_i -> y_i^-1). Labels:
// x, y1..yr, z1..zr, a, b (plus aliases y, z when r = 1).
GroupPtr p_dihedral(int p, int n, int r);

// Named corpus entry points for the CLI / regression runner.
struct CorpusEntry {
  std::string name;
  GroupPtr group;
};
std::vector<CorpusEntry> corpus_fast();

}  // namespace builtin
}  // namespace qgring

#endif

#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "zsub/semigroup.hpp"

namespace zsub::corpus {

  /// All products equal the last element z; order n >= 1.
  FiniteSemigroup null_semigroup(std::size_t n);

  /// <s | s^(index + period) = s^index>, elements s, s^2, ..., order
  /// index + period - 1. Regular iff index == 1.
  FiniteSemigroup monogenic(std::size_t index, std::size_t period);

  /// {1 > 2 > ... > n} under max of indices, so element n is the zero.
  FiniteSemigroup semilattice_chain(std::size_t n);

  /// Z/nZ with element k + 1 standing for g^k.
  FiniteSemigroup cyclic_group(std::size_t n);

  /// Permutations of {1, 2, 3} in lexicographic order, composed left to
  /// right: (xy)(i) = y(x(i)).
  FiniteSemigroup symmetric_group_3();

  /// All maps {1..n} -> {1..n} (n <= 3) in lexicographic order of image
  /// lists, composed left to right.
  FiniteSemigroup full_transformation(std::size_t n);

  /// {1..p} x {1..q} with (i, j)(k, l) = (i, l).
  FiniteSemigroup rectangular_band(std::size_t p, std::size_t q);

  struct Entry {
    std::string     name;  // file stem, e.g. "null-2"
    FiniteSemigroup semigroup;
  };

  /// Builds one family member from a kind name and integer parameters:
  /// null n | monogenic i p | semilattice n | cyclic n | sym3 |
  /// transformation n | rectangular p q. Throws UnsupportedParams.
  Entry generate(std::string_view kind, std::vector<std::size_t> const& params);

  /// The standard test corpus: nulls, monogenics with index <= 4 and
  /// period <= 3, semilattice chains, C1..C6, S3, rectangular bands, T2, T3.
  std::vector<Entry> standard();

}  // namespace zsub::corpus

#pragma once

#include "zsub/corpus.hpp"
#include "zsub/semigroup.hpp"

namespace fx {

  using zsub::ElementId;
  using zsub::FiniteSemigroup;

  inline FiniteSemigroup trivial() { return zsub::parse_cayley("1\ne\n1\n"); }
  inline FiniteSemigroup N2() { return zsub::corpus::null_semigroup(2); }
  inline FiniteSemigroup Y2() { return zsub::parse_cayley("2\ne f\n1 2\n2 2\n"); }
  inline FiniteSemigroup S2() { return zsub::parse_cayley("2\n1 g\n1 2\n2 1\n"); }
  inline FiniteSemigroup T2() { return zsub::corpus::full_transformation(2); }
  inline FiniteSemigroup T3() { return zsub::corpus::full_transformation(3); }
  inline FiniteSemigroup S3() { return zsub::corpus::symmetric_group_3(); }

  inline ElementId el(FiniteSemigroup const& S, std::string_view label) {
    return S.find(label).value();
  }

}  // namespace fx

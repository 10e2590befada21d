#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "zsub/zset.hpp"

namespace zsub {

  /// The four shapes a subsemigroup of (Z, +) can take.
  enum class IntCase {
    Zero,               // {0}
    Group,              // dZ, d > 0
    PositiveNumerical,  // cofinite in dN0
    NegativeNumerical   // cofinite in -dN0
  };

  std::string_view to_string(IntCase c) noexcept;

  /// A subsemigroup of Z with its shape data.
  ///
  /// For the numerical cases, `conductor` is signed: every multiple of
  /// `step` at or beyond it (>= for positive, <= for negative) is a member,
  /// and `gaps` lists the multiples of `step` between 0 and the conductor
  /// (0 included) that are not members. Both are 0 / empty otherwise.
  struct IntSubsemigroupClass {
    using Int = ZSet::Int;

    IntCase          kind = IntCase::Zero;
    Int              step = 0;
    Int              conductor = 0;
    std::vector<Int> gaps;
    ZSet             value;
    std::vector<Int> generators;  // irredundant, sorted
  };

  /// The exact closure of `gens` under addition, with its case.
  /// Throws EmptyGenerators.
  IntSubsemigroupClass
  classify_int_subsemigroup(std::span<std::int64_t const> gens);

  IntSubsemigroupClass
  classify_int_subsemigroup(std::vector<std::int64_t> const& gens);

  /// The subsemigroup of Z generated by an arbitrary nonempty semilinear
  /// set. Throws EmptyGenerators.
  IntSubsemigroupClass additive_closure(ZSet const& set);

  /// Irredundant generating set of C.value: {0}, {d, -d}, or the minimal
  /// generators of the numerical semigroup (with 0 when 0 is a member).
  std::vector<std::int64_t> minimal_generators(IntSubsemigroupClass const& C);

  /// Every finite sum of `gens` whose partial sums all stay in [-W, W].
  ///
  /// Sound: the result lies in <gens>. Complete on the whole window when the
  /// generators share a sign, and on |n| <= W - max|g| otherwise.
  /// Throws WindowTooSmall if some generator lies outside the window.
  std::vector<std::int64_t>
  windowed_int_closure(std::span<std::int64_t const> gens, std::int64_t W);

  /// The half-width of the region on which windowed_int_closure is complete.
  std::int64_t windowed_int_completeness(std::span<std::int64_t const> gens,
                                         std::int64_t                  W);

}  // namespace zsub

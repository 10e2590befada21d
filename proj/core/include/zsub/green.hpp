#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "zsub/semigroup.hpp"

namespace zsub {

  /// Index of a J-class inside a JDecomposition. Classes are numbered in
  /// order of their least element.
  using ClassId = std::size_t;

  /// The J-classes of a finite semigroup with their partial order.
  class JDecomposition {
   public:
    explicit JDecomposition(FiniteSemigroup const& S);

    std::size_t number_of_classes() const noexcept { return classes_.size(); }

    std::vector<ElementId> const& elements(ClassId c) const {
      return classes_.at(c);
    }
    std::vector<std::vector<ElementId>> const& classes() const noexcept {
      return classes_;
    }

    ClassId class_of(ElementId x) const { return class_of_.at(x.index - 1); }

    /// Strict order: J_a < J_b, i.e. the ideal of a is properly inside that of b.
    bool below(ClassId a, ClassId b) const {
      return below_.at(a * classes_.size() + b);
    }

    /// Contains an idempotent (equivalently, consists of regular elements).
    bool regular(ClassId c) const { return regular_.at(c); }

    ClassId minimal_ideal() const noexcept { return minimal_; }

    bool j_equivalent(ElementId x, ElementId y) const {
      return class_of(x) == class_of(y);
    }

    /// x <=_J y, read off the class order.
    bool j_leq(ElementId x, ElementId y) const {
      auto cx = class_of(x), cy = class_of(y);
      return cx == cy || below(cx, cy);
    }

   private:
    std::vector<std::vector<ElementId>> classes_;
    std::vector<ClassId>                class_of_;
    std::vector<bool>                   below_;
    std::vector<bool>                   regular_;
    ClassId                             minimal_ = 0;
  };

  /// The split S = L u K u I around a minimal non-regular J-class K.
  struct LKIDecomposition {
    ClassId                k_class = 0;
    std::vector<ElementId> L;
    std::vector<ElementId> K;
    std::vector<ElementId> I;

    enum class Part { L, K, I };
    std::vector<Part> part_of;  // indexed by element index - 1

    Part part(ElementId x) const { return part_of.at(x.index - 1); }
    bool in_I(ElementId x) const { return part(x) == Part::I; }
    bool in_K(ElementId x) const { return part(x) == Part::K; }
    bool in_L(ElementId x) const { return part(x) == Part::L; }
  };

  /// x <=_J y: some u1, u2 in S^1 have u1 * y * u2 = x.
  bool j_leq(FiniteSemigroup const& S, ElementId x, ElementId y);

  /// The pair (u1, u2) in S^1 x S^1 realising x <=_J y, least-index first.
  std::optional<std::pair<ElementId, ElementId>>
  j_leq_witness(FiniteSemigroup const& S, ElementId x, ElementId y);

  /// The principal two-sided ideal S^1 y S^1 as a membership mask indexed
  /// by element index - 1.
  std::vector<bool> principal_ideal(FiniteSemigroup const& S, ElementId y);

  JDecomposition j_decomposition(FiniteSemigroup const& S);

  struct J3Witnesses {
    ElementId u1, u2, v1, v2;
  };

  /// For x, y in the same regular J-class J, returns u1, u2, v1, v2 in J with
  /// u1 x u2 = y and v1 y v2 = x (least-index lexicographic choice).
  /// Throws NotSameRegularClass otherwise.
  J3Witnesses j3_witnesses(FiniteSemigroup const& S,
                           JDecomposition const&  J,
                           ElementId              x,
                           ElementId              y);
  J3Witnesses j3_witnesses(FiniteSemigroup const& S, ElementId x, ElementId y);

  /// Throws RegularSemigroup if every J-class is regular.
  LKIDecomposition lki_decomposition(FiniteSemigroup const& S,
                                     JDecomposition const&  J);
  LKIDecomposition lki_decomposition(FiniteSemigroup const& S);

}  // namespace zsub

#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "zsub/green.hpp"
#include "zsub/semigroup.hpp"

namespace zsub {

  enum class Verdict { Countable, Uncountable };

  std::string_view to_string(Verdict v) noexcept;

  /// Countability verdicts for a finite semigroup S.
  ///
  /// - subdirect products of Z x S: countable iff S is regular;
  /// - subsemigroups of Z x S: countable iff S is completely regular;
  /// - subdirect products of N x S: countable iff every s has t with
  ///   st = s or ts = s.
  ///
  /// Subsemigroups of N x S are countable exactly when those of Z x S are;
  /// `n_subsemigroups_consistent` records that the two verdicts agree.
  struct ClassificationReport {
    std::size_t order = 0;
    bool        regular = false;
    bool        completely_regular = false;
    bool        n_condition = false;
    Verdict     z_subdirect = Verdict::Uncountable;
    Verdict     z_subsemigroups = Verdict::Uncountable;
    Verdict     n_subdirect = Verdict::Uncountable;
    Verdict     n_subsemigroups = Verdict::Uncountable;
    bool        n_subsemigroups_consistent = true;

    struct ClassSummary {
      std::vector<ElementId> elements;
      bool                   regular;
      std::vector<ClassId>   below;  // every class strictly below this one
    };
    std::vector<ClassSummary> j_classes;
    ClassId                   minimal_ideal = 0;
    std::optional<LKIDecomposition> lki;  // present iff S is not regular
  };

  ClassificationReport classify(FiniteSemigroup const& S);

}  // namespace zsub

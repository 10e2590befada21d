#include "zsub/classify.hpp"

namespace zsub {

  std::string_view to_string(Verdict v) noexcept {
    return v == Verdict::Countable ? "Countable" : "Uncountable";
  }

  namespace {
    Verdict verdict(bool countable) {
      return countable ? Verdict::Countable : Verdict::Uncountable;
    }
  }  // namespace

  ClassificationReport classify(FiniteSemigroup const& S) {
    ClassificationReport r;
    r.order              = S.order();
    r.regular            = is_regular_semigroup(S);
    r.completely_regular = is_completely_regular(S);
    r.n_condition        = n_condition(S);

    r.z_subdirect     = verdict(r.regular);
    r.z_subsemigroups = verdict(r.completely_regular);
    r.n_subdirect     = verdict(r.n_condition);
    // Countability of subsemigroups of N x S is decided by the same
    // condition as for Z x S.
    r.n_subsemigroups            = verdict(r.completely_regular);
    r.n_subsemigroups_consistent = r.n_subsemigroups == r.z_subsemigroups;

    JDecomposition j(S);
    for (ClassId c = 0; c < j.number_of_classes(); ++c) {
      ClassificationReport::ClassSummary summary{j.elements(c), j.regular(c), {}};
      for (ClassId d = 0; d < j.number_of_classes(); ++d) {
        if (j.below(d, c)) {
          summary.below.push_back(d);
        }
      }
      r.j_classes.push_back(std::move(summary));
    }
    r.minimal_ideal = j.minimal_ideal();
    if (!r.regular) {
      r.lki = lki_decomposition(S, j);
    }
    return r;
  }

}  // namespace zsub

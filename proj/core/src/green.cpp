#include "zsub/green.hpp"

#include <algorithm>

#include "zsub/errors.hpp"

namespace zsub {

  std::optional<std::pair<ElementId, ElementId>>
  j_leq_witness(FiniteSemigroup const& S, ElementId x, ElementId y) {
    for (auto u1 : S.elements_with_identity()) {
      ElementId u1y = S.product(u1, y);
      for (auto u2 : S.elements_with_identity()) {
        if (S.product(u1y, u2) == x) {
          return std::make_pair(u1, u2);
        }
      }
    }
    return std::nullopt;
  }

  bool j_leq(FiniteSemigroup const& S, ElementId x, ElementId y) {
    return j_leq_witness(S, x, y).has_value();
  }

  std::vector<bool> principal_ideal(FiniteSemigroup const& S, ElementId y) {
    std::vector<bool> in(S.order(), false);
    for (auto u1 : S.elements_with_identity()) {
      ElementId u1y = S.product(u1, y);
      for (auto u2 : S.elements_with_identity()) {
        in[S.product(u1y, u2).index - 1] = true;
      }
    }
    return in;
  }

  JDecomposition::JDecomposition(FiniteSemigroup const& S) {
    auto const n = S.order();
    // ideal[y][x] == x <=_J y
    std::vector<std::vector<bool>> ideal;
    ideal.reserve(n);
    for (auto y : S.elements()) {
      ideal.push_back(principal_ideal(S, y));
    }

    class_of_.assign(n, n);
    for (std::size_t x = 0; x < n; ++x) {
      if (class_of_[x] != n) {
        continue;
      }
      ClassId                c = classes_.size();
      std::vector<ElementId> members;
      for (std::size_t y = x; y < n; ++y) {
        if (ideal[y][x] && ideal[x][y]) {
          class_of_[y] = c;
          members.push_back(ElementId{static_cast<std::uint32_t>(y + 1)});
        }
      }
      classes_.push_back(std::move(members));
    }

    auto const k = classes_.size();
    below_.assign(k * k, false);
    for (ClassId a = 0; a < k; ++a) {
      auto xa = classes_[a].front().index - 1;
      for (ClassId b = 0; b < k; ++b) {
        auto xb = classes_[b].front().index - 1;
        below_[a * k + b] = a != b && ideal[xb][xa];
      }
    }

    regular_.assign(k, false);
    for (ClassId c = 0; c < k; ++c) {
      regular_[c] = std::any_of(
          classes_[c].begin(), classes_[c].end(), [&S](ElementId x) {
            return is_idempotent(S, x);
          });
    }

    for (ClassId c = 0; c < k; ++c) {
      bool is_min = true;
      for (ClassId d = 0; d < k; ++d) {
        if (d != c && !below_[c * k + d]) {
          is_min = false;
          break;
        }
      }
      if (is_min) {
        minimal_ = c;
        break;
      }
    }
  }

  JDecomposition j_decomposition(FiniteSemigroup const& S) {
    return JDecomposition(S);
  }

  J3Witnesses j3_witnesses(FiniteSemigroup const& S,
                           JDecomposition const&  J,
                           ElementId              x,
                           ElementId              y) {
    if (!S.contains(x) || !S.contains(y) || !J.j_equivalent(x, y)
        || !J.regular(J.class_of(x))) {
      throw NotSameRegularClass("elements " + S.label(x) + " and "
                                + S.label(y)
                                + " do not lie in a common regular J-class");
    }
    auto const& members = J.elements(J.class_of(x));
    auto search = [&](ElementId from, ElementId to)
        -> std::optional<std::pair<ElementId, ElementId>> {
      for (auto u1 : members) {
        ElementId u1x = S.product(u1, from);
        for (auto u2 : members) {
          if (S.product(u1x, u2) == to) {
            return std::make_pair(u1, u2);
          }
        }
      }
      return std::nullopt;
    };
    auto forward  = search(x, y);
    auto backward = search(y, x);
    if (!forward || !backward) {
      // Unreachable for a genuine regular J-class of a finite semigroup.
      throw StructureViolation("no witnesses inside the J-class of "
                               + S.label(x));
    }
    return {forward->first, forward->second, backward->first, backward->second};
  }

  J3Witnesses j3_witnesses(FiniteSemigroup const& S, ElementId x, ElementId y) {
    return j3_witnesses(S, JDecomposition(S), x, y);
  }

  LKIDecomposition lki_decomposition(FiniteSemigroup const& S,
                                     JDecomposition const&  J) {
    auto const k = J.number_of_classes();
    // Classes are numbered by least element, so the first minimal one found
    // is the one containing the least element index.
    std::optional<ClassId> chosen;
    for (ClassId c = 0; c < k && !chosen; ++c) {
      if (J.regular(c)) {
        continue;
      }
      bool minimal = true;
      for (ClassId d = 0; d < k; ++d) {
        if (!J.regular(d) && J.below(d, c)) {
          minimal = false;
          break;
        }
      }
      if (minimal) {
        chosen = c;
      }
    }
    if (!chosen) {
      throw RegularSemigroup();
    }

    LKIDecomposition out;
    out.k_class = *chosen;
    out.part_of.resize(S.order());
    for (auto x : S.elements()) {
      auto c = J.class_of(x);
      if (c == *chosen) {
        out.K.push_back(x);
        out.part_of[x.index - 1] = LKIDecomposition::Part::K;
      } else if (J.below(c, *chosen)) {
        out.I.push_back(x);
        out.part_of[x.index - 1] = LKIDecomposition::Part::I;
      } else {
        out.L.push_back(x);
        out.part_of[x.index - 1] = LKIDecomposition::Part::L;
      }
    }
    return out;
  }

  LKIDecomposition lki_decomposition(FiniteSemigroup const& S) {
    return lki_decomposition(S, JDecomposition(S));
  }

}  // namespace zsub

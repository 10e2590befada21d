#include "zsub/pm_family.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>

#include "zsub/errors.hpp"

namespace zsub {

  using Int = std::int64_t;

  ////////////////////////////////////////////////////////////////////////
  // MSpec
  ////////////////////////////////////////////////////////////////////////

  MSpec::MSpec(std::vector<Int> support, std::optional<Int> tail_from)
      : support_(std::move(support)), tail_(tail_from) {
    std::sort(support_.begin(), support_.end());
    support_.erase(std::unique(support_.begin(), support_.end()),
                   support_.end());
    if (!support_.empty() && support_.front() < 0) {
      throw InvalidArgument("M must lie in N0, got "
                            + std::to_string(support_.front()));
    }
    if (tail_) {
      if (*tail_ < 0) {
        throw InvalidArgument("tail start must be non-negative");
      }
      support_.erase(
          std::lower_bound(support_.begin(), support_.end(), *tail_),
          support_.end());
      while (!support_.empty() && support_.back() == *tail_ - 1) {
        support_.pop_back();
        --*tail_;
      }
    }
    if (!contains(0)) {
      throw InvalidArgument("M must contain 0");
    }
  }

  MSpec MSpec::parse(std::string_view text) {
    std::vector<Int>   support;
    std::optional<Int> tail;
    std::size_t        start = 0;
    while (start <= text.size()) {
      auto end = text.find(',', start);
      if (end == std::string_view::npos) {
        end = text.size();
      }
      auto token = text.substr(start, end - start);
      while (!token.empty() && token.front() == ' ') {
        token.remove_prefix(1);
      }
      while (!token.empty() && token.back() == ' ') {
        token.remove_suffix(1);
      }
      if (token.empty()) {
        throw ParseError("empty entry in M specification '"
                         + std::string(text) + "'");
      }
      bool is_tail = token.front() == '+';
      if (is_tail) {
        token.remove_prefix(1);
      }
      Int value = 0;
      auto [ptr, ec]
          = std::from_chars(token.data(), token.data() + token.size(), value);
      if (ec != std::errc() || ptr != token.data() + token.size()) {
        throw ParseError("'" + std::string(token)
                         + "' is not an integer in M specification");
      }
      if (is_tail) {
        if (tail) {
          throw ParseError("M specification has more than one tail");
        }
        tail = value;
      } else {
        support.push_back(value);
      }
      start = end + 1;
    }
    try {
      return MSpec(std::move(support), tail);
    } catch (InvalidArgument const& e) {
      throw ParseError(e.what());
    }
  }

  MSpec MSpec::from_zset(ZSet const& set) {
    if (set.has_negative() || !set.contains(0)) {
      throw NotPMShaped("M must lie in N0 and contain 0, got "
                        + set.to_string());
    }
    if (set.is_finite()) {
      return MSpec(set.elements_in(0, *set.max()));
    }
    Int const c = std::max<Int>(set.upper_threshold(), 0);
    if (set.period() != 1) {
      throw NotPMShaped("M is neither finite nor cofinite: "
                        + set.to_string());
    }
    return MSpec(set.elements_in(0, c - 1), c);
  }

  bool MSpec::contains(Int n) const {
    if (tail_ && n >= *tail_) {
      return true;
    }
    return std::binary_search(support_.begin(), support_.end(), n);
  }

  ZSet MSpec::to_zset() const {
    ZSet out = ZSet::of(support_);
    if (tail_) {
      out = unite(out, ZSet::ray(*tail_, 1, ZSet::Direction::Up));
    }
    return out;
  }

  std::string MSpec::to_string() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < support_.size(); ++i) {
      out << (i ? "," : "") << support_[i];
    }
    if (tail_) {
      out << (support_.empty() ? "+" : ",+") << *tail_;
    }
    return out.str();
  }

  ////////////////////////////////////////////////////////////////////////
  // Construction
  ////////////////////////////////////////////////////////////////////////

  std::string check_pm_closure_cases(FiniteSemigroup const&  S,
                                     LKIDecomposition const& lki) {
    for (auto x : S.elements()) {
      for (auto y : S.elements()) {
        auto xy = S.product(x, y);
        auto where
            = "(" + S.label(x) + ")(" + S.label(y) + ") = " + S.label(xy);
        if ((lki.in_I(x) || lki.in_I(y)) && !lki.in_I(xy)) {
          return "I is not an ideal: " + where;
        }
        if (lki.in_K(x) && lki.in_K(y) && !lki.in_I(xy)) {
          return "K.K is not inside I: " + where;
        }
        bool mixed = (lki.in_L(x) && lki.in_K(y)) || (lki.in_K(x) && lki.in_L(y));
        if (mixed && lki.in_L(xy)) {
          return "L.K or K.L leaves K u I: " + where;
        }
      }
    }
    return {};
  }

  PMProduct build_pm(FiniteSemigroup const& S, MSpec const& m) {
    JDecomposition   j(S);
    LKIDecomposition lki = lki_decomposition(S, j);

    std::vector<ZSet> fibers(S.order());
    ZSet const        mset = m.to_zset();
    for (auto x : S.elements()) {
      switch (lki.part(x)) {
        case LKIDecomposition::Part::L:
          fibers[x.index - 1] = ZSet::singleton(0);
          break;
        case LKIDecomposition::Part::K:
          fibers[x.index - 1] = mset;
          break;
        case LKIDecomposition::Part::I:
          fibers[x.index - 1] = ZSet::all();
          break;
      }
    }
    SubdirectDescription description(S, std::move(fibers));

    if (auto failure = check_pm_closure_cases(S, lki); !failure.empty()) {
      throw StructureViolation(failure);
    }
    if (!description.is_closed()) {
      throw StructureViolation("P_M is not closed under multiplication");
    }
    if (!is_subdirect(description)) {
      throw StructureViolation("P_M is not a subdirect product");
    }
    return PMProduct{S, std::move(j), std::move(lki), m, std::move(description)};
  }

  ////////////////////////////////////////////////////////////////////////
  // Invariants
  ////////////////////////////////////////////////////////////////////////

  namespace {

    void require_member(PMProduct const& P, ZPair p) {
      if (!P.description.contains(p)) {
        auto const& S = P.semigroup;
        throw NotInP("(" + std::to_string(p.n) + ","
                     + (S.contains(p.x) ? S.label(p.x) : "?")
                     + ") is not an element of P_M");
      }
    }

    bool in_p_with_identity(PMProduct const& P, ZPair p) {
      return (p.x.is_adjoined_identity() && p.n == 0) || P.description.contains(p);
    }

  }  // namespace

  bool pm_j_related(PMProduct const& P, ZPair alpha, ZPair beta) {
    require_member(P, alpha);
    require_member(P, beta);
    if (!P.j.j_equivalent(alpha.x, beta.x)) {
      return false;
    }
    return alpha.n == beta.n || (P.lki.in_I(alpha.x) && P.lki.in_I(beta.x));
  }

  std::optional<PMJWitnesses> pm_j_witnesses(PMProduct const& P,
                                             ZPair            alpha,
                                             ZPair            beta) {
    if (!pm_j_related(P, alpha, beta)) {
      return std::nullopt;
    }
    auto const&  S = P.semigroup;
    PMJWitnesses w;
    if (alpha.n == beta.n) {
      auto fwd = j_leq_witness(S, beta.x, alpha.x);
      auto bwd = j_leq_witness(S, alpha.x, beta.x);
      w        = {{0, fwd->first}, {0, fwd->second}, {0, bwd->first}, {0, bwd->second}};
    } else {
      auto j3 = j3_witnesses(S, P.j, alpha.x, beta.x);
      w       = {{beta.n - alpha.n, j3.u1},
                 {0, j3.u2},
                 {alpha.n - beta.n, j3.v1},
                 {0, j3.v2}};
    }
    for (auto u : {w.u1, w.u2, w.v1, w.v2}) {
      if (!in_p_with_identity(P, u)) {
        throw StructureViolation("constructed J-witness lies outside P_M");
      }
    }
    if (multiply(S, multiply(S, w.u1, alpha), w.u2) != beta
        || multiply(S, multiply(S, w.v1, beta), w.v2) != alpha) {
      throw StructureViolation("constructed J-witnesses do not multiply out");
    }
    return w;
  }

  std::string_view to_string(OrderClass c) noexcept {
    return c == OrderClass::Finite ? "finite" : "infinite";
  }

  OrderClass element_order_class(PMProduct const& P, ZPair alpha) {
    require_member(P, alpha);
    return alpha.n == 0 ? OrderClass::Finite : OrderClass::Infinite;
  }

  MSpec recover_m(SubdirectDescription const& description,
                  LKIDecomposition const&     lki) {
    auto const& S = description.semigroup();
    if (lki.part_of.size() != S.order()) {
      throw NotPMShaped("decomposition does not match the semigroup order");
    }
    std::optional<ZSet> m;
    for (auto x : S.elements()) {
      auto const& f = description.fiber(x);
      switch (lki.part(x)) {
        case LKIDecomposition::Part::L:
          if (f != ZSet::singleton(0)) {
            throw NotPMShaped("fiber of " + S.label(x) + " in L is "
                              + f.to_string() + ", expected {0}");
          }
          break;
        case LKIDecomposition::Part::I:
          if (!f.is_all()) {
            throw NotPMShaped("fiber of " + S.label(x) + " in I is "
                              + f.to_string() + ", expected Z");
          }
          break;
        case LKIDecomposition::Part::K:
          if (m && *m != f) {
            throw NotPMShaped("fibers over K differ");
          }
          m = f;
          break;
      }
    }
    if (!m) {
      throw NotPMShaped("decomposition has an empty K");
    }
    // Only the infinite-order part (M \ {0}) x K is read; 0 is implied.
    ZSet nonzero = difference(*m, ZSet::singleton(0));
    return MSpec::from_zset(unite(nonzero, ZSet::singleton(0)));
  }

  ////////////////////////////////////////////////////////////////////////
  // Non-isomorphism certificates
  ////////////////////////////////////////////////////////////////////////

  std::optional<NonIsoCertificate>
  noniso_certificate(FiniteSemigroup const&  S,
                     LKIDecomposition const& lki,
                     MSpec const&            m1,
                     MSpec const&            m2) {
    if (m1 == m2) {
      return std::nullopt;
    }
    ZSet const diff = symmetric_difference(m1.to_zset(), m2.to_zset());
    NonIsoCertificate cert;
    cert.witness          = *diff.min();
    cert.witness_in_first = m1.contains(cert.witness);
    cert.k_element        = lki.K.front();
    cert.witness_order
        = cert.witness == 0 ? OrderClass::Finite : OrderClass::Infinite;
    cert.witness_j_class_size = lki.K.size();
    cert.square_in_I = lki.in_I(S.product(cert.k_element, cert.k_element));

    std::string const w = std::to_string(cert.witness);
    std::string const k = S.label(cert.k_element);
    cert.chain = {
        "finite-order elements are exactly {0} x S in both products",
        "elements with an infinite J-class are exactly Z x I in both products",
        "infinite-order elements outside Z x I are exactly (M \\ {0}) x K",
        "an isomorphism sends (n, x) with x in I to (+-n, x') with x' in I",
        "an isomorphism sends (m, x) with x in K to (m, x'), because (m, x)^2 "
        "= (2m, x^2) lies in Z x I",
        "(" + w + ", " + k + ") has infinite order and a J-class of size "
            + std::to_string(cert.witness_j_class_size) + ", so it lies in "
            + "(M \\ {0}) x K of P_M" + (cert.witness_in_first ? "1" : "2")
            + ", while no element of P_M" + (cert.witness_in_first ? "2" : "1")
            + " of that kind has first coordinate " + w,
    };
    return cert;
  }

  std::optional<NonIsoCertificate> noniso_certificate(FiniteSemigroup const& S,
                                                      MSpec const&           m1,
                                                      MSpec const& m2) {
    return noniso_certificate(S, lki_decomposition(S), m1, m2);
  }

}  // namespace zsub

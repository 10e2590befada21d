#pragma once

#include <nlohmann/json.hpp>

#include <span>

#include "zsub/classify.hpp"
#include "zsub/green.hpp"
#include "zsub/int_semigroup.hpp"
#include "zsub/pm_family.hpp"
#include "zsub/semigroup.hpp"
#include "zsub/subdirect.hpp"
#include "zsub/zset.hpp"

namespace zsub::json {

  // nlohmann::json keeps object keys sorted, which makes dumps deterministic.
  using Json = nlohmann::json;

  inline constexpr int kSchema = 1;

  Json to_json(ZSet const& set);
  ZSet zset_from_json(Json const& j);

  Json to_json(FiniteSemigroup const& S);
  FiniteSemigroup semigroup_from_json(Json const& j);

  Json to_json(FiniteSemigroup const& S, ZPair p);
  Json to_json(FiniteSemigroup const& S, std::span<ZPair const> pairs);

  Json to_json(FiniteSemigroup const& S, LKIDecomposition const& lki);
  Json to_json(SubdirectDescription const& P);
  Json to_json(IntSubsemigroupClass const& C);
  Json to_json(FiberStructure const& f, FiniteSemigroup const& S);

  Json to_json(ClassificationReport const& r, FiniteSemigroup const& S);
  Json to_json(PMProduct const& P);
  Json to_json(NonIsoCertificate const& c, FiniteSemigroup const& S,
               MSpec const& m1, MSpec const& m2);

  /// Reads back the output of to_json(PMProduct) and returns the invariant M
  /// recovered from the fibers. Throws ParseError on malformed input and
  /// NotPMShaped if the fibers do not follow the three-slice pattern.
  MSpec pm_invariant_from_json(Json const& j);

}  // namespace zsub::json

#include "zsub/json_io.hpp"

#include "zsub/errors.hpp"

namespace zsub::json {

  namespace {

    Json labels(FiniteSemigroup const& S, std::vector<ElementId> const& xs) {
      Json out = Json::array();
      for (auto x : xs) {
        out.push_back(S.label(x));
      }
      return out;
    }

    std::string_view dir_name(ZSet::Direction d) {
      return d == ZSet::Direction::Up ? "up" : "down";
    }

    // Each verdict records the property of S that decides it.
    Json verdict(Verdict v, char const* decided_by, bool holds) {
      return {{"value", std::string(to_string(v))},
              {"decided_by", decided_by},
              {"property_holds", holds}};
    }

    template <typename T>
    T get(Json const& j, char const* key) {
      try {
        return j.at(key).get<T>();
      } catch (nlohmann::json::exception const& e) {
        throw ParseError(std::string("JSON field '") + key + "': " + e.what());
      }
    }

  }  // namespace

  Json to_json(ZSet const& set) {
    Json rays = Json::array();
    for (auto const& r : set.rays()) {
      rays.push_back({{"r", r.r}, {"d", r.d}, {"dir", dir_name(r.dir)}});
    }
    Json lines = Json::array();
    for (auto const& l : set.lines()) {
      lines.push_back({{"r", l.r}, {"d", l.d}});
    }
    return {{"sporadic", set.sporadic()}, {"rays", rays}, {"lines", lines}};
  }

  ZSet zset_from_json(Json const& j) {
    if (!j.is_object()) {
      throw ParseError("expected a set object");
    }
    auto sporadic = get<std::vector<ZSet::Int>>(j, "sporadic");
    std::vector<ZSet::Ray>  rays;
    std::vector<ZSet::Line> lines;
    for (auto const& r : get<Json>(j, "rays")) {
      auto dir = get<std::string>(r, "dir");
      if (dir != "up" && dir != "down") {
        throw ParseError("ray direction must be 'up' or 'down', got '" + dir + "'");
      }
      rays.push_back({get<ZSet::Int>(r, "r"), get<ZSet::Int>(r, "d"),
                      dir == "up" ? ZSet::Direction::Up : ZSet::Direction::Down});
    }
    for (auto const& l : get<Json>(j, "lines")) {
      lines.push_back({get<ZSet::Int>(l, "r"), get<ZSet::Int>(l, "d")});
    }
    try {
      return ZSet::from_components(sporadic, rays, lines);
    } catch (InvalidArgument const& e) {
      throw ParseError(e.what());
    }
  }

  Json to_json(FiniteSemigroup const& S) {
    Json out{{"order", S.order()}, {"table", S.rows()}};
    if (S.has_names()) {
      out["names"] = S.names();
    }
    return out;
  }

  FiniteSemigroup semigroup_from_json(Json const& j) {
    auto rows = get<std::vector<std::vector<std::uint32_t>>>(j, "table");
    std::vector<std::string> names;
    if (j.contains("names")) {
      names = get<std::vector<std::string>>(j, "names");
    }
    return FiniteSemigroup(rows, std::move(names));
  }

  Json to_json(FiniteSemigroup const& S, ZPair p) {
    return Json::array({p.n, S.label(p.x)});
  }

  Json to_json(FiniteSemigroup const& S, std::span<ZPair const> pairs) {
    Json out = Json::array();
    for (auto p : pairs) {
      out.push_back(to_json(S, p));
    }
    return out;
  }

  Json to_json(FiniteSemigroup const& S, LKIDecomposition const& lki) {
    return {{"L", labels(S, lki.L)},
            {"K", labels(S, lki.K)},
            {"I", labels(S, lki.I)},
            {"k_class", lki.k_class}};
  }

  Json to_json(SubdirectDescription const& P) {
    auto const& S      = P.semigroup();
    Json        fibers = Json::object();
    for (auto x : S.elements()) {
      fibers[S.label(x)] = to_json(P.fiber(x));
    }
    return fibers;
  }

  Json to_json(IntSubsemigroupClass const& C) {
    return {{"case", std::string(to_string(C.kind))},
            {"step", C.step},
            {"conductor", C.conductor},
            {"gaps", C.gaps},
            {"generators", C.generators},
            {"set", to_json(C.value)}};
  }

  Json to_json(FiberStructure const& f, FiniteSemigroup const& S) {
    return {{"element", S.label(f.x)},
            {"inverse", S.label(f.y)},
            {"idempotent", S.label(f.e)},
            {"r", f.r},
            {"case", std::string(to_string(f.kind))},
            {"step", f.step},
            {"exceptional", f.exceptional},
            {"idempotent_fiber", to_json(f.idempotent_fiber)}};
  }

  Json to_json(ClassificationReport const& r, FiniteSemigroup const& S) {
    Json classes = Json::array();
    for (std::size_t c = 0; c < r.j_classes.size(); ++c) {
      auto const& cls = r.j_classes[c];
      classes.push_back({{"id", c},
                         {"elements", labels(S, cls.elements)},
                         {"size", cls.elements.size()},
                         {"regular", cls.regular},
                         {"below", cls.below}});
    }
    Json out{{"schema", kSchema},
             {"order", r.order},
             {"regular", r.regular},
             {"completely_regular", r.completely_regular},
             {"n_condition", r.n_condition},
             {"verdicts",
              {{"z_subdirect", verdict(r.z_subdirect, "regular", r.regular)},
               {"z_subsemigroups",
                verdict(r.z_subsemigroups, "completely_regular", r.completely_regular)},
               {"n_subdirect", verdict(r.n_subdirect, "n_condition", r.n_condition)},
               {"n_subsemigroups",
                verdict(r.n_subsemigroups, "completely_regular", r.completely_regular)}}},
             {"n_subsemigroups_consistent", r.n_subsemigroups_consistent},
             {"j_classes", classes},
             {"minimal_ideal", r.minimal_ideal},
             {"lki", r.lki ? to_json(S, *r.lki) : Json(nullptr)}};
    return out;
  }

  Json to_json(PMProduct const& P) {
    return {{"schema", kSchema},
            {"kind", "pm_product"},
            {"semigroup", to_json(P.semigroup)},
            {"lki", to_json(P.semigroup, P.lki)},
            {"m", P.m.to_string()},
            {"fibers", to_json(P.description)}};
  }

  Json to_json(NonIsoCertificate const& c, FiniteSemigroup const& S,
               MSpec const& m1, MSpec const& m2) {
    return {{"schema", kSchema},
            {"kind", "noniso_certificate"},
            {"m1", m1.to_string()},
            {"m2", m2.to_string()},
            {"witness", c.witness},
            {"witness_in", c.witness_in_first ? "m1" : "m2"},
            {"k_element", S.label(c.k_element)},
            {"witness_order", std::string(to_string(c.witness_order))},
            {"witness_j_class_size", c.witness_j_class_size},
            {"square_in_I", c.square_in_I},
            {"chain", c.chain}};
  }

  MSpec pm_invariant_from_json(Json const& j) {
    if (!j.is_object() || get<std::string>(j, "kind") != "pm_product") {
      throw ParseError("input is not a P_M product document");
    }
    if (get<int>(j, "schema") != kSchema) {
      throw ParseError("unsupported schema version");
    }
    FiniteSemigroup S = semigroup_from_json(get<Json>(j, "semigroup"));

    LKIDecomposition lki;
    lki.k_class = get<ClassId>(get<Json>(j, "lki"), "k_class");
    lki.part_of.assign(S.order(), LKIDecomposition::Part::L);
    std::vector<bool> seen(S.order(), false);
    auto              read_part = [&](char const* key, LKIDecomposition::Part part,
                         std::vector<ElementId>& into) {
      for (auto const& label : get<std::vector<std::string>>(get<Json>(j, "lki"), key)) {
        auto x = S.find(label);
        if (!x || seen[x->index - 1]) {
          throw ParseError("bad element '" + label + "' in decomposition");
        }
        seen[x->index - 1]       = true;
        lki.part_of[x->index - 1] = part;
        into.push_back(*x);
      }
    };
    read_part("L", LKIDecomposition::Part::L, lki.L);
    read_part("K", LKIDecomposition::Part::K, lki.K);
    read_part("I", LKIDecomposition::Part::I, lki.I);
    if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
      throw ParseError("decomposition does not cover every element");
    }

    auto const&       fj = get<Json>(j, "fibers");
    std::vector<ZSet> fibers(S.order());
    for (auto x : S.elements()) {
      fibers[x.index - 1] = zset_from_json(get<Json>(fj, S.label(x).c_str()));
    }
    return recover_m(SubdirectDescription(S, std::move(fibers)), lki);
  }

}  // namespace zsub::json

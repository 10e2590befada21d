#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "zsub/classify.hpp"
#include "zsub/corpus.hpp"
#include "zsub/errors.hpp"
#include "zsub/json_io.hpp"
#include "zsub/pm_family.hpp"
#include "zsub/subdirect.hpp"

namespace zsub::cli {

  namespace {

    using json::Json;

    void print(std::ostream& out, Json const& j) {
      out << j.dump(2) << '\n';
    }

    std::string join(std::vector<ElementId> const& xs, FiniteSemigroup const& S) {
      std::string s;
      for (auto x : xs) {
        s += (s.empty() ? "" : " ") + S.label(x);
      }
      return s;
    }

    void print_text(std::ostream& out, std::string const& path,
                    ClassificationReport const& r, FiniteSemigroup const& S) {
      out << path << '\n'
          << "  order               " << r.order << '\n'
          << "  regular             " << std::boolalpha << r.regular << '\n'
          << "  completely regular  " << r.completely_regular << '\n'
          << "  n-condition         " << r.n_condition << '\n'
          << "  subdirect Z x S     " << to_string(r.z_subdirect) << '\n'
          << "  subsemigroups Z x S " << to_string(r.z_subsemigroups) << '\n'
          << "  subdirect N x S     " << to_string(r.n_subdirect) << '\n'
          << "  subsemigroups N x S " << to_string(r.n_subsemigroups) << '\n'
          << "  J-classes           " << r.j_classes.size() << '\n';
      for (std::size_t c = 0; c < r.j_classes.size(); ++c) {
        auto const& cls = r.j_classes[c];
        out << "    [" << c << "] {" << join(cls.elements, S) << "}"
            << (cls.regular ? " regular" : " non-regular")
            << (c == r.minimal_ideal ? ", minimal ideal" : "") << '\n';
      }
      if (r.lki) {
        out << "  L = {" << join(r.lki->L, S) << "}, K = {" << join(r.lki->K, S)
            << "}, I = {" << join(r.lki->I, S) << "}\n";
      }
    }

    Json read_json(std::string const& source) {
      std::string text;
      if (source == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        text = buf.str();
      } else {
        std::ifstream in(source, std::ios::binary);
        if (!in) {
          throw ParseError("cannot open '" + source + "'");
        }
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
      }
      try {
        return Json::parse(text);
      } catch (nlohmann::json::parse_error const& e) {
        throw ParseError(source + ": " + e.what());
      }
    }

    int classify_command(std::vector<std::string> const& files, bool text,
                         std::ostream& out) {
      Json all = Json::array();
      for (auto const& path : files) {
        FiniteSemigroup S = [&] {
          try {
            return read_cayley_file(path);
          } catch (ParseError const& e) {
            throw ParseError(path + ": " + e.what());
          }
        }();
        auto report = classify(S);
        if (text) {
          print_text(out, path, report, S);
        } else {
          auto j    = json::to_json(report, S);
          j["file"] = path;
          all.push_back(std::move(j));
        }
      }
      if (!text) {
        print(out, all.size() == 1 ? all.front() : all);
      }
      return kOk;
    }

    int fg_command(std::string const& path, std::string const& gens_text,
                   std::int64_t W, std::size_t max_rounds, std::ostream& out,
                   std::ostream& err) {
      auto S = read_cayley_file(path);
      for (auto x : S.elements()) {
        if (!is_regular_element(S, x)) {
          throw NotRegular(x.index);
        }
      }
      auto gens    = parse_generators(S, gens_text);
      auto closure = structured_closure(S, gens, max_rounds);

      Json j{{"schema", json::kSchema},
             {"kind", "finite_generation"},
             {"semigroup", path},
             {"generators", json::to_json(S, gens)},
             {"rounds", closure.rounds},
             {"status", closure.stabilized() ? "stabilized" : "unstabilized"},
             {"fibers", json::to_json(closure.description)}};
      if (!closure.stabilized()) {
        print(out, j);
        err << "error: closure did not stabilise within " << max_rounds
            << " rounds; partial state written\n";
        return kUnstabilized;
      }
      auto const& P = closure.description;
      j["subdirect"] = is_subdirect(P);
      for (auto x : S.elements()) {
        if (P.fiber(x).is_empty()) {
          print(out, j);
          err << "error: generators do not project onto S: fiber of "
              << S.label(x) << " is empty\n";
          return kPrecondition;
        }
      }
      Json structures = Json::array();
      for (auto x : S.elements()) {
        structures.push_back(json::to_json(fiber_structure(P, x), S));
      }
      auto A     = finite_generating_set(P);
      auto check = verify_generation(P, A, W, max_rounds);
      j["fiber_structure"] = structures;
      j["generating_set"]  = json::to_json(S, A);
      j["certified"]       = check.certified;
      j["route"]           = std::string(to_string(check.route));
      j["window"]          = W;
      print(out, j);
      return kOk;
    }

    int corpus_command(std::string const& kind, std::vector<std::size_t> const& params,
                       std::string const& dir, std::ostream& out) {
      std::vector<corpus::Entry> entries;
      if (kind == "standard") {
        if (!params.empty()) {
          throw UnsupportedParams("standard takes no parameters");
        }
        entries = corpus::standard();
      } else {
        entries.push_back(corpus::generate(kind, params));
      }
      std::filesystem::create_directories(dir);
      for (auto const& e : entries) {
        auto          path = std::filesystem::path(dir) / (e.name + ".cay");
        std::ofstream f(path, std::ios::binary);
        f << serialize_cayley(e.semigroup, e.name);
        if (!f) {
          throw Error("cannot write '" + path.string() + "'");
        }
        out << path.string() << '\n';
      }
      return kOk;
    }

  }  // namespace

  int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Subdirect products of Z with finite semigroups"};
    app.require_subcommand(1);

    auto*                    classify_cmd = app.add_subcommand("classify", "Countability verdicts for .cay files");
    std::vector<std::string> files;
    bool                     as_text = false;
    classify_cmd->add_option("files", files, ".cay files")->required();
    auto* json_flag = classify_cmd->add_flag("--json", "JSON output (default)");
    classify_cmd->add_flag("--text", as_text, "Plain-text output")->excludes(json_flag);

    auto* pm_cmd = app.add_subcommand("pm", "The P_M family of a non-regular semigroup");
    pm_cmd->require_subcommand(1);
    std::string pm_file, pm_m1, pm_m2, pm_source;
    auto*       pm_build = pm_cmd->add_subcommand("build", "Build P_M");
    pm_build->add_option("file", pm_file, ".cay file")->required();
    pm_build->add_option("m", pm_m1, "M, e.g. 0,2,3 or 0,1,+4")->required();
    auto* pm_invariant = pm_cmd->add_subcommand("invariant", "Recover M from P_M JSON");
    pm_invariant->add_option("json", pm_source, "pm build output, or - for stdin")->required();
    auto* pm_certify = pm_cmd->add_subcommand("certify", "Non-isomorphism certificate");
    pm_certify->add_option("file", pm_file, ".cay file")->required();
    pm_certify->add_option("m1", pm_m1)->required();
    pm_certify->add_option("m2", pm_m2)->required();

    auto*        fg_cmd = app.add_subcommand("fg", "Finite generating set of <gens>");
    std::string  fg_file, fg_gens;
    std::int64_t window     = kDefaultWindow;
    std::size_t  max_rounds = kDefaultMaxRounds;
    fg_cmd->add_option("file", fg_file, ".cay file")->required();
    fg_cmd->add_option("--gens", fg_gens, "(n,label),...")->required();
    fg_cmd->add_option("-W,--window", window, "Window for the fallback check")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    fg_cmd->add_option("--max-rounds", max_rounds, "Closure round limit")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);

    auto*                    corpus_cmd = app.add_subcommand("corpus", "Write test semigroups as .cay files");
    std::string              kind, out_dir;
    std::vector<std::size_t> params;
    corpus_cmd
        ->add_option("kind", kind,
                     "null | monogenic | semilattice | cyclic | sym3 | "
                     "transformation | rectangular | standard")
        ->required();
    corpus_cmd->add_option("params", params, "Integer parameters");
    corpus_cmd->add_option("-o,--output", out_dir, "Output directory")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
      app.parse(reversed);
    } catch (CLI::CallForHelp const&) {
      out << app.help();
      return kOk;
    } catch (CLI::CallForAllHelp const&) {
      out << app.help("", CLI::AppFormatMode::All);
      return kOk;
    } catch (CLI::ParseError const& e) {
      err << "error: " << e.what() << '\n';
      return kParse;
    }

    try {
      if (*classify_cmd) {
        return classify_command(files, as_text, out);
      }
      if (*pm_build) {
        auto P = build_pm(read_cayley_file(pm_file), MSpec::parse(pm_m1));
        print(out, json::to_json(P));
        return kOk;
      }
      if (*pm_invariant) {
        auto m = json::pm_invariant_from_json(read_json(pm_source));
        print(out, {{"schema", json::kSchema}, {"kind", "pm_invariant"}, {"m", m.to_string()}});
        return kOk;
      }
      if (*pm_certify) {
        auto S    = read_cayley_file(pm_file);
        auto m1   = MSpec::parse(pm_m1);
        auto m2   = MSpec::parse(pm_m2);
        auto cert = noniso_certificate(S, m1, m2);
        if (cert) {
          print(out, json::to_json(*cert, S, m1, m2));
        } else {
          print(out, {{"schema", json::kSchema},
                      {"kind", "same_m"},
                      {"m1", m1.to_string()},
                      {"m2", m2.to_string()}});
        }
        return kOk;
      }
      if (*fg_cmd) {
        return fg_command(fg_file, fg_gens, window, max_rounds, out, err);
      }
      if (*corpus_cmd) {
        return corpus_command(kind, params, out_dir, out);
      }
    } catch (ParseError const& e) {
      err << "error: " << e.what() << '\n';
      return kParse;
    } catch (PreconditionError const& e) {
      err << "error: " << e.what() << '\n';
      return kPrecondition;
    } catch (InvalidArgument const& e) {
      err << "error: " << e.what() << '\n';
      return kParse;
    } catch (std::exception const& e) {
      err << "error: " << e.what() << '\n';
      return kFailure;
    }
    return kFailure;
  }

}  // namespace zsub::cli

// Command-line front end: every subcommand prints a single JSON document on
// stdout.  Exit codes: 0 affirmative result, 1 negative mathematical result,
// 2 usage error, 3 computation budget exceeded.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "triform/classify.hpp"
#include "triform/enumerate.hpp"
#include "triform/localrep.hpp"
#include "triform/numth.hpp"
#include "triform/rivers.hpp"
#include "triform/triforms.hpp"
#include "triform/watson.hpp"

namespace {

using nlohmann::json;
using namespace triform;

Form parse_form(const std::string& text) {
  Form a;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t pos = 0;
    const long long v = std::stoll(item, &pos);
    if (pos != item.size() || v <= 0) {
      throw CLI::ValidationError("coefficients must be positive integers");
    }
    a.push_back(v);
  }
  if (a.empty()) throw CLI::ValidationError("empty coefficient list");
  return a;
}

json form_json(const Form& a) { return json(a); }

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

std::string default_data_dir() {
  if (const char* env = std::getenv("TRIFORM_DATA")) return env;
  return "data";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Diagonal triangular forms: local representation, reduction "
               "maps, regularity classification and ancestry graphs"};
  app.require_subcommand(1);

  std::string form_text, second_text, dir = default_data_dir();
  Int n = 0, prime = 0, bound = 20000, cap = -1;
  bool use_oracle = false, include_fixed = false, dot = false;

  auto* repr = app.add_subcommand("repr", "Representability of n");
  repr->add_option("-a,--form", form_text, "coefficients, e.g. 1,1,2")->required();
  repr->add_option("-n", n, "target")->required();
  repr->add_option("-p,--prime", prime, "test over Z_p only (odd prime)");
  repr->add_flag("--oracle", use_oracle, "use the exhaustive local oracle");

  auto* psi_cmd = app.add_subcommand("psi", "First local-global counterexample");
  psi_cmd->add_option("-a,--form", form_text)->required();
  psi_cmd->add_option("--bound", bound, "scan bound (default 20000)");

  auto* xi_cmd = app.add_subcommand("xi", "Square-class divisor");
  xi_cmd->add_option("-a,--form", form_text)->required();

  auto* watson = app.add_subcommand("watson", "Reduction at p, or full stabilization");
  watson->add_option("-a,--form", form_text)->required();
  watson->add_option("-p,--prime", prime, "reduce once at this odd prime");

  auto* preimage = app.add_subcommand("preimage", "Reduction preimages at p");
  preimage->add_option("-a,--form", form_text)->required();
  preimage->add_option("-p,--prime", prime)->required();
  preimage->add_option("--cap", cap, "coefficient cap (-1: none)");
  preimage->add_flag("--include-fixed-point", include_fixed);

  auto* stable = app.add_subcommand("stable", "Stability at p (or all odd primes)");
  stable->add_option("-a,--form", form_text)->required();
  stable->add_option("-p,--prime", prime, "single odd prime");

  auto* old_cmd = app.add_subcommand("old", "Redundant-coefficient test");
  old_cmd->add_option("-a,--form", form_text)->required();
  old_cmd->add_option("--bound", bound, "corroboration scan bound");

  auto* structure = app.add_subcommand("structure", "Structure-theorem regularity test");
  structure->add_option("-a,--form", form_text)->required();

  auto* river = app.add_subcommand("river", "Ancestry graph above a stable mouth");
  river->add_option("-a,--mouth", form_text)->required();
  river->add_option("--cap", cap, "coefficient cap")->required();
  river->add_flag("--dot", dot, "emit Graphviz instead of JSON");

  auto* streams = app.add_subcommand("streams", "Stream summary above a rank-4 root");
  streams->add_option("-a,--root", form_text)->required();
  streams->add_option("--cap", cap, "coefficient cap")->required();

  bool write_tables = false;
  auto* tables = app.add_subcommand("tables", "Verify the fixture directory");
  tables->add_option("--dir", dir, "fixture directory (default $TRIFORM_DATA or ./data)");
  tables->add_flag("--write", write_tables, "(re)write the fixture files and manifest");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    const Form a = tables->parsed() ? Form{} : parse_form(form_text);

    if (repr->parsed()) {
      json j{{"form", form_json(a)}, {"n", n}};
      bool ok;
      if (prime != 0) {
        const Int t = triangular_shift(a, n);
        ok = use_oracle ? hensel_oracle(a, t, prime)
                        : represents_locally(a, t, prime);
        j["prime"] = prime;
        j["shifted_target"] = t;
        j["represented_locally"] = ok;
      } else {
        ok = represents(a, n);
        j["represented"] = ok;
        j["represented_locally_everywhere"] = locally_represents(a, n);
      }
      emit(j);
      return ok ? 0 : 1;
    }

    if (psi_cmd->parsed()) {
      const ScanResult r = psi(a, bound);
      emit({{"form", form_json(a)},
            {"bound", bound},
            {"found", r.found},
            {"value", r.found ? json(r.value) : json(nullptr)}});
      return r.found ? 0 : 1;
    }

    if (xi_cmd->parsed()) {
      const auto v = square_class_divisor(a);
      emit({{"form", form_json(a)},
            {"defined", v.has_value()},
            {"value", v ? json(*v) : json(nullptr)}});
      return v ? 0 : 1;
    }

    if (watson->parsed()) {
      if (prime != 0) {
        const Form r = reduce_at(a, prime);
        emit({{"form", form_json(a)}, {"prime", prime}, {"reduced", form_json(r)}});
        return 0;
      }
      const ReductionChain chain = stabilize(a);
      json steps = json::array();
      for (const auto& s : chain.steps) {
        steps.push_back({{"p", s.p}, {"from", form_json(s.from)}, {"to", form_json(s.to)}});
      }
      emit({{"form", form_json(a)},
            {"stable", form_json(chain.stable)},
            {"steps", steps},
            {"anomalous_primes", chain.anomalous_primes}});
      return 0;
    }

    if (preimage->parsed()) {
      json list = json::array();
      for (const Form& b : reduce_preimage(a, prime, cap, !include_fixed)) {
        list.push_back(form_json(b));
      }
      emit({{"form", form_json(a)}, {"prime", prime}, {"cap", cap},
            {"preimages", list}});
      return 0;
    }

    if (stable->parsed()) {
      const bool ok = prime != 0 ? is_p_stable(a, prime) : is_stable(a);
      json j{{"form", form_json(a)}, {"stable", ok}};
      if (prime != 0) j["prime"] = prime;
      emit(j);
      return ok ? 0 : 1;
    }

    if (old_cmd->parsed()) {
      const OldnessResult r = is_old(a, bound);
      emit({{"form", form_json(a)},
            {"old", r.verdict == Oldness::Old},
            {"witness_index", r.verdict == Oldness::Old ? json(r.witness_index)
                                                        : json(nullptr)},
            {"core", r.verdict == Oldness::Old ? form_json(r.core) : json(nullptr)}});
      return r.verdict == Oldness::Old ? 0 : 1;
    }

    if (structure->parsed()) {
      const StructureResult r = structure_regular(a);
      emit({{"form", form_json(a)},
            {"regular", r.regular},
            {"core", r.regular ? form_json(r.core) : json(nullptr)}});
      return r.regular ? 0 : 1;
    }

    if (river->parsed()) {
      const River r = build_river(a, cap);
      if (dot) {
        std::cout << to_dot(r);
      } else {
        std::cout << to_json(r) << "\n";
      }
      return 0;
    }

    if (streams->parsed()) {
      const StreamCounts c = describe_streams(a, cap);
      emit({{"root", form_json(a)},
            {"cap", cap},
            {"mainstreams", c.mainstreams},
            {"tributaries", c.tributaries},
            {"sporadics", c.sporadics}});
      return 0;
    }

    if (tables->parsed()) {
      if (write_tables) {
        std::ofstream manifest(dir + "/manifest.txt");
        if (!manifest) throw std::runtime_error("cannot write to " + dir);
        for (const std::string name :
             {"ternary", "families", "drops", "streams", "prefixes"}) {
          const std::string csv = fixture_csv(name);
          std::ofstream f(dir + "/" + name + ".csv");
          f << csv;
          char buf[32];
          std::snprintf(buf, sizeof buf, "%016llx",
                        static_cast<unsigned long long>(fixture_checksum(name)));
          manifest << buf << " " << name << ".csv\n";
        }
      }
      const auto problems = verify_fixture_dir(dir);
      json list = json::array();
      for (const auto& p : problems) list.push_back(p);
      emit({{"dir", dir}, {"consistent", problems.empty()}, {"problems", list}});
      return problems.empty() ? 0 : 1;
    }
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return 3;
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition violated: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

// Command-line front end: loads input files, assembles the argument object
// for the verb, dispatches through the shared API layer, and prints the
// versioned report to stdout (optionally also to --output).
//
// Exit codes: 0 = report produced (mathematical negative verdicts included),
// 1 = domain failure of the requested operation, 2 = usage/I-O/validation.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "jetlin/api.hpp"
#include "jetlin/errors.hpp"
#include "jetlin/germ_io.hpp"

namespace {

using jetlin::Errc;
using jetlin::Json;

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  size_t start = 0;
  while (true) {
    size_t pos = text.find(sep, start);
    if (pos == std::string::npos) {
      out.push_back(text.substr(start));
      return out;
    }
    out.push_back(text.substr(start, pos - start));
    start = pos + 1;
  }
}

// "re" or "re,im" -> complex JSON (parts are rational or decimal literals).
Json complex_flag(const std::string& text, const std::string& flag) {
  std::vector<std::string> parts = split(text, ',');
  jetlin::require(parts.size() <= 2 && !parts[0].empty(), Errc::ParseError,
                  flag + ": expected 're' or 're,im', got '" + text + "'");
  return Json{{"re", parts[0]}, {"im", parts.size() == 2 ? parts[1] : "0"}};
}

// disk:re[,im],radius  or  segment:re1[,im1],re2[,im2] -> set JSON.
Json set_flag(const std::string& text) {
  size_t colon = text.find(':');
  jetlin::require(colon != std::string::npos, Errc::ParseError,
                  "--set: expected 'disk:...' or 'segment:...', got '" + text + "'");
  const std::string kind = text.substr(0, colon);
  std::vector<std::string> parts = split(text.substr(colon + 1), ',');
  if (kind == "disk") {
    if (parts.size() == 2) {
      return Json{{"kind", "disk"},
                  {"center", Json{{"re", parts[0]}, {"im", "0"}}},
                  {"radius", parts[1]}};
    }
    jetlin::require(parts.size() == 3, Errc::ParseError,
                    "--set disk: expected 'disk:center,radius' or 'disk:re,im,radius'");
    return Json{{"kind", "disk"},
                {"center", Json{{"re", parts[0]}, {"im", parts[1]}}},
                {"radius", parts[2]}};
  }
  jetlin::require(kind == "segment", Errc::ParseError,
                  "--set: unknown set kind '" + kind + "'");
  if (parts.size() == 2) {
    return Json{{"kind", "segment"},
                {"a", Json{{"re", parts[0]}, {"im", "0"}}},
                {"b", Json{{"re", parts[1]}, {"im", "0"}}}};
  }
  jetlin::require(parts.size() == 4, Errc::ParseError,
                  "--set segment: expected 'segment:a,b' or 'segment:re1,im1,re2,im2'");
  return Json{{"kind", "segment"},
              {"a", Json{{"re", parts[0]}, {"im", parts[1]}}},
              {"b", Json{{"re", parts[2]}, {"im", parts[3]}}}};
}

// "golden" | "golden:bits" | "liouville" | "liouville:terms" | "p/q" | decimal.
Json theta_flag(const std::string& text, long bits) {
  if (text.rfind("golden", 0) == 0) {
    Json out{{"special", "golden"}, {"bits", bits}};
    if (text.size() > 7 && text[6] == ':') out["bits"] = std::stol(text.substr(7));
    return out;
  }
  if (text.rfind("liouville", 0) == 0) {
    Json out{{"special", "liouville"}};
    if (text.size() > 10 && text[9] == ':') out["terms"] = std::stol(text.substr(10));
    return out;
  }
  return Json(text);
}

struct FileOptions {
  std::string germ, matrix, eigen, phi, params, k, poly, cert;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"jetlin: exact jet-level linearization toolkit"};
  app.require_subcommand(1);
  app.fallthrough();

  int order = 0;
  long bits = 256;
  long long seed = 0;
  std::string output;
  app.add_option("--order", order, "truncation order (default: the input's stored order)");
  app.add_option("--bits", bits, "working precision in bits (default 256)")
      ->check(CLI::Range(53l, 1l << 20));
  app.add_option("--seed", seed, "seed for randomized inputs (default 0)");
  app.add_option("--output", output,
                 "write the report here too (fixtures: directory for the fixture files)");

  FileOptions files;
  long q = 0;
  int axis = 0;
  long cutoff = 20;
  long samples = 0;
  std::string oracle, theta_text, bound_text, set_text, at_text;

  CLI::App* c_centralizer = app.add_subcommand(
      "centralizer", "exact commuting-jet basis of a linear map");
  c_centralizer->add_option("--matrix", files.matrix, "linear map file")->required();
  c_centralizer->add_option("--oracle", oracle,
                            "compare against a closed form: elliptic|jordan2");

  CLI::App* c_resonances =
      app.add_subcommand("resonances", "multiplicative invariants and resonant pairs");
  c_resonances->add_option("--eigen", files.eigen, "eigenvalue specification file")->required();

  CLI::App* c_linearize =
      app.add_subcommand("linearize", "solve the conjugacy to the linear part degree by degree");
  c_linearize->add_option("--germ", files.germ, "exact germ file")->required();
  c_linearize->add_option("--params", files.params, "resonant-slot parameter file");

  CLI::App* c_family =
      app.add_subcommand("family", "linearize a one-parameter polynomial family");
  c_family->add_option("--germ", files.germ, "param-exact germ file")->required();

  CLI::App* c_average =
      app.add_subcommand("average", "torsion averaging of a comparison map");
  c_average->add_option("--germ", files.germ, "exact germ file")->required();
  c_average->add_option("--q", q, "averaging order (linear part must satisfy A^q = id)")
      ->required();
  c_average->add_option("--k", files.k, "comparison map file (default: identity)");

  CLI::App* c_finite =
      app.add_subcommand("finite-order", "decide linearizability for torsion linear parts");
  c_finite->add_option("--germ", files.germ, "germ file")->required();

  CLI::App* c_embed =
      app.add_subcommand("embed", "embed a one-variable jet along an eigendirection");
  c_embed->add_option("--matrix", files.matrix, "linear map file")->required();
  c_embed->add_option("--axis", axis, "1-based invariant axis")->required();
  c_embed->add_option("--phi", files.phi, "one-variable jet file (valuation >= 2)")->required();

  CLI::App* c_omega = app.add_subcommand("omega", "small-divisor profile of a spectrum");
  c_omega->add_option("--eigen", files.eigen, "eigenvalue specification file")->required();

  CLI::App* c_bruno = app.add_subcommand("bruno", "continued-fraction Bruno-sum classifier");
  c_bruno
      ->add_option("--theta", theta_text,
                   "rotation number: 'p/q', decimal, 'golden[:bits]', 'liouville[:terms]'")
      ->required();
  c_bruno->add_option("--cutoff", cutoff, "convergent cutoff K (default 20)");
  c_bruno->add_option("--bound", bound_text, "divergence bound M (default 100)");

  CLI::App* c_torsion =
      app.add_subcommand("torsion-compare", "compare divisors of a spectrum and its q-th power");
  c_torsion->add_option("--eigen", files.eigen, "eigenvalue specification file")->required();
  c_torsion->add_option("--q", q, "torsion power")->required();

  CLI::App* c_bernstein =
      app.add_subcommand("bernstein", "polynomial growth bound check on a compact set");
  c_bernstein->add_option("--poly", files.poly, "polynomial coefficient file")->required();
  c_bernstein->add_option("--set", set_text, "disk:center,radius | segment:a,b")->required();
  c_bernstein->add_option("--samples", samples, "number of random test points (default 1000)");

  CLI::App* c_radius =
      app.add_subcommand("radius-bound", "certified convergence-radius lower bound");
  c_radius->add_option("--cert", files.cert, "growth certificate file")->required();
  c_radius->add_option("--at", at_text, "evaluation point 're[,im]' (must lie in K)")
      ->required();
  c_radius->add_option("--samples", samples, "boundary sample count (default 1024)");

  CLI::App* c_fixtures =
      app.add_subcommand("fixtures", "write the deterministic fixture set");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  std::string verb;
  Json args = Json::object();
  try {
    if (order > 0) args["order"] = order;

    if (c_centralizer->parsed()) {
      verb = "centralizer";
      args["matrix"] = jetlin::read_json_file(files.matrix);
      if (!oracle.empty()) args["oracle"] = oracle;
    } else if (c_resonances->parsed()) {
      verb = "resonances";
      args["eigenvalues"] = jetlin::read_json_file(files.eigen);
    } else if (c_linearize->parsed()) {
      verb = "linearize";
      args["germ"] = jetlin::read_json_file(files.germ);
      if (!files.params.empty()) args["params"] = jetlin::read_json_file(files.params);
    } else if (c_family->parsed()) {
      verb = "family";
      args["germ"] = jetlin::read_json_file(files.germ);
    } else if (c_average->parsed()) {
      verb = "average";
      args["germ"] = jetlin::read_json_file(files.germ);
      args["q"] = q;
      if (!files.k.empty()) args["k"] = jetlin::read_json_file(files.k);
    } else if (c_finite->parsed()) {
      verb = "finite-order";
      args["germ"] = jetlin::read_json_file(files.germ);
    } else if (c_embed->parsed()) {
      verb = "embed";
      args["matrix"] = jetlin::read_json_file(files.matrix);
      args["axis"] = axis;
      args["phi"] = jetlin::read_json_file(files.phi);
    } else if (c_omega->parsed()) {
      verb = "omega";
      args["eigenvalues"] = jetlin::read_json_file(files.eigen);
      args["bits"] = bits;
    } else if (c_bruno->parsed()) {
      verb = "bruno";
      args["theta"] = theta_flag(theta_text, bits);
      args["cutoff"] = cutoff;
      if (!bound_text.empty()) args["bound"] = bound_text;
      args["bits"] = bits;
    } else if (c_torsion->parsed()) {
      verb = "torsion-compare";
      args["eigenvalues"] = jetlin::read_json_file(files.eigen);
      args["q"] = q;
      args["bits"] = bits;
    } else if (c_bernstein->parsed()) {
      verb = "bernstein";
      args["poly"] = jetlin::read_json_file(files.poly);
      args["set"] = set_flag(set_text);
      if (samples > 0) args["samples"] = samples;
      args["seed"] = seed;
      args["bits"] = bits;
    } else if (c_radius->parsed()) {
      verb = "radius-bound";
      args["certificate"] = jetlin::read_json_file(files.cert);
      args["at"] = complex_flag(at_text, "--at");
      if (samples > 0) args["samples"] = samples;
      args["bits"] = bits;
    } else if (c_fixtures->parsed()) {
      verb = "fixtures";
      args = Json{{"seed", seed}};
    }

    Json report = jetlin::run_verb(verb, args);
    std::cout << report.dump(2) << "\n";

    if (verb == "fixtures") {
      std::filesystem::path dir = output.empty() ? "." : output;
      std::filesystem::create_directories(dir);
      for (const Json& file : report.at("result").at("files")) {
        jetlin::write_json_file((dir / file.at("name").get<std::string>()).string(),
                                file.at("content"));
      }
    } else if (!output.empty()) {
      jetlin::write_json_file(output, report);
    }
    return 0;
  } catch (const jetlin::Error& e) {
    std::cerr << "jetlin " << verb << ": " << e.what() << "\n";
    return jetlin::is_usage_error(e.code()) ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "jetlin " << verb << ": internal error: " << e.what() << "\n";
    return 1;
  }
}

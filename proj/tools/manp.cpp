// manp: shapes of mutually annihilating nilpotent matrix pairs.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <string>

#include "manp/characterize.hpp"
#include "manp/errors.hpp"
#include "manp/exact_matrix.hpp"
#include "manp/jordan.hpp"
#include "manp/json_io.hpp"
#include "manp/reduction.hpp"
#include "manp/verify.hpp"

using nlohmann::json;
using namespace manp;

namespace {

enum Exit { kOk = 0, kNegative = 1, kUsage = 2, kInternal = 3 };

struct Flags {
  std::string mu, nu, field = "gf2", mode = "exhaustive", format = "json", input = "-";
  int n = 0, a = 0, b = 0, j = 0;
  std::uint64_t samples = 1000, seed = 0, budget = kDefaultBudget;
  bool no_cross_check = false;
};

json certificate_json(const Certificate& c) {
  return {{"lambda", c.lambda.to_string()}, {"epsilon", c.epsilon}, {"c", c.c}, {"d", c.d}};
}

json read_input(const std::string& path) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(path);
    if (!in) throw InvalidArgument("cannot open '" + path + "'");
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("bad JSON input: ") + e.what());
  }
}

void print(const json& doc) { std::cout << doc.dump(2) << '\n'; }

std::string csv_field(const std::string& s) {
  return s.find(',') == std::string::npos ? s : "\"" + s + "\"";
}

void print_pairs(const Flags& f, json header, const PairSet& pairs) {
  if (f.format == "csv") {
    std::cout << "mu,nu\n";
    for (const auto& [mu, nu] : pairs) std::cout << csv_field(mu.to_string()) << ',' << csv_field(nu.to_string()) << '\n';
    return;
  }
  json list = json::array();
  for (const auto& [mu, nu] : pairs) list.push_back({mu.to_string(), nu.to_string()});
  header["count"] = pairs.size();
  header["pairs"] = std::move(list);
  print(header);
}

int run_check(const Flags& f) {
  const Partition mu = parse_partition(f.mu), nu = parse_partition(f.nu);
  const auto cert = compatible(mu, nu);
  json out{{"mu", mu.to_string()}, {"nu", nu.to_string()}, {"compatible", cert.has_value()}};
  if (cert) out["certificate"] = certificate_json(*cert);
  print(out);
  return cert ? kOk : kNegative;
}

int run_enumerate(const Flags& f) {
  const Partition mu = parse_partition(f.mu);
  const auto shapes = enumerate_shapes(mu);
  if (f.format == "csv") {
    std::cout << "shape\n";
    for (const auto& s : shapes) std::cout << csv_field(s.to_string()) << '\n';
    return kOk;
  }
  json list = json::array();
  for (const auto& s : shapes) list.push_back(s.to_string());
  print({{"mu", mu.to_string()}, {"count", shapes.size()}, {"shapes", list}});
  return kOk;
}

int run_witness(const Flags& f) {
  const Partition mu = parse_partition(f.mu), nu = parse_partition(f.nu);
  return with_field(FieldSpec::parse(f.field), [&](auto field) {
    const auto cert = compatible(mu, nu);
    if (!cert) {
      print({{"mu", mu.to_string()}, {"nu", nu.to_string()}, {"compatible", false}});
      return kNegative;
    }
    const auto w = witness_from_certificate(mu, *cert, field);
    print({{"mu", mu.to_string()},
           {"nu", nu.to_string()},
           {"certificate", certificate_json(*cert)},
           {"a", matrix_to_json(w.a)},
           {"b", matrix_to_json(w.b)}});
    return kOk;
  });
}

int run_reduce(const Flags& f) {
  const Partition mu = parse_partition(f.mu);
  const json doc = read_input(f.input);
  const ExactMatrix m = matrix_from_json(doc.contains("matrix") ? doc["matrix"] : doc);
  return std::visit(
      [&](const auto& a) {
        const auto r = reduce(a, mu, ReduceOptions{true});
        print({{"mu", mu.to_string()},
               {"lambda", r.lambda.to_string()},
               {"matrix", matrix_to_json(r.matrix)},
               {"transform", matrix_to_json(r.transform)}});
        return kOk;
      },
      m);
}

int run_shape(const Flags& f) {
  const json doc = read_input(f.input);
  if (!doc.is_object()) throw InvalidArgument("shape expects a matrix or a reduced-pair document");
  if (!doc.contains("mu") && f.mu.empty()) throw InvalidArgument("shape needs --mu or a \"mu\" field");
  const Partition mu = parse_partition(doc.contains("mu") ? doc["mu"].get<std::string>() : f.mu);
  const ExactMatrix m = matrix_from_json(doc.contains("matrix") ? doc["matrix"] : doc);
  return std::visit(
      [&](const auto& a) {
        using F = std::decay_t<decltype(a.field())>;
        ReducedPair<F> r;
        if (doc.contains("lambda")) {
          r.lambda = parse_partition(doc["lambda"].get<std::string>());
          if (!is_reduced(a, mu, r.lambda)) throw PreconditionViolated("matrix is not in reduced form");
          const CoreSplit split = split_core(mu);
          r.mu = mu;
          r.core = split.core;
          r.ones = split.ones;
          r.matrix = a;
        } else {
          r = reduce(a, mu);
        }
        const ChainProfile p = chain_profile(r);
        json f_map = json::object(), g_map = json::object();
        for (int s = 2; s <= r.lambda.largest() + 1; ++s) {
          f_map[std::to_string(s)] = p.f_at(s);
          g_map[std::to_string(s)] = p.g_at(s);
        }
        print({{"mu", mu.to_string()},
               {"lambda", r.lambda.to_string()},
               {"shape", shape_of_reduced(r).to_string()},
               {"profile", {{"e1", p.e1}, {"e2", p.e2}, {"f", f_map}, {"g", g_map}}}});
        return kOk;
      },
      m);
}

int run_vnab(const Flags& f) {
  print_pairs(f, {{"n", f.n}, {"a", f.a}, {"b", f.b}}, enumerate_vnab(f.n, f.a, f.b));
  return kOk;
}

int run_components(const Flags& f) {
  print_pairs(f, {{"n", f.n}, {"j", f.j}}, component_pairs(f.n, f.j));
  return kOk;
}

int run_verify(const Flags& f) {
  VerifyOptions options;
  if (f.mode == "exhaustive")
    options.mode = VerifyMode::exhaustive;
  else if (f.mode == "sample")
    options.mode = VerifyMode::sampled;
  else
    throw InvalidArgument("--mode must be exhaustive or sample");
  options.samples = f.samples;
  options.seed = f.seed;
  options.budget = f.budget;
  options.cross_check = !f.no_cross_check;
  const VerifyReport r = cmd_verify(parse_partition(f.mu), FieldSpec::parse(f.field), options);
  json predicted = json::array(), observed = json::array();
  for (const auto& p : r.predicted) predicted.push_back(p.to_string());
  for (const auto& p : r.observed) observed.push_back(p.to_string());
  json mode{{"kind", to_string(options.mode)}};
  if (options.mode == VerifyMode::sampled) {
    mode["samples"] = options.samples;
    mode["seed"] = options.seed;
  }
  print({{"mu", r.mu.to_string()},
         {"field", r.field.to_string()},
         {"mode", mode},
         {"candidates", r.candidates},
         {"nilpotent", r.nilpotent},
         {"predicted", predicted},
         {"observed", observed},
         {"verdict", to_string(r.verdict)},
         {"details", r.details}});
  return r.verdict == Verdict::mismatch ? kNegative : kOk;
}

int run_roundtrip(const Flags& f) {
  const Partition mu = parse_partition(f.mu), nu = parse_partition(f.nu);
  const RoundtripResult r = cmd_roundtrip(mu, nu, FieldSpec::parse(f.field));
  json out{{"mu", mu.to_string()}, {"nu", nu.to_string()}, {"ok", r.ok}, {"stage", r.stage}};
  if (!r.message.empty()) out["message"] = r.message;
  if (r.certificate) out["certificate"] = certificate_json(*r.certificate);
  print(out);
  return r.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Shapes of mutually annihilating nilpotent matrix pairs (AB = BA = 0)"};
  app.require_subcommand(1);
  Flags f;

  auto add_field = [&](CLI::App* c) { c->add_option("--field", f.field, "gf2 | gf:<p> | rational")->capture_default_str(); };
  auto add_format = [&](CLI::App* c) {
    c->add_option("--format", f.format, "json | csv")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
  };
  auto add_input = [&](CLI::App* c) { c->add_option("--input", f.input, "JSON file, - for stdin")->capture_default_str(); };

  auto* check = app.add_subcommand("check", "Is nu attainable for A when sh B = mu? Exit 1 if not");
  check->add_option("--mu", f.mu, "shape of B, e.g. 3,3,2,1^8")->required();
  check->add_option("--nu", f.nu, "shape of A")->required();

  auto* enumerate = app.add_subcommand("enumerate", "All shapes of A for sh B = mu");
  enumerate->add_option("--mu", f.mu)->required();
  add_format(enumerate);

  auto* witness = app.add_subcommand("witness", "Explicit pair (A, B) with sh B = mu, sh A = nu");
  witness->add_option("--mu", f.mu)->required();
  witness->add_option("--nu", f.nu)->required();
  add_field(witness);

  auto* reduce_cmd = app.add_subcommand("reduce", "Conjugate a matrix A (A J_mu = J_mu A = 0) into reduced form");
  reduce_cmd->add_option("--mu", f.mu)->required();
  add_input(reduce_cmd);

  auto* shape = app.add_subcommand("shape", "Shape and chain profile of a reduced pair document");
  shape->add_option("--mu", f.mu, "used when the document has no \"mu\"");
  add_input(shape);

  auto* vnab = app.add_subcommand("vnab", "Pairs (sh A, sh B) with A^a = B^b = 0");
  vnab->add_option("--n", f.n)->required();
  vnab->add_option("--a", f.a)->required();
  vnab->add_option("--b", f.b)->required();
  add_format(vnab);

  auto* components = app.add_subcommand("components", "Pairs (sh A, sh B) in the component C_j");
  components->add_option("--n", f.n)->required();
  components->add_option("--j", f.j)->required();
  add_format(components);

  auto* verify = app.add_subcommand("verify", "Brute-force the shape set of mu over a finite field");
  verify->add_option("--mu", f.mu)->required();
  add_field(verify);
  verify->add_option("--mode", f.mode, "exhaustive | sample")->check(CLI::IsMember({"exhaustive", "sample"}))->capture_default_str();
  verify->add_option("--samples", f.samples)->capture_default_str();
  verify->add_option("--seed", f.seed)->capture_default_str();
  verify->add_option("--budget", f.budget)->capture_default_str();
  verify->add_flag("--no-cross-check", f.no_cross_check, "skip the reduction-based shape per matrix");

  auto* roundtrip = app.add_subcommand("roundtrip", "compatible -> witness -> reduce -> shape");
  roundtrip->add_option("--mu", f.mu)->required();
  roundtrip->add_option("--nu", f.nu)->required();
  add_field(roundtrip);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*check) return run_check(f);
    if (*enumerate) return run_enumerate(f);
    if (*witness) return run_witness(f);
    if (*reduce_cmd) return run_reduce(f);
    if (*shape) return run_shape(f);
    if (*vnab) return run_vnab(f);
    if (*components) return run_components(f);
    if (*verify) return run_verify(f);
    if (*roundtrip) return run_roundtrip(f);
  } catch (const Incompatible& e) {
    std::cerr << "incompatible: " << e.what() << '\n';
    return kNegative;
  } catch (const InternalInconsistency& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternal;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

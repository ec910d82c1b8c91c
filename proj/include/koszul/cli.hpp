#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "koszul/verify.hpp"

namespace koszul::cli {

using Json = nlohmann::ordered_json;

enum ExitCode : int { kOk = 0, kMismatch = 1, kConfigError = 2, kResourceError = 3 };

enum class Format { text, json };

struct RunConfig {
  RingSpec ring;
  IdealSpec ideal;
  std::size_t degree = 2;
  Format format = Format::text;
  bool timing = false;
};

inline std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  if (text.find_first_not_of(" \t") == std::string::npos) return out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    auto b = item.find_first_not_of(" \t");
    auto e = item.find_last_not_of(" \t");
    out.push_back(b == std::string::npos ? "" : item.substr(b, e - b + 1));
  }
  if (!text.empty() && text.back() == ',') out.emplace_back();
  return out;
}

inline Json config_json(const RunConfig& c) {
  Json j;
  j["field"] = c.ring.field;
  j["vars"] = c.ring.variables;
  j["ideal"] = c.ideal.generators;
  j["degree"] = c.degree;
  j["order"] = to_string(c.ring.order);
  j["max_steps"] = c.ring.max_steps;
  return j;
}

template <class T>
Json optional_json(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

inline Json spots_json(const BranchSummary& b) {
  Json spots = Json::array();
  for (const auto& s : b.spots) {
    Json j;
    j["p"] = s.p;
    j["zero"] = s.zero;
    j["cover_rank"] = s.cover_rank;
    j["relations"] = s.relations;
    j["witness"] = optional_json(s.witness);
    spots.push_back(std::move(j));
  }
  return spots;
}

inline Json branch_json(const BranchSummary& b) {
  Json j;
  j["label"] = b.label;
  j["field"] = b.field;
  j["module"] = b.module;
  j["degree"] = b.degree;
  j["exact"] = b.exact;
  j["rigid"] = b.rigid;
  j["u_zero"] = optional_json(b.u_zero);
  j["spots"] = spots_json(b);
  return j;
}

inline Json elapsed_json(const RunConfig& c, std::chrono::steady_clock::time_point start) {
  if (!c.timing) return nullptr;
  return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                               start)
      .count();
}

inline std::string yes_no(bool zero) { return zero ? "zero" : "nonzero"; }

inline void print_spots_text(const BranchSummary& b, std::ostream& out, const std::string& indent) {
  for (const auto& s : b.spots) {
    out << indent << "H_" << s.p << ": " << yes_no(s.zero) << " (cover_rank " << s.cover_rank
        << ", relations " << s.relations << ")";
    if (s.witness) out << " witness " << *s.witness;
    out << "\n";
  }
}

inline void print_config_text(const RunConfig& c, std::ostream& out) {
  out << "field: " << c.ring.field << "\n";
  out << "vars: ";
  for (std::size_t i = 0; i < c.ring.variables.size(); ++i)
    out << (i ? "," : "") << c.ring.variables[i];
  out << "\nideal: (";
  for (std::size_t i = 0; i < c.ideal.generators.size(); ++i)
    out << (i ? ", " : "") << c.ideal.generators[i];
  out << ")\ndegree: " << c.degree << "\norder: " << to_string(c.ring.order) << "\n";
}

inline std::string bool_text(bool b) { return b ? "true" : "false"; }

/// `verify-paper`: exit 0 iff every claim holds.
inline int cmd_verify_paper(const RunConfig& c, std::ostream& out) {
  const auto start = std::chrono::steady_clock::now();
  const Verdict v = verify_counterexample(c.ring, c.ideal, c.degree);
  const auto& p = v.primary;

  if (c.format == Format::json) {
    Json j;
    j["config"] = config_json(c);
    j["spots"] = spots_json(p);
    j["u"] = optional_json(p.u);
    j["u_zero"] = optional_json(p.u_zero);
    j["certificate"] = optional_json(p.certificate);
    j["certificate_nonzero"] = optional_json(p.certificate_nonzero);
    j["chain_ok"] = optional_json(p.chain_ok);
    Json chain = Json::array();
    for (const auto& s : p.chain) chain.push_back(Json{{"expression", s.expression}, {"normal_form", s.representative}});
    j["chain"] = std::move(chain);
    j["boundary_of_u_zero"] = optional_json(p.boundary_of_u_zero);
    j["witness_matches_u"] = optional_json(p.witness_matches_u);
    j["h2_nonzero"] = optional_json(v.h2_nonzero());
    j["h1_zero"] = optional_json(v.h1_zero());
    j["counterexample_absent"] = optional_json(v.counterexample_absent());
    j["rigid"] = p.rigid;
    Json controls = Json::array();
    for (const auto& b : v.controls) controls.push_back(branch_json(b));
    j["controls"] = std::move(controls);
    Json claims = Json::object();
    for (const auto& cl : v.claims) claims[cl.name] = cl.holds;
    j["claims"] = std::move(claims);
    j["verified"] = v.verified;
    j["failed_step"] = optional_json(v.failed_step);
    j["elapsed_ms"] = elapsed_json(c, start);
    out << j.dump(2) << "\n";
  } else {
    print_config_text(c, out);
    out << "homology of Kos^" << c.degree << "(I):\n";
    print_spots_text(p, out, "  ");
    if (p.u) {
      out << "u = " << *p.u << ": " << yes_no(*p.u_zero) << "\n";
      if (p.certificate)
        out << "certificate: f(u) = " << *p.certificate << " + I^[2] ("
            << (*p.certificate_nonzero ? "nonzero" : "zero") << ")\n";
      out << "identity chain: " << (*p.chain_ok ? "ok" : "FAILED") << "\n";
      for (const auto& s : p.chain) out << "  " << s.expression << " = " << s.representative << "\n";
      out << "d(u): " << yes_no(*p.boundary_of_u_zero) << "\n";
      if (p.witness_matches_u) out << "witness matches u: " << bool_text(*p.witness_matches_u) << "\n";
    }
    if (auto h2 = v.h2_nonzero()) out << "h2_nonzero: " << bool_text(*h2) << "\n";
    if (auto h1 = v.h1_zero()) out << "h1_zero: " << bool_text(*h1) << "\n";
    if (auto absent = v.counterexample_absent())
      out << "counterexample_absent: " << bool_text(*absent) << "\n";
    out << "rigid: " << bool_text(p.rigid) << "\n";
    for (const auto& b : v.controls) {
      out << "control " << b.label << " [" << b.field << ", " << b.module << "]: "
          << (b.exact ? "exact" : "not exact") << "\n";
      print_spots_text(b, out, "  ");
    }
    out << "claims:\n";
    for (const auto& cl : v.claims) out << "  [" << (cl.holds ? "ok" : "FAIL") << "] " << cl.name << "\n";
    out << "verdict: " << (v.verified ? "verified" : "FAILED at " + *v.failed_step) << "\n";
    if (c.timing) out << "elapsed_ms: " << elapsed_json(c, start).dump() << "\n";
  }
  return v.verified ? kOk : kMismatch;
}

/// `homology`: homology of Kos^n(I) at every spot.
inline int cmd_homology(const RunConfig& c, std::ostream& out) {
  const auto start = std::chrono::steady_clock::now();
  BranchSummary b = with_field(c.ring.field, [&](auto field) {
    auto ring = ring_from_spec(field, c.ring);
    return analyze_ideal(ideal_from_spec(ring, c.ideal), c.degree, "primary", false);
  });
  if (c.format == Format::json) {
    Json j;
    j["config"] = config_json(c);
    j["spots"] = spots_json(b);
    j["certificate"] = nullptr;
    j["chain_ok"] = nullptr;
    j["rigid"] = b.rigid;
    j["controls"] = Json::array();
    j["elapsed_ms"] = elapsed_json(c, start);
    out << j.dump(2) << "\n";
  } else {
    print_config_text(c, out);
    out << "homology of Kos^" << c.degree << "(I):\n";
    print_spots_text(b, out, "  ");
    out << "exact: " << bool_text(b.exact) << "\n";
    out << "rigid: " << bool_text(b.rigid) << "\n";
    if (c.timing) out << "elapsed_ms: " << elapsed_json(c, start).dump() << "\n";
  }
  return kOk;
}

/// `gb`: reduced monic Groebner basis, leading terms descending.
inline int cmd_gb(const RunConfig& c, std::ostream& out) {
  std::vector<std::string> basis = with_field(c.ring.field, [&](auto field) {
    auto ring = ring_from_spec(field, c.ring);
    using F = decltype(field);
    std::vector<Polynomial<F>> gens;
    for (const auto& g : c.ideal.generators) gens.push_back(parse_poly(g, ring));
    std::vector<std::string> lines;
    for (const auto& v : buchberger(ring, gens).generators()) lines.push_back(v[0].to_string());
    return lines;
  });
  if (c.format == Format::json) {
    Json j;
    j["config"] = config_json(c);
    j["basis"] = basis;
    out << j.dump(2) << "\n";
  } else {
    for (const auto& line : basis) out << line << "\n";
  }
  return kOk;
}

/// Parses argv and dispatches; returns the process exit code.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Koszul complex homology and the characteristic-2 acyclicity counterexample",
               "koszul"};
  app.require_subcommand(1);

  RunConfig config;
  std::string vars = "x,y,z";
  std::string ideal = "x,y,z";
  std::string order = "grevlex";
  std::string format = "text";
  std::vector<std::string> positional;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--field", config.ring.field, "gf2, gf<p> or qq")->capture_default_str();
    sub->add_option("--vars", vars, "comma-separated variable names")->capture_default_str();
    sub->add_option("--order", order, "monomial order")
        ->check(CLI::IsMember({"grevlex", "lex"}))
        ->capture_default_str();
    sub->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    sub->add_option("--max-steps", config.ring.max_steps, "reduction step cap per computation")
        ->capture_default_str();
    sub->add_flag("--timing", config.timing, "report elapsed_ms (output is then not reproducible)");
  };

  auto* verify = app.add_subcommand("verify-paper", "verify the counterexample end to end");
  add_common(verify);
  verify->add_option("--ideal", ideal, "comma-separated generators")->capture_default_str();
  verify->add_option("--degree", config.degree, "Koszul degree")->check(CLI::Range(1, 3))->capture_default_str();

  auto* homology = app.add_subcommand("homology", "homology of Kos^n(I) at every spot");
  add_common(homology);
  homology->add_option("--ideal", ideal, "comma-separated generators")->capture_default_str();
  homology->add_option("--degree", config.degree, "Koszul degree")->check(CLI::Range(1, 3))->capture_default_str();

  auto* gb = app.add_subcommand("gb", "reduced Groebner basis of an ideal");
  add_common(gb);
  auto* gb_ideal = gb->add_option("--ideal", ideal, "comma-separated generators");
  gb->add_option("generators", positional, "generators (alternative to --ideal)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kConfigError;
  }

  try {
    config.ring.variables = split_list(vars);
    config.ring.order = order == "lex" ? MonomialOrder::lex : MonomialOrder::grevlex;
    config.format = format == "json" ? Format::json : Format::text;
    if (gb->parsed()) {
      if (!positional.empty())
        config.ideal.generators = positional;
      else if (gb_ideal->count() > 0)
        config.ideal.generators = split_list(ideal);
      else
        config.ideal.generators.clear();
      return cmd_gb(config, out);
    }
    config.ideal.generators = split_list(ideal);
    if (verify->parsed()) return cmd_verify_paper(config, out);
    return cmd_homology(config, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kConfigError;
  } catch (const StructuralError& e) {
    err << "error: " << e.what() << "\n";
    return kConfigError;
  } catch (const UnsupportedError& e) {
    err << "error: " << e.what() << "\n";
    return kConfigError;
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << "\n";
    return kResourceError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kMismatch;
  }
}

}  // namespace koszul::cli

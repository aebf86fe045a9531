#include "sbgg/cli.hpp"

#include "sbgg/bbw.hpp"
#include "sbgg/complex.hpp"
#include "sbgg/error.hpp"
#include "sbgg/hasse.hpp"
#include "sbgg/json_io.hpp"
#include "sbgg/render.hpp"

#include "CLI11.hpp"
#include <fmt/format.h>

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

namespace sbgg::cli {

namespace {

using nlohmann::json;

const char* name_of(Subcommand s) {
  switch (s) {
  case Subcommand::analyze: return "analyze";
  case Subcommand::relative: return "relative";
  case Subcommand::images: return "images";
  case Subcommand::complex: return "complex";
  case Subcommand::oracle: return "oracle";
  case Subcommand::check: return "check";
  case Subcommand::render: return "render";
  }
  return "?";
}

void require_format(const RunConfig& config, std::initializer_list<Format> allowed) {
  for (Format f : allowed)
    if (f == config.format)
      return;
  throw input_error(input_errc::invalid_input,
                    fmt::format("format not supported by the {} command", name_of(config.subcommand)));
}

struct Outcome {
  std::string text;
  int code = exit_ok;
};

void dump_failures(const VerificationReport& report, std::ostream& err) {
  for (const auto& check : report.checks)
    for (const auto& ce : check.counterexamples)
      err << "counterexample [" << check.name << "]: " << ce << "\n";
}

std::string status(const CheckResult* check) { return check && check->passed ? "OK" : "FAILED"; }

std::string summary_line(const VerificationReport& report) {
  bool oracle_ok = true;
  for (const char* name : {"oracle bijection", "oracle degrees", "oracle arrows"})
    oracle_ok = oracle_ok && report.find(name) && report.find(name)->passed;
  const CheckResult* shift = report.find("shift");
  return fmt::format("oracle isomorphism {}, shift {} ({}), jump law {}, diamonds {}, grading {}, orders {}",
                     oracle_ok ? "OK" : "FAILED", status(shift), shift ? shift->detail : "", status(report.find("jump law")),
                     status(report.find("diamonds")), status(report.find("grading")),
                     status(report.find("operator orders")));
}

std::string report_text(const VerificationReport& report) {
  std::string out;
  for (const auto& check : report.checks) {
    out += fmt::format("{}: {}", check.name, check.passed ? "OK" : "FAILED");
    if (!check.detail.empty())
      out += fmt::format(" ({})", check.detail);
    out += '\n';
  }
  return out;
}

std::string analyze_text(const SingularityProfile& profile) {
  std::string out;
  out += fmt::format("mu = {}\n", profile.mu.to_string());
  out += fmt::format("n = {}  k = {}  l = {}\n", profile.n, profile.k, profile.l);
  out += fmt::format("S = {{{}}}\n", fmt::join(profile.S, ","));
  out += fmt::format("I = {{{}}}\n", fmt::join(profile.I, ","));
  out += fmt::format("J = {{{}}}\n", fmt::join(profile.J, ","));
  const auto orbit = compute_orbit(profile);
  out += fmt::format("orbit: {} elements\n", orbit.size());
  for (const auto& nu : orbit) {
    const auto reduced = delete_pairs(nu, profile);
    out += fmt::format("  {} -> {}  length {}\n", nu.to_string(), reduced.to_string(), grassmannian_length(reduced));
  }
  return out;
}

Outcome produce(const RunConfig& config, std::ostream& err) {
  const SingularityProfile profile = analyze_singularity(config.mu, config.k);
  json top = to_json(profile);

  switch (config.subcommand) {
  case Subcommand::analyze: {
    require_format(config, {Format::ascii, Format::json});
    if (config.format == Format::ascii)
      return {analyze_text(profile)};
    json orbit = json::array();
    for (const auto& nu : compute_orbit(profile)) {
      const auto reduced = delete_pairs(nu, profile);
      orbit.push_back({{"weight", json::array({nu.first, nu.second})},
                       {"reduced", json::array({reduced.first, reduced.second})},
                       {"length", grassmannian_length(reduced)}});
    }
    top["orbit"] = std::move(orbit);
    return {top.dump(2) + "\n"};
  }

  case Subcommand::relative:
  case Subcommand::images: {
    LabeledDiagram labeled = label_diagram(build_relative_hasse(profile));
    if (config.format == Format::json)
      return {emit_json({profile, std::move(labeled), std::nullopt})};
    if (config.subcommand == Subcommand::relative)
      return {config.format == Format::dot ? render_dot(labeled.diagram) : render_ascii(labeled.diagram)};
    return {config.format == Format::dot ? render_dot(labeled) : render_ascii(labeled)};
  }

  case Subcommand::complex:
  case Subcommand::render: {
    LabeledDiagram labeled = label_diagram(build_relative_hasse(profile));
    SingularComplex c = assemble(labeled);
    if (config.format == Format::json)
      return {emit_json({profile, std::move(labeled), std::move(c)})};
    if (config.format == Format::dot)
      return {config.subcommand == Subcommand::render ? render_dot_overlay(c, labeled) : render_dot(c, labeled)};
    if (config.subcommand == Subcommand::render)
      return {render_ascii(labeled.diagram) + render_ascii(c, labeled)};
    return {render_ascii(c, labeled)};
  }

  case Subcommand::oracle: {
    LabeledDiagram labeled = label_diagram(build_relative_hasse(profile));
    SingularComplex c = assemble(labeled);
    RegularDiagram oracle = oracle_diagram(profile);
    VerificationReport report = oracle_check(c, profile);
    const int code = report.ok() ? exit_ok : exit_invariant;
    if (!report.ok())
      dump_failures(report, err);
    if (config.format == Format::json) {
      top["oracle"] = to_json(oracle);
      top["report"] = to_json(report);
      return {top.dump(2) + "\n", code};
    }
    if (config.format == Format::dot)
      return {render_dot(oracle), code};
    return {render_ascii(oracle) + report_text(report), code};
  }

  case Subcommand::check: {
    require_format(config, {Format::ascii, Format::json});
    LabeledDiagram labeled = label_diagram(build_relative_hasse(profile));
    SingularComplex c = assemble(labeled);
    VerificationReport report = verify(labeled, c);
    const int code = report.ok() ? exit_ok : exit_invariant;
    if (!report.ok())
      dump_failures(report, err);
    if (config.format == Format::json) {
      top["report"] = to_json(report);
      return {top.dump(2) + "\n", code};
    }
    return {report_text(report) + summary_line(report) + "\n", code};
  }
  }
  return {};
}

} // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (!config.mu.is_dominant())
      err << "note: mu " << config.mu.to_string() << " sorted to dominant " << config.mu.dominant().to_string()
          << "\n";
    Outcome outcome = produce(config, err);
    if (config.out) {
      std::ofstream file(*config.out);
      if (!file)
        throw input_error(input_errc::invalid_input, fmt::format("cannot open '{}' for writing", *config.out));
      file << outcome.text;
    } else {
      out << outcome.text;
    }
    return outcome.code;
  } catch (const input_error& e) {
    err << "error: " << to_string(e.code()) << ": " << e.what() << "\n";
    return exit_invalid_input;
  } catch (const invariant_violation& e) {
    err << "internal invariant violation: " << e.what() << "\n";
    return exit_invariant;
  }
}

int main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Singular BGG complexes on type-A Grassmannians G(k,n)"};
  app.require_subcommand(1);

  const std::map<std::string, Format> formats{{"ascii", Format::ascii}, {"dot", Format::dot}, {"json", Format::json}};
  struct Options {
    std::string mu;
    int k = 0;
    std::string format;
    std::string out;
  };
  std::map<CLI::App*, std::pair<Subcommand, Options>> commands;

  auto add = [&](Subcommand s, const std::string& help, const std::string& default_format) {
    CLI::App* sub = app.add_subcommand(name_of(s), help);
    auto& [kind, opts] = commands[sub];
    kind = s;
    opts.format = default_format;
    sub->add_option("--mu", opts.mu, "integral weight, comma separated (e.g. 5,5,4,3,2,2,1,0)")->required();
    sub->add_option("--k", opts.k, "Grassmannian dimension, 1 <= k <= n/2")->required();
    sub->add_option("--format", opts.format, "ascii | dot | json")
        ->check(CLI::IsMember({"ascii", "dot", "json"}))
        ->capture_default_str();
    sub->add_option("--out", opts.out, "write to this file instead of standard output");
  };
  add(Subcommand::analyze, "singularity profile and orbit", "ascii");
  add(Subcommand::relative, "relative BGG Hasse diagram", "ascii");
  add(Subcommand::images, "direct-image labels of the relative diagram", "ascii");
  add(Subcommand::complex, "singular BGG complex with jump differentials", "ascii");
  add(Subcommand::oracle, "regular diagram on the non-repeated values and the isomorphism check", "ascii");
  add(Subcommand::check, "run the full invariant suite", "ascii");
  add(Subcommand::render, "relative diagram with the complex overlaid", "dot");

  std::vector<std::string> argv_storage = args;
  std::vector<char*> argv;
  for (auto& a : argv_storage)
    argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0)
      return app.exit(e, out, err);
    err << "error: " << e.what() << "\n";
    return exit_invalid_input;
  }

  for (auto& [sub, entry] : commands) {
    if (!sub->parsed())
      continue;
    const auto& [kind, opts] = entry;
    RunConfig config;
    try {
      config.mu = Weight::parse(opts.mu);
    } catch (const input_error& e) {
      err << "error: " << to_string(e.code()) << ": " << e.what() << "\n";
      return exit_invalid_input;
    }
    config.k = opts.k;
    config.subcommand = kind;
    config.format = formats.at(opts.format);
    if (!opts.out.empty())
      config.out = opts.out;
    return run(config, out, err);
  }
  return exit_invalid_input;
}

} // namespace sbgg::cli

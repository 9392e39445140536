#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "opwin/io.hpp"
#include "opwin/verify.hpp"

namespace {

// OPWIN_THREADS caps the worker count. Suites run the instances sequentially
// in index order either way, so reports do not depend on this value; it is
// validated here so misconfiguration fails loudly.
std::size_t thread_cap() {
  const char* env = std::getenv("OPWIN_THREADS");
  if (env == nullptr || *env == '\0') return 1;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (end == nullptr || *end != '\0' || v < 1)
    throw opwin::domain_error("OPWIN_THREADS must be a positive integer, got '" +
                              std::string(env) + "'");
  return static_cast<std::size_t>(v);
}

struct VerifyArgs {
  std::string suite = "all";
  std::size_t n = 8;
  std::size_t trials = 20;
  std::uint64_t seed = 42;
  std::string out;
  std::string format = "json";
  std::size_t max_n4 = 12;
};

int cmd_verify(const VerifyArgs& args) {
  thread_cap();
  std::vector<std::string> names;
  if (args.suite == "all") {
    for (const auto& s : opwin::registered_suites()) {
      if (opwin::is_heavy_suite(s) && args.n > args.max_n4) {
        std::cout << s << ": skipped (O(N^4) suite capped at N <= " << args.max_n4 << ")\n";
        continue;
      }
      names.push_back(s);
    }
  } else {
    names.push_back(args.suite);
  }

  std::vector<opwin::SuiteReport> reports;
  bool all_pass = true;
  for (const auto& name : names) {
    opwin::SuiteReport rep = opwin::run_suite(name, args.n, args.trials, args.seed, args.max_n4);
    std::size_t fails = 0;
    double worst = 0.0;
    for (const auto& c : rep.checks) {
      if (!c.pass) ++fails;
      worst = std::max(worst, c.residual);
    }
    std::cout << rep.suite << ": n=" << rep.n << " trials=" << rep.trials << " checks="
              << rep.checks.size() << " failed=" << fails << " worst-residual="
              << std::setprecision(3) << worst << (fails == 0 ? " PASS" : " FAIL") << '\n';
    for (const auto& c : rep.checks)
      if (!c.pass)
        std::cout << "  fail: " << c.name << " residual=" << std::setprecision(17)
                  << c.residual << " witness: " << c.witness << '\n';
    all_pass = all_pass && rep.all_pass();
    reports.push_back(std::move(rep));
  }

  std::string body;
  if (args.format == "csv") {
    for (const auto& r : reports) body += r.to_csv();
  } else {
    if (reports.size() == 1) {
      body = reports.front().to_json_string();
    } else {
      nlohmann::ordered_json arr = nlohmann::ordered_json::array();
      for (const auto& r : reports) arr.push_back(r.to_json());
      body = arr.dump(2) + "\n";
    }
  }
  if (!args.out.empty())
    opwin::write_text_file(args.out, body);
  else
    std::cout << body;
  return all_pass ? 0 : 1;
}

struct ComputeArgs {
  std::string in;
  std::string f;
  std::string window;
  std::string window2;
  std::string out;
  std::string format;
  double p = 2.0;
  double q = 2.0;
  double weight_s = 0.0;
};

double parse_exponent(double p) { return p < 0.0 ? opwin::kInfExp : p; }

void emit_field(const opwin::PhaseField& F, const ComputeArgs& args,
                const std::string& default_format) {
  const std::string fmt = args.format.empty() ? default_format : args.format;
  const std::string body =
      fmt == "csv" ? opwin::field_to_csv(F) : opwin::to_json(F).dump(2) + "\n";
  if (!args.out.empty())
    opwin::write_text_file(args.out, body);
  else
    std::cout << body;
}

void emit_scalar(double v, const ComputeArgs& args) {
  std::ostringstream os;
  os << std::setprecision(17) << v << '\n';
  if (!args.out.empty())
    opwin::write_text_file(args.out, os.str());
  else
    std::cout << os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-model time-frequency analysis with operator windows"};
  app.require_subcommand(1);

  VerifyArgs vargs;
  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", vargs.suite, "suite name or 'all'");
  verify->add_option("--N", vargs.n, "group size");
  verify->add_option("--trials", vargs.trials, "instances per suite");
  verify->add_option("--seed", vargs.seed, "PRNG seed");
  verify->add_option("--out", vargs.out, "report output path");
  verify->add_option("--format", vargs.format, "json|csv")
      ->check(CLI::IsMember({"json", "csv"}));
  verify->add_option("--max-n4", vargs.max_n4, "size cap for O(N^4) suites");

  ComputeArgs cargs;
  CLI::App* compute = app.add_subcommand("compute", "evaluate one transform or norm");
  compute->require_subcommand(1);
  auto add_common = [&](CLI::App* c, bool needs_in) {
    auto* o = c->add_option("--in", cargs.in, "primary input file (JSON)");
    if (needs_in) o->required();
    c->add_option("--out", cargs.out, "output path");
    c->add_option("--format", cargs.format, "json|csv")
        ->check(CLI::IsMember({"json", "csv"}));
  };
  CLI::App* c_stft = compute->add_subcommand("stft", "STFT of a signal");
  add_common(c_stft, true);
  c_stft->add_option("--window", cargs.window, "window signal (default Gaussian)");

  CLI::App* c_opstft = compute->add_subcommand(
      "op-stft", "pointwise norms of the operator-window transform");
  add_common(c_opstft, true);
  c_opstft->add_option("--f", cargs.f, "signal file")->required();

  CLI::App* c_bnorm = compute->add_subcommand("b-norm", "B_{p,q}^m norm of an operator");
  add_common(c_bnorm, true);
  c_bnorm->add_option("--p", cargs.p, "inner exponent (negative means infinity)");
  c_bnorm->add_option("--q", cargs.q, "outer exponent (negative means infinity)");
  c_bnorm->add_option("--weight-s", cargs.weight_s, "weight (1+d)^s");

  CLI::App* c_schatten = compute->add_subcommand("schatten", "Schatten p-norm");
  add_common(c_schatten, true);
  c_schatten->add_option("--p", cargs.p, "exponent (negative means infinity)");

  CLI::App* c_cohen = compute->add_subcommand("cohen", "Cohen's class distribution Q_T f");
  add_common(c_cohen, true);
  c_cohen->add_option("--f", cargs.f, "signal file")->required();

  CLI::App* c_localize = compute->add_subcommand("localize", "localization operator matrix");
  add_common(c_localize, true);
  c_localize->add_option("--window", cargs.window, "analysis window (default Gaussian)");
  c_localize->add_option("--window2", cargs.window2, "synthesis window (default Gaussian)");

  CLI::App* c_modnorm = compute->add_subcommand("mod-norm", "modulation norm of a symbol");
  add_common(c_modnorm, true);
  c_modnorm->add_option("--p", cargs.p, "inner exponent (negative means infinity)");
  c_modnorm->add_option("--q", cargs.q, "outer exponent (negative means infinity)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (verify->parsed()) return cmd_verify(vargs);
    thread_cap();
    if (c_stft->parsed()) {
      const opwin::Signal f = opwin::signal_from_json(opwin::read_json_file(cargs.in));
      const opwin::Signal g = cargs.window.empty()
                                  ? opwin::gaussian_window(f.size())
                                  : opwin::signal_from_json(opwin::read_json_file(cargs.window));
      emit_field(opwin::stft(f, g), cargs, "json");
    } else if (c_opstft->parsed()) {
      const opwin::OperatorWindow S =
          opwin::operator_from_json(opwin::read_json_file(cargs.in));
      const opwin::Signal f = opwin::signal_from_json(opwin::read_json_file(cargs.f));
      emit_field(opwin::pointwise_norms(opwin::op_stft(S, f)), cargs, "json");
    } else if (c_bnorm->parsed()) {
      const opwin::OperatorWindow S =
          opwin::operator_from_json(opwin::read_json_file(cargs.in));
      const opwin::Weight m = opwin::weight_polynomial(S.size(), cargs.weight_s);
      emit_scalar(opwin::b_norm(S, parse_exponent(cargs.p), parse_exponent(cargs.q), m),
                  cargs);
    } else if (c_schatten->parsed()) {
      const opwin::OperatorWindow S =
          opwin::operator_from_json(opwin::read_json_file(cargs.in));
      emit_scalar(opwin::schatten_norm(S, parse_exponent(cargs.p)), cargs);
    } else if (c_cohen->parsed()) {
      const opwin::OperatorWindow T =
          opwin::operator_from_json(opwin::read_json_file(cargs.in));
      const opwin::Signal f = opwin::signal_from_json(opwin::read_json_file(cargs.f));
      emit_field(opwin::cohen(T, f), cargs, "csv");
    } else if (c_localize->parsed()) {
      const opwin::PhaseField a = opwin::field_from_json(opwin::read_json_file(cargs.in));
      const std::size_t n = a.group_size();
      const opwin::Signal w1 = cargs.window.empty()
                                   ? opwin::gaussian_window(n)
                                   : opwin::signal_from_json(opwin::read_json_file(cargs.window));
      const opwin::Signal w2 =
          cargs.window2.empty()
              ? opwin::gaussian_window(n)
              : opwin::signal_from_json(opwin::read_json_file(cargs.window2));
      const opwin::OperatorWindow A = opwin::localization(a, w1, w2);
      const std::string body = opwin::to_json(A).dump(2) + "\n";
      if (!cargs.out.empty())
        opwin::write_text_file(cargs.out, body);
      else
        std::cout << body;
    } else if (c_modnorm->parsed()) {
      const opwin::PhaseField a = opwin::field_from_json(opwin::read_json_file(cargs.in));
      emit_scalar(
          opwin::symbol_mod_norm(a, parse_exponent(cargs.p), parse_exponent(cargs.q)), cargs);
    }
  } catch (const opwin::resource_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const opwin::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const opwin::dimension_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

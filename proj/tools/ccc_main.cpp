#include <algorithm>
#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ccc/json_io.hpp"

// Exit codes: 0 success, 1 verified property violated, 2 usage or data error.

namespace {

using namespace ccc;

Residue parse_int(const std::string& text) {
  std::size_t used = 0;
  Residue value = 0;
  try {
    value = std::stoll(text, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("not an integer: \"" + text + '"');
  }
  if (used != text.size())
    throw std::invalid_argument("not an integer: \"" + text + '"');
  return value;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::istringstream in(text);
  std::string part;
  while (std::getline(in, part, sep)) parts.push_back(part);
  return parts;
}

// "2^2,3^2" -> {{2,2},{3,2}}; a bare prime means multiplicity 1.
std::vector<PrimePower> parse_factor_list(const std::string& text) {
  std::vector<PrimePower> factors;
  for (const std::string& part : split(text, ',')) {
    const auto caret = part.find('^');
    if (caret == std::string::npos) {
      factors.push_back({parse_int(part), 1});
    } else {
      factors.push_back(
          {parse_int(part.substr(0, caret)),
           static_cast<int>(parse_int(part.substr(caret + 1)))});
    }
  }
  if (factors.empty())
    throw std::invalid_argument("factor list must not be empty");
  return factors;
}

// "2=1,0" -> block index 2 (1-based) and the payload after '='.
std::pair<std::size_t, std::string> split_assignment(const std::string& text,
                                                     std::size_t block_count) {
  const auto eq = text.find('=');
  if (eq == std::string::npos)
    throw std::invalid_argument("expected INDEX=VALUES, got \"" + text + '"');
  const Residue index = parse_int(text.substr(0, eq));
  if (index < 1 || static_cast<std::size_t>(index) > block_count)
    throw std::invalid_argument("block index outside 1..k in \"" + text + '"');
  return {static_cast<std::size_t>(index - 1), text.substr(eq + 1)};
}

std::string summary_of(const std::string& head, std::size_t k, Eigen::Index m,
                       Eigen::Index l, Residue lambda) {
  std::ostringstream out;
  out << head << "(K=" << k << ",M=" << m << ",L=" << l << ",lambda=" << lambda
      << ")";
  return out.str();
}

// JSON payload to --out (stdout by default); the human summary goes to
// whichever of stdout/stderr the payload does not occupy.
void emit(const std::string& payload, const std::string& out_path,
          const std::string& summary) {
  write_text_file(out_path, payload);
  (out_path == "-" ? std::cerr : std::cout) << summary << '\n';
}

struct GenerateArgs {
  std::optional<Residue> length;
  std::string factors;
  std::optional<Residue> q;
  std::optional<std::uint64_t> seed;
  std::vector<std::string> perms;
  std::vector<std::string> coeffs;
  std::vector<std::string> constants;
  std::string out = "-";
};

int run_generate(const GenerateArgs& args) {
  if (args.length.has_value() == !args.factors.empty())
    throw std::invalid_argument("exactly one of --length and --factors expected");
  std::vector<PrimePower> factors = args.length
                                        ? factorize(*args.length).factors
                                        : parse_factor_list(args.factors);
  std::vector<Residue> primes;
  Residue rad = 1;
  for (const auto& [p, m] : factors) {
    if (std::find(primes.begin(), primes.end(), p) == primes.end()) {
      primes.push_back(p);
      rad *= p;
    }
  }
  const Residue q = args.q.value_or(rad);

  std::vector<FactorSpec> specs = default_factor_specs({factors});
  if (args.seed) randomize_factor_specs(specs, q, *args.seed);
  for (const std::string& text : args.perms) {
    auto [index, payload] = split_assignment(text, specs.size());
    specs[index].permutation.clear();
    for (const std::string& image : split(payload, ','))
      specs[index].permutation.push_back(static_cast<int>(parse_int(image)));
  }
  for (const std::string& text : args.coeffs) {
    auto [index, payload] = split_assignment(text, specs.size());
    specs[index].linear_coeffs.clear();
    for (const std::string& coeff : split(payload, ','))
      specs[index].linear_coeffs.push_back(parse_int(coeff));
  }
  for (const std::string& text : args.constants) {
    auto [index, payload] = split_assignment(text, specs.size());
    specs[index].constant = parse_int(payload);
  }

  const CodeSet set = composite_ccc(specs, q);
  emit(to_json(set).dump(2) + "\n", args.out,
       summary_of("CCC", set.size(), set.code_size(), set.length(),
                  set.lambda));
  return 0;
}

struct VerifyArgs {
  std::string path;
  bool float_mode = false;
  std::uint64_t max_work = kDefaultMaxWork;
  std::string out = "-";
};

int run_verify(const VerifyArgs& args) {
  const CodeSet set = load_code_set(args.path);
  VerifyOptions options;
  options.exact = !args.float_mode;
  options.max_work = args.max_work;
  const VerificationReport report = verify_code_set(set, options);
  emit(to_json(report).dump(2) + "\n", args.out,
       summary_of(std::string(to_string(report.classification)),
                  report.set_size, report.code_size, report.length,
                  report.lambda));
  return report.passed() ? 0 : 1;
}

struct ProfileArgs {
  std::string path;
  Residue mu1 = 0;
  Residue mu2 = 0;
  std::string out = "-";
};

int run_profile(const ProfileArgs& args) {
  const CodeSet set = load_code_set(args.path);
  if (args.mu1 < 0 || args.mu2 < 0)
    throw std::out_of_range("code index outside the set");
  const CorrelationProfile profile =
      codeset_profile(set, static_cast<std::size_t>(args.mu1),
                      static_cast<std::size_t>(args.mu2));
  std::ostringstream csv;
  write_profile_csv(csv, profile);
  write_text_file(args.out, csv.str());
  return 0;
}

struct KronArgs {
  std::string path_a;
  std::string path_b;
  bool verify = false;
  bool float_mode = false;
  std::uint64_t max_work = kDefaultMaxWork;
  std::string out = "-";
};

int run_kron(const KronArgs& args) {
  const CodeSet a = load_code_set(args.path_a);
  const CodeSet b = load_code_set(args.path_b);
  const CodeSet product = kronecker_codesets(a, b);
  std::string head = "CodeSet";
  int status = 0;
  if (args.verify) {
    VerifyOptions options;
    options.exact = !args.float_mode;
    options.max_work = args.max_work;
    const VerificationReport report = verify_code_set(product, options);
    head = std::string(to_string(report.classification));
    status = report.passed() ? 0 : 1;
  }
  emit(to_json(product).dump(2) + "\n", args.out,
       summary_of(head, product.size(), product.code_size(), product.length(),
                  product.lambda));
  return status;
}

int run_factor(Residue length) {
  const Factorization fac = factorize(length);
  std::ostringstream out;
  out << length << " = ";
  for (std::size_t i = 0; i < fac.factors.size(); ++i) {
    if (i > 0) out << " * ";
    out << fac.factors[i].prime;
    if (fac.factors[i].multiplicity > 1)
      out << '^' << fac.factors[i].multiplicity;
  }
  std::cout << out.str() << '\n';
  return 0;
}

struct PsiArgs {
  std::string path;
  std::string out = "-";
};

int run_psi(const PsiArgs& args) {
  const MultivariableFunction f = load_function(args.path);
  const ExponentSequence seq = psi(f);
  nlohmann::ordered_json j;
  j["lambda"] = seq.lambda;
  j["L"] = seq.values.size();
  nlohmann::ordered_json values = nlohmann::ordered_json::array();
  for (Eigen::Index i = 0; i < seq.values.size(); ++i)
    values.push_back(seq.values[i]);
  j["values"] = std::move(values);
  write_text_file(args.out, j.dump(2) + "\n");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Direct synthesis and exact verification of complete complementary "
      "codes of arbitrary length"};
  app.require_subcommand(1);

  GenerateArgs gen;
  CLI::App* generate =
      app.add_subcommand("generate", "Construct a code set for a length");
  generate->add_option("--length", gen.length, "target sequence length");
  generate->add_option("--factors", gen.factors,
                       "explicit prime powers, e.g. 2^2,3^2");
  generate->add_option("--q", gen.q,
                       "value modulus (defaults to the radical of the length)");
  generate->add_option("--seed", gen.seed,
                       "randomize permutations, coefficients and constants");
  generate->add_option("--perm", gen.perms,
                       "variable order for one block, e.g. 2=2,1");
  generate->add_option("--coeffs", gen.coeffs,
                       "linear coefficients for one block, e.g. 1=1,2");
  generate->add_option("--const", gen.constants,
                       "additive constant for one block, e.g. 1=1");
  generate->add_option("--out", gen.out, "output path ('-' for stdout)");

  VerifyArgs ver;
  CLI::App* verify =
      app.add_subcommand("verify", "Check the complementary property of a set");
  verify->add_option("file", ver.path, "code set JSON ('-' for stdin)")
      ->required();
  CLI::Option* vflt = verify->add_flag("--float", ver.float_mode,
                                       "magnitude thresholds instead of exact "
                                       "cyclotomic zero tests");
  verify->add_flag("--exact", "exact zero tests (default)")->excludes(vflt);
  verify->add_option("--max-work", ver.max_work,
                     "refuse jobs above this operation estimate");
  verify->add_option("--out", ver.out, "report path ('-' for stdout)");

  ProfileArgs prof;
  CLI::App* profile =
      app.add_subcommand("profile", "Correlation trace of one code pair");
  profile->add_option("file", prof.path, "code set JSON ('-' for stdin)")
      ->required();
  profile->add_option("mu1", prof.mu1, "first code index")->required();
  profile->add_option("mu2", prof.mu2, "second code index")->required();
  profile->add_option("--out", prof.out, "CSV path ('-' for stdout)");

  KronArgs kron;
  CLI::App* kron_cmd =
      app.add_subcommand("kron", "Kronecker composition of two sets");
  kron_cmd->add_option("file_a", kron.path_a, "left code set JSON")->required();
  kron_cmd->add_option("file_b", kron.path_b, "right code set JSON")
      ->required();
  kron_cmd->add_flag("--verify", kron.verify, "verify the composed set");
  kron_cmd->add_flag("--float", kron.float_mode,
                     "use float thresholds when verifying");
  kron_cmd->add_option("--max-work", kron.max_work,
                       "refuse jobs above this operation estimate");
  kron_cmd->add_option("--out", kron.out, "output path ('-' for stdout)");

  Residue factor_length = 0;
  CLI::App* factor =
      app.add_subcommand("factor", "Canonical factorization of a length");
  factor->add_option("length", factor_length, "length to factor")->required();

  PsiArgs psi_args;
  CLI::App* psi_cmd = app.add_subcommand(
      "psi", "Exponent sequence of a multivariable function");
  psi_cmd->add_option("file", psi_args.path, "function JSON ('-' for stdin)")
      ->required();
  psi_cmd->add_option("--out", psi_args.out, "output path ('-' for stdout)");

  try {
    app.parse(argc, argv);
    if (*generate) return run_generate(gen);
    if (*verify) return run_verify(ver);
    if (*profile) return run_profile(prof);
    if (*kron_cmd) return run_kron(kron);
    if (*factor) return run_factor(factor_length);
    if (*psi_cmd) return run_psi(psi_args);
    throw std::invalid_argument("no subcommand selected");
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}

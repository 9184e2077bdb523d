// brieskorn: classify, compare, verify, enumerate and sample mixed
// Pham-Brieskorn germs. Reports go to stdout as JSON; CSV goes to --out.
//
// Exit codes: 0 success, 1 a verification row failed, 2 usage or input error.

#include "brieskorn/commands.hpp"

#include "CLI11.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>

namespace {

using namespace brieskorn;
using namespace brieskorn::commands;

/// Write to a sibling temporary file, then rename over the target.
void write_atomically(const std::string& path, const std::string& content) {
  const std::filesystem::path target(path);
  std::filesystem::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream os(tmp, std::ios::binary);
    if (!os) throw InputError("cannot write " + tmp.string());
    os << content;
    if (!os.flush()) throw InputError("cannot write " + tmp.string());
  }
  std::filesystem::rename(tmp, target);
}

void emit(Report r) {
  r.timestamp = utc_timestamp();
  std::cout << serialize(r);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Mixed Pham-Brieskorn singularities: classification and numeric checks"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(BRIESKORN_VERSION));

  std::string a_text, b_text, c_text, d_text, mode = "bilip", checks = "cone,beta,ne,conj,mult", out;
  std::uint64_t seed = 1;
  int b_bound = 2;
  std::size_t count = 1000;
  double r_min = 1.0 / 4096, r_max = 1.0;
  bool lenient = false;

  auto* classify = app.add_subcommand("classify", "normal form, submersion flag, multiplicity, weighted type, surface profile");
  classify->add_option("-a", a_text, "a_i, comma separated")->required();
  classify->add_option("-b", b_text, "b_i, comma separated")->required();
  classify->add_flag("--lenient-threshold", lenient, "report the threshold d - r_max + r_min");

  auto* compare = app.add_subcommand("compare", "decide equivalence of two germs");
  compare->add_option("-a", a_text, "first germ a")->required();
  compare->add_option("-b", b_text, "first germ b")->required();
  compare->add_option("-c", c_text, "second germ a")->required();
  compare->add_option("-d", d_text, "second germ b")->required();
  compare->add_option("--mode", mode, "top|bilip|outer|ambient")->capture_default_str();

  auto* verify = app.add_subcommand("verify", "pair symbolic predictions with numeric estimates");
  verify->add_option("-a", a_text, "a_i")->required();
  verify->add_option("-b", b_text, "b_i")->required();
  verify->add_option("--checks", checks, "subset of cone,beta,ne,conj,mult")->capture_default_str();
  verify->add_option("--seed", seed, "random seed (BRIESKORN_SEED overrides)")->capture_default_str();
  verify->add_option("--out", out, "also write the report to this file");

  auto* enumerate = app.add_subcommand("enumerate", "bi-Lipschitz classes of {f_{a,b} : b_i <= bound}");
  enumerate->add_option("-a", a_text, "a_i")->required();
  enumerate->add_option("--b-bound", b_bound, "largest b_i")->capture_default_str();
  enumerate->add_option("--out", out, "CSV of classes");

  auto* sample = app.add_subcommand("sample", "points of the zero set (n = 2)");
  sample->add_option("-a", a_text, "a_i")->required();
  sample->add_option("-b", b_text, "b_i")->required();
  sample->add_option("--count", count, "number of points")->capture_default_str();
  sample->add_option("--r-min", r_min, "smallest radius")->capture_default_str();
  sample->add_option("--r-max", r_max, "largest radius")->capture_default_str();
  sample->add_option("--seed", seed, "random seed (BRIESKORN_SEED overrides)")->capture_default_str();
  sample->add_option("--out", out, "CSV of points x1,y1,x2,y2,radius");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*classify) {
      emit(cmd_classify(make_exponents(parse_exponents(a_text), parse_exponents(b_text)), {lenient}));
    } else if (*compare) {
      emit(cmd_compare(make_exponents(parse_exponents(a_text), parse_exponents(b_text)),
                       make_exponents(parse_exponents(c_text), parse_exponents(d_text)), mode));
    } else if (*verify) {
      VerifyOptions opt;
      opt.checks = CLI::detail::split(checks, ',');
      opt.seed = effective_seed(seed);
      Report r = cmd_verify(make_exponents(parse_exponents(a_text), parse_exponents(b_text)), opt);
      r.timestamp = utc_timestamp();
      if (!out.empty()) write_atomically(out, serialize(r));
      std::cout << serialize(r);
      return r.all_pass() ? 0 : 1;
    } else if (*enumerate) {
      const auto en = cmd_enumerate(parse_exponents(a_text), b_bound);
      if (!out.empty()) write_atomically(out, en.csv);
      emit(en.report);
    } else if (*sample) {
      const auto s = cmd_sample(make_exponents(parse_exponents(a_text), parse_exponents(b_text)), count, r_min,
                                r_max, effective_seed(seed));
      if (!out.empty()) {
        std::ostringstream csv;
        numeric::write_csv(csv, s.cloud);
        write_atomically(out, csv.str());
      }
      emit(s.report);
      return s.report.all_pass() ? 0 : 1;
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

// twistgen: construct a rational function D that gives four twisted
// hyperelliptic curves positive-rank Jacobians simultaneously, and
// check the construction with machine-verifiable certificates.

#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "twistgen/document.hpp"
#include "twistgen/poly_parser.hpp"

using namespace twistgen;

namespace {

constexpr int kExitInvalidInput = 2;
constexpr int kExitVerificationFailed = 3;

std::vector<std::int64_t> parse_int_list(const std::string& text) {
  std::vector<std::int64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stoll(item));
    } catch (const std::exception&) {
      throw InputError("bad integer list entry: '" + item + "'");
    }
  }
  if (out.empty()) throw InputError("empty integer list");
  return out;
}

std::vector<Rat> parse_rat_list(const std::string& text) {
  std::vector<Rat> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(rat_parse(item));
  if (out.empty()) throw InputError("empty rational list");
  return out;
}

std::map<Var, Rat> parse_assignment(const std::string& text) {
  std::map<Var, Rat> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos)
      throw InputError("assignment entries must look like v1=2/3");
    const auto var = var_from_name(item.substr(0, eq));
    if (!var) throw InputError("unknown variable '" + item.substr(0, eq) + "'");
    out[*var] = rat_parse(item.substr(eq + 1));
  }
  if (out.empty()) throw InputError("empty assignment");
  return out;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out_path);
  if (!f) throw InputError("cannot write to " + out_path);
  f << text;
}

int cmd_construct(const std::string& family, const std::string& f_text,
                  const std::string& m_text, const std::string& consts_text,
                  const std::string& base_point_text,
                  const std::string& out_path, bool do_verify,
                  std::uint64_t seed, int samples) {
  FamilyInputs in;
  const auto kind = family_from_name(family);
  if (!kind) throw InputError("unknown family '" + family + "'");
  in.family = *kind;
  if (!f_text.empty()) in.f = parse_poly(f_text);
  in.m = parse_int_list(m_text);
  in.consts = parse_rat_list(consts_text);
  if (!base_point_text.empty()) {
    const auto parts = parse_rat_list(base_point_text);
    if (parts.size() != 2)
      throw InputError("--base-point takes exactly u,y_u");
    in.base_point = {parts[0], parts[1]};
  }
  FamilyDocument doc;
  doc.family = construct_family(in);
  if (do_verify)
    doc.verification = run_verification(doc.family, samples, seed);
  emit(document_to_string(doc), out_path);
  if (doc.verification && !doc.verification->overall())
    return kExitVerificationFailed;
  return 0;
}

/// Reproduces the worked example: f = x^5 + x + 1, m = (5, 9, 13),
/// constants (1, 2, 3). Asserts the published closed forms and aborts
/// with a diff on any mismatch.
int cmd_example(const std::string& out_path) {
  FamilyInputs in;
  in.family = FamilyKind::A;
  in.f = parse_poly("x^5+x+1");
  in.m = {5, 9, 13};
  in.consts = {Rat(1), Rat(2), Rat(3)};
  const TwistFamily fam = construct_A(in);

  std::vector<std::string> diffs;
  const auto expect = [&](bool ok, const std::string& what,
                          const std::string& want, const std::string& got) {
    if (!ok) diffs.push_back(what + ":\n  expected " + want + "\n  got      " + got);
    else std::cerr << "ok: " << what << "\n";
  };

  expect(fam.M == 585, "M", "585", std::to_string(fam.M));
  expect(fam.M_i == std::vector<std::int64_t>{117, 65, 45}, "M_i",
         "(117,65,45)",
         "(" + std::to_string(fam.M_i[0]) + "," + std::to_string(fam.M_i[1]) +
             "," + std::to_string(fam.M_i[2]) + ")");
  expect((fam.M - 1) / 2 == 292, "(M-1)/2", "292",
         std::to_string((fam.M - 1) / 2));
  const std::int64_t v3_exp = 2 * in.m[2] * fam.M;
  expect(v3_exp == 15210, "v3 exponent in the denominator of D (2*m3*M)",
         "15210", std::to_string(v3_exp));
  const std::int64_t v3_y_exp = 2 * in.m[2] * ((fam.M - 1) / 2);
  expect(v3_y_exp == 7592, "v3 exponent in the numerator of y_4 (2*m3*(M-1)/2)",
         "7592", std::to_string(v3_y_exp));

  // published closed forms of w_1, w_2, w_3, assembled term by term
  const auto mono = [](const char* poly) {
    return FactoredRF::from_poly(parse_poly(poly));
  };
  const auto frac = [&](const char* num, const Rat& scale, Var v, int e) {
    return mono(num) * FactoredRF::from_rat(scale) * FactoredRF::variable(v, e);
  };
  const FactoredRF w1d = frac("v3^13", rat_of(3, 4), Var::v2, -9) +
                         (frac("v2^9", rat_of(1, 3), Var::v3, -13) -
                          frac("v2^9*v3^13", Rat(3), Var::v1, -10));
  const FactoredRF w2d = frac("v3^13", Rat(3), Var::v1, -5) +
                         (frac("v1^5", rat_of(1, 3), Var::v3, -13) -
                          frac("v1^5*v3^13", rat_of(3, 4), Var::v2, -18));
  const FactoredRF w3d = frac("v2^9", Rat(3), Var::v1, -5) +
                         (frac("v1^5", rat_of(3, 4), Var::v2, -9) -
                          frac("v1^5*v2^9", rat_of(1, 3), Var::v3, -26));
  expect(fam.w[0] == w1d, "w1 (exact factored form)", w1d.str(),
         fam.w[0].str());
  expect(fam.w[1] == w2d, "w2 (exact factored form)", w2d.str(),
         fam.w[1].str());
  expect(fam.w[2] == w3d, "w3 (exact factored form)", w3d.str(),
         fam.w[2].str());

  // D = (u^5+u+1)^585 (w1^2-1) v1^10 / (v3^15210 (w3^2-9)^585)
  const FactoredRF fu = FactoredRF::from_poly(parse_poly("u^5+u+1"));
  const FactoredRF w1sq = w1d * w1d - FactoredRF::from_rat(Rat(1));
  const FactoredRF w3sq = w3d * w3d - FactoredRF::from_rat(Rat(9));
  const FactoredRF d_display = fu.pow(585) * w1sq *
                               FactoredRF::variable(Var::v1, 10) *
                               FactoredRF::variable(Var::v3, -15210) *
                               w3sq.pow(-585);
  expect(rf_equal(fam.D, d_display, 20, 42), "D matches the displayed form",
         "rf_equal(computed D, displayed D) with 20 samples, seed 42", "false");

  // y_4 = v3^7592 (w3^2-9)^292 / (u^5+u+1)^292
  const FactoredRF y4_display = FactoredRF::variable(Var::v3, 7592) *
                                w3sq.pow(292) * fu.pow(-292);
  expect(rf_equal(fam.points[0].y, y4_display, 20, 42),
         "y-coordinate of P matches the displayed form",
         "rf_equal(computed y_4, displayed y_4) with 20 samples, seed 42",
         "false");

  if (!diffs.empty()) {
    std::cerr << "example reproduction FAILED:\n";
    for (const auto& d : diffs) std::cerr << d << "\n";
    return kExitVerificationFailed;
  }
  FamilyDocument doc;
  doc.family = fam;
  emit(document_to_string(doc), out_path);
  return 0;
}

int cmd_verify(const std::string& path, std::uint64_t seed, int samples) {
  const FamilyDocument doc = document_load(path);
  const VerificationReport report =
      run_verification(doc.family, samples, seed);
  std::cout << report_to_string(report);
  return report.overall() ? 0 : kExitVerificationFailed;
}

int cmd_certify(const std::string& path, const std::string& assign_text,
                std::uint64_t seed) {
  const FamilyDocument doc = document_load(path);
  const auto assignment = parse_assignment(assign_text);
  const VerificationReport report =
      certify_specialization(doc.family, assignment, seed);
  std::cout << report_to_string(report);
  return report.overall() ? 0 : kExitVerificationFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Simultaneous positive-rank twists of tuples of hyperelliptic curves"};
  app.require_subcommand(1);

  std::string family, f_text, m_text, consts_text, base_point_text, out_path;
  bool do_verify = false;
  std::uint64_t seed = 0;
  int samples = 20;

  auto* construct = app.add_subcommand(
      "construct", "Construct a family and emit its JSON document");
  construct->add_option("--family", family, "A | A3 | B | B3 | C")
      ->required();
  construct->add_option("--f", f_text, "polynomial in x, e.g. \"x^5+x+1\"");
  construct->add_option("--m", m_text, "comma list of odd twist degrees")
      ->required();
  construct->add_option("--consts", consts_text, "comma list of constants")
      ->required();
  construct->add_option("--base-point", base_point_text,
                        "u,y_u with y_u^2 = f(u) (families B/B3)");
  construct->add_option("--out", out_path, "output path (default: stdout)");
  construct->add_flag("--verify", do_verify, "run the verification suite");
  construct->add_option("--seed", seed, "RNG seed (default 0)");
  construct->add_option("--samples", samples,
                        "samples per identity test (default 20)");

  auto* example = app.add_subcommand(
      "example", "Reproduce the worked f = x^5+x+1 example exactly");
  example->add_option("--out", out_path, "output path (default: stdout)");

  std::string doc_path, assign_text;
  auto* verify =
      app.add_subcommand("verify", "Re-verify a stored family document");
  verify->add_option("document", doc_path, "path to a family JSON document")
      ->required();
  verify->add_option("--seed", seed, "RNG seed (default 0)");
  verify->add_option("--samples", samples, "samples (default 20)");

  auto* certify = app.add_subcommand(
      "certify", "Certify a family at a rational specialization");
  certify->add_option("document", doc_path, "path to a family JSON document")
      ->required();
  certify
      ->add_option("--assign", assign_text,
                   "assignment, e.g. u=1,v1=1,v2=1,v3=2")
      ->required();
  certify->add_option("--seed", seed, "RNG seed (default 0)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInvalidInput;
  }

  try {
    if (construct->parsed())
      return cmd_construct(family, f_text, m_text, consts_text,
                           base_point_text, out_path, do_verify, seed,
                           samples);
    if (example->parsed()) return cmd_example(out_path);
    if (verify->parsed()) return cmd_verify(doc_path, seed, samples);
    if (certify->parsed()) return cmd_certify(doc_path, assign_text, seed);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const DegenerateError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

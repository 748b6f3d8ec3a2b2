// weylac: command-line front end.
//
//   weylac lacunary check      --set 1,2,4,8 --q 2 [--n 1]
//   weylac lacunary cover      --set 2,3,4,6,8,12,16,24 --q 2 --n 1
//   weylac lacunary condition1 --group u2 --set "(1,2);(2,4)" --q 2 --n 1 --r 1
//   weylac character           --group su2 --weight 2 [--eval 0] [--verify-orthogonality]
//   weylac experiment          configs/lacunary_1248.cfg [--out DIR]
//
// Exit status: 0 when every assertion holds, 1 when one fails, 2 on bad input.

#include "weylac/character.hpp"
#include "weylac/error.hpp"
#include "weylac/experiment.hpp"
#include "weylac/kernels.hpp"
#include "weylac/lacunary.hpp"
#include "weylac/root_system.hpp"
#include "weylac/serialize.hpp"

#include "CLI11.hpp"

#include <cmath>
#include <iostream>
#include <sstream>

using namespace weylac;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    out.push_back(b == std::string::npos ? std::string() : item.substr(b, e - b + 1));
  }
  return out;
}

std::int64_t parse_int(const std::string& s) {
  std::size_t used = 0;
  std::int64_t v = 0;
  try {
    v = std::stoll(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (s.empty() || used != s.size()) throw ParameterError("not an integer: '" + s + "'");
  return v;
}

IntSet parse_int_set(const std::string& text) {
  std::vector<std::int64_t> v;
  for (const auto& s : split(text, ',')) {
    if (!s.empty()) v.push_back(parse_int(s));
  }
  return IntSet(std::move(v));
}

// Natural coordinates; each entry an integer or "p/2".
Weight parse_weight(const std::string& text) {
  std::string body = text;
  if (!body.empty() && body.front() == '(') body.erase(0, 1);
  if (!body.empty() && body.back() == ')') body.pop_back();
  std::vector<std::int64_t> doubled;
  for (const auto& s : split(body, ',')) {
    const Rational r = Rational::parse(s);
    if (r.den() != 1 && r.den() != 2) throw ParameterError("weight coordinates must be integers or halves: " + s);
    doubled.push_back(r.den() == 1 ? 2 * r.num() : r.num());
  }
  if (doubled.empty()) throw ParameterError("empty weight");
  return Weight(std::move(doubled));
}

SpectrumSet parse_weight_set(const RootSystem& rs, const std::string& text) {
  SpectrumSet out(rs.rank);
  for (const auto& s : split(text, ';')) {
    if (s.empty()) continue;
    const Weight w = parse_weight(s);
    if (w.rank() != rs.rank) {
      throw ParameterError("weight " + w.str() + " has rank " + std::to_string(w.rank()) + ", group " +
                           std::string(to_string(rs.group)) + " has rank " + std::to_string(rs.rank));
    }
    out.insert(w);
  }
  return out;
}

Rational parse_q(const std::string& s) {
  const Rational q = Rational::parse(s);
  if (q <= Rational(1)) throw ParameterError("--q must exceed 1, got " + q.str());
  return q;
}

std::string natural_str(const Weight& w) {
  if (w.rank() != 1) return w.str();
  return w[0] % 2 == 0 ? std::to_string(w[0] / 2) : std::to_string(w[0]) + "/2";
}

std::string format_complex(std::complex<double> z) {
  std::ostringstream out;
  out.precision(15);
  if (z.imag() == 0.0) {
    out << z.real();
  } else {
    out << z.real() << (z.imag() < 0 ? " - " : " + ") << std::abs(z.imag()) << "i";
  }
  return out.str();
}

int run_lacunary_check(const std::string& set_text, const std::string& q_text, std::int64_t n) {
  const IntSet set = parse_int_set(set_text);
  const Rational q = parse_q(q_text);
  const bool lac = is_lacunary(set, q, n);
  std::cout << "set: " << set.str() << "\n";
  std::cout << "q: " << q.str() << "  n: " << n << "\n";
  std::cout << "q-thin: " << (is_q_thin(set, q) ? "yes" : "no") << "\n";
  std::cout << "lacunary: " << (lac ? "yes" : "no") << "\n";
  return lac ? kOk : kFailed;
}

int run_lacunary_cover(const std::string& set_text, const std::string& q_text, std::int64_t n) {
  const IntSet set = parse_int_set(set_text);
  const LacunaryCert cert = min_lacunary_cover(set, parse_q(q_text), n);
  std::cout << "parts=" << cert.parts.size() << "\n";
  for (std::size_t i = 0; i < cert.parts.size(); ++i) std::cout << "  part " << i << ": " << cert.parts[i].str() << "\n";
  const bool ok = verify_cert(cert, set);
  if (!ok) std::cerr << "error: cover failed verification\n";
  return ok ? kOk : kFailed;
}

int run_condition1(const std::string& group, const std::string& set_text, const std::string& q_text,
                   std::int64_t n, std::size_t r) {
  const RootSystem rs = build_root_system(group);
  const SpectrumSet e = parse_weight_set(rs, set_text);
  const ConditionReport rep = check_orbit_lacunarity(rs, e, parse_q(q_text), n, r);
  std::cout << "group: " << to_string(rs.group) << "\n";
  std::cout << "orbit size: " << rep.orbit.size() << "\n";
  for (std::size_t j = 0; j < rep.projections.size(); ++j) {
    std::cout << "  axis " << j << ": " << rep.projections[j].str() << "  parts=" << rep.certs[j].parts.size();
    if (!rep.failures[j].empty()) std::cout << "  (" << rep.failures[j] << ")";
    std::cout << "\n";
  }
  std::cout << "condition (1): " << (rep.holds ? "holds" : "fails") << "\n";
  return rep.holds ? kOk : kFailed;
}

int run_character(const std::string& group, const std::string& weight_text, const std::string& eval_text,
                  bool verify) {
  const RootSystem rs = build_root_system(group);
  const Weight lam = parse_weight(weight_text);
  check_rank(rs, lam);
  const Admissibility adm = is_dominant_integral(rs, lam);
  if (!adm.admissible) throw DomainError(adm.reason);

  const LaurentPolynomial chi = character_polynomial(rs, lam);
  std::cout << "exponents:";
  for (const auto& [e, c] : chi.terms()) {
    std::cout << ' ' << natural_str(e);
    if (c != 1) std::cout << '*' << c;
  }
  std::cout << "\n";
  std::cout << "dim: " << weyl_dimension(rs, lam) << "\n";

  int status = kOk;
  if (!eval_text.empty()) {
    std::vector<double> angles;
    for (const auto& s : split(eval_text, ',')) {
      std::size_t used = 0;
      double v = 0.0;
      try {
        v = std::stod(s, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (s.empty() || used != s.size()) throw ParameterError("not a number: '" + s + "'");
      angles.push_back(v);
    }
    if (angles.size() != rs.rank) throw ParameterError("--eval needs " + std::to_string(rs.rank) + " angles");
    std::cout << "value: " << format_complex(character_eval(rs, lam, angles)) << "\n";
  }
  if (verify) {
    std::vector<Weight> ws = dominant_weights(rs, 4);
    if (std::ranges::find(ws, lam) == ws.end()) ws.push_back(lam);
    const Eigen::MatrixXcd gram = weyl_integration_gram(rs, ws);
    const double dev = (gram - Eigen::MatrixXcd::Identity(gram.rows(), gram.cols())).cwiseAbs().maxCoeff();
    const bool ok = dev <= 1e-9;
    std::cout << "orthogonality: " << (ok ? "ok" : "FAILED") << " over " << ws.size()
              << " characters, max deviation " << dev << "\n";
    if (!ok) status = kFailed;
  }
  return status;
}

int run_experiment(const std::string& path, const std::string& out_dir) {
  const ExperimentConfig cfg = ExperimentConfig::load(path);
  const ExperimentReport rep = run_uncertainty_experiment(cfg);
  std::cout << "spectrum: " << IntSet(cfg.spectrum).str() << "\n";
  std::cout << "condition (1) on highest weights: " << (rep.condition.holds ? "holds" : "fails") << "\n";
  std::cout << "condition (1) on torus exponents: " << (rep.exponent_condition.holds ? "holds" : "fails") << "\n";
  std::cout << "F_f terms: " << rep.central_series.size() << "\n";
  std::cout << "Delta+ F_f spectrum size: " << rep.product_spectrum.size() << "\n";
  std::cout << "vanishing boxes: F_f " << rep.central_scan.vanishing_boxes.size() << "/"
            << rep.central_scan.boxes_scanned << ", Delta+ F_f " << rep.product_scan.vanishing_boxes.size() << "/"
            << rep.product_scan.boxes_scanned << ", |f| on G " << rep.group_scan.vanishing_boxes.size() << "/"
            << rep.group_scan.boxes_scanned << "\n";
  for (const auto& a : rep.assertions) {
    std::cout << (a.passed ? "PASS " : "FAIL ") << a.name << ": " << a.detail << "\n";
  }
  const std::string dir = out_dir.empty() ? cfg.output_dir : out_dir;
  if (!dir.empty()) {
    write_report_bundle(rep, dir);
    std::cout << "report: " << (std::filesystem::path(dir) / "report.json").string() << "\n";
  }
  return rep.passed() ? kOk : kFailed;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weyl characters, lacunary spectra and uncertainty experiments on compact groups"};
  app.require_subcommand(1);
  std::string isa = "auto";
  app.add_option("--isa", isa, "kernel set: auto, scalar or avx2")->capture_default_str();

  auto* lac = app.add_subcommand("lacunary", "Hadamard lacunarity of integer sets");
  lac->require_subcommand(1);

  std::string set_text, q_text = "2", group = "su2", weight_text, eval_text, config_path, out_dir;
  std::int64_t cutoff = 1;
  std::size_t parts = 1;
  bool verify = false;

  auto* check = lac->add_subcommand("check", "test whether a set is lacunary");
  check->add_option("--set", set_text, "comma-separated integers")->required();
  check->add_option("--q", q_text, "ratio Q > 1, e.g. 2 or 3/2")->capture_default_str();
  check->add_option("--n", cutoff, "cutoff N >= 1")->capture_default_str();

  auto* cover = lac->add_subcommand("cover", "minimal partition into lacunary sets");
  cover->add_option("--set", set_text, "comma-separated integers")->required();
  cover->add_option("--q", q_text, "ratio Q > 1")->capture_default_str();
  cover->add_option("--n", cutoff, "cutoff N >= 1")->capture_default_str();

  auto* cond = lac->add_subcommand("condition1", "lacunarity of the Weyl orbit of a set of weights");
  cond->add_option("--group", group, "su2, u2, u3 or u4")->capture_default_str();
  cond->add_option("--set", set_text, "weights such as \"(1,2);(2,4)\"")->required();
  cond->add_option("--q", q_text, "ratio Q > 1")->capture_default_str();
  cond->add_option("--n", cutoff, "cutoff N >= 1")->capture_default_str();
  cond->add_option("--r", parts, "allowed parts per axis")->capture_default_str();

  auto* chr = app.add_subcommand("character", "Weyl character of an irreducible representation");
  chr->add_option("--group", group, "su2, u2, u3 or u4")->capture_default_str();
  chr->add_option("--weight", weight_text, "highest weight in natural coordinates")->required();
  chr->add_option("--eval", eval_text, "torus angles at which to evaluate");
  chr->add_flag("--verify-orthogonality", verify, "check the Gram matrix of the first characters");

  auto* exp = app.add_subcommand("experiment", "run an uncertainty experiment from a config file");
  exp->add_option("config", config_path, "key = value config file")->required();
  exp->add_option("--out", out_dir, "directory for report.json and traces");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (isa != "auto") kernels::select(kernels::parse_isa(isa));
    if (*check) return run_lacunary_check(set_text, q_text, cutoff);
    if (*cover) return run_lacunary_cover(set_text, q_text, cutoff);
    if (*cond) return run_condition1(group, set_text, q_text, cutoff, parts);
    if (*chr) return run_character(group, weight_text, eval_text, verify);
    if (*exp) return run_experiment(config_path, out_dir);
  } catch (const ConsistencyError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailed;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

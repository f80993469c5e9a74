#include "cdhom/cli.hpp"

#include <charconv>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <Eigen/Core>

#include "cdhom/basis.hpp"
#include "cdhom/errors.hpp"
#include "cdhom/fixtures.hpp"
#include "cdhom/kernel.hpp"
#include "cdhom/shift_operator.hpp"

namespace cdhom {

namespace {

using ojson = nlohmann::ordered_json;

std::string trim(const std::string &s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos)
    return {};
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

std::optional<double> to_double(const std::string &s) {
  if (s.empty())
    return std::nullopt;
  const char *first = s.data();
  const char *last = s.data() + s.size();
  if (*first == '+')
    ++first;
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last)
    return std::nullopt;
  return v;
}

// Shortest representation that round-trips; empty for NaN.
std::string fmt(double v) {
  if (std::isnan(v))
    return "";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return {buf, res.ptr};
}

std::string format_matrix_csv(const CMatrix &a) {
  std::ostringstream os;
  os << "row,col,re,im\n";
  for (Eigen::Index r = 0; r < a.rows(); ++r)
    for (Eigen::Index c = 0; c < a.cols(); ++c)
      os << r << ',' << c << ',' << fmt(a(r, c).real()) << ','
         << fmt(a(r, c).imag()) << '\n';
  return os.str();
}

ojson environment_json() {
  return ojson{{"tool", "cdhom"},
               {"version", "1.0.0"},
               {"compiler", __VERSION__},
               {"cxx_standard", static_cast<long>(__cplusplus)},
               {"eigen", std::to_string(EIGEN_WORLD_VERSION) + "." +
                             std::to_string(EIGEN_MAJOR_VERSION) + "." +
                             std::to_string(EIGEN_MINOR_VERSION)}};
}

ojson params_json(const ModelParams &p) {
  return ojson{{"lambda", p.lambda()}, {"m", p.m()}, {"mu", p.mu()}};
}

struct Options {
  double lambda = 1.0;
  std::optional<int> m;
  std::string mu;
  int truncation = 60;
  double r_max = 0.5;
  std::vector<std::string> tol;
  std::string format = "json";
  std::string out;
  std::uint64_t seed = 1;
  bool allow_degenerate = false;

  std::string z = "0", w = "0";
  int n_max = 10;
  std::string suite = "all";
};

ModelParams build_params(const Options &o) {
  std::vector<double> mu;
  if (!o.mu.empty()) {
    mu = parse_real_list(o.mu);
    if (o.m && *o.m != static_cast<int>(mu.size()) - 1)
      throw ConfigError("--m " + std::to_string(*o.m) + " does not match --mu (" +
                        std::to_string(mu.size()) + " entries)");
  } else {
    const int m = o.m.value_or(1);
    if (m < 0)
      throw ConfigError("--m must be non-negative");
    mu.assign(static_cast<std::size_t>(m) + 1, 1.0);
  }
  return {o.lambda, mu, o.allow_degenerate ? Degenerate::allow : Degenerate::reject};
}

VerifyConfig build_verify_config(const Options &o) {
  if (o.truncation < 1)
    throw ConfigError("--truncation must be at least 1");
  if (!(o.r_max > 0.0 && o.r_max < 1.0))
    throw ConfigError("--rmax must lie in (0, 1)");
  VerifyConfig c{build_params(o), o.truncation, o.r_max, o.seed, {}};
  for (const auto &item : o.tol) {
    const auto eq = item.find('=');
    if (eq == std::string::npos)
      throw ConfigError("--tol expects <check>=<value>, got '" + item + "'");
    const auto v = to_double(trim(item.substr(eq + 1)));
    if (!v)
      throw ConfigError("--tol: bad value in '" + item + "'");
    c.tolerances[trim(item.substr(0, eq))] = *v;
  }
  return c;
}

void emit(const Options &o, const std::string &text, std::ostream &out) {
  if (o.out.empty()) {
    out << text;
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f)
    throw ConfigError("cannot write " + o.out);
  f << text;
}

std::string dump(const ojson &j) { return j.dump(2) + "\n"; }

int cmd_kernel_eval(const Options &o, std::ostream &out) {
  const ModelParams p = build_params(o);
  const cplx z = parse_complex(o.z);
  const cplx w = parse_complex(o.w);
  const KernelValue K = kernel_full(z, w, p);
  if (o.format == "csv") {
    emit(o, format_matrix_csv(K.matrix), out);
  } else {
    ojson rows = ojson::array();
    for (Eigen::Index r = 0; r < K.matrix.rows(); ++r) {
      ojson row = ojson::array();
      for (Eigen::Index c = 0; c < K.matrix.cols(); ++c)
        row.push_back(complex_json(K.matrix(r, c)));
      rows.push_back(std::move(row));
    }
    emit(o,
         dump(ojson{{"params", params_json(p)},
                    {"z", complex_json(z)},
                    {"w", complex_json(w)},
                    {"matrix", std::move(rows)}}),
         out);
  }
  return exit_pass;
}

int cmd_shift_weights(const Options &o, std::ostream &out) {
  const ModelParams p = build_params(o);
  if (o.n_max < 0)
    throw ConfigError("--nmax must be non-negative");
  std::ostringstream csv;
  csv << "n,row,col,value\n";
  ojson records = ojson::array();
  for (int n = 0; n <= o.n_max; ++n) {
    const RMatrix W = shift_block(n, p);
    for (int r = 0; r <= p.m(); ++r)
      for (int c = 0; c <= p.m(); ++c) {
        csv << n << ',' << r << ',' << c << ',' << fmt(W(r, c)) << '\n';
        records.push_back({{"n", n}, {"row", r}, {"col", c}, {"value", W(r, c)}});
      }
  }
  if (o.format == "csv")
    emit(o, csv.str(), out);
  else
    emit(o, dump(ojson{{"params", params_json(p)}, {"n_max", o.n_max},
                       {"weights", std::move(records)}}),
         out);
  return exit_pass;
}

int cmd_basis_emit(const Options &o, std::ostream &out) {
  const ModelParams p = build_params(o);
  if (o.n_max < 0)
    throw ConfigError("--nmax must be non-negative");
  std::ostringstream csv;
  csv << "n,j,component,power,coefficient\n";
  ojson records = ojson::array();
  for (int n = 0; n <= o.n_max; ++n)
    for (int j = 0; j <= std::min(n, p.m()); ++j) {
      const auto e = e_basis(j, n, p).poly;
      for (int l = j; l <= std::min(n, p.m()); ++l) {
        const double c = e.coeff(n - l, l).real();
        csv << n << ',' << j << ',' << l << ',' << n - l << ',' << fmt(c) << '\n';
        records.push_back({{"n", n}, {"j", j}, {"component", l},
                           {"power", n - l}, {"coefficient", c}});
      }
    }
  if (o.format == "csv")
    emit(o, csv.str(), out);
  else
    emit(o, dump(ojson{{"params", params_json(p)}, {"n_max", o.n_max},
                       {"basis", std::move(records)}}),
         out);
  return exit_pass;
}

int cmd_verify(const Options &o, std::ostream &out) {
  const VerifyConfig config = build_verify_config(o);
  const auto records = run_verification(config, o.suite);
  if (o.format == "csv")
    emit(o, report_csv(records), out);
  else
    emit(o, dump(report_json(config, o.suite, records)), out);
  for (const auto &r : records)
    if (!r.pass)
      return exit_verification_failure;
  return exit_pass;
}

int cmd_fixtures(const Options &o) {
  if (o.out.empty())
    throw ConfigError("fixtures requires --out <directory>");
  write_fixtures(o.out);
  return exit_pass;
}

} // namespace

cplx parse_complex(const std::string &raw) {
  std::string s;
  for (char ch : raw)
    if (ch != ' ')
      s += ch;
  const auto bad = [&] { return ConfigError("cannot parse complex number '" + raw + "'"); };
  if (s.empty())
    throw bad();
  if (s.front() == '(') {
    if (s.back() != ')')
      throw bad();
    const auto comma = s.find(',');
    if (comma == std::string::npos)
      throw bad();
    const auto re = to_double(s.substr(1, comma - 1));
    const auto im = to_double(s.substr(comma + 1, s.size() - comma - 2));
    if (!re || !im)
      throw bad();
    return {*re, *im};
  }
  if (s.back() != 'i' && s.back() != 'j') {
    const auto re = to_double(s);
    if (!re)
      throw bad();
    return {*re, 0.0};
  }
  s.pop_back();
  // Split at the last sign that is not an exponent sign.
  std::size_t split = std::string::npos;
  for (std::size_t k = s.size(); k-- > 1;)
    if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
      split = k;
      break;
    }
  double re = 0.0;
  std::string im_text = s;
  if (split != std::string::npos) {
    const auto r = to_double(s.substr(0, split));
    if (!r)
      throw bad();
    re = *r;
    im_text = s.substr(split);
  }
  if (im_text.empty() || im_text == "+")
    return {re, 1.0};
  if (im_text == "-")
    return {re, -1.0};
  const auto im = to_double(im_text);
  if (!im)
    throw bad();
  return {re, *im};
}

std::vector<double> parse_real_list(const std::string &text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto v = to_double(trim(item));
    if (!v)
      throw ConfigError("cannot parse '" + item + "' in list '" + text + "'");
    out.push_back(*v);
  }
  if (out.empty() || (!text.empty() && text.back() == ','))
    throw ConfigError("malformed list '" + text + "'");
  return out;
}

ojson complex_json(cplx z) { return ojson{{"re", z.real()}, {"im", z.imag()}}; }

ojson report_json(const VerifyConfig &config, const std::string &suite,
                  const std::vector<CheckRecord> &records) {
  ojson tol = ojson::object();
  for (const auto &[k, v] : config.tolerances)
    tol[k] = v;
  ojson checks = ojson::array();
  int passed = 0;
  for (const auto &r : records) {
    passed += r.pass ? 1 : 0;
    checks.push_back({{"name", r.name},
                      {"suite", r.suite},
                      {"parameters", r.parameters},
                      {"residual", r.residual},
                      {"tolerance", r.tolerance},
                      {"pass", r.pass},
                      {"diagnostic", r.diagnostic}});
  }
  const int total = static_cast<int>(records.size());
  return ojson{
      {"report", "cdhom-verification"},
      {"environment", environment_json()},
      {"config",
       {{"lambda", config.params.lambda()},
        {"m", config.params.m()},
        {"mu", config.params.mu()},
        {"truncation", config.truncation},
        {"rmax", config.r_max},
        {"seed", config.seed},
        {"suite", suite},
        {"allow_degenerate", config.params.degenerate_allowed()},
        {"tolerance_overrides", std::move(tol)}}},
      {"checks", std::move(checks)},
      {"summary", {{"total", total}, {"passed", passed}, {"failed", total - passed}}},
      {"pass", passed == total}};
}

std::string report_csv(const std::vector<CheckRecord> &records) {
  std::ostringstream os;
  os << "name,suite,residual,tolerance,pass\n";
  for (const auto &r : records)
    os << r.name << ',' << r.suite << ',' << fmt(r.residual) << ','
       << fmt(r.tolerance) << ',' << (r.pass ? "true" : "false") << '\n';
  return os.str();
}

int run_cli(int argc, char **argv, std::ostream &out, std::ostream &err) {
  Options o;
  CLI::App app{"Homogeneous Cowen-Douglas operators: kernels, shifts, checks"};
  app.name("cdhom");
  app.require_subcommand(1);
  app.fallthrough();

  app.add_option("--lambda", o.lambda, "lambda (2 lambda > m)");
  app.add_option("--m", o.m, "m; mu defaults to all ones");
  app.add_option("--mu", o.mu, "mu_0,...,mu_m");
  app.add_option("--truncation", o.truncation, "truncation degree N")
      ->capture_default_str();
  app.add_option("--rmax", o.r_max, "grid radius")->capture_default_str();
  app.add_option("--tol", o.tol, "<check>=<value> tolerance override");
  app.add_option("--format", o.format, "output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  app.add_option("--out", o.out, "output path (directory for fixtures)");
  app.add_option("--seed", o.seed, "seed for sampled points")->capture_default_str();
  app.add_flag("--allow-degenerate", o.allow_degenerate,
               "accept 2 lambda <= m (negative tests)");

  auto *kernel_eval = app.add_subcommand("kernel-eval", "evaluate K(z, w)");
  kernel_eval->add_option("--z", o.z, "z, e.g. 0.2+0.1i")->capture_default_str();
  kernel_eval->add_option("--w", o.w, "w")->capture_default_str();
  auto *shift_weights = app.add_subcommand("shift-weights", "blocks W(n), n <= nmax");
  shift_weights->add_option("--nmax", o.n_max, "largest n")->capture_default_str();
  auto *basis_emit =
      app.add_subcommand("basis-emit", "coefficients of e^j_{n-j}, n <= nmax");
  basis_emit->add_option("--nmax", o.n_max, "largest n")->capture_default_str();
  auto *verify = app.add_subcommand("verify", "run verification suites");
  verify->add_option("--suite", o.suite, "all|kernel|shift|rep|operator")
      ->check(CLI::IsMember({"all", "kernel", "shift", "rep", "operator"}))
      ->capture_default_str();
  auto *fixtures = app.add_subcommand("fixtures", "write golden tables to --out");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp &e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion &e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError &e) {
    err << "cdhom: " << e.what() << '\n';
    return exit_config_error;
  }

  try {
    if (*kernel_eval)
      return cmd_kernel_eval(o, out);
    if (*shift_weights)
      return cmd_shift_weights(o, out);
    if (*basis_emit)
      return cmd_basis_emit(o, out);
    if (*verify)
      return cmd_verify(o, out);
    if (*fixtures)
      return cmd_fixtures(o);
  } catch (const ConfigError &e) {
    err << "cdhom: config error: " << e.what() << '\n';
    return exit_config_error;
  } catch (const DomainError &e) {
    err << "cdhom: domain error: " << e.what() << '\n';
    return exit_domain_error;
  }
  return exit_config_error;
}

} // namespace cdhom

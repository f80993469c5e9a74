#include "cdhom/fixtures.hpp"

#include <fstream>
#include <vector>

#include "cdhom/errors.hpp"
#include "cdhom/kernel.hpp"
#include "cdhom/transcribed.hpp"

namespace cdhom {

namespace {

using ojson = nlohmann::ordered_json;

constexpr int kNMax = 20;
constexpr std::uint64_t kPointSeed = 20240611;

const std::vector<double> &lambdas_m1() {
  static const std::vector<double> v = {0.75, 1.0, 2.0};
  return v;
}
const std::vector<double> &lambdas_m2() {
  static const std::vector<double> v = {1.25, 1.6, 2.5};
  return v;
}
const std::vector<double> &mu_values() {
  static const std::vector<double> v = {0.5, 1.0, 2.0};
  return v;
}

ojson real_matrix(const RMatrix &a) {
  ojson rows = ojson::array();
  for (Eigen::Index r = 0; r < a.rows(); ++r) {
    ojson row = ojson::array();
    for (Eigen::Index c = 0; c < a.cols(); ++c)
      row.push_back(a(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

ojson complex_value(cplx z) { return ojson{{"re", z.real()}, {"im", z.imag()}}; }

ojson complex_matrix(const CMatrix &a) {
  ojson rows = ojson::array();
  for (Eigen::Index r = 0; r < a.rows(); ++r) {
    ojson row = ojson::array();
    for (Eigen::Index c = 0; c < a.cols(); ++c)
      row.push_back(complex_value(a(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

ojson table(const char *formula, int m, ojson entries) {
  return ojson{{"formula", formula}, {"m", m}, {"entries", std::move(entries)}};
}

std::vector<std::pair<cplx, cplx>> point_pairs() {
  const auto g = SampleGrid::random(20, 0.5, kPointSeed);
  std::vector<std::pair<cplx, cplx>> out;
  for (std::size_t i = 0; i + 1 < g.size(); i += 2)
    out.emplace_back(g.points()[i], g.points()[i + 1]);
  return out;
}

} // namespace

std::map<std::string, ojson> golden_fixtures() {
  std::map<std::string, ojson> out;

  ojson g2 = ojson::array(), g3 = ojson::array();
  for (double lambda : lambdas_m1())
    for (int n = 0; n <= kNMax; ++n)
      g2.push_back({{"lambda", lambda}, {"n", n},
                    {"matrix", real_matrix(transcribed::g2(n, lambda))}});
  for (double lambda : lambdas_m2())
    for (int n = 0; n <= kNMax; ++n)
      g3.push_back({{"lambda", lambda}, {"n", n},
                    {"matrix", real_matrix(transcribed::g3(n, lambda))}});
  out["g2"] = table("G2", 1, std::move(g2));
  out["g3"] = table("G3", 2, std::move(g3));

  ojson w2 = ojson::array(), w3 = ojson::array();
  for (double lambda : lambdas_m1())
    for (double mu1 : mu_values())
      for (int n = 0; n <= kNMax; ++n)
        w2.push_back({{"lambda", lambda}, {"mu", {1.0, mu1}}, {"n", n},
                      {"matrix", real_matrix(transcribed::w2(n, lambda, mu1))}});
  for (double lambda : lambdas_m2())
    for (double mu1 : mu_values())
      for (double mu2 : mu_values())
        for (int n = 0; n <= kNMax; ++n)
          w3.push_back(
              {{"lambda", lambda}, {"mu", {1.0, mu1, mu2}}, {"n", n},
               {"matrix", real_matrix(transcribed::w3(n, lambda, mu1, mu2))}});
  out["w2"] = table("W2", 1, std::move(w2));
  out["w3"] = table("W3", 2, std::move(w3));

  const auto pairs = point_pairs();
  ojson k2 = ojson::array(), k3 = ojson::array();
  for (double lambda : lambdas_m1())
    for (double mu1 : mu_values())
      for (const auto &[z, w] : pairs)
        k2.push_back({{"lambda", lambda}, {"mu", {1.0, mu1}},
                      {"z", complex_value(z)}, {"w", complex_value(w)},
                      {"matrix", complex_matrix(transcribed::k2(z, w, lambda, mu1))}});
  const std::vector<std::pair<double, double>> mu_pairs = {
      {0.7, 1.3}, {1.0, 1.0}, {0.5, 2.0}};
  for (double lambda : lambdas_m2())
    for (const auto &[mu1, mu2] : mu_pairs)
      for (const auto &[z, w] : pairs)
        k3.push_back(
            {{"lambda", lambda}, {"mu", {1.0, mu1, mu2}},
             {"z", complex_value(z)}, {"w", complex_value(w)},
             {"matrix", complex_matrix(transcribed::k3(z, w, lambda, mu1, mu2))}});
  out["k2"] = table("K2", 1, std::move(k2));
  out["k3"] = table("K3", 2, std::move(k3));
  return out;
}

void write_fixtures(const std::filesystem::path &dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec)
    throw ConfigError("fixtures: cannot create " + dir.string() + ": " +
                      ec.message());
  for (const auto &[stem, doc] : golden_fixtures()) {
    const auto path = dir / (stem + ".json");
    std::ofstream f(path, std::ios::binary);
    if (!f)
      throw ConfigError("fixtures: cannot write " + path.string());
    f << doc.dump(1) << '\n';
  }
}

} // namespace cdhom

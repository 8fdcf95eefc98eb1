#include "xnpr/io.hpp"

#include <algorithm>
#include <sstream>

namespace xnpr::io {

Json to_json(const Rational& x) { return to_string(x); }

Json to_json(const Cyclotomic& x) {
  Json coeffs = Json::array();
  for (const auto& c : x.coeffs()) coeffs.push_back(to_string(c));
  return Json{{"n", x.modulus()}, {"coeffs", std::move(coeffs)}};
}

Json to_json(const Mat& m) {
  Json entries = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) entries.push_back(to_string(m(i, j)));
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

Json to_json(const KleinFamily& f) {
  Json m = Json::object();
  for (const auto& [t, e] : f.m) m[std::to_string(t)] = e;
  return Json{{"n", f.n}, {"m", std::move(m)}, {"weight", f.weight()}};
}

Json to_json(const QSeries& s) {
  Json coeffs = Json::array();
  for (const auto& c : s.coeffs) coeffs.push_back(to_string(c));
  return Json{{"denominatorD", s.denominatorD},
              {"leadingExponent", to_string(s.leadingExponent)},
              {"truncationLength", s.truncationLength},
              {"coeffs", std::move(coeffs)}};
}

Json to_json(const ExponentReport& report) {
  Json per = Json::object();
  for (const auto& [label, bound] : report.perComponent) per[to_string(label)] = to_string(bound);
  Json j{{"p", report.p}, {"r", report.r}, {"N", report.N}, {"k", report.k}, {"upper", report.upper.str()}};
  j["lower"] = report.lower ? Json(report.lower->str()) : Json(nullptr);
  j["exact"] = report.exact ? Json(report.exact->str()) : Json(nullptr);
  j["perComponent"] = std::move(per);
  j["cuspFormUpper"] = to_string(report.cuspFormUpper);
  j["edixhovenBound"] = to_string(report.edixhovenBound);
  if (!report.note.empty()) j["note"] = report.note;
  return j;
}

Mat mat_from_json(const Json& j) {
  const auto rows = j.at("rows").get<Eigen::Index>();
  const auto cols = j.at("cols").get<Eigen::Index>();
  const auto& entries = j.at("entries");
  if (rows < 0 || cols < 0 || entries.size() != static_cast<std::size_t>(rows * cols))
    throw std::invalid_argument("entries length must equal rows*cols");
  Mat m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j2 = 0; j2 < cols; ++j2)
      m(i, j2) = parse_rational(entries[static_cast<std::size_t>(i * cols + j2)].get<std::string>());
  return m;
}

Cyclotomic cyclotomic_from_json(const Json& j) {
  const auto n = j.at("n").get<std::int64_t>();
  RationalPoly coeffs;
  for (const auto& c : j.at("coeffs")) coeffs.push_back(parse_rational(c.get<std::string>()));
  if (coeffs.size() != static_cast<std::size_t>(euler_phi(n))) throw std::invalid_argument("coeffs length must be phi(n)");
  return Cyclotomic(n, std::move(coeffs));
}

std::string to_csv(const Mat& m) {
  std::string out;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j) out += ',';
      out += to_string(m(i, j));
    }
    out += '\n';
  }
  return out;
}

std::string to_text(const Mat& m) {
  std::size_t width = 1;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) width = std::max(width, to_string(m(i, j)).size());
  std::ostringstream os;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      const std::string cell = to_string(m(i, j));
      os << std::string(width - cell.size() + (j ? 1 : 0), ' ') << cell;
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace xnpr::io

#pragma once

// JSON and CSV renderings. JSON objects keep insertion order so identical
// inputs give byte-identical output.

#include "xnpr/cyclotomic.hpp"
#include "xnpr/invariants.hpp"
#include "xnpr/klein.hpp"
#include "xnpr/rational.hpp"

#include <json.hpp>

#include <string>

namespace xnpr::io {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& x);
Json to_json(const Cyclotomic& x);
/// {"rows": n, "cols": m, "entries": [row-major Rat strings]}
Json to_json(const Mat& m);
Json to_json(const KleinFamily& f);
Json to_json(const QSeries& s);
Json to_json(const ExponentReport& report);

Mat mat_from_json(const Json& j);
Cyclotomic cyclotomic_from_json(const Json& j);

std::string to_csv(const Mat& m);
/// Right-aligned columns.
std::string to_text(const Mat& m);

}  // namespace xnpr::io

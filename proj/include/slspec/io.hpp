#pragma once

#include "slspec/potential.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace slspec {

/// {"kind":"named","name":"constant","params":[1.0]} or
/// {"kind":"grid","xs":[...],"qs":[...]}. Named potentials accept an optional
/// "offset" member (q + offset).
Potential potential_from_json(const nlohmann::json& j);
nlohmann::json potential_to_json(const Potential& q);

/// Inline JSON text, or a path to a file holding it.
Potential load_potential(const std::string& inline_or_path);

/// Decimal literal or one of "pi", "pi/2", "pi/3", "pi/4", "3pi/4" (also "0").
double parse_angle(const std::string& text);

/// Fixed 15-significant-digit rendering used for every emitted float.
std::string format_double(double v);

/// Plain table: header plus rows of preformatted cells.
struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;

    std::string to_csv() const;
    /// Array of objects keyed by the header.
    nlohmann::json to_json() const;
};

} // namespace slspec

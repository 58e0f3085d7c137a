#include "slspec/io.hpp"

#include "slspec/error.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace slspec {

using nlohmann::json;

Potential potential_from_json(const json& j)
{
    try {
        const std::string kind = j.at("kind").get<std::string>();
        if (kind == "grid") return Potential::grid(j.at("xs").get<std::vector<double>>(), j.at("qs").get<std::vector<double>>());
        if (kind != "named") throw DomainError("potential: unknown kind '" + kind + "'");

        const std::string name = j.at("name").get<std::string>();
        const auto params = j.value("params", std::vector<double>{});
        auto need = [&](std::size_t count) {
            if (params.size() != count)
                throw DomainError("potential: '" + name + "' takes " + std::to_string(count) + " parameter(s)");
        };
        Potential q = Potential::zero();
        if (name == "zero") {
            need(0);
        } else if (name == "constant") {
            need(1);
            q = Potential::constant(params[0]);
        } else if (name == "step") {
            need(2);
            q = Potential::step(params[0], params[1]);
        } else if (name == "smooth-test") {
            q = Potential::smooth_test(params);
        } else {
            throw DomainError("potential: unknown name '" + name + "'");
        }
        const double offset = j.value("offset", 0.0);
        return offset != 0.0 ? q.shifted(offset) : q;
    } catch (const json::exception& e) {
        throw DomainError(std::string("potential: malformed specification: ") + e.what());
    }
}

json potential_to_json(const Potential& q)
{
    json j;
    if (q.kind() == Potential::Kind::Grid) {
        j["kind"] = "grid";
        j["xs"] = q.xs();
        std::vector<double> qs = q.qs();
        for (double& v : qs) v += q.offset();
        j["qs"] = qs;
        return j;
    }
    j["kind"] = "named";
    switch (q.name()) {
    case Potential::Name::Zero: j["name"] = "zero"; break;
    case Potential::Name::Constant: j["name"] = "constant"; break;
    case Potential::Name::Step: j["name"] = "step"; break;
    case Potential::Name::SmoothTest: j["name"] = "smooth-test"; break;
    }
    j["params"] = q.params();
    if (q.offset() != 0.0) j["offset"] = q.offset();
    return j;
}

Potential load_potential(const std::string& inline_or_path)
{
    const auto first = inline_or_path.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && inline_or_path[first] == '{') {
        try {
            return potential_from_json(json::parse(inline_or_path));
        } catch (const json::parse_error& e) {
            throw DomainError(std::string("potential: invalid JSON: ") + e.what());
        }
    }
    std::ifstream in(inline_or_path);
    if (!in) throw DomainError("potential: cannot open '" + inline_or_path + "'");
    try {
        return potential_from_json(json::parse(in));
    } catch (const json::parse_error& e) {
        throw DomainError(std::string("potential: invalid JSON in '") + inline_or_path + "': " + e.what());
    }
}

double parse_angle(const std::string& text)
{
    if (text == "pi") return kPi;
    if (text == "pi/2") return kPi / 2;
    if (text == "pi/3") return kPi / 3;
    if (text == "pi/4") return kPi / 4;
    if (text == "3pi/4") return 3 * kPi / 4;
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(text, &used);
    } catch (const std::exception&) {
        throw DomainError("angle: cannot parse '" + text + "'");
    }
    if (used != text.size()) throw DomainError("angle: cannot parse '" + text + "'");
    return v;
}

std::string format_double(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return buf;
}

std::string Table::to_csv() const
{
    std::ostringstream out;
    for (std::size_t i = 0; i < header.size(); ++i) out << (i ? "," : "") << header[i];
    out << '\n';
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << format_double(row[i]);
        out << '\n';
    }
    return out.str();
}

json Table::to_json() const
{
    json arr = json::array();
    for (const auto& row : rows) {
        json obj = json::object();
        for (std::size_t i = 0; i < header.size() && i < row.size(); ++i) obj[header[i]] = row[i];
        arr.push_back(std::move(obj));
    }
    return arr;
}

} // namespace slspec

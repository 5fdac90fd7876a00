#include "sqb/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "sqb/catalog.hpp"
#include "sqb/errors.hpp"

namespace sqb {

namespace {

using nlohmann::json;

double parse_number(const std::string& s, const std::string& context) {
    double v = 0.0;
    const char* first = s.data();
    const char* last = s.data() + s.size();
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last || !std::isfinite(v))
        throw SchemaError("cannot read '" + s + "' as a number in " + context);
    return v;
}

// Line and column of a byte offset, both 1-based.
std::pair<std::size_t, std::size_t> line_col(const std::string& text, std::size_t offset) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < std::min(offset, text.size()); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

const json& field(const json& obj, const char* name, const std::string& source) {
    const auto it = obj.find(name);
    if (it == obj.end()) throw SchemaError(source + ": missing field '" + name + "'");
    return *it;
}

std::vector<double> number_array(const json& j, const char* name, const std::string& source) {
    if (!j.is_array()) throw SchemaError(source + ": field '" + name + "' must be an array");
    std::vector<double> out;
    out.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i) {
        if (!j[i].is_number())
            throw SchemaError(source + ": " + name + "[" + std::to_string(i) + "] is not a number");
        out.push_back(j[i].get<double>());
    }
    return out;
}

} // namespace

std::vector<double> parse_grid(const std::string& text) {
    const auto c1 = text.find(':');
    if (c1 == std::string::npos) return {parse_number(text, "grid")};
    const auto c2 = text.find(':', c1 + 1);
    if (c2 == std::string::npos || text.find(':', c2 + 1) != std::string::npos)
        throw SchemaError("grid '" + text + "' is not of the form a:b:n");
    const double a = parse_number(text.substr(0, c1), "grid '" + text + "'");
    const double b = parse_number(text.substr(c1 + 1, c2 - c1 - 1), "grid '" + text + "'");
    const double n = parse_number(text.substr(c2 + 1), "grid '" + text + "'");
    if (n < 1 || n != std::floor(n) || n > 1e7) throw SchemaError("grid '" + text + "': count must be a positive integer");
    const auto count = static_cast<std::size_t>(n);
    if (count == 1) return {a};
    std::vector<double> out(count);
    for (std::size_t i = 0; i < count; ++i) out[i] = a + (b - a) * static_cast<double>(i) / static_cast<double>(count - 1);
    out.back() = b;
    return out;
}

SampledFunction parse_sampled_function(const std::string& text, const std::string& source) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        const auto [line, col] = line_col(text, e.byte > 0 ? e.byte - 1 : 0);
        throw SchemaError(source + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " + e.what());
    }
    if (!j.is_object()) throw SchemaError(source + ": top level must be an object");

    const auto& dom = field(j, "domain", source);
    Domain domain;
    if (dom == "half_line")
        domain = Domain::half_line;
    else if (dom == "real_line")
        domain = Domain::real_line;
    else
        throw SchemaError(source + ": field 'domain' must be \"half_line\" or \"real_line\"");

    auto grid = number_array(field(j, "grid", source), "grid", source);
    auto values = number_array(field(j, "values", source), "values", source);

    const auto& dj = field(j, "decay", source);
    if (!dj.is_object()) throw SchemaError(source + ": field 'decay' must be an object");
    const auto& kind = field(dj, "kind", source);
    if (!kind.is_string()) throw SchemaError(source + ": field 'decay.kind' must be a string");
    Decay decay;
    try {
        decay.kind = parse_decay_kind(kind.get<std::string>());
    } catch (const SchemaError& e) {
        throw SchemaError(source + ": decay.kind: " + e.what());
    }
    if (const auto it = dj.find("a"); it != dj.end()) {
        if (!it->is_number()) throw SchemaError(source + ": field 'decay.a' must be a number");
        decay.a = it->get<double>();
    } else if (decay.kind != Decay::Kind::sech_pi) {
        throw SchemaError(source + ": missing field 'decay.a'");
    }

    try {
        return SampledFunction::from_samples(domain, std::move(grid), std::move(values), decay, source);
    } catch (const SchemaError& e) {
        throw SchemaError(source + ": " + e.what());
    }
}

SampledFunction load_sampled_function(const std::string& spec) {
    if (spec.rfind("builtin:", 0) == 0) return catalog_entry(spec).fn;
    std::ifstream in(spec);
    if (!in) throw SchemaError("cannot open '" + spec + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_sampled_function(ss.str(), spec);
}

std::string to_json(Domain domain, const std::vector<double>& grid, const std::vector<double>& values,
                    const Decay& decay) {
    // Written by hand so the numbers carry the same fixed format as the CSV output.
    auto array = [](const std::vector<double>& v) {
        std::string s = "[";
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) s += ", ";
            s += format_number(v[i]);
        }
        return s + "]";
    };
    std::string out = "{\n";
    out += "  \"domain\": \"" + to_string(domain) + "\",\n";
    out += "  \"grid\": " + array(grid) + ",\n";
    out += "  \"values\": " + array(values) + ",\n";
    out += "  \"decay\": {\"kind\": \"" + to_string(decay.kind) + "\", \"a\": " + format_number(decay.a) + "}\n";
    return out + "}\n";
}

std::string format_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.16e", v);
    return buf;
}

} // namespace sqb

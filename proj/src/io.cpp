#include "ecq/io.hpp"

#include <sstream>

namespace ecq {

namespace {

std::string field_text(const FieldValue& value) {
    if (const bool* b = std::get_if<bool>(&value))
        return *b ? "true" : "false";
    if (const long* n = std::get_if<long>(&value))
        return std::to_string(*n);
    return std::get<std::string>(value);
}

void field_into_json(nlohmann::ordered_json& j, const Field& f) {
    if (!f.value)
        return;
    if (const bool* b = std::get_if<bool>(&*f.value))
        j[f.key] = *b;
    else if (const long* n = std::get_if<long>(&*f.value))
        j[f.key] = *n;
    else
        j[f.key] = std::get<std::string>(*f.value);
}

std::string dump(const nlohmann::ordered_json& j) {
    return j.dump(2) + "\n";
}

std::string join(const std::vector<std::string>& cells, char sep) {
    std::string line;
    for (size_t i = 0; i < cells.size(); ++i) {
        if (i)
            line += sep;
        line += cells[i];
    }
    return line;
}

} // namespace

std::optional<OutputFormat> parse_format(std::string_view name) {
    if (name == "json")
        return OutputFormat::Json;
    if (name == "csv")
        return OutputFormat::Csv;
    if (name == "plain")
        return OutputFormat::Plain;
    return std::nullopt;
}

std::string render_record(const std::vector<Field>& fields, OutputFormat format) {
    switch (format) {
    case OutputFormat::Json: {
        nlohmann::ordered_json j = nlohmann::ordered_json::object();
        for (const Field& f : fields)
            field_into_json(j, f);
        return dump(j);
    }
    case OutputFormat::Csv: {
        std::vector<std::string> header, row;
        for (const Field& f : fields) {
            header.push_back(f.key);
            row.push_back(f.value ? field_text(*f.value) : "");
        }
        return join(header, ',') + "\n" + join(row, ',') + "\n";
    }
    case OutputFormat::Plain: {
        std::string out;
        for (const Field& f : fields)
            if (f.value)
                out += f.key + "=" + field_text(*f.value) + "\n";
        return out;
    }
    }
    return {};
}

std::string render_table(const std::vector<std::string>& header,
                         const std::vector<std::vector<std::string>>& rows,
                         OutputFormat format) {
    switch (format) {
    case OutputFormat::Json: {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const std::vector<std::string>& row : rows) {
            nlohmann::ordered_json obj = nlohmann::ordered_json::object();
            for (size_t i = 0; i < header.size(); ++i)
                obj[header[i]] = row[i];
            arr.push_back(std::move(obj));
        }
        return dump(arr);
    }
    case OutputFormat::Csv: {
        std::string out = join(header, ',') + "\n";
        for (const std::vector<std::string>& row : rows)
            out += join(row, ',') + "\n";
        return out;
    }
    case OutputFormat::Plain: {
        std::string out;
        for (const std::vector<std::string>& row : rows)
            out += join(row, ' ') + "\n";
        return out;
    }
    }
    return {};
}

nlohmann::ordered_json to_json(const CurvePoint& pt) {
    return {{"p", pt.p().str()}, {"r", pt.r().str()}};
}

nlohmann::ordered_json to_json(const ConjugateReport& report) {
    nlohmann::ordered_json j;
    j["p_bar"] = report.p_bar.str();
    j["s_squared"] = report.s_squared.str();
    if (report.s)
        j["s"] = report.s->str();
    j["conjugate_rational"] = report.conjugate_is_rational;
    return j;
}

nlohmann::ordered_json to_json(const QuadValue& v) {
    nlohmann::ordered_json j;
    j["square"] = v.square.str();
    if (v.root)
        j["root"] = v.root->str();
    return j;
}

nlohmann::ordered_json to_json(const CuboidData& cd) {
    nlohmann::ordered_json j;
    j["x"] = to_json(cd.x);
    j["y"] = to_json(cd.y);
    j["z"] = to_json(cd.z);
    j["a"] = to_json(cd.a);
    j["b"] = to_json(cd.b);
    j["c"] = to_json(cd.c);
    j["d"] = cd.d.str();
    j["classification"] = std::string(to_string(classify_cuboid(cd)));
    return j;
}

nlohmann::ordered_json to_json(const TheoremReport& report) {
    nlohmann::ordered_json j;
    j["q"] = report.q.str();
    j["height_bound"] = report.height_bound;
    nlohmann::ordered_json points = nlohmann::ordered_json::array();
    for (const auto& [pt, conj] : report.points_found) {
        nlohmann::ordered_json entry = to_json(pt);
        entry.update(to_json(conj));
        points.push_back(std::move(entry));
    }
    j["points_found"] = std::move(points);
    nlohmann::ordered_json degenerate = nlohmann::ordered_json::array();
    for (const CurvePoint& pt : report.degenerate_exceptions)
        degenerate.push_back(to_json(pt));
    j["degenerate_exceptions"] = std::move(degenerate);
    nlohmann::ordered_json counter = nlohmann::ordered_json::array();
    for (const CurvePoint& pt : report.counterexamples)
        counter.push_back(to_json(pt));
    j["counterexamples"] = std::move(counter);
    return j;
}

std::string render_points(const std::vector<CurvePoint>& points, OutputFormat format) {
    if (format == OutputFormat::Json) {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const CurvePoint& pt : points)
            arr.push_back(to_json(pt));
        return dump(arr);
    }
    std::vector<std::vector<std::string>> rows;
    rows.reserve(points.size());
    for (const CurvePoint& pt : points)
        rows.push_back({pt.p().str(), pt.r().str()});
    return render_table({"p", "r"}, rows, format);
}

std::string render_cuboid(const CuboidData& cd, OutputFormat format) {
    if (format == OutputFormat::Json)
        return dump(to_json(cd));
    auto quad_fields = [](const char* name, const QuadValue& v, std::vector<Field>& out) {
        out.push_back({std::string(name) + "_square", v.square.str()});
        out.push_back({std::string(name) + "_root",
                       v.root ? std::optional<FieldValue>(v.root->str()) : std::nullopt});
    };
    std::vector<Field> fields;
    quad_fields("x", cd.x, fields);
    quad_fields("y", cd.y, fields);
    quad_fields("z", cd.z, fields);
    quad_fields("a", cd.a, fields);
    quad_fields("b", cd.b, fields);
    quad_fields("c", cd.c, fields);
    fields.push_back({"d", cd.d.str()});
    fields.push_back({"classification", std::string(to_string(classify_cuboid(cd)))});
    return render_record(fields, format);
}

namespace {

// One row per found point, merged back into canonical candidate order.
std::vector<std::vector<std::string>> theorem_rows(const TheoremReport& report) {
    std::vector<std::vector<std::string>> rows;
    auto point_it = report.points_found.begin();
    auto degen_it = report.degenerate_exceptions.begin();
    while (point_it != report.points_found.end() ||
           degen_it != report.degenerate_exceptions.end()) {
        const bool take_degen =
            degen_it != report.degenerate_exceptions.end() &&
            (point_it == report.points_found.end() ||
             canonical_less(degen_it->p(), point_it->first.p()));
        if (take_degen) {
            rows.push_back({degen_it->p().str(), degen_it->r().str(), "", "", "", "true"});
            ++degen_it;
        } else {
            const auto& [pt, conj] = *point_it;
            rows.push_back({pt.p().str(), pt.r().str(), conj.p_bar.str(), conj.s_squared.str(),
                            conj.conjugate_is_rational ? "true" : "false", "false"});
            ++point_it;
        }
    }
    return rows;
}

} // namespace

std::string render_theorem(const TheoremReport& report, OutputFormat format) {
    switch (format) {
    case OutputFormat::Json:
        return dump(to_json(report));
    case OutputFormat::Csv:
        return render_table({"p", "r", "p_bar", "s_squared", "conjugate_rational", "degenerate"},
                            theorem_rows(report), format);
    case OutputFormat::Plain: {
        std::ostringstream os;
        os << "q=" << report.q << "\n";
        os << "height_bound=" << report.height_bound << "\n";
        os << "points_found=" << report.points_found.size() << "\n";
        os << "degenerate_exceptions=" << report.degenerate_exceptions.size() << "\n";
        os << "counterexamples=" << report.counterexamples.size() << "\n";
        for (const auto& [pt, conj] : report.points_found)
            os << "point " << pt.p() << " " << pt.r() << " " << conj.p_bar << " "
               << conj.s_squared << " " << (conj.conjugate_is_rational ? "true" : "false")
               << "\n";
        for (const CurvePoint& pt : report.degenerate_exceptions)
            os << "degenerate " << pt.p() << " " << pt.r() << "\n";
        for (const CurvePoint& pt : report.counterexamples)
            os << "counterexample " << pt.p() << " " << pt.r() << "\n";
        return os.str();
    }
    }
    return {};
}

} // namespace ecq

#ifndef ECQ_IO_HPP
#define ECQ_IO_HPP

// Machine-readable rendering of results. Rationals always cross this
// boundary as exact strings, never as decimals. Output is deterministic:
// identical inputs render to identical bytes. The elapsed time of a
// sweep is deliberately not part of any document for that reason.

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "ecq/cuboid.hpp"
#include "ecq/search.hpp"

namespace ecq {

enum class OutputFormat { Json, Csv, Plain };

// Returns nullopt for unknown names; valid names: json, csv, plain.
std::optional<OutputFormat> parse_format(std::string_view name);

using FieldValue = std::variant<bool, long, std::string>;

// One key of a flat result record; absent values are omitted in JSON and
// plain output and left empty in CSV.
struct Field {
    std::string key;
    std::optional<FieldValue> value;
};

std::string render_record(const std::vector<Field>& fields, OutputFormat format);

// Tabular results: a header plus uniform rows. CSV prints the header,
// plain output space-separates the cells.
std::string render_table(const std::vector<std::string>& header,
                         const std::vector<std::vector<std::string>>& rows,
                         OutputFormat format);

nlohmann::ordered_json to_json(const CurvePoint& pt);
nlohmann::ordered_json to_json(const ConjugateReport& report);
nlohmann::ordered_json to_json(const QuadValue& v);
nlohmann::ordered_json to_json(const CuboidData& cd);
nlohmann::ordered_json to_json(const TheoremReport& report);

std::string render_points(const std::vector<CurvePoint>& points, OutputFormat format);
std::string render_cuboid(const CuboidData& cd, OutputFormat format);
std::string render_theorem(const TheoremReport& report, OutputFormat format);

} // namespace ecq

#endif

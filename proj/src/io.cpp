#include "mvl/io.hpp"

#include "mvl/errors.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace mvl {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

Rational numeral(const json& value, const std::string& where) {
    if (value.is_string()) {
        try {
            return parse_rational(value.get<std::string>());
        } catch (const ParseError& e) {
            throw ParseError(where + ": " + e.what());
        }
    }
    if (value.is_number_integer()) return Rational(value.get<long long>());
    throw ParseError(where + ": expected a rational numeral string such as \"1/2\"");
}

RationalVector numeral_vector(const json& value, const std::string& where) {
    if (!value.is_array()) throw ParseError(where + ": expected an array of numerals");
    RationalVector out;
    for (std::size_t i = 0; i < value.size(); ++i) out.push_back(numeral(value[i], where));
    return out;
}

std::size_t count_field(const json& value, const std::string& where) {
    if (!value.is_number_integer() || value.get<long long>() < 0) {
        throw ParseError(where + ": expected a nonnegative integer");
    }
    return value.get<std::size_t>();
}

json parse_json(std::string_view text, const char* what) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("malformed ") + what + " JSON: " + e.what());
    }
}

ordered_json numerals(const RationalVector& v) {
    ordered_json out = ordered_json::array();
    for (const auto& x : v) out.push_back(to_string(x));
    return out;
}

std::string trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return std::string(s);
}

std::vector<std::string> split_csv(std::string_view line) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
        auto comma = line.find(',', start);
        fields.push_back(trim(line.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return fields;
}

}  // namespace

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Gate parse_gate_json(std::string_view text) {
    const json doc = parse_json(text, "gate");
    if (!doc.is_object()) throw ParseError("gate JSON must be an object");
    if (!doc.contains("arities") || !doc.contains("output_dim") || !doc.contains("entries")) {
        throw ParseError("gate JSON needs \"arities\", \"output_dim\" and \"entries\"");
    }
    std::vector<std::size_t> arities;
    if (!doc["arities"].is_array()) throw ParseError("\"arities\" must be an array");
    for (const auto& a : doc["arities"]) arities.push_back(count_field(a, "arities"));
    const std::size_t output_dim = count_field(doc["output_dim"], "output_dim");

    std::vector<Gate::Entry> entries;
    if (!doc["entries"].is_array()) throw ParseError("\"entries\" must be an array");
    for (std::size_t i = 0; i < doc["entries"].size(); ++i) {
        const json& e = doc["entries"][i];
        const std::string where = "entries[" + std::to_string(i) + "]";
        if (!e.is_object() || !e.contains("index") || !e.contains("output") || !e["index"].is_array()) {
            throw ParseError(where + ": expected {\"index\": [...], \"output\": [...]}");
        }
        Gate::Entry entry;
        for (const auto& j : e["index"]) entry.index.push_back(count_field(j, where + ".index"));
        entry.output = numeral_vector(e["output"], where + ".output");
        entries.push_back(std::move(entry));
    }

    std::vector<std::vector<std::string>> input_labels;
    if (doc.contains("input_labels")) {
        if (!doc["input_labels"].is_array()) throw ParseError("\"input_labels\" must be an array of arrays");
        for (const auto& block : doc["input_labels"]) {
            if (!block.is_array()) throw ParseError("\"input_labels\" must be an array of arrays");
            std::vector<std::string> labels;
            for (const auto& l : block) {
                if (!l.is_string()) throw ParseError("input labels must be strings");
                labels.push_back(l.get<std::string>());
            }
            input_labels.push_back(std::move(labels));
        }
    }
    std::vector<OutputLabel> output_labels;
    if (doc.contains("output_labels")) {
        if (!doc["output_labels"].is_array()) throw ParseError("\"output_labels\" must be an array");
        for (std::size_t i = 0; i < doc["output_labels"].size(); ++i) {
            const json& l = doc["output_labels"][i];
            const std::string where = "output_labels[" + std::to_string(i) + "]";
            if (!l.is_object() || !l.contains("name") || !l["name"].is_string() || !l.contains("output")) {
                throw ParseError(where + ": expected {\"name\": ..., \"output\": [...]}");
            }
            output_labels.push_back({l["name"].get<std::string>(), numeral_vector(l["output"], where + ".output")});
        }
    }
    return Gate::from_entries(std::move(arities), output_dim, std::move(entries), std::move(input_labels),
                              std::move(output_labels));
}

Gate parse_gate(const std::filesystem::path& path) {
    try {
        return parse_gate_json(read_file(path));
    } catch (const Error& e) {
        // keep the error category, prefix the file name
        const std::string msg = path.string() + ": " + e.what();
        if (dynamic_cast<const ValidationError*>(&e)) throw ValidationError(msg);
        throw ParseError(msg);
    }
}

std::string serialize_gate(const Gate& gate) {
    ordered_json doc;
    doc["arities"] = gate.arities();
    doc["output_dim"] = gate.output_dim();
    if (!gate.input_labels().empty()) doc["input_labels"] = gate.input_labels();
    if (!gate.output_labels().empty()) {
        ordered_json labels = ordered_json::array();
        for (const auto& l : gate.output_labels()) {
            ordered_json item;
            item["name"] = l.name;
            item["output"] = numerals(l.output);
            labels.push_back(std::move(item));
        }
        doc["output_labels"] = std::move(labels);
    }
    ordered_json entries = ordered_json::array();
    for (std::size_t flat = 0; flat < gate.base_point_count(); ++flat) {
        ordered_json item;
        item["index"] = gate.index_of(flat);
        item["output"] = numerals(gate.table()[flat]);
        entries.push_back(std::move(item));
    }
    doc["entries"] = std::move(entries);
    return doc.dump(2) + "\n";
}

std::vector<ExperimentRecord> parse_experiment_csv_text(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;

    // column layout from the header
    std::vector<std::size_t> arities;
    std::size_t output_dim = 0;
    bool have_header = false;
    std::vector<ExperimentRecord> records;

    while (std::getline(in, line)) {
        ++line_no;
        const std::string stripped = trim(line);
        if (stripped.empty() || stripped.front() == '#') continue;
        const auto fields = split_csv(stripped);
        const std::string at = "line " + std::to_string(line_no) + ": ";

        if (!have_header) {
            have_header = true;
            bool in_outputs = false;
            for (const auto& f : fields) {
                if (f.size() >= 2 && f.front() == 'y') {
                    in_outputs = true;
                    std::size_t k = 0;
                    try {
                        k = std::stoul(f.substr(1));
                    } catch (const std::exception&) {
                        throw ParseError(at + "bad output column '" + f + "'");
                    }
                    if (k != output_dim + 1) throw ParseError(at + "output columns must be y1, y2, ... in order");
                    ++output_dim;
                    continue;
                }
                auto underscore = f.find('_');
                if (in_outputs || f.empty() || f.front() != 'b' || underscore == std::string::npos) {
                    throw ParseError(at + "bad column '" + f + "': expected b<i>_<j> columns followed by y<k>");
                }
                std::size_t block = 0;
                std::size_t coord = 0;
                try {
                    block = std::stoul(f.substr(1, underscore - 1));
                    coord = std::stoul(f.substr(underscore + 1));
                } catch (const std::exception&) {
                    throw ParseError(at + "bad column '" + f + "'");
                }
                if (block == arities.size() + 1 && coord == 0) {
                    arities.push_back(1);
                } else if (block == arities.size() && !arities.empty() && coord == arities.back()) {
                    ++arities.back();
                } else {
                    throw ParseError(at + "column '" + f + "' out of order: expected b1_0, b1_1, ..., b2_0, ...");
                }
            }
            if (arities.empty() || output_dim == 0) throw ParseError(at + "header needs b<i>_<j> and y<k> columns");
            continue;
        }

        std::size_t expected = output_dim;
        for (auto a : arities) expected += a;
        if (fields.size() != expected) {
            throw ParseError(at + "expected " + std::to_string(expected) + " fields, found " +
                             std::to_string(fields.size()));
        }
        ExperimentRecord rec;
        std::size_t col = 0;
        try {
            for (std::size_t b = 0; b < arities.size(); ++b) {
                RationalVector coords;
                Rational sum = 0;
                for (std::size_t j = 0; j < arities[b]; ++j) {
                    coords.push_back(parse_rational(fields[col++]));
                    if (coords.back() < 0) throw ParseError("negative barycentric coordinate in block " + std::to_string(b + 1));
                    sum += coords.back();
                }
                if (sum != 1) {
                    throw ParseError("coordinates of block " + std::to_string(b + 1) + " sum to " + to_string(sum) +
                                     ", not 1");
                }
                rec.point.push_back(std::move(coords));
            }
            for (std::size_t d = 0; d < output_dim; ++d) rec.output.push_back(parse_rational(fields[col++]));
        } catch (const ParseError& e) {
            throw ParseError(at + e.what());
        }
        records.push_back(std::move(rec));
    }
    if (!have_header) throw ParseError("experiment CSV is empty");
    return records;
}

std::vector<ExperimentRecord> parse_experiment_csv(const std::filesystem::path& path) {
    try {
        return parse_experiment_csv_text(read_file(path));
    } catch (const ParseError& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
}

ProjectionFamily parse_functionals_json(std::string_view text) {
    json doc = parse_json(text, "functionals");
    if (doc.is_object() && doc.contains("functionals")) doc = doc["functionals"];
    if (!doc.is_array()) throw ParseError("functionals JSON must be an array of numeral arrays");
    std::vector<RationalVector> out;
    for (std::size_t i = 0; i < doc.size(); ++i) {
        out.push_back(numeral_vector(doc[i], "functionals[" + std::to_string(i) + "]"));
    }
    return ProjectionFamily(std::move(out));
}

ProjectionFamily parse_functionals(const std::filesystem::path& path) {
    return parse_functionals_json(read_file(path));
}

}  // namespace mvl

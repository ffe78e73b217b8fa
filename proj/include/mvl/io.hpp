#pragma once

#include "mvl/gate.hpp"
#include "mvl/sensitivity.hpp"

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace mvl {

// Gate JSON:
//   { "arities": [2, 2], "output_dim": 1,
//     "input_labels": [["a0", "a1"], ["b0", "b1"]],             (optional)
//     "output_labels": [{"name": "low", "output": ["0"]}, ...],  (optional)
//     "entries": [{"index": [0, 0], "output": ["1/2"]}, ...] }
// Numerals are strings ("p/q" or decimal); bare JSON integers are accepted on input.
Gate parse_gate_json(std::string_view text);
Gate parse_gate(const std::filesystem::path& path);

// Canonical serialization: fixed key order, two-space indentation, trailing newline.
std::string serialize_gate(const Gate& gate);

// Experiment CSV: a header of columns b<i>_<j> (input i from 1, coordinate j from 0) followed
// by y1..ym, then one record per line. Blank lines and lines starting with '#' are skipped.
std::vector<ExperimentRecord> parse_experiment_csv_text(std::string_view text);
std::vector<ExperimentRecord> parse_experiment_csv(const std::filesystem::path& path);

// Functionals file: a JSON array of numeral arrays, or {"functionals": [...]}.
ProjectionFamily parse_functionals_json(std::string_view text);
ProjectionFamily parse_functionals(const std::filesystem::path& path);

std::string read_file(const std::filesystem::path& path);

}  // namespace mvl

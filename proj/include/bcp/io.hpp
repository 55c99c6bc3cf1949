#pragma once

#include <string>

#include "bcp/bench.hpp"
#include "bcp/model.hpp"

namespace bcp {

// Instance JSON: {"d": <real>, "charts": [{"heights": [h, ...]}, ...]}.
// Heights may be decimal strings (parsed exactly) or numbers (rounded
// half-up to the grid). "d" defaults to 1; heights are normalized by it
// on ingestion. Serialized instances always carry d = 1 and exact decimal
// strings, so a round trip is bit-identical.
Instance instance_from_json_text(const std::string& text);
std::string instance_to_json_text(const Instance& instance);
Instance read_instance_file(const std::string& path);

// Packing JSON: {"start_cell": {"<chart_id>": <cell>, ...}}, cells 1-based.
Packing packing_from_json_text(const std::string& text);
std::string packing_to_json_text(const Packing& packing);
Packing read_packing_file(const std::string& path);

BenchConfig bench_config_from_json_text(const std::string& text);
BenchConfig read_bench_config_file(const std::string& path);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace bcp

#include "bcp/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace bcp {

namespace {

using ordered_json = nlohmann::ordered_json;

Height height_from_json(const ordered_json& value, const std::string& what) {
    if (value.is_string()) return parse_height(value.get<std::string>());
    if (value.is_number_integer()) {
        auto v = value.get<std::int64_t>();
        if (v > 9'000'000'000LL || v < -9'000'000'000LL)
            throw ValidationError(what + ": out of range");
        return v * kUnit;
    }
    if (value.is_number_float()) return height_from_double(value.get<double>());
    throw ValidationError(what + ": expected a number or decimal string");
}

ordered_json parse_json(const std::string& text, const std::string& what) {
    try {
        return ordered_json::parse(text);
    } catch (const std::exception& e) {
        throw ValidationError("bad " + what + " JSON: " + e.what());
    }
}

}  // namespace

Instance instance_from_json_text(const std::string& text) {
    ordered_json j = parse_json(text, "instance");
    if (!j.is_object() || !j.contains("charts") || !j["charts"].is_array())
        throw ValidationError("instance JSON needs a \"charts\" array");

    Instance raw;
    raw.strip_height = j.contains("d") ? height_from_json(j["d"], "d") : kUnit;
    int id = 0;
    for (const auto& chart_json : j["charts"]) {
        if (!chart_json.is_object() || !chart_json.contains("heights") ||
            !chart_json["heights"].is_array())
            throw ValidationError("chart " + std::to_string(id) + ": needs a \"heights\" array");
        BarChart chart;
        chart.id = id;
        for (const auto& h : chart_json["heights"])
            chart.heights.push_back(height_from_json(h, "chart " + std::to_string(id) + " height"));
        raw.charts.push_back(std::move(chart));
        raw.origins.push_back({id});
        ++id;
    }
    return normalize(raw);
}

std::string instance_to_json_text(const Instance& instance) {
    ordered_json j;
    j["d"] = 1;  // heights are stored normalized
    j["charts"] = ordered_json::array();
    for (const auto& chart : instance.charts) {
        ordered_json heights = ordered_json::array();
        for (Height h : chart.heights) heights.push_back(format_height(h));
        j["charts"].push_back({{"heights", heights}});
    }
    return j.dump(2) + "\n";
}

Packing packing_from_json_text(const std::string& text) {
    ordered_json j = parse_json(text, "packing");
    if (!j.is_object() || !j.contains("start_cell") || !j["start_cell"].is_object())
        throw ValidationError("packing JSON needs a \"start_cell\" object");

    Packing packing;
    for (const auto& [key, value] : j["start_cell"].items()) {
        std::size_t used = 0;
        int id = 0;
        try {
            id = std::stoi(key, &used);
        } catch (const std::exception&) {
            throw ValidationError("packing chart id \"" + key + "\" is not an integer");
        }
        if (used != key.size())
            throw ValidationError("packing chart id \"" + key + "\" is not an integer");
        if (!value.is_number_integer())
            throw ValidationError("start cell of chart " + key + " must be an integer");
        int cell = value.get<int>();
        if (cell < 1) throw ValidationError("start cell of chart " + key + " must be >= 1");
        if (packing.start_cell.count(id))
            throw ValidationError("duplicate start for chart " + key);
        packing.start_cell[id] = cell;
    }
    return packing;
}

std::string packing_to_json_text(const Packing& packing) {
    ordered_json cells = ordered_json::object();
    for (const auto& [id, start] : packing.start_cell) cells[std::to_string(id)] = start;
    ordered_json j;
    j["start_cell"] = cells;
    return j.dump(2) + "\n";
}

BenchConfig bench_config_from_json_text(const std::string& text) {
    ordered_json j = parse_json(text, "bench config");
    if (!j.is_object()) throw ValidationError("bench config must be a JSON object");

    BenchConfig config;
    if (j.contains("sizes")) {
        if (!j["sizes"].is_array()) throw ValidationError("bench sizes must be an array");
        config.sizes.clear();
        for (const auto& v : j["sizes"]) config.sizes.push_back(v.get<int>());
    }
    if (j.contains("instances_per_size")) config.instances_per_size = j["instances_per_size"].get<int>();
    if (j.contains("seed")) {
        if (j["seed"].is_string())
            config.seed = std::stoull(j["seed"].get<std::string>());
        else
            config.seed = j["seed"].get<std::uint64_t>();
    }
    if (j.contains("algorithms")) {
        if (!j["algorithms"].is_array()) throw ValidationError("bench algorithms must be an array");
        config.algorithms.clear();
        for (const auto& v : j["algorithms"])
            config.algorithms.push_back(algorithm_from_name(v.get<std::string>()));
    }
    if (j.contains("denominator")) {
        std::string policy = j["denominator"].get<std::string>();
        if (policy == "exact")
            config.denominator = DenominatorPolicy::exact;
        else if (policy == "lower_bound")
            config.denominator = DenominatorPolicy::lower_bound;
        else if (policy == "auto")
            config.denominator = DenominatorPolicy::automatic;
        else
            throw ValidationError("unknown denominator policy: \"" + policy + "\"");
    }
    if (j.contains("exact_time_limit_sec"))
        config.exact_time_limit_sec = j["exact_time_limit_sec"].get<double>();
    if (j.contains("jobs")) config.jobs = j["jobs"].get<int>();
    if (j.contains("lex_key")) {
        std::string key = j["lex_key"].get<std::string>();
        if (key == "first_bar")
            config.lex_key = LexKey::first_bar;
        else if (key == "max_bar")
            config.lex_key = LexKey::max_bar;
        else
            throw ValidationError("unknown lex key: \"" + key + "\"");
    }
    return config;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ValidationError("cannot write " + path);
    out << text;
}

Instance read_instance_file(const std::string& path) {
    return instance_from_json_text(read_text_file(path));
}

Packing read_packing_file(const std::string& path) {
    return packing_from_json_text(read_text_file(path));
}

BenchConfig read_bench_config_file(const std::string& path) {
    return bench_config_from_json_text(read_text_file(path));
}

}  // namespace bcp

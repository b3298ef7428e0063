#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <string>

#include "hornplay/check.hpp"
#include "hornplay/search.hpp"
#include "hornplay/valuation.hpp"

namespace hornplay {

// One line of the generation log.
struct GenerationRecord {
    int generation = 0;
    HeuristicParams champion_params;
    HeuristicParams challenger_params;
    double score_a = 0.0;
    double score_b = 0.0;
    char winner = 'A';
    std::array<int, 2> dataset_sizes{0, 0};
    std::string target_proved = "none";  // "none" | "A" | "B"
    std::uint64_t seed = 0;
};

std::string params_to_json(const HeuristicParams& p);
HeuristicParams params_from_json(const std::string& text);

std::string proof_to_json(const Proof& p);
Proof proof_from_json(const std::string& text);

// Dataset file: one JSON record per line, already in dataset order
// (descending value, ties by goal text).
std::string dataset_to_lines(const ConjectureDataset& ds);
ConjectureDataset dataset_from_lines(const std::string& text);

std::string record_to_json(const GenerationRecord& r);
GenerationRecord record_from_json(const std::string& text);

std::string read_file(const std::filesystem::path& path);

// Write-then-rename so interrupted runs never leave half-written files.
void write_file_atomic(const std::filesystem::path& path, const std::string& content);

}  // namespace hornplay

#include "hornplay/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "hornplay/parse.hpp"
#include "json.hpp"

namespace hornplay {

using json = nlohmann::ordered_json;

namespace {

json params_json(const HeuristicParams& p) {
    return json{{"weights", p.weights}, {"depth_limit", p.depth_limit}};
}

HeuristicParams params_from(const json& j) {
    HeuristicParams p;
    auto w = j.at("weights");
    if (!w.is_array() || w.size() != kFeatureCount)
        throw std::runtime_error("params: weights must be an array of 5 numbers");
    for (int i = 0; i < kFeatureCount; ++i) p.weights[i] = w[i].get<double>();
    p.depth_limit = j.at("depth_limit").get<int>();
    return p;
}

json proof_json(const Proof& p) {
    json binding = json::object();
    for (const auto& [v, t] : p.binding.entries()) binding[v] = format(t);
    json subs = json::array();
    for (const Proof& s : p.subproofs) subs.push_back(proof_json(s));
    return json{{"goal", format(p.goal)},
                {"clause", p.clause_id},
                {"binding", std::move(binding)},
                {"subs", std::move(subs)}};
}

Proof proof_from(const json& j) {
    Proof p;
    p.goal = parse_goal(j.at("goal").get<std::string>());
    p.clause_id = j.at("clause").get<int>();
    for (const auto& [v, t] : j.at("binding").items())
        p.binding.insert_raw(v, parse_term(t.get<std::string>()));
    for (const json& s : j.at("subs")) p.subproofs.push_back(proof_from(s));
    return p;
}

}  // namespace

std::string params_to_json(const HeuristicParams& p) { return params_json(p).dump(); }

HeuristicParams params_from_json(const std::string& text) {
    return params_from(json::parse(text));
}

std::string proof_to_json(const Proof& p) { return proof_json(p).dump(2); }

Proof proof_from_json(const std::string& text) { return proof_from(json::parse(text)); }

std::string dataset_to_lines(const ConjectureDataset& ds) {
    std::string out;
    for (const ScoredConjecture& sc : ds.entries) {
        json j{{"goal", format(sc.goal)},
               {"value", sc.value},
               {"prover", std::string(1, side_tag(sc.prover))},
               {"generation", sc.generation}};
        out += j.dump();
        out += '\n';
    }
    return out;
}

ConjectureDataset dataset_from_lines(const std::string& text) {
    ConjectureDataset ds;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        json j = json::parse(line);
        ScoredConjecture sc;
        sc.goal = parse_goal(j.at("goal").get<std::string>());
        sc.value = j.at("value").get<double>();
        sc.prover = j.at("prover").get<std::string>() == "B" ? Side::B : Side::A;
        sc.generation = j.at("generation").get<int>();
        ds.entries.push_back(std::move(sc));
    }
    if (!ds.entries.empty()) ds.origin = ds.entries.front().prover;
    return ds;
}

std::string record_to_json(const GenerationRecord& r) {
    json j{{"generation", r.generation},
           {"champion_params", params_json(r.champion_params)},
           {"challenger_params", params_json(r.challenger_params)},
           {"score_a", r.score_a},
           {"score_b", r.score_b},
           {"winner", std::string(1, r.winner)},
           {"dataset_sizes", r.dataset_sizes},
           {"target_proved", r.target_proved},
           {"seed", r.seed}};
    return j.dump();
}

GenerationRecord record_from_json(const std::string& text) {
    json j = json::parse(text);
    GenerationRecord r;
    r.generation = j.at("generation").get<int>();
    r.champion_params = params_from(j.at("champion_params"));
    r.challenger_params = params_from(j.at("challenger_params"));
    r.score_a = j.at("score_a").get<double>();
    r.score_b = j.at("score_b").get<double>();
    r.winner = j.at("winner").get<std::string>().at(0);
    r.dataset_sizes = j.at("dataset_sizes").get<std::array<int, 2>>();
    r.target_proved = j.at("target_proved").get<std::string>();
    r.seed = j.at("seed").get<std::uint64_t>();
    return r;
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write " + tmp.string());
        out << content;
    }
    std::filesystem::rename(tmp, path);
}

}  // namespace hornplay

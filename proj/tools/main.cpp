#include <chrono>
#include <filesystem>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "hornplay/arena.hpp"
#include "hornplay/evolution.hpp"
#include "hornplay/io.hpp"
#include "hornplay/parse.hpp"
#include "json.hpp"

namespace fs = std::filesystem;
using namespace hornplay;
using json = nlohmann::ordered_json;

namespace {

// Exit codes: 0 proved/solved/accepted, 1 normal negative outcome,
// 2 usage/config error, 3 malformed input file, 4 integrity error.
enum ExitCode { kOk = 0, kNegative = 1, kUsage = 2, kBadInput = 3, kIntegrity = 4 };

struct BadInput : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct TimeLimitExceeded : std::runtime_error {
    TimeLimitExceeded() : std::runtime_error("wall-clock safety ceiling hit") {}
};

std::string load(const fs::path& path) {
    if (!fs::exists(path)) throw BadInput("no such file: " + path.string());
    return read_file(path);
}

Theory load_theory(const fs::path& path) {
    try {
        return parse_theory(load(path));
    } catch (const ParseError& e) {
        throw BadInput(path.string() + ": " + e.what());
    }
}

Atom load_goal(const std::string& text, const Theory& theory) {
    try {
        return parse_goal(text, &theory);
    } catch (const ParseError& e) {
        throw BadInput(std::string("bad goal: ") + e.what());
    }
}

std::vector<Atom> load_obligations(const fs::path& path, const Theory& theory) {
    std::vector<Atom> out;
    std::istringstream in(load(path));
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto comment = line.find('%');
        if (comment != std::string::npos) line.erase(comment);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        try {
            out.push_back(parse_goal(line, &theory));
        } catch (const ParseError& e) {
            throw BadInput(path.string() + ":" + std::to_string(lineno) + ": " + e.what());
        }
    }
    return out;
}

HeuristicParams load_params(const std::string& path, const HeuristicParams& fallback) {
    if (path.empty()) return fallback;
    try {
        return params_from_json(load(path));
    } catch (const nlohmann::json::exception& e) {
        throw BadInput(path + ": " + e.what());
    } catch (const std::runtime_error& e) {
        throw BadInput(path + ": " + e.what());
    }
}

json match_json(const MatchResult& r) {
    return json{{"score_a", r.score_a},
                {"score_b", r.score_b},
                {"proved_count_a", r.proved_count_a},
                {"proved_count_b", r.proved_count_b},
                {"expansions_a", r.expansions_a},
                {"expansions_b", r.expansions_b},
                {"dataset_a_size", r.dataset_a_size},
                {"dataset_b_size", r.dataset_b_size},
                {"target_proved",
                 r.target_proved_by ? std::string(1, side_tag(*r.target_proved_by)) : "none"},
                {"winner", std::string(1, side_tag(r.winner))}};
}

int cmd_prove(const Theory& theory, const std::string& goal_text,
              const HeuristicParams& params, int budget, const fs::path& out_dir) {
    Atom goal = load_goal(goal_text, theory);
    SearchOutcome outcome = search(theory, goal, params, budget);

    json stats{{"goal", format(goal)},
               {"proved", outcome.root_proved},
               {"expansions_used", outcome.expansions_used},
               {"budget", outcome.budget},
               {"goal_nodes", outcome.tree.goals.size()},
               {"and_nodes", outcome.tree.ands.size()}};
    std::cout << stats.dump(2) << "\n";

    if (!outcome.root_proved) return kNegative;
    Verdict v = check_proof(theory, goal, *outcome.proof);
    if (!v.accepted) throw IntegrityError("emitted proof rejected: " + v.reason);
    write_file_atomic(out_dir / "proof.json", proof_to_json(*outcome.proof) + "\n");
    return kOk;
}

int cmd_check(const Theory& theory, const fs::path& proof_path, const std::string& goal_text) {
    Proof proof;
    try {
        proof = proof_from_json(load(proof_path));
    } catch (const nlohmann::json::exception& e) {
        throw BadInput(proof_path.string() + ": " + e.what());
    } catch (const ParseError& e) {
        throw BadInput(proof_path.string() + ": " + e.what());
    }
    Atom claimed = goal_text.empty() ? proof.goal : load_goal(goal_text, theory);
    Verdict v = check_proof(theory, claimed, proof);
    if (v.accepted) {
        std::cout << "accepted\n";
        return kOk;
    }
    std::cerr << "rejected: " << v.reason << " at path [";
    for (std::size_t i = 0; i < v.path.size(); ++i)
        std::cerr << (i ? "," : "") << v.path[i];
    std::cerr << "]\n";
    return kNegative;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Self-playable theorem-proving game over Horn clauses"};
    app.require_subcommand(1);

    HeuristicParams default_params;
    default_params.depth_limit = 12;

    std::string theory_path, goal_text, target_text, params_path, params_a_path, params_b_path;
    std::string obligations_path, proof_path, out_dir = ".", mode = "self-play";
    std::string pairing_name = "champion-challenger";
    int budget = 1000, generation = 0, max_generations = 50;
    Budgets budgets{1000, 200};
    double gamma = 0.9;
    MutationConfig mcfg;
    bool keep_trivial = false;
    double time_limit = 0.0;

    auto* prove = app.add_subcommand("prove", "Run one search and write the proof if found");
    prove->add_option("--theory", theory_path)->required();
    prove->add_option("--goal", goal_text)->required();
    prove->add_option("--params", params_path);
    prove->add_option("--budget", budget)->check(CLI::NonNegativeNumber);
    prove->add_option("--out", out_dir);

    auto* check = app.add_subcommand("check", "Verify a proof file");
    check->add_option("--theory", theory_path)->required();
    check->add_option("--proof", proof_path)->required();
    check->add_option("--goal", goal_text);

    auto* match = app.add_subcommand("match", "Run one naive or self-play match");
    match->add_option("--theory", theory_path)->required();
    match->add_option("--mode", mode)->check(CLI::IsMember({"naive", "self-play"}));
    match->add_option("--obligations", obligations_path);
    match->add_option("--target", target_text);
    match->add_option("--params-a", params_a_path);
    match->add_option("--params-b", params_b_path);
    match->add_option("--budget", budget)->check(CLI::PositiveNumber);
    match->add_option("--harvest-budget", budgets.harvest_budget)->check(CLI::PositiveNumber);
    match->add_option("--cross-budget", budgets.cross_budget)->check(CLI::PositiveNumber);
    match->add_option("--gamma", gamma);
    match->add_option("--generation", generation)->check(CLI::NonNegativeNumber);
    match->add_flag("--keep-trivial", keep_trivial,
                    "Keep conjectures provable by a single fact");
    match->add_option("--out", out_dir);

    auto* evolve_cmd = app.add_subcommand("evolve", "Mutate the winner until the target falls");
    evolve_cmd->add_option("--theory", theory_path)->required();
    evolve_cmd->add_option("--target", target_text)->required();
    evolve_cmd->add_option("--params", params_path);
    evolve_cmd->add_option("--harvest-budget", budgets.harvest_budget)
        ->check(CLI::PositiveNumber);
    evolve_cmd->add_option("--cross-budget", budgets.cross_budget)->check(CLI::PositiveNumber);
    evolve_cmd->add_option("--gamma", gamma);
    evolve_cmd->add_option("--sigma", mcfg.sigma)->check(CLI::NonNegativeNumber);
    evolve_cmd->add_option("--p-mut", mcfg.p_mut)->check(CLI::Range(0.0, 1.0));
    evolve_cmd->add_option("--depth-step", mcfg.depth_limit_step)->check(CLI::NonNegativeNumber);
    evolve_cmd->add_option("--seed", mcfg.seed);
    evolve_cmd->add_option("--max-generations", max_generations)->check(CLI::NonNegativeNumber);
    evolve_cmd->add_option("--pairing", pairing_name)
        ->check(CLI::IsMember({"champion-challenger", "fresh-pair"}));
    evolve_cmd->add_flag("--keep-trivial", keep_trivial);
    evolve_cmd->add_option("--time-limit", time_limit,
                           "Wall-clock safety ceiling in seconds (0 = off)");
    evolve_cmd->add_option("--out", out_dir);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        fs::create_directories(out_dir);
        Theory theory = load_theory(theory_path);

        if (prove->parsed())
            return cmd_prove(theory, goal_text, load_params(params_path, default_params),
                             budget, out_dir);

        if (check->parsed()) return cmd_check(theory, proof_path, goal_text);

        if (match->parsed()) {
            HeuristicParams pa = load_params(params_a_path, default_params);
            HeuristicParams pb = load_params(params_b_path, default_params);
            if (mode == "naive") {
                if (obligations_path.empty())
                    throw CLI::RequiredError("--obligations (naive mode)");
                std::vector<Atom> obligations = load_obligations(obligations_path, theory);
                MatchResult r = naive_match(theory, obligations, pa, pb, budget);
                write_file_atomic(fs::path(out_dir) / "match.json",
                                  match_json(r).dump(2) + "\n");
            } else {
                if (target_text.empty()) throw CLI::RequiredError("--target (self-play mode)");
                Atom target = load_goal(target_text, theory);
                SelfPlayResult sp = self_play_match(theory, target, pa, pb, budgets, gamma,
                                                    generation, !keep_trivial);
                write_file_atomic(fs::path(out_dir) / "match.json",
                                  match_json(sp.result).dump(2) + "\n");
                write_file_atomic(fs::path(out_dir) / "dataset_a.jsonl",
                                  dataset_to_lines(sp.dataset_a));
                write_file_atomic(fs::path(out_dir) / "dataset_b.jsonl",
                                  dataset_to_lines(sp.dataset_b));
                if (sp.target_proof)
                    write_file_atomic(fs::path(out_dir) / "proof.json",
                                      proof_to_json(*sp.target_proof) + "\n");
            }
            return kOk;
        }

        // evolve
        Atom target = load_goal(target_text, theory);
        HeuristicParams init = load_params(params_path, default_params);
        Pairing pairing = pairing_name == "fresh-pair" ? Pairing::FreshPair
                                                       : Pairing::ChampionChallenger;

        std::string log_lines;
        auto started = std::chrono::steady_clock::now();
        RecordSink sink = [&](const GenerationRecord& rec) {
            log_lines += record_to_json(rec);
            log_lines += '\n';
            if (time_limit > 0.0) {
                std::chrono::duration<double> elapsed =
                    std::chrono::steady_clock::now() - started;
                if (elapsed.count() > time_limit) throw TimeLimitExceeded();
            }
        };

        bool truncated = false;
        EvolutionReport report;
        try {
            report = evolve(theory, target, init, budgets, gamma, mcfg, max_generations,
                            pairing, !keep_trivial, sink);
        } catch (const TimeLimitExceeded&) {
            truncated = true;
        }

        if (truncated) log_lines += "{\"truncated\":true}\n";
        write_file_atomic(fs::path(out_dir) / "generations.jsonl", log_lines);

        bool solved = !truncated && report.outcome == EvolutionOutcome::Solved;
        json rj{{"outcome", truncated   ? "truncated"
                            : solved    ? "solved"
                                        : "exhausted"},
                {"target", format(target)},
                {"seed", mcfg.seed},
                {"solved_generation", truncated ? -1 : report.solved_generation},
                {"generations_run",
                 truncated ? -1 : static_cast<int>(report.generations.size())},
                {"total_expansions", truncated ? -1 : report.total_expansions},
                {"winning_params",
                 json::parse(params_to_json(report.winning_params))}};
        write_file_atomic(fs::path(out_dir) / "report.json", rj.dump(2) + "\n");
        if (solved && report.proof)
            write_file_atomic(fs::path(out_dir) / "proof.json",
                              proof_to_json(*report.proof) + "\n");
        std::cout << rj.dump(2) << "\n";
        return solved ? kOk : kNegative;
    } catch (const CLI::RequiredError& e) {
        std::cerr << "error: missing " << e.what() << "\n";
        return kUsage;
    } catch (const BadInput& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBadInput;
    } catch (const IntegrityError& e) {
        std::cerr << "integrity error: " << e.what() << "\n";
        return kIntegrity;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::logic_error& e) {
        std::cerr << "integrity error: " << e.what() << "\n";
        return kIntegrity;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBadInput;
    }
}

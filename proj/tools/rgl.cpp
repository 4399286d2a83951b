// Command-line front end: evaluate formulas, solve and play comparison games,
// classify subsets, look up table verdicts, compute strategy responses, and
// run sampling experiments.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "rgl/eval.hpp"
#include "rgl/game.hpp"
#include "rgl/graph.hpp"
#include "rgl/oracles.hpp"
#include "rgl/parser.hpp"
#include "rgl/spectrum.hpp"
#include "rgl/strategy.hpp"
#include "rgl/types.hpp"

namespace {

using nlohmann::json;

rgl::Graph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw rgl::SyntaxError("cannot open graph file: " + path);
    return rgl::read_edge_list(in);
}

std::vector<int> parse_indices(const std::string& csv) {
    std::vector<int> out;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        out.push_back(std::stoi(tok));
    }
    return out;
}

rgl::Bitset parse_subset(const rgl::Graph& g, const std::string& csv) {
    rgl::Bitset x(g.n());
    for (int v : parse_indices(csv)) {
        if (v < 0 || v >= g.n()) throw rgl::VertexOutOfRange("subset index out of range");
        x.set(v);
    }
    return x;
}

std::string subset_csv(const rgl::Bitset& x) {
    std::string out;
    for (int v = 0; v < x.capacity(); ++v)
        if (x.test(v)) {
            if (!out.empty()) out += ",";
            out += std::to_string(v);
        }
    return out;
}

// Formulas come either from a file or from "builtin:NAME".
rgl::FormulaPtr load_formula(const std::string& spec) {
    if (spec.rfind("builtin:", 0) == 0)
        return rgl::builtin(rgl::builtin_from_string(spec.substr(8)));
    std::ifstream in(spec);
    if (!in) throw rgl::SyntaxError("cannot open formula file: " + spec);
    std::stringstream buf;
    buf << in.rdbuf();
    return rgl::parse(buf.str());
}

// Sampling targets: "builtin:NAME" oracle, "probe:NAME" probe, or formula file.
rgl::SpectrumTarget load_target(const std::string& spec, const rgl::Rational& alpha) {
    if (spec.rfind("builtin:", 0) == 0)
        return rgl::target_oracle(rgl::builtin_from_string(spec.substr(8)));
    if (spec.rfind("probe:", 0) == 0) return rgl::probe_catalog(spec.substr(6), alpha);
    return rgl::target_formula(load_formula(spec), spec);
}

rgl::GameLogic parse_logic(const std::string& s) {
    if (s == "fo") return rgl::GameLogic::FO;
    if (s == "mso") return rgl::GameLogic::MSO;
    throw rgl::SyntaxError("logic must be fo or mso");
}

rgl::PairType pair_type_from_json(const std::string& text) {
    json j = json::parse(text);
    auto axis = [](char c) {
        if (c == 'D') return rgl::Axis::Dominating;
        if (c == 'C') return rgl::Axis::Common;
        if (c == 'I') return rgl::Axis::Isolated;
        throw rgl::SyntaxError("type letters must be D, C or I");
    };
    auto side = [&](const json& arr) {
        std::set<rgl::VertexType> out;
        for (const auto& e : arr) {
            std::string s = e.get<std::string>();
            if (s.size() != 2) throw rgl::SyntaxError("vertex types are two-letter strings");
            out.insert(rgl::VertexType{axis(s[0]), axis(s[1])});
        }
        return out;
    };
    rgl::PairType pt;
    pt.x_types = side(j.at("x"));
    pt.xbar_types = side(j.at("xbar"));
    std::string sp = j.value("special", "none");
    pt.special = sp == "case1"   ? rgl::SpecialCase::Case1
                 : sp == "case2" ? rgl::SpecialCase::Case2
                                 : rgl::SpecialCase::None;
    return pt;
}

std::string describe_move(const rgl::Move& m) {
    std::string g = m.side == rgl::Side::A ? "left" : "right";
    if (m.is_set) return "set {" + subset_csv(m.subset) + "} in the " + g + " graph";
    return "vertex " + std::to_string(m.vertex) + " in the " + g + " graph";
}

std::string move_log_line(const rgl::Move& m) {
    std::string s = m.side == rgl::Side::A ? "a" : "b";
    if (m.is_set) return "set " + s + " " + subset_csv(m.subset);
    return "vertex " + s + " " + std::to_string(m.vertex);
}

// Parse a human move line: "a 3" / "b 3" for vertices, "sa 0,1" / "sb 2" for
// sets.  Answers (side fixed by the opponent's move) accept a bare index or
// CSV list.
std::optional<rgl::Move> parse_move(const std::string& line, const rgl::GameState& s,
                                    std::optional<rgl::Side> forced_side,
                                    std::optional<bool> forced_kind) {
    std::stringstream ss(line);
    std::string head;
    if (!(ss >> head)) return std::nullopt;
    rgl::Move m;
    std::string payload;
    if (head == "a" || head == "b" || head == "sa" || head == "sb") {
        m.side = (head == "a" || head == "sa") ? rgl::Side::A : rgl::Side::B;
        m.is_set = head[0] == 's';
        if (!(ss >> payload)) return std::nullopt;
    } else {
        if (!forced_side || !forced_kind) return std::nullopt;
        m.side = *forced_side;
        m.is_set = *forced_kind;
        payload = head;
    }
    if (forced_side && m.side != *forced_side) return std::nullopt;
    if (forced_kind && m.is_set != *forced_kind) return std::nullopt;
    const rgl::Graph& g = m.side == rgl::Side::A ? *s.A : *s.B;
    try {
        if (m.is_set) {
            m.subset = parse_subset(g, payload == "-" ? "" : payload);
        } else {
            m.vertex = std::stoi(payload);
            if (m.vertex < 0 || m.vertex >= g.n()) return std::nullopt;
        }
    } catch (...) {
        return std::nullopt;
    }
    return m;
}

int cmd_play(const rgl::Graph& a, const rgl::Graph& b, int rounds, rgl::GameLogic logic,
             bool human_is_spoiler, const std::string& log_path) {
    rgl::GameState s;
    s.A = &a;
    s.B = &b;
    s.logic = logic;
    s.rounds_left = rounds;

    std::ofstream log;
    if (!log_path.empty()) log.open(log_path);
    auto record = [&](const std::string& line) {
        if (log.is_open()) log << line << "\n";
    };
    record("game " + std::string(logic == rgl::GameLogic::FO ? "fo" : "mso") + " rounds " +
           std::to_string(rounds));

    std::cout << "Left graph: " << a.n() << " vertices.  Right graph: " << b.n()
              << " vertices.  " << rounds << " round(s).\n";
    std::cout << "Moves: 'a V' / 'b V' picks vertex V, 'sa LIST' / 'sb LIST' picks a set "
                 "(comma-separated indices)";
    std::cout << (human_is_spoiler ? ".\n" : "; answers may omit the prefix.\n");

    while (s.rounds_left > 0) {
        std::cout << "--- round " << (s.rounds_played() + 1) << " ---\n";
        rgl::Move challenge;
        if (human_is_spoiler) {
            std::string line;
            for (;;) {
                std::cout << "your move> " << std::flush;
                if (!std::getline(std::cin, line)) {
                    std::cout << "\ninput closed; abandoning game\n";
                    return 1;
                }
                auto m = parse_move(line, s, std::nullopt, std::nullopt);
                if (m && (!m->is_set || logic == rgl::GameLogic::MSO)) {
                    challenge = *m;
                    break;
                }
                std::cout << "illegal move, try again\n";
            }
        } else {
            auto m = rgl::winning_spoiler_move(s);
            if (m) {
                challenge = *m;
            } else {
                challenge = rgl::legal_moves(s, rgl::Side::A).front();
            }
            std::cout << "engine picks " << describe_move(challenge) << "\n";
        }
        record("spoiler " + move_log_line(challenge));

        rgl::Move answer;
        rgl::Side other = challenge.side == rgl::Side::A ? rgl::Side::B : rgl::Side::A;
        if (human_is_spoiler) {
            answer = rgl::best_duplicator_response(s, challenge);
            std::cout << "engine answers with " << describe_move(answer) << "\n";
        } else {
            std::string line;
            for (;;) {
                std::cout << "your answer in the " << (other == rgl::Side::A ? "left" : "right")
                          << " graph> " << std::flush;
                if (!std::getline(std::cin, line)) {
                    std::cout << "\ninput closed; abandoning game\n";
                    return 1;
                }
                auto m = parse_move(line, s, other, challenge.is_set);
                if (m) {
                    answer = *m;
                    break;
                }
                std::cout << "illegal answer, try again\n";
            }
        }
        record("duplicator " + move_log_line(answer));
        s = rgl::apply_move(s, challenge, answer);
    }

    bool dup = rgl::duplicator_wins_final(s);
    std::cout << "Winner: " << (dup ? "Duplicator" : "Spoiler") << "\n";
    record(std::string("winner ") + (dup ? "Duplicator" : "Spoiler"));
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Random-graph logic workbench"};
    app.require_subcommand(1);
    std::string format = "text";

    // eval
    auto* eval_cmd = app.add_subcommand("eval", "Evaluate a sentence on a graph");
    std::string eval_graph, eval_formula;
    eval_cmd->add_option("--graph", eval_graph, "edge-list file")->required();
    eval_cmd->add_option("--formula", eval_formula, "formula file or builtin:NAME")->required();
    eval_cmd->add_option("--format", format, "text|json");

    // game solve / game play
    auto* game_cmd = app.add_subcommand("game", "Comparison games");
    game_cmd->require_subcommand(1);
    std::string g_left, g_right, g_logic = "fo", g_role = "spoiler", g_log;
    int g_rounds = 1;
    auto* solve_cmd = game_cmd->add_subcommand("solve", "Solve a game exactly");
    auto* play_cmd = game_cmd->add_subcommand("play", "Play against the engine");
    for (auto* c : {solve_cmd, play_cmd}) {
        c->add_option("--left", g_left, "edge-list file")->required();
        c->add_option("--right", g_right, "edge-list file")->required();
        c->add_option("--rounds", g_rounds, "number of rounds")->required();
        c->add_option("--logic", g_logic, "fo|mso");
    }
    solve_cmd->add_option("--format", format, "text|json");
    play_cmd->add_option("--role", g_role, "spoiler|duplicator");
    play_cmd->add_option("--log", g_log, "transcript file");

    // classify
    auto* classify_cmd = app.add_subcommand("classify", "Pair type of a subset");
    std::string c_graph, c_subset;
    classify_cmd->add_option("--graph", c_graph, "edge-list file")->required();
    classify_cmd->add_option("--subset", c_subset, "comma-separated indices")->required();
    classify_cmd->add_option("--format", format, "text|json");

    // table
    auto* table_cmd = app.add_subcommand("table", "Look up a pair type verdict");
    std::string t_pairtype, t_alpha;
    table_cmd->add_option("--pairtype", t_pairtype, "pair type as JSON")->required();
    table_cmd->add_option("--alpha", t_alpha, "exact fraction A/B")->required();
    table_cmd->add_option("--format", format, "text|json");

    // strategy respond-set
    auto* strat_cmd = app.add_subcommand("strategy", "Strategy responses");
    strat_cmd->require_subcommand(1);
    auto* respond_cmd = strat_cmd->add_subcommand("respond-set", "Answer a set move");
    std::string s_left, s_right, s_subset;
    respond_cmd->add_option("--left", s_left, "source graph file")->required();
    respond_cmd->add_option("--right", s_right, "host graph file")->required();
    respond_cmd->add_option("--subset", s_subset, "chosen set, comma-separated")->required();
    respond_cmd->add_option("--format", format, "text|json");

    // sample / sweep
    std::string sp_alpha = "1/2", sp_alphas, sp_ns, sp_targets, sp_target;
    int sp_n = 100;
    long long sp_trials = 1000;
    std::uint64_t sp_seed = 0;
    auto* sample_cmd = app.add_subcommand("sample", "Estimate one target frequency");
    sample_cmd->add_option("--target", sp_target, "builtin:NAME, probe:NAME or formula file")
        ->required();
    sample_cmd->add_option("--alpha", sp_alpha, "exact fraction A/B");
    sample_cmd->add_option("--n", sp_n, "graph size");
    sample_cmd->add_option("--trials", sp_trials, "number of samples");
    sample_cmd->add_option("--seed", sp_seed, "random seed");
    sample_cmd->add_option("--format", format, "text|json|csv");

    auto* sweep_cmd = app.add_subcommand("sweep", "Cross-product of targets, alphas, sizes");
    sweep_cmd->add_option("--targets", sp_targets, "comma-separated target specs")->required();
    sweep_cmd->add_option("--alphas", sp_alphas, "comma-separated fractions")->required();
    sweep_cmd->add_option("--ns", sp_ns, "comma-separated graph sizes")->required();
    sweep_cmd->add_option("--trials", sp_trials, "samples per cell");
    sweep_cmd->add_option("--seed", sp_seed, "random seed");
    sweep_cmd->add_option("--format", format, "text|json|csv");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (eval_cmd->parsed()) {
            rgl::Graph g = load_graph(eval_graph);
            bool r = rgl::eval_sentence(g, load_formula(eval_formula));
            if (format == "json")
                std::cout << "{\"result\":" << (r ? "true" : "false") << "}\n";
            else
                std::cout << (r ? "true" : "false") << "\n";
        } else if (solve_cmd->parsed()) {
            rgl::Graph a = load_graph(g_left), b = load_graph(g_right);
            rgl::Winner w = rgl::solve(a, b, g_rounds, parse_logic(g_logic));
            std::string name = w == rgl::Winner::Spoiler ? "Spoiler" : "Duplicator";
            if (format == "json")
                std::cout << "{\"winner\":\"" << name << "\"}\n";
            else
                std::cout << name << "\n";
        } else if (play_cmd->parsed()) {
            if (g_role != "spoiler" && g_role != "duplicator")
                throw rgl::SyntaxError("role must be spoiler or duplicator");
            rgl::Graph a = load_graph(g_left), b = load_graph(g_right);
            return cmd_play(a, b, g_rounds, parse_logic(g_logic), g_role == "spoiler", g_log);
        } else if (classify_cmd->parsed()) {
            rgl::Graph g = load_graph(c_graph);
            rgl::PairType pt = rgl::pair_type(g, parse_subset(g, c_subset));
            if (format == "json") {
                std::cout << rgl::pair_type_json(pt) << "\n";
            } else {
                auto show = [](const std::set<rgl::VertexType>& ts) {
                    std::string out;
                    for (const auto& t : ts) out += (out.empty() ? "" : " ") + type_string(t);
                    return out;
                };
                std::cout << "inside:  " << show(pt.x_types) << "\n";
                std::cout << "outside: " << show(pt.xbar_types) << "\n";
                std::cout << "special: "
                          << (pt.special == rgl::SpecialCase::None     ? "none"
                              : pt.special == rgl::SpecialCase::Case1 ? "case1"
                                                                      : "case2")
                          << "\n";
            }
        } else if (table_cmd->parsed()) {
            rgl::PairType pt = pair_type_from_json(t_pairtype);
            rgl::TableVerdict v = rgl::table_lookup(pt, rgl::parse_rational(t_alpha));
            std::string name = v == rgl::TableVerdict::AasPresent  ? "AasPresent"
                               : v == rgl::TableVerdict::AasAbsent ? "AasAbsent"
                                                                   : "NotListed";
            if (format == "json")
                std::cout << "{\"verdict\":\"" << name << "\"}\n";
            else
                std::cout << name << "\n";
        } else if (respond_cmd->parsed()) {
            rgl::Graph g = load_graph(s_left), h = load_graph(s_right);
            rgl::Bitset x = parse_subset(g, s_subset);
            auto plan = rgl::mso_set_plan(g, x);
            rgl::Bitset y = rgl::mso_respond_set(g, h, x);
            if (format == "json") {
                std::cout << "{\"y\":[" << subset_csv(y) << "],\"plan\":"
                          << (plan ? rgl::plan_json(*plan) : "null") << "}\n";
            } else {
                std::cout << "response: {" << subset_csv(y) << "}\n";
                if (plan) std::cout << "plan: " << rgl::plan_json(*plan) << "\n";
            }
        } else if (sample_cmd->parsed()) {
            rgl::Rational alpha = rgl::parse_rational(sp_alpha);
            rgl::SpectrumTarget target = load_target(sp_target, alpha);
            auto est = rgl::estimate(target, alpha, sp_n, sp_trials, sp_seed);
            rgl::SweepReport one;
            one.rows.push_back(est);
            if (format == "json") {
                std::cout << one.to_json() << "\n";
            } else if (format == "csv") {
                std::cout << one.to_csv();
            } else {
                char buf[160];
                std::snprintf(buf, sizeof buf,
                              "%s: p_hat=%.6f  ci=[%.6f, %.6f]  (%lld/%lld trials)",
                              est.target.c_str(), est.p_hat(), est.ci_low, est.ci_high,
                              est.successes, est.trials);
                std::cout << buf << "\n";
            }
        } else if (sweep_cmd->parsed()) {
            std::vector<rgl::Rational> alphas;
            {
                std::stringstream ss(sp_alphas);
                std::string tok;
                while (std::getline(ss, tok, ','))
                    if (!tok.empty()) alphas.push_back(rgl::parse_rational(tok));
            }
            std::vector<rgl::SpectrumTarget> targets;
            {
                std::stringstream ss(sp_targets);
                std::string tok;
                while (std::getline(ss, tok, ','))
                    if (!tok.empty())
                        targets.push_back(load_target(tok, alphas.empty() ? rgl::Rational{1, 2}
                                                                          : alphas.front()));
            }
            std::vector<int> ns = parse_indices(sp_ns);
            rgl::SweepReport rep = rgl::sweep(targets, alphas, ns, sp_trials, sp_seed);
            if (format == "json")
                std::cout << rep.to_json() << "\n";
            else
                std::cout << rep.to_csv();
        }
    } catch (const rgl::Error& e) {
        std::cerr << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

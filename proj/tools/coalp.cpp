#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "coalp/datalog.hpp"
#include "coalp/derive.hpp"
#include "coalp/dot.hpp"
#include "coalp/guard.hpp"
#include "coalp/parser.hpp"
#include "coalp/printer.hpp"
#include "coalp/sld.hpp"

namespace {

using namespace coalp;

struct SessionConfig {
    int workers = 1;
    int nodeBudget = 10000;
    int maxAnswers = -1;
    int maxStates = 100000;
    bool ordered = true;
    bool force = false;
    bool solved = false;
    std::string dotPath;
};

void printDiagnostics(const std::vector<Diagnostic>& ds) {
    for (const auto& d : ds) {
        std::cerr << (d.severity == Severity::Error ? "error" : "warning") << " at " << d.line
                  << ":" << d.column << ": " << d.message << "\n";
    }
}

std::optional<Program> loadProgram(const std::string& path) {
    ParseResult r = parseProgramFile(path);
    printDiagnostics(r.diagnostics);
    return r.program;
}

std::optional<Atom> loadGoal(const std::string& text, const Program& p) {
    GoalResult r = parseGoal(text, &p);
    printDiagnostics(r.diagnostics);
    return r.goal;
}

DeriveOptions toDeriveOptions(const SessionConfig& cfg) {
    DeriveOptions o;
    o.maxAnswers = cfg.maxAnswers;
    o.maxStates = cfg.maxStates;
    o.nodeBudget = cfg.nodeBudget;
    o.workers = cfg.workers;
    o.ordered = cfg.ordered;
    o.force = cfg.force;
    return o;
}

const char* statusText(DeriveStatus s) {
    switch (s) {
        case DeriveStatus::Exhausted: return "search exhausted";
        case DeriveStatus::AnswerLimit: return "answer limit reached";
        case DeriveStatus::StateLimit: return "state limit reached";
        case DeriveStatus::NotGuarded: return "program not guarded";
    }
    return "unknown";
}

int cmdCheck(const std::string& path, const SessionConfig& cfg) {
    auto p = loadProgram(path);
    if (!p) return 2;
    GuardReport report = guardProgram(*p, cfg.nodeBudget);
    std::cout << formatReport(report);
    return report.guarded ? 0 : 1;
}

int cmdQuery(const std::string& path, const std::string& goalText, const SessionConfig& cfg,
             std::ostream& out) {
    auto p = loadProgram(path);
    if (!p) return 2;
    auto goal = loadGoal(goalText, *p);
    if (!goal) return 2;

    DeriveResult r = derive(*p, *goal, toDeriveOptions(cfg));
    if (r.status == DeriveStatus::NotGuarded) {
        out << "refused: program is not guarded (use --force to query anyway)\n";
        if (r.guardReport) out << formatReport(*r.guardReport);
        return 1;
    }
    std::set<Var> goalVars = variablesOf(*goal);
    for (const Answer& a : r.answers) {
        out << "rank " << a.rank << "  "
            << (cfg.solved ? formatSolved(a.chain, goalVars) : formatAnswer(a.chain)) << "\n";
    }
    if (!cfg.dotPath.empty() && !r.answers.empty()) {
        std::ofstream dot(cfg.dotPath);
        dot << exportDot(r.answers.front().successTree);
        out << "wrote success tree of answer 1 to " << cfg.dotPath << "\n";
    }
    if (r.answers.empty()) {
        out << "no answers (" << statusText(r.status) << ")\n";
    } else {
        out << r.answers.size() << " answer(s) (" << statusText(r.status) << ")\n";
    }
    if (r.budgetExceeded) out << "warning: node budget exceeded during tree construction\n";
    return 0;
}

int cmdOracle(const std::string& path, const std::string& goalText, const SessionConfig& cfg,
              std::ostream& out) {
    auto p = loadProgram(path);
    if (!p) return 2;
    auto goal = loadGoal(goalText, *p);
    if (!goal) return 2;

    bool mismatch = false;

    SldSolveResult sld = sldSolve(*p, {*goal}, 64, 16);
    out << "sld: " << sld.answers.size() << " answer(s)"
        << (sld.depthExhausted ? " (depth cut)" : "") << "\n";
    for (const Substitution& theta : sld.answers) {
        Atom instantiated = applySubst(*goal, theta);
        BuildOptions bo;
        bo.nodeBudget = cfg.nodeBudget;
        BuildResult br = buildCoTree(*p, instantiated, bo);
        bool success = findSuccessSubtree(br.tree).has_value();
        out << "  sld answer " << toString(theta) << " -> cotree("
            << toString(instantiated) << ") success subtree: " << (success ? "yes" : "no")
            << "\n";
        if (!success) mismatch = true;
    }

    if (p->isGround() && isGround(*goal)) {
        HerbrandInterpretation tp = groundTp(*p);
        bool inModel = tp.contains(*goal);
        bool sldFound = !sld.answers.empty();
        BuildOptions bo;
        bo.nodeBudget = cfg.nodeBudget;
        bool coSuccess = findSuccessSubtree(buildCoTree(*p, *goal, bo).tree).has_value();
        out << "ground goal: T_P membership " << (inModel ? "yes" : "no") << ", sld "
            << (sldFound ? "yes" : "no") << ", cotree success " << (coSuccess ? "yes" : "no")
            << "\n";
        if (inModel != sldFound || inModel != coSuccess) mismatch = true;
    }

    out << (mismatch ? "MISMATCH\n" : "oracles agree\n");
    return mismatch ? 1 : 0;
}

std::string answersHash(const std::vector<Answer>& answers) {
    // Order-insensitive multiset hash: FNV over sorted solved forms.
    std::vector<std::string> keys;
    for (const auto& a : answers) keys.push_back(toString(a.solved));
    std::sort(keys.begin(), keys.end());
    uint64_t h = 1469598103934665603ull;
    for (const auto& k : keys)
        for (unsigned char c : k) h = (h ^ c) * 1099511628211ull;
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}

int cmdBench(uint64_t seed, const std::vector<int>& sizes, const std::vector<int>& workersList,
             const std::string& csvPath, std::ostream& out) {
    std::ostringstream csv;
    csv << "program,size,workers,wall_ms,speedup,answers_hash\n";
    bool ok = true;
    for (int size : sizes) {
        DatalogSpec spec;
        spec.seed = seed;
        spec.layers = 3 + size;
        spec.predsPerLayer = 2 + size;
        spec.factsPerPred = 4 + 2 * size;
        spec.rulesPerPred = 3 + size;
        DatalogInstance inst = generateDatalog(spec);
        std::string name = "datalog_s" + std::to_string(seed);

        double baseMs = 0;
        std::string baseHash;
        for (int w : workersList) {
            DeriveOptions o;
            o.workers = w;
            o.maxAnswers = 1;
            auto t0 = std::chrono::steady_clock::now();
            DeriveResult r = derive(inst.program, inst.goal, o);
            auto t1 = std::chrono::steady_clock::now();
            double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
            std::string hash = answersHash(r.answers);
            if (w == workersList.front()) {
                baseMs = ms;
                baseHash = hash;
            } else if (hash != baseHash) {
                out << "ERROR: answer multiset differs at workers=" << w << "\n";
                ok = false;
            }
            double speedup = ms > 0 ? baseMs / ms : 1.0;
            csv << name << "," << size << "," << w << "," << ms << "," << speedup << "," << hash
                << "\n";
        }
    }
    out << csv.str();
    if (!csvPath.empty()) {
        std::ofstream f(csvPath);
        f << csv.str();
        out << "wrote " << csvPath << "\n";
    }
    return ok ? 0 : 1;
}

int replLoop(SessionConfig cfg) {
    std::optional<Program> program;
    std::string programPath;
    std::cout << "coalp repl -- :load PATH, :check, :query GOAL, :set KEY VALUE, :dot PATH, "
                 ":quit\n";
    std::string line;
    while (std::cout << "> " << std::flush, std::getline(std::cin, line)) {
        std::istringstream is(line);
        std::string cmd;
        is >> cmd;
        if (cmd.empty()) continue;
        if (cmd == ":quit" || cmd == ":q") break;
        if (cmd == ":load") {
            std::string path;
            is >> path;
            if (path.empty()) {
                std::cout << "usage: :load PATH\n";
                continue;
            }
            auto p = loadProgram(path);
            if (p) {
                program = std::move(p);
                programPath = path;
                std::cout << "loaded " << path << " (" << program->clauses.size()
                          << " clauses)\n";
            }
        } else if (cmd == ":check") {
            if (!program) {
                std::cout << "no program loaded\n";
                continue;
            }
            std::cout << formatReport(guardProgram(*program, cfg.nodeBudget));
        } else if (cmd == ":query") {
            if (!program) {
                std::cout << "no program loaded\n";
                continue;
            }
            std::string rest;
            std::getline(is, rest);
            if (rest.empty()) {
                std::cout << "usage: :query GOAL\n";
                continue;
            }
            cmdQuery(programPath, rest, cfg, std::cout);
        } else if (cmd == ":set") {
            std::string key;
            int value = 0;
            if (!(is >> key >> value)) {
                std::cout << "usage: :set KEY VALUE (workers|budget|answers|states|force)\n";
                continue;
            }
            if (key == "workers")
                cfg.workers = std::max(1, value);
            else if (key == "budget")
                cfg.nodeBudget = std::max(1, value);
            else if (key == "answers")
                cfg.maxAnswers = value;
            else if (key == "states")
                cfg.maxStates = std::max(1, value);
            else if (key == "force")
                cfg.force = value != 0;
            else {
                std::cout << "unknown key: " << key << "\n";
                continue;
            }
            std::cout << key << " = " << value << "\n";
        } else if (cmd == ":dot") {
            std::string path;
            is >> path;
            if (path.empty()) {
                cfg.dotPath.clear();
                std::cout << "dot output disabled\n";
            } else {
                cfg.dotPath = path;
                std::cout << "dot output -> " << path << "\n";
            }
        } else {
            std::cout << "unknown command: " << cmd << "\n";
        }
    }
    return 0;
}

void addConfigFlags(CLI::App* app, SessionConfig& cfg) {
    app->add_option("--answers", cfg.maxAnswers, "Maximum answers to emit (-1 = unbounded)");
    app->add_option("--states", cfg.maxStates, "Maximum state expansions");
    app->add_option("--budget", cfg.nodeBudget, "Node budget per coinductive tree");
    app->add_option("--workers", cfg.workers, "Worker thread count")->check(CLI::PositiveNumber);
    app->add_flag("--ordered,!--unordered", cfg.ordered, "Rank-ordered answer emission");
    app->add_flag("--force", cfg.force, "Query even when the program is not guarded");
    app->add_option("--dot", cfg.dotPath, "Write the first success tree as Graphviz DOT");
    app->add_flag("--solved", cfg.solved, "Print composed goal bindings instead of chains");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"CoALP: coinductive logic programming engine"};
    app.require_subcommand(1);

    SessionConfig cfg;
    std::string path, goalText, csvPath;
    uint64_t seed = 42;
    std::vector<int> sizes{0, 1};
    std::vector<int> workersList{1, 2, 4};

    auto* check = app.add_subcommand("check", "Verify guardedness of a program");
    check->add_option("program", path, "Program file")->required();
    check->add_option("--budget", cfg.nodeBudget, "Node budget for check 3");

    auto* query = app.add_subcommand("query", "Run a coinductive derivation query");
    query->add_option("program", path, "Program file")->required();
    query->add_option("goal", goalText, "Goal atom, e.g. \"list(X).\"")->required();
    addConfigFlags(query, cfg);

    auto* oracle = app.add_subcommand("oracle", "Cross-check SLD, T_P, and coinductive trees");
    oracle->add_option("program", path, "Program file")->required();
    oracle->add_option("goal", goalText, "Goal atom")->required();
    oracle->add_option("--budget", cfg.nodeBudget, "Node budget per tree");

    auto* bench = app.add_subcommand("bench", "Seeded Datalog benchmark across worker counts");
    bench->add_option("--seed", seed, "Generator seed");
    bench->add_option("--sizes", sizes, "Instance size levels");
    bench->add_option("--workers", workersList, "Worker counts to compare");
    bench->add_option("--csv", csvPath, "Also write the CSV to this path");

    auto* repl = app.add_subcommand("repl", "Interactive session");
    addConfigFlags(repl, cfg);

    CLI11_PARSE(app, argc, argv);

    if (check->parsed()) return cmdCheck(path, cfg);
    if (query->parsed()) return cmdQuery(path, goalText, cfg, std::cout);
    if (oracle->parsed()) return cmdOracle(path, goalText, cfg, std::cout);
    if (bench->parsed()) return cmdBench(seed, sizes, workersList, csvPath, std::cout);
    if (repl->parsed()) return replLoop(cfg);
    return 0;
}

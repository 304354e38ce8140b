// Command-line surface: recognize / solve / generate / analyze / verify.
// Exit codes: 0 success, 1 usage or I/O error, 2 negative answer (rejection
// or verification mismatch is reported with a witness/dump, respectively —
// verification mismatches exit 1 per the harness contract).
#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "chordality/instance_gen.hpp"
#include "chordality/oracle.hpp"
#include "chordality/problem.hpp"
#include "chordality/sck_solvers.hpp"
#include "chordality/separator.hpp"
#include "chordality/twok2_solvers.hpp"
#include "chordality/vco.hpp"
#include "json.hpp"

namespace {

using namespace chordality;
using nlohmann::json;

struct RecognizeOpts {
    std::string input;
    int k = 0;
    bool as_json = false;
};

struct SolveOpts {
    std::string input, problem, cls = "auto", terminals;
    int k = 0;
    bool as_json = false;
};

struct GenerateOpts {
    std::string cls, output, trace;
    int k = 0, ops = 4, n = 10;
    uint64_t seed = 1;
};

struct AnalyzeOpts {
    std::string input;
    bool as_json = false;
};

struct VerifyOpts {
    std::string problem, cls, dump_prefix = "verify_mismatch";
    int count = 10, k = 0, ops = 2, n = 10;
    uint64_t seed = 1;
    bool as_json = false;
};

ProblemKind problem_of(const std::string& name) {
    ProblemKind p;
    if (!parse_problem(name, p)) throw std::invalid_argument("unknown problem: " + name);
    return p;
}

SubclassTag tag_of(const std::string& name) {
    SubclassTag t;
    if (!parse_subclass(name, t)) throw std::invalid_argument("unknown class: " + name);
    return t;
}

VertexSet parse_terminals(const std::string& spec) {
    VertexSet out;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        size_t pos = 0;
        int id = std::stoi(item, &pos);
        if (pos != item.size() || id < 1)
            throw std::invalid_argument("bad terminal id: " + item);
        out.push_back(id - 1);
    }
    return sorted_unique(out);
}

json ids_json(const VertexSet& vs) {
    json arr = json::array();
    for (Vertex v : vs) arr.push_back(v + 1);
    return arr;
}

std::string ids_text(const VertexSet& vs) {
    std::string out;
    for (Vertex v : vs) out += " " + std::to_string(v + 1);
    return out;
}

void emit(const std::string& path, const std::string& payload) {
    if (path.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot open file for writing: " + path);
    f << payload;
}

void print_witness(const RejectionWitness& w, bool as_json) {
    if (as_json) {
        json j;
        j["accepted"] = false;
        j["witness"]["kind"] =
            w.kind == WitnessKind::WrongLengthCycle ? "cycle" : "residual";
        j["witness"]["vertices"] =
            ids_json(w.kind == WitnessKind::WrongLengthCycle ? w.cycle : w.residual);
        std::cout << j.dump() << "\n";
    } else if (w.kind == WitnessKind::WrongLengthCycle) {
        std::cout << "witness cycle" << ids_text(w.cycle) << "\n";
    } else {
        std::cout << "witness residual" << ids_text(w.residual) << "\n";
    }
}

int cmd_recognize(const RecognizeOpts& o) {
    Graph g = parse_graph_file(o.input);
    RecognitionResult r = compute_vco(g, o.k);
    if (!r.accepted) {
        print_witness(r.witness, o.as_json);
        return 2;
    }
    if (o.as_json) {
        json j;
        j["accepted"] = true;
        j["k"] = o.k;
        j["vco"] = vco_to_text(r.vco);
        std::cout << j.dump() << "\n";
    } else {
        std::cout << vco_to_text(r.vco);
    }
    return 0;
}

int cmd_solve(const SolveOpts& o) {
    Graph g = parse_graph_file(o.input);
    const ProblemKind p = problem_of(o.problem);
    const VertexSet terminals = parse_terminals(o.terminals);
    Solution sol;
    if (o.k > 0) {
        RecognitionResult r = compute_vco(g, o.k);
        if (!r.accepted) {
            print_witness(r.witness, o.as_json);
            return 2;
        }
        sol = solve_sck(g, o.k, p, terminals);
    } else {
        const SubclassTag tag = o.cls == "auto" ? classify_subclass(g) : tag_of(o.cls);
        sol = solve_twok2(g, tag, p, terminals);
    }
    std::cout << solution_to_json(sol) << "\n";
    return 0;
}

int cmd_generate(const GenerateOpts& o) {
    if (o.cls == "sck") {
        GeneratedSck inst = gen_sck(o.k, o.ops, o.seed);
        emit(o.output, serialize_graph(inst.graph));
        if (!o.trace.empty()) emit(o.trace, vco_to_text(inst.trace));
        return 0;
    }
    if (!o.trace.empty())
        throw std::invalid_argument("--trace applies only to --class sck");
    Graph g = gen_2k2_subclass(tag_of(o.cls), o.n, o.seed);
    emit(o.output, serialize_graph(g));
    return 0;
}

int cmd_analyze(const AnalyzeOpts& o) {
    Graph g = parse_graph_file(o.input);
    const SubclassTag tag = classify_subclass(g);
    std::optional<SeparatorDecomposition> d;
    const bool connected = is_connected(g);
    if (connected) d = find_minimal_separator(g);
    if (o.as_json) {
        json j;
        j["class"] = subclass_name(tag);
        j["connected"] = connected;
        j["complete"] = connected && !d;
        if (d) {
            j["S"] = ids_json(d->S);
            j["T"] = ids_json(d->T);
            j["G1"] = d->G1 ? ids_json(*d->G1) : json();
            j["U"] = ids_json(d->U);
            j["Uprime"] = ids_json(d->Uprime);
            j["M"] = ids_json(d->M);
        }
        std::cout << j.dump() << "\n";
        return 0;
    }
    std::cout << "class " << subclass_name(tag) << "\n";
    if (!connected) {
        std::cout << "disconnected\n";
    } else if (!d) {
        std::cout << "complete\n";
    } else {
        std::cout << "S" << ids_text(d->S) << "\n";
        std::cout << "T" << ids_text(d->T) << "\n";
        std::cout << "G1" << (d->G1 ? ids_text(*d->G1) : std::string()) << "\n";
        std::cout << "U" << ids_text(d->U) << "\n";
        std::cout << "Uprime" << ids_text(d->Uprime) << "\n";
        std::cout << "M" << ids_text(d->M) << "\n";
    }
    return 0;
}

VertexSet draw_terminals(const Graph& g, uint64_t seed) {
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    const int n = g.vertex_count();
    const int want = std::min(n, 2 + static_cast<int>(rng() % 4));
    VertexSet ids(n);
    std::iota(ids.begin(), ids.end(), 0);
    std::shuffle(ids.begin(), ids.end(), rng);
    ids.resize(want);
    return sorted_unique(ids);
}

int cmd_verify(const VerifyOpts& o) {
    const ProblemKind p = problem_of(o.problem);
    const int guard = p == ProblemKind::ECT ? oracle::kMaxVerticesEct : oracle::kMaxVertices;
    const bool sck = o.cls == "sck";
    const SubclassTag tag = sck ? SubclassTag::General2K2Free : tag_of(o.cls);
    bool all_ok = true;
    for (int i = 0; i < o.count; ++i) {
        Graph g(1, {});
        uint64_t inst_seed = o.seed + static_cast<uint64_t>(i);
        if (sck) {
            bool found = false;
            for (int attempt = 0; attempt < 100 && !found; ++attempt) {
                inst_seed = o.seed + 1000003ULL * static_cast<uint64_t>(i) + attempt;
                GeneratedSck inst = gen_sck(o.k, o.ops, inst_seed);
                if (inst.graph.vertex_count() <= guard) {
                    g = inst.graph;
                    found = true;
                }
            }
            if (!found)
                throw std::runtime_error(
                    "could not generate an instance within the oracle bound; lower --ops");
        } else {
            g = gen_2k2_subclass(tag, o.n, inst_seed);
            if (g.vertex_count() > guard)
                throw std::invalid_argument("--n exceeds the oracle bound of " +
                                            std::to_string(guard));
        }
        VertexSet terminals;
        if (p == ProblemKind::SteinerTree) terminals = draw_terminals(g, inst_seed);
        const Solution sol = sck ? solve_sck(g, o.k, p, terminals)
                                 : solve_twok2(g, tag, p, terminals);
        const Solution ref = oracle::solve(p, g, terminals);
        const bool ok = sol.value == ref.value;
        if (o.as_json) {
            json j;
            j["instance"] = i;
            j["seed"] = inst_seed;
            j["solver"] = sol.value;
            j["oracle"] = ref.value;
            j["ok"] = ok;
            std::cout << j.dump() << "\n";
        } else {
            std::cout << i << " solver=" << sol.value << " oracle=" << ref.value
                      << (ok ? " ok" : " MISMATCH") << "\n";
        }
        if (!ok) {
            all_ok = false;
            const std::string dump = o.dump_prefix + "_" + std::to_string(i) + ".graph";
            emit(dump, serialize_graph(g));
            std::cerr << "mismatch on instance " << i << ", dumped to " << dump << "\n";
        }
    }
    return all_ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"strictly chordality-k recognition and 2K2-free subclass solvers"};
    app.require_subcommand(1);

    RecognizeOpts ro;
    CLI::App* rec = app.add_subcommand("recognize", "peel a graph into a vertex cycle ordering");
    rec->add_option("--k", ro.k, "cycle length")->required();
    rec->add_option("--input", ro.input, "edge-list file")->required();
    rec->add_flag("--json", ro.as_json, "JSON output");

    SolveOpts so;
    CLI::App* sol = app.add_subcommand("solve", "solve an optimization problem exactly");
    sol->add_option("--problem", so.problem, "mis|vc|ds|oct|ect|fvs|steiner|cds")->required();
    sol->add_option("--input", so.input, "edge-list file")->required();
    sol->add_option("--k", so.k, "treat the input as strictly chordality-k");
    sol->add_option("--terminals", so.terminals, "comma-separated 1-indexed terminal ids");
    sol->add_option("--class", so.cls, "2K2 subclass tag, or auto (default)");
    sol->add_flag("--json", so.as_json, "JSON output");

    GenerateOpts go;
    CLI::App* gen = app.add_subcommand("generate", "emit a seeded instance");
    gen->add_option("--class", go.cls, "sck or a 2K2 subclass tag")->required();
    gen->add_option("--k", go.k, "cycle length (sck)");
    gen->add_option("--ops", go.ops, "construction operations (sck)");
    gen->add_option("--n", go.n, "target vertex count (2K2 subclasses)");
    gen->add_option("--seed", go.seed, "random seed")->envname("CHORDALITY_SEED");
    gen->add_option("-o,--output", go.output, "output file (default stdout)");
    gen->add_option("--trace", go.trace, "also write the construction ordering (sck)");

    AnalyzeOpts ao;
    CLI::App* ana = app.add_subcommand("analyze", "classify and decompose a graph");
    ana->add_option("--input", ao.input, "edge-list file")->required();
    ana->add_flag("--json", ao.as_json, "JSON output");

    VerifyOpts vo;
    CLI::App* ver = app.add_subcommand("verify", "diff solver values against the oracle");
    ver->add_option("--problem", vo.problem, "problem kind")->required();
    ver->add_option("--class", vo.cls, "sck or a 2K2 subclass tag")->required();
    ver->add_option("--count", vo.count, "number of instances");
    ver->add_option("--seed", vo.seed, "base seed")->envname("CHORDALITY_SEED");
    ver->add_option("--k", vo.k, "cycle length (sck)");
    ver->add_option("--ops", vo.ops, "construction operations (sck)");
    ver->add_option("--n", vo.n, "target vertex count (2K2 subclasses)");
    ver->add_option("--dump-prefix", vo.dump_prefix, "file prefix for mismatch dumps");
    ver->add_flag("--json", vo.as_json, "JSON lines output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    try {
        if (*rec) return cmd_recognize(ro);
        if (*sol) return cmd_solve(so);
        if (*gen) return cmd_generate(go);
        if (*ana) return cmd_analyze(ao);
        if (*ver) return cmd_verify(vo);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}

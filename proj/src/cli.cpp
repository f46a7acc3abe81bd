#include "lisrc/cli.hpp"

#include "lisrc/bipartite.hpp"
#include "lisrc/error.hpp"
#include "lisrc/instance.hpp"
#include "lisrc/oracle.hpp"
#include "lisrc/piles.hpp"
#include "lisrc/reconfig.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace lisrc::cli {

namespace {

using nlohmann::json;

struct Options {
    bool json = false;
    bool exit_status = false;
    std::optional<std::size_t> max_oracle_n;
    std::string file;
};

std::size_t oracle_bound(const Options& opts)
{
    if (opts.max_oracle_n)
        return *opts.max_oracle_n;
    if (const char* env = std::getenv("LISRC_ORACLE_BOUND")) {
        try {
            std::size_t used = 0;
            unsigned long v = std::stoul(env, &used);
            if (used == std::string(env).size())
                return v;
        } catch (const std::exception&) {
        }
        throw Error(Errc::InvalidArgument, std::string("LISRC_ORACLE_BOUND is not a number: ") + env);
    }
    return kDefaultOracleBound;
}

Instance load(const std::string& path)
{
    std::ostringstream buf;
    if (path == "-") {
        buf << std::cin.rdbuf();
    } else {
        std::ifstream in(path);
        if (!in)
            throw Error(Errc::InvalidArgument, "cannot open " + path);
        buf << in.rdbuf();
    }
    return parse_instance(buf.str());
}

Instance with_sets(Instance inst)
{
    if (!inst.has_sets())
        throw Error(Errc::ParseError, "this command needs I and J lines in the instance file");
    return inst;
}

int answer_status(const Options& opts, bool yes)
{
    return opts.exit_status && !yes ? kNo : kYes;
}

json steps_json(const ReconfSequence& rs)
{
    json steps = json::array();
    for (const SwapStep& s : rs.steps)
        steps.push_back({{"remove", s.remove}, {"add", s.add}});
    return steps;
}

void print_sequence(std::ostream& out, const ReconfSequence& rs)
{
    out << "length: " << rs.length() << '\n';
    out << "start: " << format_set(rs.start) << '\n';
    IndexSet cur = rs.start;
    for (std::size_t k = 0; k < rs.steps.size(); ++k) {
        cur = apply_step(cur, rs.steps[k]);
        out << "step " << k + 1 << ": remove " << rs.steps[k].remove << ", add " << rs.steps[k].add << " -> "
            << format_set(cur) << '\n';
    }
}

int cmd_decide(const Options& opts, std::ostream& out)
{
    const Instance inst = with_sets(load(opts.file));
    const PileSystem ps = build_piles(inst.seq);
    const Decision d = analyze(inst.seq, ps, *inst.i, *inst.j);
    if (opts.json) {
        out << json{{"answer", d.reconfigurable ? "yes" : "no"},
                    {"minimal_I", d.from_i.minimal},
                    {"minimal_J", d.from_j.minimal}}
                   .dump()
            << '\n';
    } else {
        out << (d.reconfigurable ? "YES" : "NO") << '\n';
        out << "minimal_I: " << format_set(d.from_i.minimal) << '\n';
        out << "minimal_J: " << format_set(d.from_j.minimal) << '\n';
    }
    return answer_status(opts, d.reconfigurable);
}

int cmd_witness(const Options& opts, std::ostream& out)
{
    const Instance inst = with_sets(load(opts.file));
    const PileSystem ps = build_piles(inst.seq);
    const Decision d = analyze(inst.seq, ps, *inst.i, *inst.j);
    auto rs = witness(d, *inst.i);
    if (opts.json) {
        json j{{"answer", rs ? "yes" : "no"}, {"minimal_I", d.from_i.minimal}, {"minimal_J", d.from_j.minimal}};
        if (rs) {
            j["steps"] = steps_json(*rs);
            j["length"] = rs->length();
        }
        out << j.dump() << '\n';
    } else {
        out << (rs ? "YES" : "NO") << '\n';
        if (rs)
            print_sequence(out, *rs);
    }
    return answer_status(opts, rs.has_value());
}

int cmd_shortest(const Options& opts, std::ostream& out, std::ostream& err)
{
    const Instance inst = with_sets(load(opts.file));
    ShortestResult r = shortest_sequence(inst.seq, *inst.i, *inst.j);
    using Status = ShortestResult::Status;
    if (r.status == Status::NotBipartite) {
        if (opts.json)
            out << json{{"error", "not_bipartite"}, {"odd_cycle", r.odd_cycle}}.dump() << '\n';
        err << "error: the permutation graph is not bipartite (odd cycle";
        for (Index v : r.odd_cycle)
            err << ' ' << v;
        err << "); use `decide` or `witness` instead\n";
        return kError;
    }
    const bool yes = r.status == Status::Found;
    if (opts.json) {
        json j{{"answer", yes ? "yes" : "no"}};
        if (yes) {
            j["steps"] = steps_json(*r.sequence);
            j["length"] = r.sequence->length();
        } else {
            auto pile = [](const MixedPile& m) {
                return json{{"pile", m.pile}, {"i", m.i_elem}, {"j", m.j_elem}};
            };
            j["forbidden_pair"] = json::array({pile(r.forbidden_pair->first), pile(r.forbidden_pair->second)});
        }
        out << j.dump() << '\n';
    } else if (yes) {
        out << "YES\n";
        print_sequence(out, *r.sequence);
    } else {
        const auto& [p, q] = *r.forbidden_pair;
        out << "NO\n";
        out << "forbidden pair: P_" << p.pile << " {" << p.i_elem << "," << p.j_elem << "} and P_" << q.pile << " {"
            << q.i_elem << "," << q.j_elem << "}\n";
    }
    return answer_status(opts, yes);
}

int cmd_piles(const Options& opts, std::ostream& out)
{
    const Instance inst = load(opts.file);
    const PileSystem ps = build_piles(inst.seq);
    if (opts.json) {
        json piles = json::array();
        for (int t = 1; t <= ps.k(); ++t) {
            json pile = json::array();
            for (const PileEntry& e : ps.pile(t))
                pile.push_back({{"index", e.index}, {"value", inst.seq.raw_at(e.index)}});
            piles.push_back(pile);
        }
        out << json{{"lis_length", ps.k()}, {"piles", piles}, {"canonical_max", extract_canonical_max(ps)}}.dump()
            << '\n';
    } else {
        for (int t = 1; t <= ps.k(); ++t) {
            out << "P_" << t << ':';
            for (const PileEntry& e : ps.pile(t))
                out << ' ' << inst.seq.raw_at(e.index) << '@' << e.index;
            out << '\n';
        }
    }
    return kYes;
}

int cmd_graph(const Options& opts, std::ostream& out)
{
    const Instance inst = load(opts.file);
    out << to_dot(build_graph(inst.seq), inst.seq);
    return kYes;
}

struct OracleFlags {
    bool decide = false;
    bool shortest = false;
    bool enumerate = false;
    bool general = false;
    bool dot = false;
};

int cmd_oracle(const Options& opts, const OracleFlags& flags, std::ostream& out)
{
    const Instance inst = load(opts.file);
    const std::size_t bound = oracle_bound(opts);
    const OracleMode mode = flags.general ? OracleMode::General : OracleMode::Maximum;

    if (flags.enumerate || flags.dot) {
        std::size_t size = static_cast<std::size_t>(lis_length(inst.seq));
        if (flags.general && inst.has_sets())
            size = inst.i->size();
        auto sets = enumerate_feasible(inst.seq, size, bound);
        if (flags.dot) {
            out << to_dot(build_reconfig_graph(sets));
        } else if (opts.json) {
            out << json{{"size", size}, {"sets", sets}}.dump() << '\n';
        } else {
            for (const IndexSet& s : sets)
                out << format_set(s) << '\n';
        }
        return kYes;
    }

    const Instance full = with_sets(inst);
    if (flags.shortest) {
        auto rs = oracle_shortest(full.seq, *full.i, *full.j, mode, bound);
        if (opts.json) {
            json j{{"answer", rs ? "yes" : "no"}};
            if (rs) {
                j["steps"] = steps_json(*rs);
                j["length"] = rs->length();
            }
            out << j.dump() << '\n';
        } else {
            out << (rs ? std::to_string(rs->length()) : std::string("NO")) << '\n';
        }
        return answer_status(opts, rs.has_value());
    }

    bool yes = oracle_decide(full.seq, *full.i, *full.j, mode, bound);
    if (opts.json)
        out << json{{"answer", yes ? "yes" : "no"}}.dump() << '\n';
    else
        out << (yes ? "YES" : "NO") << '\n';
    return answer_status(opts, yes);
}

int cmd_gen(const Options& opts, GenerateOptions gen, std::ostream& out)
{
    gen.oracle_bound = oracle_bound(opts);
    Instance inst = generate(gen);
    if (opts.json) {
        out << json{{"sequence", inst.seq.raw()}, {"I", *inst.i}, {"J", *inst.j}}.dump() << '\n';
    } else {
        out << "# n=" << gen.n << " seed=" << gen.seed << (gen.bipartite ? " bipartite" : "") << '\n';
        out << format_instance(inst);
    }
    return kYes;
}

int cmd_check(const Options& opts, std::ostream& out)
{
    const Instance inst = load(opts.file);
    const int lis = lis_length(inst.seq);
    json j{{"n", inst.seq.size()}, {"lis_length", lis}};
    if (inst.has_sets()) {
        j["I_maximum"] = is_maximum_feasible(inst.seq, *inst.i, lis);
        j["J_maximum"] = is_maximum_feasible(inst.seq, *inst.j, lis);
    }
    if (opts.json) {
        out << j.dump() << '\n';
    } else {
        out << "OK n=" << inst.seq.size() << " lis_length=" << lis;
        if (inst.has_sets())
            out << " I=" << (j["I_maximum"].get<bool>() ? "maximum" : "feasible")
                << " J=" << (j["J_maximum"].get<bool>() ? "maximum" : "feasible");
        out << '\n';
    }
    return kYes;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Reconfiguration between longest increasing subsequences", args.empty() ? "lisrc" : args[0]};
    app.require_subcommand(1);

    Options opts;
    app.add_flag("--json", opts.json, "Machine-readable JSON output");
    app.add_flag("--exit-status", opts.exit_status, "Exit 0 on YES, 1 on NO");
    app.add_option("--max-oracle-n", opts.max_oracle_n, "Largest n the brute-force oracle accepts");

    auto file_sub = [&](const std::string& name, const std::string& desc) {
        CLI::App* sub = app.add_subcommand(name, desc);
        sub->fallthrough();
        sub->add_option("file", opts.file, "Instance file ('-' for stdin)")->required();
        return sub;
    };

    CLI::App* decide_cmd = file_sub("decide", "Decide whether I and J are reconfigurable");
    CLI::App* witness_cmd = file_sub("witness", "Print a reconfiguration sequence from I to J");
    CLI::App* shortest_cmd = file_sub("shortest", "Shortest sequence (bipartite permutation graphs only)");
    CLI::App* piles_cmd = file_sub("piles", "Print the patience-sorting piles bottom to top");
    CLI::App* graph_cmd = file_sub("graph", "Print the permutation graph in DOT");
    CLI::App* check_cmd = file_sub("check", "Validate an instance file");

    OracleFlags oflags;
    CLI::App* oracle_cmd = file_sub("oracle", "Brute-force reconfiguration graph queries");
    oracle_cmd->add_flag("--decide", oflags.decide, "Connectivity of I and J (default)");
    oracle_cmd->add_flag("--shortest", oflags.shortest, "Length of a shortest sequence");
    oracle_cmd->add_flag("--enumerate", oflags.enumerate, "List the feasible sets");
    oracle_cmd->add_flag("--general", oflags.general, "Allow non-maximum sets of equal size");
    oracle_cmd->add_flag("--dot", oflags.dot, "Print the reconfiguration graph in DOT");

    GenerateOptions gen;
    CLI::App* gen_cmd = app.add_subcommand("gen", "Generate a random instance");
    gen_cmd->fallthrough();
    gen_cmd->add_option("-n,--n", gen.n, "Sequence length")->required()->check(CLI::PositiveNumber);
    gen_cmd->add_option("--seed", gen.seed, "Random seed");
    gen_cmd->add_flag("--bipartite", gen.bipartite, "Require a bipartite permutation graph");

    std::vector<const char*> argv;
    for (const std::string& a : args)
        argv.push_back(a.c_str());
    if (argv.empty())
        argv.push_back("lisrc");

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : kError;
    }

    try {
        if (decide_cmd->parsed())
            return cmd_decide(opts, out);
        if (witness_cmd->parsed())
            return cmd_witness(opts, out);
        if (shortest_cmd->parsed())
            return cmd_shortest(opts, out, err);
        if (piles_cmd->parsed())
            return cmd_piles(opts, out);
        if (graph_cmd->parsed())
            return cmd_graph(opts, out);
        if (oracle_cmd->parsed())
            return cmd_oracle(opts, oflags, out);
        if (gen_cmd->parsed())
            return cmd_gen(opts, gen, out);
        if (check_cmd->parsed())
            return cmd_check(opts, out);
    } catch (const Error& e) {
        err << "error (" << errc_name(e.code()) << "): " << e.what() << '\n';
        return kError;
    }
    return kError;
}

} // namespace lisrc::cli

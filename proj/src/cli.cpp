#include "selfext/cli.hpp"

#include "selfext/abacus.hpp"
#include "selfext/bijections.hpp"
#include "selfext/blocks.hpp"
#include "selfext/certifier.hpp"
#include "selfext/parallel.hpp"
#include "selfext/signatures.hpp"
#include "selfext/specht.hpp"
#include "selfext/tables.hpp"
#include "selfext/zigzag.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <map>
#include <ostream>
#include <sstream>

#ifndef SELFEXT_DATA_DIR
#define SELFEXT_DATA_DIR "data"
#endif

namespace selfext {

using nlohmann::json;

std::string default_data_dir()
{
    return SELFEXT_DATA_DIR;
}

namespace {

void require_prime(int p)
{
    if (!is_prime(p))
        throw ContractError("p = " + std::to_string(p) + " is not prime");
}

json node_json(const Node& n)
{
    return json::array({n.row, n.col});
}

json opt_node(const std::optional<Node>& n)
{
    return n ? node_json(*n) : json(nullptr);
}

json nodes_json(const std::vector<Node>& v)
{
    json a = json::array();
    for (const auto& n : v)
        a.push_back(node_json(n));
    return a;
}

std::string node_text(const Node& n)
{
    return "(" + std::to_string(n.row) + "," + std::to_string(n.col) + ")";
}

json witness_json(const SpechtWitness& w)
{
    json j{{"beads", w.beads},
           {"j", w.j},
           {"k", w.k},
           {"regular_part", w.regular_part},
           {"restricted_part", w.restricted_part}};
    json inner = json::array();
    for (const auto& x : w.inner)
        inner.push_back(witness_json(x));
    j["inner"] = inner;
    return j;
}

// ---------------------------------------------------------------- analyze

int cmd_analyze(const std::string& text, int p, bool as_json, std::ostream& out)
{
    require_prime(p);
    Partition l = parse_partition(text);
    bool regular = is_p_regular(l, p);
    auto [core, wt] = core_and_weight(l, p);
    auto g = display(l, p);
    auto stats = quotient(g);

    json sigs = json::array();
    std::ostringstream sig_text;
    for (int i = 0; i < p; ++i) {
        auto s = signature(l, p, i);
        json signs = json::array();
        std::string word;
        for (const auto& sn : s.signature) {
            signs.push_back({{"node", node_json(sn.node)}, {"sign", std::string(1, sn.sign)}});
            word += sn.sign;
        }
        json js{{"residue", i},
                {"signature", signs},
                {"reduced", s.reduced},
                {"normal", nodes_json(s.normal)},
                {"conormal", nodes_json(s.conormal)},
                {"epsilon", s.epsilon},
                {"phi", s.phi},
                {"epsilon_prime", s.epsilon_prime},
                {"phi_prime", s.phi_prime},
                {"good", opt_node(s.good())},
                {"cogood", opt_node(s.cogood())}};
        bool difficult = regular && is_difficult(l, p, i);
        js["difficult"] = regular ? json(difficult) : json(nullptr);
        sigs.push_back(js);
        sig_text << "  i=" << i << ": signature " << (word.empty() ? "(empty)" : word) << ", reduced "
                 << (s.reduced.empty() ? "(empty)" : s.reduced) << ", eps=" << s.epsilon << ", phi=" << s.phi;
        if (auto a = s.good())
            sig_text << ", good " << node_text(*a);
        if (auto b = s.cogood())
            sig_text << ", cogood " << node_text(*b);
        if (difficult)
            sig_text << ", difficult";
        sig_text << "\n";
    }

    std::optional<Partition> mull;
    if (regular)
        mull = mullineux(l, p);
    Partition reg = regularize(l, p);
    std::optional<bool> irreducible;
    if (p > 2)
        irreducible = specht_irreducible(l, p);
    bool rock = is_rock_block(l, p);

    if (as_json) {
        json j{{"partition", l},
               {"p", p},
               {"size", size(l)},
               {"regular", regular},
               {"restricted", is_p_restricted(l, p)},
               {"core", core},
               {"weight", wt},
               {"abacus", {{"p", g.p}, {"beads", g.beads}, {"occupied", g.positions}}},
               {"quotient", stats.quotient},
               {"runner_beads", stats.beads},
               {"runner_weights", stats.weights},
               {"runner_residues", stats.residues},
               {"signatures", sigs},
               {"mullineux", mull ? json(*mull) : json(nullptr)},
               {"regularization", reg},
               {"specht_irreducible", irreducible ? json(*irreducible) : json(nullptr)},
               {"rock_block", rock}};
        out << j.dump(2) << "\n";
        return 0;
    }
    out << "partition " << pretty_partition(l) << ", p=" << p << ", |λ|=" << size(l) << "\n";
    out << "regular " << (regular ? "yes" : "no") << ", restricted " << (is_p_restricted(l, p) ? "yes" : "no")
        << "\n";
    out << "core " << pretty_partition(core) << ", weight " << wt << (rock ? ", RoCK block" : "") << "\n";
    out << "abacus " << g.beads << " beads, quotient (";
    for (int j = 0; j < p; ++j)
        out << (j ? ", " : "") << pretty_partition(stats.quotient[j]);
    out << ")\n";
    out << "signatures:\n" << sig_text.str();
    out << "mullineux " << (mull ? pretty_partition(*mull) : std::string("undefined (p-singular)")) << "\n";
    out << "regularization " << pretty_partition(reg) << "\n";
    if (irreducible)
        out << "Specht module " << (*irreducible ? "irreducible" : "reducible") << "\n";
    return 0;
}

// ---------------------------------------------------------------- certify

RuleSet rule_selection(const std::string& rules, const std::string& disable)
{
    RuleSet set = parse_rule_set(rules);
    if (!disable.empty())
        for (Rule r : parse_rule_set(disable))
            set.erase(r);
    return set;
}

void print_certificate(const Certificate& c, std::ostream& out)
{
    if (c.certified())
        out << "CERTIFIED (" << rule_tag(c.terminal->rule) << ")\n";
    else
        out << "UNKNOWN\n";
    for (const auto& s : c.steps)
        out << "  " << rule_tag(s.rule) << " " << s.params.dump() << ": " << pretty_partition(s.from) << " -> "
            << pretty_partition(s.to) << "\n";
    if (c.terminal)
        out << "  " << rule_tag(c.terminal->rule) << " " << c.terminal->params.dump() << "\n";
}

int cmd_certify(const std::string& text, int p, const CertifyOptions& opts, bool as_json, std::ostream& out)
{
    require_prime(p);
    Partition l = parse_partition(text);
    auto c = certify(l, p, opts);
    bool ok = c.certified() && validate(c);
    if (as_json) {
        auto j = to_json(c);
        j["valid"] = ok;
        out << j.dump(2) << "\n";
    } else {
        print_certificate(c, out);
        if (c.certified() && !ok)
            out << "certificate failed validation\n";
    }
    return ok ? 0 : 1;
}

// ---------------------------------------------------------------- survey

int cmd_survey(int p, int n, bool up_to, const CertifyOptions& opts, bool as_json, std::ostream& out)
{
    require_prime(p);
    if (p == 2)
        throw ContractError("certification needs p > 2");
    if (n < 0)
        throw ContractError("n must be non-negative");
    std::vector<Partition> todo;
    for (int k = up_to ? 0 : n; k <= n; ++k)
        for (auto& l : partitions_of(k))
            if (is_p_regular(l, p))
                todo.push_back(std::move(l));
    struct Outcome {
        bool certified = false;
        bool valid = false;
        std::optional<Rule> terminal;
        std::vector<Rule> steps;
    };
    auto results = parallel_map(todo, [&](const Partition& l) {
        auto c = certify(l, p, opts);
        Outcome o;
        o.certified = c.certified();
        o.valid = o.certified && validate(c);
        if (c.terminal)
            o.terminal = c.terminal->rule;
        for (const auto& s : c.steps)
            o.steps.push_back(s.rule);
        return o;
    });
    std::map<std::string, int> terminals, steps;
    std::vector<Partition> unknown, invalid;
    int certified = 0;
    for (std::size_t k = 0; k < todo.size(); ++k) {
        const auto& o = results[k];
        if (!o.certified) {
            unknown.push_back(todo[k]);
            continue;
        }
        if (!o.valid) {
            invalid.push_back(todo[k]);
            continue;
        }
        ++certified;
        ++terminals[rule_tag(*o.terminal)];
        for (Rule r : o.steps)
            ++steps[rule_tag(r)];
    }
    bool ok = unknown.empty() && invalid.empty();
    if (as_json) {
        json j{{"p", p},
               {"n", n},
               {"up_to", up_to},
               {"total", todo.size()},
               {"certified", certified},
               {"unknown", unknown},
               {"invalid", invalid},
               {"terminals", terminals},
               {"steps", steps}};
        out << j.dump(2) << "\n";
        return ok ? 0 : 1;
    }
    out << "p=" << p << ", " << (up_to ? "n<=" : "n=") << n << ": " << certified << "/" << todo.size()
        << " certified, " << unknown.size() << " unknown, " << invalid.size() << " invalid\n";
    for (const auto& [tag, c] : terminals)
        out << "  terminal " << tag << ": " << c << "\n";
    for (const auto& [tag, c] : steps)
        out << "  step " << tag << ": " << c << "\n";
    for (const auto& l : unknown)
        out << "  UNKNOWN " << pretty_partition(l) << "\n";
    for (const auto& l : invalid)
        out << "  INVALID " << pretty_partition(l) << "\n";
    return ok ? 0 : 1;
}

// ---------------------------------------------------------------- verify-tables

json diff_json(const TableDiff& d)
{
    return {{"expected", d.expected},
            {"derived", d.derived},
            {"matched", d.matched},
            {"missing", d.missing},
            {"extra", d.extra},
            {"ok", d.ok()}};
}

int cmd_verify_tables(const std::string& data_dir, int max_weight, bool as_json, std::ostream& out)
{
    if (max_weight < 2)
        throw ContractError("max weight must be at least 2");
    auto rep = verify_tables(data_dir, max_weight);
    bool t2 = max_weight >= 7;
    if (as_json) {
        json j{{"max_weight", max_weight},
               {"table1", diff_json(rep.table1)},
               {"table1_counts", rep.table1_counts},
               {"table2", t2 ? diff_json(rep.table2) : json(nullptr)},
               {"ok", rep.ok()}};
        out << j.dump(2) << "\n";
        return rep.ok() ? 0 : 1;
    }
    out << "Table I: " << rep.table1.matched << "/" << rep.table1.expected << " match";
    if (t2)
        out << "; Table II: " << rep.table2.matched << "/" << rep.table2.expected << " match\n";
    else
        out << "; Table II: skipped (needs --max-weight 7)\n";
    out << "rows per weight:";
    for (int w = 2; w <= max_weight; ++w)
        out << " " << w << ":" << rep.table1_counts[w];
    out << "\n";
    for (const auto& s : rep.table1.missing)
        out << "  Table I missing " << s << "\n";
    for (const auto& s : rep.table1.extra)
        out << "  Table I extra " << s << "\n";
    for (const auto& s : rep.table2.missing)
        out << "  Table II missing " << s << "\n";
    for (const auto& s : rep.table2.extra)
        out << "  Table II extra " << s << "\n";
    return rep.ok() ? 0 : 1;
}

// ---------------------------------------------------------------- small commands

int cmd_enumerate_block(const std::string& core_text, int weight, int p, bool regular, bool as_json,
                        std::ostream& out)
{
    require_prime(p);
    if (weight < 0)
        throw ContractError("weight must be non-negative");
    BlockId b{parse_partition(core_text), weight, p};
    auto members = enumerate_block(b, regular);
    if (as_json) {
        json j{{"core", b.core}, {"weight", weight}, {"p", p}, {"count", members.size()}, {"partitions", members}};
        out << j.dump(2) << "\n";
        return 0;
    }
    for (const auto& l : members)
        out << format_partition(l) << "\n";
    return 0;
}

int cmd_specht(const std::string& text, int p, bool with_witness, bool as_json, std::ostream& out)
{
    require_prime(p);
    Partition l = parse_partition(text);
    auto w = specht_witness(l, p);
    if (as_json) {
        json j{{"partition", l}, {"p", p}, {"irreducible", w.has_value()}};
        if (with_witness)
            j["witness"] = w ? witness_json(*w) : json(nullptr);
        out << j.dump(2) << "\n";
        return 0;
    }
    out << (w ? "irreducible" : "reducible") << "\n";
    if (with_witness && w)
        out << "  " << w->beads << " beads, runners j=" << w->j << " k=" << w->k << ", λ^(j)="
            << pretty_partition(w->regular_part) << ", λ^(k)=" << pretty_partition(w->restricted_part) << "\n";
    return 0;
}

int cmd_map(const std::string& text, int p, bool is_mullineux, bool as_json, std::ostream& out)
{
    require_prime(p);
    Partition l = parse_partition(text);
    Partition img = is_mullineux ? mullineux(l, p) : regularize(l, p);
    if (as_json) {
        json j{{"input", l}, {"output", img}, {"p", p}};
        out << j.dump(2) << "\n";
        return 0;
    }
    out << format_partition(img) << "\n";
    return 0;
}

int cmd_zigzag(int p, int m, int d, bool by_degree, bool as_json, std::ostream& out)
{
    auto dim = basis_dimension(p, m, d);
    long long deg0 = degree_zero_dimension(p, m, d);
    std::optional<long long> gens;
    if (m >= d)
        gens = generator_count(p, m, d).degree1;
    if (as_json) {
        json j{{"p", p}, {"m", m}, {"d", d}, {"total", dim.total}, {"degree_zero", deg0}};
        if (by_degree)
            j["by_degree"] = dim.by_degree;
        j["degree1_generators"] = gens ? json(*gens) : json(nullptr);
        out << j.dump(2) << "\n";
        return 0;
    }
    out << "dim T^Z(" << m << "," << d << ") at p=" << p << ": " << dim.total << "\n";
    out << "degree zero: " << deg0 << "\n";
    if (gens)
        out << "degree one generators: " << *gens << "\n";
    if (by_degree)
        for (std::size_t k = 0; k < dim.by_degree.size(); ++k)
            out << "  degree " << k << ": " << dim.by_degree[k] << "\n";
    return 0;
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Self-extension combinatorics for symmetric group simples"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all");

    bool as_json = false;
    std::string part_text, core_text, rules = "all", disable, data_dir = default_data_dir();
    int p = 0, n = 0, m = 0, d = 0, weight = 0, max_weight = 7;
    bool up_to = false, regular = false, witness = false, by_degree = false;
    CertifyOptions opts;

    auto add_json = [&](CLI::App* s) { s->add_flag("--json", as_json, "machine-readable output"); };
    auto add_p = [&](CLI::App* s) { s->add_option("--p", p, "prime")->required(); };
    auto add_rules = [&](CLI::App* s) {
        s->add_option("--rules", rules, "comma-separated rule tags, or all");
        s->add_option("--disable", disable, "rule tags to remove from the selection");
        s->add_option("--max-steps", opts.max_steps, "reduction steps allowed");
        s->add_option("--max-chain", opts.max_chain, "Trick 2 chain bound (0 = p)");
        s->add_option("--node-budget", opts.node_budget, "partitions expanded before giving up");
    };

    auto* analyze = app.add_subcommand("analyze", "core, quotient, signatures, Mullineux image, regularization");
    analyze->add_option("partition", part_text)->required();
    add_p(analyze);
    add_json(analyze);

    auto* cert = app.add_subcommand("certify", "search for a self-extension vanishing certificate");
    cert->add_option("partition", part_text)->required();
    add_p(cert);
    add_rules(cert);
    add_json(cert);

    auto* survey = app.add_subcommand("survey", "certify every p-regular partition of n");
    add_p(survey);
    survey->add_option("--n", n, "size")->required();
    survey->add_flag("--up-to", up_to, "include every size 0..n");
    add_rules(survey);
    add_json(survey);

    auto* tables = app.add_subcommand("verify-tables", "re-derive the difficult runner tables");
    tables->add_option("--max-weight", max_weight, "largest runner-pair weight");
    tables->add_option("--data", data_dir, "directory with table1.json and table2.json");
    add_json(tables);

    auto* block = app.add_subcommand("enumerate-block", "list the partitions of a block");
    block->add_option("--core", core_text, "p-core")->required();
    block->add_option("--weight", weight, "block weight")->required();
    add_p(block);
    block->add_flag("--regular", regular, "p-regular members only");
    add_json(block);

    auto* specht = app.add_subcommand("specht-irreducible", "irreducibility of the Specht module");
    specht->add_option("partition", part_text)->required();
    add_p(specht);
    specht->add_flag("--witness", witness, "show the runner witness");
    add_json(specht);

    auto* mull = app.add_subcommand("mullineux", "Mullineux image of a p-regular partition");
    mull->add_option("partition", part_text)->required();
    add_p(mull);
    add_json(mull);

    auto* reg = app.add_subcommand("regularize", "p-regularization");
    reg->add_option("partition", part_text)->required();
    add_p(reg);
    add_json(reg);

    auto* zz = app.add_subcommand("zigzag-dim", "basis counts of the zigzag Schur algebra");
    add_p(zz);
    zz->add_option("--m", m, "m")->required();
    zz->add_option("--d", d, "d")->required();
    zz->add_flag("--by-degree", by_degree, "break the count down by degree");
    add_json(zz);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (analyze->parsed())
            return cmd_analyze(part_text, p, as_json, out);
        if (cert->parsed()) {
            opts.rules = rule_selection(rules, disable);
            return cmd_certify(part_text, p, opts, as_json, out);
        }
        if (survey->parsed()) {
            opts.rules = rule_selection(rules, disable);
            return cmd_survey(p, n, up_to, opts, as_json, out);
        }
        if (tables->parsed())
            return cmd_verify_tables(data_dir, max_weight, as_json, out);
        if (block->parsed())
            return cmd_enumerate_block(core_text, weight, p, regular, as_json, out);
        if (specht->parsed())
            return cmd_specht(part_text, p, witness, as_json, out);
        if (mull->parsed())
            return cmd_map(part_text, p, true, as_json, out);
        if (reg->parsed())
            return cmd_map(part_text, p, false, as_json, out);
        if (zz->parsed())
            return cmd_zigzag(p, m, d, by_degree, as_json, out);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    std::vector<const char*> argv;
    argv.push_back("selfext");
    for (const auto& a : args)
        argv.push_back(a.c_str());
    return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

} // namespace selfext
